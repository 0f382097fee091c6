/* aigopt: And-Inverter Graph optimization toolkit
 * Copyright (C) 2026
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file flows.hpp
  \brief Script parsing and sequential execution of optimization passes

  Grammar: `cmd( -K <int>)?(;cmd ...)*`, whitespace-insensitive.  Built-in
  flow names expand in place:

    resyn       b;rw;rwz;b;rwz;b
    resyn3      b;rs;rs -K 6;b;rsz;rsz -K 6;b;rsz -K 5;b
    o-resyn     resyn with rw -> o1 and rwz -> z1
    o-resyn3    resyn3 with rs -> o3 and rsz -> z3
    lgp-resyn   resyn with rw -> lgp and rwz -> lgpz
    lgp-resyn3  resyn3 with rs -> lgp and rsz -> lgpz
*/

#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "../algorithms/passes.hpp"

namespace aigopt
{

struct flow_step
{
  std::string command;
  int window{ -1 }; /* -K parameter, resub window leaves */

  bool operator==( flow_step const& other ) const
  {
    return command == other.command && window == other.window;
  }
};

struct flow_script
{
  std::vector<flow_step> steps;
};

class script_error : public std::runtime_error
{
public:
  explicit script_error( std::string const& what ) : std::runtime_error( "script: " + what ) {}
};

namespace detail
{

inline bool command_known( std::string const& cmd )
{
  static const std::vector<std::string> known = {
      "b", "balance", "rw", "rwz", "rf", "rfz", "rs", "rsz",
      "o1", "o2", "o3", "o4", "o5", "o6", "z1", "z2", "z3", "z4", "z5", "z6",
      "lgp", "lgpz" };
  for ( auto const& k : known )
  {
    if ( cmd == k )
    {
      return true;
    }
  }
  return false;
}

inline bool command_takes_window( std::string const& cmd )
{
  if ( cmd == "rs" || cmd == "rsz" || cmd == "lgp" || cmd == "lgpz" )
  {
    return true;
  }
  return cmd.size() == 2 && ( cmd[0] == 'o' || cmd[0] == 'z' ) && cmd[1] >= '1' && cmd[1] <= '6';
}

inline std::vector<flow_step> builtin_flow( std::string const& name )
{
  auto steps = []( std::vector<flow_step> s ) { return s; };
  if ( name == "resyn" )
  {
    return steps( { { "b" }, { "rw" }, { "rwz" }, { "b" }, { "rwz" }, { "b" } } );
  }
  if ( name == "resyn3" )
  {
    return steps( { { "b" }, { "rs" }, { "rs", 6 }, { "b" }, { "rsz" }, { "rsz", 6 }, { "b" }, { "rsz", 5 }, { "b" } } );
  }
  auto substitute = []( std::vector<flow_step> base, std::map<std::string, std::string> const& subst ) {
    for ( auto& st : base )
    {
      if ( auto it = subst.find( st.command ); it != subst.end() )
      {
        st.command = it->second;
      }
    }
    return base;
  };
  if ( name == "o-resyn" )
  {
    return substitute( builtin_flow( "resyn" ), { { "rw", "o1" }, { "rwz", "z1" } } );
  }
  if ( name == "o-resyn3" )
  {
    return substitute( builtin_flow( "resyn3" ), { { "rs", "o3" }, { "rsz", "z3" } } );
  }
  if ( name == "lgp-resyn" )
  {
    return substitute( builtin_flow( "resyn" ), { { "rw", "lgp" }, { "rwz", "lgpz" } } );
  }
  if ( name == "lgp-resyn3" )
  {
    return substitute( builtin_flow( "resyn3" ), { { "rs", "lgp" }, { "rsz", "lgpz" } } );
  }
  return {};
}

} // namespace detail

/*! \brief Parses a semicolon-separated pass script, expanding built-ins. */
inline flow_script parse_script( std::string const& text )
{
  flow_script script;
  std::istringstream ss( text );
  std::string part;
  while ( std::getline( ss, part, ';' ) )
  {
    std::istringstream ps( part );
    std::vector<std::string> tokens;
    std::string t;
    while ( ps >> t )
    {
      tokens.push_back( t );
    }
    if ( tokens.empty() )
    {
      continue;
    }
    auto builtin = detail::builtin_flow( tokens[0] );
    if ( !builtin.empty() )
    {
      if ( tokens.size() > 1 )
      {
        throw script_error( "built-in flow '" + tokens[0] + "' takes no parameters" );
      }
      script.steps.insert( script.steps.end(), builtin.begin(), builtin.end() );
      continue;
    }
    flow_step step;
    step.command = tokens[0];
    if ( !detail::command_known( step.command ) )
    {
      throw script_error( "unknown command '" + step.command + "'" );
    }
    if ( tokens.size() == 3 && tokens[1] == "-K" )
    {
      if ( !detail::command_takes_window( step.command ) )
      {
        throw script_error( "'" + step.command + "' does not take -K" );
      }
      try
      {
        step.window = std::stoi( tokens[2] );
      }
      catch ( std::exception const& )
      {
        throw script_error( "malformed -K value '" + tokens[2] + "'" );
      }
      if ( step.window < 5 || step.window > 12 )
      {
        throw script_error( "-K out of range (5..12)" );
      }
    }
    else if ( tokens.size() != 1 )
    {
      throw script_error( "malformed step '" + part + "'" );
    }
    script.steps.push_back( step );
  }
  return script;
}

/*! \brief Maps one step to pass parameters; "b" is handled by the runner. */
inline pass_params step_params( flow_step const& step )
{
  auto const& c = step.command;
  pass_params ps;
  if ( c == "rw" || c == "rwz" )
  {
    ps = pass_params::standalone( op_kind::rw, c.back() == 'z' );
  }
  else if ( c == "rs" || c == "rsz" )
  {
    ps = pass_params::standalone( op_kind::rs, c.back() == 'z' );
  }
  else if ( c == "rf" || c == "rfz" )
  {
    ps = pass_params::standalone( op_kind::rf, c.back() == 'z' );
  }
  else if ( c == "lgp" || c == "lgpz" )
  {
    ps = pass_params::local_greedy( c.back() == 'z' );
  }
  else if ( c.size() == 2 && ( c[0] == 'o' || c[0] == 'z' ) )
  {
    ps = pass_params::priority_order( static_cast<uint32_t>( c[1] - '0' ), c[0] == 'z' );
  }
  else
  {
    throw script_error( "'" + c + "' is not an optimization pass" );
  }
  if ( step.window > 0 )
  {
    ps.resub_max_leaves = static_cast<uint32_t>( step.window );
  }
  return ps;
}

inline std::string step_name( flow_step const& step )
{
  if ( step.window > 0 )
  {
    return step.command + " -K " + std::to_string( step.window );
  }
  return step.command;
}

/*! \brief Executes the script in place; one stats record per step. */
inline std::vector<pass_stats> run_flow( aig& ntk, flow_script const& script, rewrite_library const& lib,
                                         pass_observer* observer = nullptr )
{
  std::vector<pass_stats> all;
  all.reserve( script.steps.size() );
  for ( auto const& step : script.steps )
  {
    if ( step.command == "b" || step.command == "balance" )
    {
      auto start = std::chrono::steady_clock::now();
      pass_stats stats;
      stats.pass_name = "b";
      stats.nodes_before = ntk.num_gates();
      stats.depth_before = ntk.depth();
      ntk = balance( ntk );
      stats.nodes_after = ntk.num_gates();
      stats.depth_after = ntk.depth();
      stats.wall_ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
      all.push_back( std::move( stats ) );
      continue;
    }
    all.push_back( run_pass( ntk, lib, step_params( step ), step_name( step ), observer ) );
  }
  return all;
}

} // namespace aigopt
