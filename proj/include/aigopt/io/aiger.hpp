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
  \file aiger.hpp
  \brief Reader and writer for the AIGER ASCII ("aag") and binary ("aig") formats

  Latches are flattened into PI/PO pairs on read: the latch output becomes an
  extra primary input, the next-state function an extra primary output.  This
  gives the combinational view used by all optimization passes; the number of
  flattened latches is recorded on the graph.
*/

#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "../networks/aig.hpp"

namespace aigopt
{

class parse_error : public std::runtime_error
{
public:
  explicit parse_error( std::string const& what ) : std::runtime_error( "aiger: " + what ) {}
};

struct aiger_header
{
  uint64_t max_var{ 0 };
  uint64_t num_inputs{ 0 };
  uint64_t num_latches{ 0 };
  uint64_t num_outputs{ 0 };
  uint64_t num_ands{ 0 };
};

namespace detail
{

inline std::string read_line( std::istream& in, char const* what )
{
  std::string line;
  if ( !std::getline( in, line ) )
  {
    throw parse_error( std::string( "truncated stream: missing " ) + what );
  }
  if ( !line.empty() && line.back() == '\r' )
  {
    line.pop_back();
  }
  return line;
}

inline uint64_t parse_number( std::string const& token, char const* what )
{
  if ( token.empty() )
  {
    throw parse_error( std::string( "malformed " ) + what );
  }
  uint64_t value = 0;
  for ( char c : token )
  {
    if ( c < '0' || c > '9' )
    {
      throw parse_error( std::string( "malformed " ) + what + ": '" + token + "'" );
    }
    value = value * 10 + static_cast<uint64_t>( c - '0' );
  }
  return value;
}

inline std::vector<std::string> split_ws( std::string const& line )
{
  std::vector<std::string> tokens;
  std::istringstream ss( line );
  std::string t;
  while ( ss >> t )
  {
    tokens.push_back( t );
  }
  return tokens;
}

inline uint64_t decode_delta( std::istream& in )
{
  uint64_t x = 0;
  unsigned shift = 0;
  while ( true )
  {
    int ch = in.get();
    if ( ch == EOF )
    {
      throw parse_error( "truncated stream: unterminated delta code" );
    }
    x |= static_cast<uint64_t>( ch & 0x7f ) << shift;
    if ( ( ch & 0x80 ) == 0 )
    {
      return x;
    }
    shift += 7;
    if ( shift > 63 )
    {
      throw parse_error( "malformed delta code" );
    }
  }
}

inline void encode_delta( std::ostream& out, uint64_t x )
{
  while ( x & ~static_cast<uint64_t>( 0x7f ) )
  {
    out.put( static_cast<char>( ( x & 0x7f ) | 0x80 ) );
    x >>= 7;
  }
  out.put( static_cast<char>( x ) );
}

inline aiger_header parse_header( std::string const& line, bool& binary )
{
  auto tokens = split_ws( line );
  if ( tokens.size() != 6 || ( tokens[0] != "aag" && tokens[0] != "aig" ) )
  {
    throw parse_error( "malformed header: '" + line + "'" );
  }
  binary = tokens[0] == "aig";
  aiger_header h;
  h.max_var = parse_number( tokens[1], "header M" );
  h.num_inputs = parse_number( tokens[2], "header I" );
  h.num_latches = parse_number( tokens[3], "header L" );
  h.num_outputs = parse_number( tokens[4], "header O" );
  h.num_ands = parse_number( tokens[5], "header A" );
  if ( h.max_var < h.num_inputs + h.num_latches + h.num_ands )
  {
    throw parse_error( "malformed header: M < I + L + A" );
  }
  return h;
}

inline void read_symbols_and_comments( std::istream& in, aig& ntk, aiger_header const& h )
{
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
    {
      line.pop_back();
    }
    if ( line == "c" )
    {
      break; /* comment section follows, dropped */
    }
    if ( line.empty() )
    {
      continue;
    }
    char kind = line[0];
    auto space = line.find( ' ' );
    if ( ( kind != 'i' && kind != 'l' && kind != 'o' ) || space == std::string::npos )
    {
      throw parse_error( "malformed symbol entry: '" + line + "'" );
    }
    uint64_t pos = parse_number( line.substr( 1, space - 1 ), "symbol position" );
    std::string sym = line.substr( space + 1 );
    if ( kind == 'i' && pos < h.num_inputs )
    {
      ntk.input_names()[pos] = sym;
    }
    else if ( kind == 'l' && pos < h.num_latches )
    {
      /* flattened: the latch names its generated PI and PO */
      ntk.input_names()[h.num_inputs + pos] = sym;
      ntk.output_names()[h.num_outputs + pos] = sym;
    }
    else if ( kind == 'o' && pos < h.num_outputs )
    {
      ntk.output_names()[pos] = sym;
    }
    else
    {
      throw parse_error( "symbol position out of range: '" + line + "'" );
    }
  }
}

} // namespace detail

/*! \brief Parses AIGER from a stream; the format is detected by magic. */
inline aig parse_aiger( std::istream& in )
{
  bool binary = false;
  auto header = detail::parse_header( detail::read_line( in, "header" ), binary );

  aig ntk;
  std::vector<literal> var2lit( header.max_var + 1, literal( 0xffffffffu >> 1, false ) );
  var2lit[0] = lit_false;
  auto define = [&]( uint64_t var, literal l, char const* what ) {
    if ( var == 0 || var > header.max_var || var2lit[var].index() != ( 0xffffffffu >> 1 ) )
    {
      throw parse_error( std::string( "invalid or redefined " ) + what + " variable " + std::to_string( var ) );
    }
    var2lit[var] = l;
  };
  auto lookup = [&]( uint64_t lit, char const* what ) {
    if ( lit / 2 > header.max_var || var2lit[lit / 2].index() == ( 0xffffffffu >> 1 ) )
    {
      throw parse_error( std::string( "undefined literal " ) + std::to_string( lit ) + " in " + what );
    }
    return var2lit[lit / 2] ^ ( ( lit & 1 ) != 0 );
  };

  /* inputs */
  if ( binary )
  {
    for ( uint64_t i = 0; i < header.num_inputs; ++i )
    {
      define( i + 1, ntk.add_pi(), "input" );
    }
  }
  else
  {
    for ( uint64_t i = 0; i < header.num_inputs; ++i )
    {
      auto line = detail::read_line( in, "input" );
      uint64_t lit = detail::parse_number( line, "input literal" );
      if ( lit < 2 || ( lit & 1 ) != 0 )
      {
        throw parse_error( "invalid input literal " + line );
      }
      define( lit / 2, ntk.add_pi(), "input" );
    }
  }

  /* latches become PI/PO pairs (combinational view) */
  std::vector<uint64_t> latch_next;
  latch_next.reserve( header.num_latches );
  for ( uint64_t i = 0; i < header.num_latches; ++i )
  {
    auto tokens = detail::split_ws( detail::read_line( in, "latch" ) );
    if ( tokens.empty() || ( !binary && tokens.size() < 2 ) )
    {
      throw parse_error( "malformed latch line" );
    }
    uint64_t var;
    uint64_t next;
    if ( binary )
    {
      var = header.num_inputs + 1 + i;
      next = detail::parse_number( tokens[0], "latch next-state" );
    }
    else
    {
      uint64_t lit = detail::parse_number( tokens[0], "latch literal" );
      if ( lit < 2 || ( lit & 1 ) != 0 )
      {
        throw parse_error( "invalid latch literal " + tokens[0] );
      }
      var = lit / 2;
      next = detail::parse_number( tokens[1], "latch next-state" );
    }
    define( var, ntk.add_pi(), "latch" );
    latch_next.push_back( next );
  }

  /* outputs */
  std::vector<uint64_t> out_lits;
  out_lits.reserve( header.num_outputs );
  for ( uint64_t i = 0; i < header.num_outputs; ++i )
  {
    out_lits.push_back( detail::parse_number( detail::read_line( in, "output" ), "output literal" ) );
  }

  /* ands */
  if ( binary )
  {
    for ( uint64_t i = 0; i < header.num_ands; ++i )
    {
      uint64_t lhs = 2 * ( header.num_inputs + header.num_latches + 1 + i );
      uint64_t delta0 = detail::decode_delta( in );
      if ( delta0 == 0 || delta0 > lhs )
      {
        throw parse_error( "fanin literal >= node literal at " + std::to_string( lhs ) );
      }
      uint64_t rhs0 = lhs - delta0;
      uint64_t delta1 = detail::decode_delta( in );
      if ( delta1 > rhs0 )
      {
        throw parse_error( "fanin literal >= node literal at " + std::to_string( lhs ) );
      }
      uint64_t rhs1 = rhs0 - delta1;
      define( lhs / 2, ntk.add_and_verbatim( lookup( rhs0, "and" ), lookup( rhs1, "and" ) ), "and" );
    }
  }
  else
  {
    for ( uint64_t i = 0; i < header.num_ands; ++i )
    {
      auto tokens = detail::split_ws( detail::read_line( in, "and" ) );
      if ( tokens.size() != 3 )
      {
        throw parse_error( "malformed and line" );
      }
      uint64_t lhs = detail::parse_number( tokens[0], "and literal" );
      if ( lhs < 2 || ( lhs & 1 ) != 0 )
      {
        throw parse_error( "invalid and literal " + tokens[0] );
      }
      literal a = lookup( detail::parse_number( tokens[1], "and fanin" ), "and" );
      literal b = lookup( detail::parse_number( tokens[2], "and fanin" ), "and" );
      define( lhs / 2, ntk.add_and_verbatim( a, b ), "and" );
    }
  }

  for ( auto lit : out_lits )
  {
    ntk.add_po( lookup( lit, "output" ) );
  }
  for ( auto next : latch_next )
  {
    ntk.add_po( lookup( next, "latch next-state" ) );
  }
  ntk.set_flattened_latches( static_cast<uint32_t>( header.num_latches ) );

  ntk.input_names().assign( header.num_inputs + header.num_latches, "" );
  ntk.output_names().assign( header.num_outputs + header.num_latches, "" );
  detail::read_symbols_and_comments( in, ntk, header );

  return ntk;
}

inline aig parse_aiger( std::string const& bytes )
{
  std::istringstream in( bytes );
  return parse_aiger( in );
}

namespace detail
{

/* Common writer prelude: literal map for a compacted graph. */
inline std::vector<uint64_t> writer_literals( aig const& ntk )
{
  if ( ntk.has_tombstones() )
  {
    throw std::invalid_argument( "aiger write: graph has tombstones, compact first" );
  }
  std::vector<uint64_t> lit( ntk.num_nodes(), 0 );
  uint64_t var = 0;
  for ( uint32_t i = 0; i < ntk.num_pis(); ++i )
  {
    lit[ntk.pi_at( i )] = 2 * ++var;
  }
  for ( uint32_t n = 1; n < ntk.num_nodes(); ++n )
  {
    if ( ntk.is_and( n ) )
    {
      if ( lit[ntk.fanin0( n ).index()] == 0 && !ntk.is_constant( ntk.fanin0( n ).index() ) )
      {
        throw std::invalid_argument( "aiger write: graph is not topologically ordered" );
      }
      lit[n] = 2 * ++var;
    }
  }
  return lit;
}

inline void write_symbols( aig const& ntk, std::ostream& out )
{
  for ( uint32_t i = 0; i < ntk.input_names().size() && i < ntk.num_pis(); ++i )
  {
    if ( !ntk.input_names()[i].empty() )
    {
      out << 'i' << i << ' ' << ntk.input_names()[i] << '\n';
    }
  }
  for ( uint32_t i = 0; i < ntk.output_names().size() && i < ntk.num_pos(); ++i )
  {
    if ( !ntk.output_names()[i].empty() )
    {
      out << 'o' << i << ' ' << ntk.output_names()[i] << '\n';
    }
  }
}

} // namespace detail

inline void write_ascii( aig const& ntk, std::ostream& out )
{
  auto lit = detail::writer_literals( ntk );
  uint64_t num_ands = ntk.num_gates();
  out << "aag " << ntk.num_pis() + num_ands << ' ' << ntk.num_pis() << " 0 "
      << ntk.num_pos() << ' ' << num_ands << '\n';
  for ( uint32_t i = 0; i < ntk.num_pis(); ++i )
  {
    out << lit[ntk.pi_at( i )] << '\n';
  }
  for ( uint32_t i = 0; i < ntk.num_pos(); ++i )
  {
    auto po = ntk.po_at( i );
    out << ( lit[po.index()] | ( po.is_complemented() ? 1 : 0 ) ) << '\n';
  }
  for ( uint32_t n = 1; n < ntk.num_nodes(); ++n )
  {
    if ( !ntk.is_and( n ) )
    {
      continue;
    }
    auto f0 = ntk.fanin0( n );
    auto f1 = ntk.fanin1( n );
    out << lit[n] << ' ' << ( lit[f0.index()] | ( f0.is_complemented() ? 1 : 0 ) )
        << ' ' << ( lit[f1.index()] | ( f1.is_complemented() ? 1 : 0 ) ) << '\n';
  }
  detail::write_symbols( ntk, out );
}

inline void write_binary( aig const& ntk, std::ostream& out )
{
  auto lit = detail::writer_literals( ntk );
  uint64_t num_ands = ntk.num_gates();
  out << "aig " << ntk.num_pis() + num_ands << ' ' << ntk.num_pis() << " 0 "
      << ntk.num_pos() << ' ' << num_ands << '\n';
  for ( uint32_t i = 0; i < ntk.num_pos(); ++i )
  {
    auto po = ntk.po_at( i );
    out << ( lit[po.index()] | ( po.is_complemented() ? 1 : 0 ) ) << '\n';
  }
  for ( uint32_t n = 1; n < ntk.num_nodes(); ++n )
  {
    if ( !ntk.is_and( n ) )
    {
      continue;
    }
    auto f0 = ntk.fanin0( n );
    auto f1 = ntk.fanin1( n );
    uint64_t rhs0 = lit[f0.index()] | ( f0.is_complemented() ? 1 : 0 );
    uint64_t rhs1 = lit[f1.index()] | ( f1.is_complemented() ? 1 : 0 );
    if ( rhs0 < rhs1 )
    {
      std::swap( rhs0, rhs1 );
    }
    detail::encode_delta( out, lit[n] - rhs0 );
    detail::encode_delta( out, rhs0 - rhs1 );
  }
  detail::write_symbols( ntk, out );
}

inline std::string write_ascii( aig const& ntk )
{
  std::ostringstream out;
  write_ascii( ntk, out );
  return out.str();
}

inline std::string write_binary( aig const& ntk )
{
  std::ostringstream out;
  write_binary( ntk, out );
  return out.str();
}

inline aig read_aiger_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path + "'" );
  }
  auto ntk = parse_aiger( in );
  auto slash = path.find_last_of( "/\\" );
  auto base = slash == std::string::npos ? path : path.substr( slash + 1 );
  auto dot = base.find_last_of( '.' );
  ntk.name = dot == std::string::npos ? base : base.substr( 0, dot );
  return ntk;
}

/*! \brief Writes by extension: ".aag" selects ASCII, anything else binary. */
inline void write_aiger_file( aig const& ntk, std::string const& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw std::runtime_error( "cannot open '" + path + "' for writing" );
  }
  if ( path.size() >= 4 && path.substr( path.size() - 4 ) == ".aag" )
  {
    write_ascii( ntk, out );
  }
  else
  {
    write_binary( ntk, out );
  }
}

} // namespace aigopt
