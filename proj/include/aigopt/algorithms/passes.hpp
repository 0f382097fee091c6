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
  \file passes.hpp
  \brief Single-traversal optimization passes and their orchestration

  One driver covers everything: a stand-alone pass is a priority policy over
  a single operation, the six priority orders check operations in sequence
  and stop at the first applicable one, and the local-greedy policy prices
  all three at every node and applies the best gain (ties rw > rs > rf).
  Transformations are priced by pure dry runs, applied only through the same
  search they were priced with.
*/

#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "../networks/aig.hpp"
#include "balance.hpp"
#include "refactor.hpp"
#include "resub.hpp"
#include "rewrite.hpp"

namespace aigopt
{

enum class op_kind : uint8_t
{
  rw,
  rs,
  rf
};

inline char const* to_string( op_kind op )
{
  switch ( op )
  {
  case op_kind::rw:
    return "rw";
  case op_kind::rs:
    return "rs";
  case op_kind::rf:
  default:
    return "rf";
  }
}

/*! \brief Per-node gains; -1 marks an inapplicable operation. */
struct gain_vector
{
  int rw{ -1 };
  int rs{ -1 };
  int rf{ -1 };

  int operator[]( op_kind op ) const
  {
    switch ( op )
    {
    case op_kind::rw:
      return rw;
    case op_kind::rs:
      return rs;
    case op_kind::rf:
    default:
      return rf;
    }
  }

  int& operator[]( op_kind op )
  {
    switch ( op )
    {
    case op_kind::rw:
      return rw;
    case op_kind::rs:
      return rs;
    case op_kind::rf:
    default:
      return rf;
    }
  }

  bool operator==( gain_vector const& other ) const
  {
    return rw == other.rw && rs == other.rs && rf == other.rf;
  }
};

struct pass_params
{
  enum class policy_kind
  {
    priority,    /* check ops in order, apply the first applicable */
    local_greedy /* price all ops, apply the best gain */
  };

  policy_kind policy{ policy_kind::priority };
  std::vector<op_kind> order{ op_kind::rw, op_kind::rs, op_kind::rf };
  bool zero_cost{ false };
  uint32_t resub_max_leaves{ 8 };
  uint32_t refactor_max_leaves{ 10 };
  cut_params cuts{};

  static pass_params standalone( op_kind op, bool zero_cost = false )
  {
    pass_params ps;
    ps.order = { op };
    ps.zero_cost = zero_cost;
    return ps;
  }

  static pass_params priority_order( uint32_t index /* 1..6 */, bool zero_cost = false )
  {
    static constexpr std::array<std::array<op_kind, 3>, 6> orders = { {
        { op_kind::rw, op_kind::rs, op_kind::rf },
        { op_kind::rw, op_kind::rf, op_kind::rs },
        { op_kind::rs, op_kind::rw, op_kind::rf },
        { op_kind::rs, op_kind::rf, op_kind::rw },
        { op_kind::rf, op_kind::rs, op_kind::rw },
        { op_kind::rf, op_kind::rw, op_kind::rs },
    } };
    pass_params ps;
    auto const& o = orders.at( index - 1 );
    ps.order = { o[0], o[1], o[2] };
    ps.zero_cost = zero_cost;
    return ps;
  }

  static pass_params local_greedy( bool zero_cost = false )
  {
    pass_params ps;
    ps.policy = policy_kind::local_greedy;
    ps.zero_cost = zero_cost;
    return ps;
  }
};

struct pass_stats
{
  std::string pass_name;
  uint32_t nodes_before{ 0 };
  uint32_t nodes_after{ 0 };
  uint32_t depth_before{ 0 };
  uint32_t depth_after{ 0 };
  uint64_t total_iterations{ 0 };
  uint64_t valid_iterations{ 0 };
  std::array<uint64_t, 3> valid_per_op{ 0, 0, 0 };
  uint64_t transformability_checks{ 0 };
  int64_t accumulated_gain{ 0 };
  double wall_ms{ 0.0 };
  std::array<std::vector<uint32_t>, 3> roots_per_op;

  uint64_t valid( op_kind op ) const { return valid_per_op[static_cast<size_t>( op )]; }
  std::vector<uint32_t> const& roots( op_kind op ) const { return roots_per_op[static_cast<size_t>( op )]; }

  /*! \brief Counts one traversal step; logs the root when an op applied. */
  void record_iteration( uint32_t node, std::optional<op_kind> applied )
  {
    ++total_iterations;
    if ( applied )
    {
      ++valid_iterations;
      ++valid_per_op[static_cast<size_t>( *applied )];
      roots_per_op[static_cast<size_t>( *applied )].push_back( node );
    }
  }
};

/*! \brief Hook for instrumentation; fires before the chosen op is applied. */
struct pass_observer
{
  virtual ~pass_observer() = default;
  /* gains holds -1 for ops the policy did not evaluate; evaluated_count is
   * the number of transformability checks spent on this node */
  virtual void on_decision( uint32_t node, gain_vector const& gains, uint32_t evaluated_count,
                            std::optional<op_kind> chosen, int chosen_dry_gain )
  {
    (void)node;
    (void)gains;
    (void)evaluated_count;
    (void)chosen;
    (void)chosen_dry_gain;
  }
  virtual void on_applied( uint32_t node, op_kind op, int measured_gain )
  {
    (void)node;
    (void)op;
    (void)measured_gain;
  }
};

/*! \brief The three transformation engines bound to one graph. */
class optimizer
{
public:
  optimizer( aig& ntk, rewrite_library const& lib, pass_params const& ps = {} )
      : ntk_( ntk ), ps_( ps ), rewrite_( ntk, lib, ps.cuts ),
        resub_( ntk, resub_params{ ps.resub_max_leaves, 150, 3, 10000 } ),
        refactor_( ntk, refactor_params{ ps.refactor_max_leaves } )
  {
  }

  /*! \brief Dry-run gains of all three ops at \p v; no graph side effects. */
  gain_vector gains( uint32_t v )
  {
    gain_vector g;
    g.rw = evaluate( op_kind::rw, v );
    g.rs = evaluate( op_kind::rs, v );
    g.rf = evaluate( op_kind::rf, v );
    return g;
  }

  /*! \brief Prices one op; returns -1 when inapplicable under the gate. */
  int evaluate( op_kind op, uint32_t v )
  {
    switch ( op )
    {
    case op_kind::rw:
    {
      rw_cand_ = rewrite_.evaluate( v, ps_.zero_cost );
      return rw_cand_ ? rw_cand_->gain : -1;
    }
    case op_kind::rs:
    {
      rs_divs_ = resub_.collect_divisors( v );
      rs_cand_ = resub_.search( v, rs_divs_, ps_.zero_cost );
      return rs_cand_ ? rs_cand_->gain : -1;
    }
    case op_kind::rf:
    default:
    {
      rf_cand_ = refactor_.evaluate( v, ps_.zero_cost );
      return rf_cand_ ? rf_cand_->gain : -1;
    }
    }
  }

  /*! \brief Applies the candidate cached by the latest evaluate() of \p op. */
  int apply( op_kind op, uint32_t v )
  {
    switch ( op )
    {
    case op_kind::rw:
      return rewrite_.apply( v, *rw_cand_ );
    case op_kind::rs:
      return resub_.apply( v, rs_divs_, *rs_cand_ );
    case op_kind::rf:
    default:
      return refactor_.apply( v, *rf_cand_ );
    }
  }

  pass_params const& params() const { return ps_; }

private:
  aig& ntk_;
  pass_params ps_;
  rewrite_engine rewrite_;
  resub_engine resub_;
  refactor_engine refactor_;

  std::optional<rewrite_candidate> rw_cand_;
  divisor_set rs_divs_;
  std::optional<resub_candidate> rs_cand_;
  std::optional<refactor_candidate> rf_cand_;
};

/*! \brief Dry-run gain vector at one node (the transformability check). */
inline gain_vector gains( aig& ntk, rewrite_library const& lib, uint32_t v, bool zero_cost = false )
{
  pass_params ps;
  ps.zero_cost = zero_cost;
  optimizer opt( ntk, lib, ps );
  return opt.gains( v );
}

/*! \brief One topological traversal under the configured policy. */
inline pass_stats run_pass( aig& ntk, rewrite_library const& lib, pass_params const& ps,
                            std::string name = {}, pass_observer* observer = nullptr )
{
  auto start = std::chrono::steady_clock::now();
  pass_stats stats;
  stats.pass_name = std::move( name );
  stats.nodes_before = ntk.num_gates();
  stats.depth_before = ntk.depth();

  optimizer opt( ntk, lib, ps );
  auto snapshot = ntk.topo_order();

  for ( auto v : snapshot )
  {
    if ( !ntk.is_and( v ) || ntk.ref_count( v ) == 0 )
    {
      continue;
    }
    gain_vector g;
    uint32_t checks = 0;
    std::optional<op_kind> chosen;

    if ( ps.policy == pass_params::policy_kind::local_greedy )
    {
      for ( auto op : { op_kind::rw, op_kind::rs, op_kind::rf } )
      {
        g[op] = opt.evaluate( op, v );
        ++checks;
      }
      /* highest non-negative gain; ties resolved rw > rs > rf */
      for ( auto op : { op_kind::rw, op_kind::rs, op_kind::rf } )
      {
        if ( g[op] >= 0 && ( !chosen || g[op] > g[*chosen] ) )
        {
          chosen = op;
        }
      }
    }
    else
    {
      for ( auto op : ps.order )
      {
        g[op] = opt.evaluate( op, v );
        ++checks;
        if ( g[op] >= 0 )
        {
          chosen = op;
          break;
        }
      }
    }

    stats.transformability_checks += checks;
    if ( observer )
    {
      observer->on_decision( v, g, checks, chosen, chosen ? g[*chosen] : -1 );
    }
    stats.record_iteration( v, chosen );
    if ( chosen )
    {
      int measured = opt.apply( *chosen, v );
      stats.accumulated_gain += measured;
      assert( measured >= g[*chosen] );
      if ( observer )
      {
        observer->on_applied( v, *chosen, measured );
      }
    }
  }

  stats.nodes_after = ntk.num_gates();
  stats.depth_after = ntk.depth();
  stats.wall_ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
  return stats;
}

} // namespace aigopt
