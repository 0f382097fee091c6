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

/* Shared test fixtures: random graph generation and independent oracles.
 * Everything here is deliberately brute force and stays independent of the
 * implementation paths it checks.
 */

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <aigopt/networks/aig.hpp>
#include <aigopt/utils/truth_table.hpp>

namespace aigopt::testing
{

/*! \brief Random structurally hashed AIG with the requested size. */
inline aig random_aig( uint64_t seed, uint32_t num_pis, uint32_t num_ands, uint32_t num_pos )
{
  std::mt19937_64 rng( seed );
  aig ntk;
  std::vector<literal> pool;
  for ( uint32_t i = 0; i < num_pis; ++i )
  {
    pool.push_back( ntk.add_pi() );
  }
  uint32_t guard = 0;
  while ( ntk.num_gates() < num_ands && guard++ < 50 * num_ands + 1000 )
  {
    auto pick = [&]() {
      literal l = pool[rng() % pool.size()];
      return ( rng() & 1 ) ? !l : l;
    };
    uint32_t before = ntk.num_gates();
    literal r = ntk.add_and( pick(), pick() );
    if ( ntk.num_gates() > before )
    {
      pool.push_back( r );
    }
  }
  /* outputs biased towards the top so most of the graph stays reachable */
  for ( uint32_t i = 0; i < num_pos; ++i )
  {
    literal l = pool[pool.size() - 1 - ( rng() % ( 1 + pool.size() / 4 ) )];
    ntk.add_po( ( rng() & 1 ) ? !l : l );
  }
  ntk.cleanup();
  return ntk;
}

/*! \brief Pointwise evaluation of one node under a single PI assignment. */
inline bool evaluate_node( aig const& ntk, uint32_t node, std::vector<bool> const& pi_values )
{
  std::vector<int> memo( ntk.num_nodes(), -1 );
  memo[0] = 0;
  for ( uint32_t i = 0; i < ntk.num_pis(); ++i )
  {
    memo[ntk.pi_at( i )] = pi_values[i] ? 1 : 0;
  }
  std::vector<uint32_t> stack{ node };
  while ( !stack.empty() )
  {
    uint32_t u = stack.back();
    if ( memo[u] >= 0 )
    {
      stack.pop_back();
      continue;
    }
    uint32_t i0 = ntk.fanin0( u ).index();
    uint32_t i1 = ntk.fanin1( u ).index();
    if ( memo[i0] < 0 )
    {
      stack.push_back( i0 );
      continue;
    }
    if ( memo[i1] < 0 )
    {
      stack.push_back( i1 );
      continue;
    }
    stack.pop_back();
    bool a = ( memo[i0] != 0 ) ^ ntk.fanin0( u ).is_complemented();
    bool b = ( memo[i1] != 0 ) ^ ntk.fanin1( u ).is_complemented();
    memo[u] = ( a && b ) ? 1 : 0;
  }
  return memo[node] != 0;
}

/*! \brief All PO values under a single assignment, variable 0 first. */
inline std::vector<bool> evaluate_pos( aig const& ntk, std::vector<bool> const& pi_values )
{
  std::vector<bool> out;
  for ( uint32_t i = 0; i < ntk.num_pos(); ++i )
  {
    auto po = ntk.po_at( i );
    out.push_back( evaluate_node( ntk, po.index(), pi_values ) ^ po.is_complemented() );
  }
  return out;
}

/*! \brief Exhaustive PO comparison oracle; requires <= 16 PIs. */
inline bool equivalent_exhaustive( aig const& a, aig const& b )
{
  if ( a.num_pis() != b.num_pis() || a.num_pos() != b.num_pos() )
  {
    return false;
  }
  uint32_t n = a.num_pis();
  for ( uint64_t m = 0; m < ( uint64_t( 1 ) << n ); ++m )
  {
    std::vector<bool> pis( n );
    for ( uint32_t i = 0; i < n; ++i )
    {
      pis[i] = ( m >> i ) & 1;
    }
    if ( evaluate_pos( a, pis ) != evaluate_pos( b, pis ) )
    {
      return false;
    }
  }
  return true;
}

/*! \brief MFFC oracle without constant propagation artifacts.
 *
 * Counts the nodes that become unreachable from POs and other live fanouts
 * when the root is cut off, by explicit fixpoint over reference counts.
 */
inline uint32_t mffc_size_by_refcount( aig const& ntk, uint32_t root )
{
  std::vector<uint32_t> refs( ntk.num_nodes(), 0 );
  for ( uint32_t n = 1; n < ntk.num_nodes(); ++n )
  {
    if ( ntk.is_and( n ) )
    {
      refs[ntk.fanin0( n ).index()]++;
      refs[ntk.fanin1( n ).index()]++;
    }
  }
  for ( auto const& po : ntk.pos() )
  {
    refs[po.index()]++;
  }
  std::vector<uint32_t> dead_stack{ root };
  std::set<uint32_t> dead;
  dead.insert( root );
  uint32_t count = 0;
  while ( !dead_stack.empty() )
  {
    uint32_t u = dead_stack.back();
    dead_stack.pop_back();
    ++count;
    for ( auto f : { ntk.fanin0( u ), ntk.fanin1( u ) } )
    {
      uint32_t i = f.index();
      if ( --refs[i] == 0 && ntk.is_and( i ) && dead.insert( i ).second )
      {
        dead_stack.push_back( i );
      }
    }
  }
  return count;
}

/*! \brief Exhaustive pointwise truth table of a node over given leaves.
 *
 * Assigns leaf values directly (leaves need not be PIs) and evaluates the
 * cone; the reference for cut_tt.
 */
inline truth_table cone_tt_pointwise( aig const& ntk, uint32_t root, std::vector<uint32_t> const& leaves )
{
  truth_table result( static_cast<uint32_t>( leaves.size() ) );
  for ( uint32_t m = 0; m < result.num_bits(); ++m )
  {
    std::vector<int> memo( ntk.num_nodes(), -1 );
    memo[0] = 0;
    for ( uint32_t i = 0; i < leaves.size(); ++i )
    {
      memo[leaves[i]] = ( m >> i ) & 1;
    }
    std::vector<uint32_t> stack{ root };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      if ( memo[u] >= 0 )
      {
        stack.pop_back();
        continue;
      }
      uint32_t i0 = ntk.fanin0( u ).index();
      uint32_t i1 = ntk.fanin1( u ).index();
      if ( memo[i0] < 0 )
      {
        stack.push_back( i0 );
        continue;
      }
      if ( memo[i1] < 0 )
      {
        stack.push_back( i1 );
        continue;
      }
      stack.pop_back();
      bool a = ( memo[i0] != 0 ) ^ ntk.fanin0( u ).is_complemented();
      bool b = ( memo[i1] != 0 ) ^ ntk.fanin1( u ).is_complemented();
      memo[u] = ( a && b ) ? 1 : 0;
    }
    if ( memo[root] != 0 )
    {
      result.set_bit( m );
    }
  }
  return result;
}

/*! \brief The worked example graph: g = a & !p, p = !m & !d, d = !a & c,
 * m = (a & b) & c, plus the unrelated context cones k = (e & f) & r and
 * w = (q & o) & (u | h).  POs: g, m, k, w.
 */
struct example_fragment
{
  aig ntk;
  uint32_t g, p, d, m, t, k, w;
};

inline example_fragment make_example_fragment()
{
  example_fragment fx;
  aig& n = fx.ntk;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto c = n.add_pi();
  auto e = n.add_pi();
  auto f = n.add_pi();
  auto r = n.add_pi();
  auto q = n.add_pi();
  auto o = n.add_pi();
  auto u = n.add_pi();
  auto h = n.add_pi();

  auto t = n.add_and( a, b );
  auto m = n.add_and( t, c );
  auto d = n.add_and( !a, c );
  auto p = n.add_and( !m, !d );
  auto g = n.add_and( a, !p );

  auto k1 = n.add_and( e, f );
  auto k = n.add_and( k1, r );
  auto w1 = n.add_and( q, o );
  auto w2 = n.add_and( !u, !h );
  auto w = n.add_and( w1, !w2 );

  n.add_po( g );
  n.add_po( m );
  n.add_po( k );
  n.add_po( w );
  n.name = "fragment";

  fx.t = t.index();
  fx.m = m.index();
  fx.d = d.index();
  fx.p = p.index();
  fx.g = g.index();
  fx.k = k.index();
  fx.w = w.index();
  return fx;
}

} // namespace aigopt::testing
