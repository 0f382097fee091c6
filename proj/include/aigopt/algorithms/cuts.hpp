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
  \file cuts.hpp
  \brief K-feasible cut enumeration with priority pruning, cut truth tables,
         and reconvergence-driven cut growth

  Cut sets are kept per node sorted by (leaf count, leaf index sum) and
  truncated at a configurable limit; dominated cuts (supersets of another
  cut) are filtered during merge.  The cut manager caches cut sets across a
  pass and recomputes lazily for the fanout region of every graph update.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "../networks/aig.hpp"
#include "../utils/truth_table.hpp"

namespace aigopt
{

struct cut
{
  std::vector<uint32_t> leaves; /* sorted ascending */
  uint64_t signature{ 0 };

  static uint64_t leaf_bit( uint32_t n ) { return uint64_t( 1 ) << ( n & 63 ); }

  uint64_t leaf_sum() const
  {
    uint64_t s = 0;
    for ( auto l : leaves )
    {
      s += l;
    }
    return s;
  }

  bool operator==( cut const& other ) const { return leaves == other.leaves; }
};

/*! \brief True if every leaf of \p a is a leaf of \p b. */
inline bool dominates( cut const& a, cut const& b )
{
  if ( a.leaves.size() > b.leaves.size() || ( a.signature & b.signature ) != a.signature )
  {
    return false;
  }
  return std::includes( b.leaves.begin(), b.leaves.end(), a.leaves.begin(), a.leaves.end() );
}

inline bool cut_priority_less( cut const& a, cut const& b )
{
  if ( a.leaves.size() != b.leaves.size() )
  {
    return a.leaves.size() < b.leaves.size();
  }
  auto sa = a.leaf_sum();
  auto sb = b.leaf_sum();
  if ( sa != sb )
  {
    return sa < sb;
  }
  return a.leaves < b.leaves;
}

namespace detail
{

inline void insert_cut( std::vector<cut>& set, cut&& c )
{
  for ( auto const& existing : set )
  {
    if ( dominates( existing, c ) )
    {
      return;
    }
  }
  set.erase( std::remove_if( set.begin(), set.end(),
                             [&]( cut const& existing ) { return dominates( c, existing ); } ),
             set.end() );
  set.push_back( std::move( c ) );
}

inline std::vector<cut> merge_cut_sets( std::vector<cut> const& set0, std::vector<cut> const& set1,
                                        uint32_t root, uint32_t k, uint32_t limit )
{
  std::vector<cut> result;
  for ( auto const& c0 : set0 )
  {
    for ( auto const& c1 : set1 )
    {
      cut merged;
      merged.signature = c0.signature | c1.signature;
      if ( c0.leaves.size() + c1.leaves.size() > k &&
           static_cast<uint32_t>( __builtin_popcountll( merged.signature ) ) > k )
      {
        continue;
      }
      merged.leaves.resize( c0.leaves.size() + c1.leaves.size() );
      merged.leaves.resize( std::set_union( c0.leaves.begin(), c0.leaves.end(),
                                            c1.leaves.begin(), c1.leaves.end(),
                                            merged.leaves.begin() ) -
                            merged.leaves.begin() );
      if ( merged.leaves.size() > k )
      {
        continue;
      }
      insert_cut( result, std::move( merged ) );
    }
  }
  cut trivial;
  trivial.leaves = { root };
  trivial.signature = cut::leaf_bit( root );
  insert_cut( result, std::move( trivial ) );
  std::sort( result.begin(), result.end(), cut_priority_less );
  if ( result.size() > limit )
  {
    bool trivial_kept = false;
    for ( uint32_t i = 0; i < limit; ++i )
    {
      trivial_kept |= result[i].leaves.size() == 1 && result[i].leaves[0] == root;
    }
    result.resize( limit );
    if ( !trivial_kept )
    {
      result.back().leaves = { root };
      result.back().signature = cut::leaf_bit( root );
    }
  }
  return result;
}

} // namespace detail

struct cut_params
{
  uint32_t cut_size{ 4 };  /* K */
  uint32_t cut_limit{ 8 }; /* C, kept cuts per node */
};

/*! \brief Caches per-node cut sets for one pass over a mutating graph.
 *
 * Any rewired or freshly added node and everything in its transitive fanout
 * is marked dirty; dirty sets are recomputed on access, stopping at clean
 * fanins.
 */
class cut_manager final : public network_listener
{
public:
  cut_manager( aig& ntk, cut_params const& ps = {} )
      : ntk_( ntk ), ps_( ps )
  {
    if ( ps_.cut_size < 2 || ps_.cut_size > 8 || ps_.cut_limit < 1 )
    {
      throw std::invalid_argument( "cut enumeration: 2 <= K <= 8, C >= 1 required" );
    }
    cuts_.resize( ntk.num_nodes() );
    dirty_.assign( ntk.num_nodes(), true );
    ntk_.add_listener( this );
  }

  ~cut_manager() override { ntk_.remove_listener( this ); }

  std::vector<cut> const& cuts( uint32_t n )
  {
    ensure_fresh( n );
    return cuts_[n];
  }

  void on_add( uint32_t n ) override
  {
    grow( n );
    dirty_[n] = true;
  }

  void on_fanin_patched( uint32_t n ) override
  {
    grow( n );
    mark_dirty_up( n );
  }

  void on_delete( uint32_t n ) override
  {
    grow( n );
    cuts_[n].clear();
    dirty_[n] = true;
  }

private:
  void grow( uint32_t n )
  {
    if ( n >= cuts_.size() )
    {
      cuts_.resize( ntk_.num_nodes() );
      dirty_.resize( ntk_.num_nodes(), true );
    }
  }

  void mark_dirty_up( uint32_t n )
  {
    if ( dirty_[n] )
    {
      return;
    }
    dirty_[n] = true;
    std::vector<uint32_t> stack{ n };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      stack.pop_back();
      for ( auto f : ntk_.fanouts( u ) )
      {
        if ( f < dirty_.size() && !dirty_[f] )
        {
          dirty_[f] = true;
          stack.push_back( f );
        }
      }
    }
  }

  void ensure_fresh( uint32_t n )
  {
    grow( n );
    if ( !dirty_[n] )
    {
      return;
    }
    /* iterative post-order over the dirty region */
    std::vector<uint32_t> stack{ n };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      if ( !dirty_[u] )
      {
        stack.pop_back();
        continue;
      }
      if ( !ntk_.is_and( u ) )
      {
        cut trivial;
        trivial.leaves = { u };
        trivial.signature = cut::leaf_bit( u );
        cuts_[u] = { trivial };
        dirty_[u] = false;
        stack.pop_back();
        continue;
      }
      uint32_t i0 = ntk_.fanin0( u ).index();
      uint32_t i1 = ntk_.fanin1( u ).index();
      grow( std::max( i0, i1 ) );
      if ( dirty_[i0] )
      {
        stack.push_back( i0 );
        continue;
      }
      if ( dirty_[i1] )
      {
        stack.push_back( i1 );
        continue;
      }
      stack.pop_back();
      cuts_[u] = detail::merge_cut_sets( cuts_[i0], cuts_[i1], u, ps_.cut_size, ps_.cut_limit );
      dirty_[u] = false;
    }
  }

  aig& ntk_;
  cut_params ps_;
  std::vector<std::vector<cut>> cuts_;
  std::vector<bool> dirty_;
};

/*! \brief Enumerates up to \p limit irredundant K-feasible cuts of \p root. */
inline std::vector<cut> enumerate_cuts( aig& ntk, uint32_t root, uint32_t k = 4, uint32_t limit = 8 )
{
  if ( !ntk.is_live( root ) )
  {
    throw std::invalid_argument( "enumerate_cuts: node is not live" );
  }
  cut_manager mgr( ntk, { k, limit } );
  return mgr.cuts( root );
}

/*! \brief Truth table of \p root as a function of the cut leaves.
 *
 * Forward simulation of the cone; reaching a PI that is not a leaf means the
 * leaf set is not a cut of the root.
 */
inline truth_table cut_tt( aig const& ntk, uint32_t root, std::vector<uint32_t> const& leaves )
{
  if ( leaves.size() > 16 )
  {
    throw std::invalid_argument( "cut_tt: more than 16 leaves" );
  }
  auto const num_vars = static_cast<uint32_t>( leaves.size() );
  std::unordered_map<uint32_t, truth_table> values;
  for ( uint32_t i = 0; i < leaves.size(); ++i )
  {
    values.emplace( leaves[i], truth_table::nth_var( num_vars, i ) );
  }
  values.emplace( 0, truth_table::constant( num_vars, false ) );

  std::vector<uint32_t> stack{ root };
  while ( !stack.empty() )
  {
    uint32_t u = stack.back();
    if ( values.count( u ) )
    {
      stack.pop_back();
      continue;
    }
    if ( !ntk.is_and( u ) )
    {
      throw std::invalid_argument( "cut_tt: cone escapes the cut" );
    }
    uint32_t i0 = ntk.fanin0( u ).index();
    uint32_t i1 = ntk.fanin1( u ).index();
    if ( !values.count( i0 ) )
    {
      stack.push_back( i0 );
      continue;
    }
    if ( !values.count( i1 ) )
    {
      stack.push_back( i1 );
      continue;
    }
    stack.pop_back();
    auto t0 = values.at( i0 );
    if ( ntk.fanin0( u ).is_complemented() )
    {
      t0 = ~t0;
    }
    auto t1 = values.at( i1 );
    if ( ntk.fanin1( u ).is_complemented() )
    {
      t1 = ~t1;
    }
    values.emplace( u, t0 & t1 );
  }
  return values.at( root );
}

inline truth_table cut_tt( aig const& ntk, cut const& c, uint32_t root )
{
  return cut_tt( ntk, root, c.leaves );
}

/*! \brief Grows a cut from \p root by cheapest-leaf expansion.
 *
 * Each step expands the non-PI leaf whose fanins add the fewest new leaves
 * (reconvergent fanins are free), ties broken towards the lowest node index,
 * while the leaf count stays within \p max_leaves.
 */
inline cut reconv_cut( aig const& ntk, uint32_t root, uint32_t max_leaves )
{
  if ( max_leaves < 2 )
  {
    throw std::invalid_argument( "reconv_cut: max_leaves too small" );
  }
  std::vector<uint32_t> leaves{ root };
  std::unordered_map<uint32_t, bool> in_cone; /* true while on the leaf frontier */
  in_cone[root] = true;

  while ( true )
  {
    int best_cost = 3;
    uint32_t best_leaf = 0;
    for ( auto l : leaves )
    {
      if ( !ntk.is_and( l ) )
      {
        continue;
      }
      int cost = -1;
      uint32_t i0 = ntk.fanin0( l ).index();
      uint32_t i1 = ntk.fanin1( l ).index();
      if ( i0 != 0 && !in_cone.count( i0 ) )
      {
        ++cost;
      }
      if ( i1 != 0 && i1 != i0 && !in_cone.count( i1 ) )
      {
        ++cost;
      }
      if ( cost < best_cost || ( cost == best_cost && best_leaf != 0 && l < best_leaf ) )
      {
        best_cost = cost;
        best_leaf = l;
      }
    }
    if ( best_leaf == 0 ||
         static_cast<int>( leaves.size() ) + best_cost > static_cast<int>( max_leaves ) )
    {
      break;
    }
    in_cone[best_leaf] = false;
    leaves.erase( std::find( leaves.begin(), leaves.end(), best_leaf ) );
    for ( auto f : { ntk.fanin0( best_leaf ), ntk.fanin1( best_leaf ) } )
    {
      if ( f.index() != 0 && !in_cone.count( f.index() ) )
      {
        in_cone[f.index()] = true;
        leaves.push_back( f.index() );
      }
    }
  }

  cut result;
  std::sort( leaves.begin(), leaves.end() );
  result.leaves = std::move( leaves );
  for ( auto l : result.leaves )
  {
    result.signature |= cut::leaf_bit( l );
  }
  return result;
}

} // namespace aigopt
