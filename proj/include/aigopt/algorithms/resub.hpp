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
  \file resub.hpp
  \brief Resubstitution: re-express a node with existing divisors

  Divisors are collected inside and beside the reconvergence window, never
  from the root's MFFC or transitive fanout, and compared by truth tables
  over the window leaves (no external don't-cares, so any match is globally
  function-preserving).  k-resubstitution is checked for k = 0..3 with
  AND/OR structures; the first candidate whose net gain passes the gate is
  taken.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "../networks/aig.hpp"
#include "../utils/truth_table.hpp"
#include "cone_builder.hpp"
#include "cuts.hpp"

namespace aigopt
{

struct resub_params
{
  uint32_t max_leaves{ 8 };     /* window size; the paper's scripts set this via -K */
  uint32_t max_divisors{ 150 };
  uint32_t max_k{ 3 };
  uint32_t pair_budget{ 10000 }; /* candidate checks per node and level */
};

struct divisor_set
{
  std::vector<uint32_t> leaves;
  std::vector<uint32_t> divisors;   /* node indices, topological, leaves first */
  std::vector<truth_table> tts;     /* aligned with divisors */
  truth_table root_tt;
  std::vector<uint32_t> mffc;       /* dying cone of the root */
};

/*! \brief Expression over divisors: literals are 2 * position + complement. */
struct resub_candidate
{
  enum class shape : uint8_t
  {
    copy,        /* d0 */
    and2,        /* d0 & d1 */
    or2,         /* d0 | d1 */
    and3,        /* d0 & d1 & d2 */
    or3,         /* d0 | d1 | d2 */
    and_or,      /* d0 & (d1 | d2) */
    or_and,      /* d0 | (d1 & d2) */
    and4,        /* d0 & d1 & d2 & d3 */
    or4,         /* d0 | d1 | d2 | d3 */
    and_or_or,   /* (d0 | d1) & (d2 | d3) */
    or_and_and,  /* (d0 & d1) | (d2 & d3) */
  };

  shape structure{ shape::copy };
  std::array<uint32_t, 4> lits{ 0, 0, 0, 0 };
  bool output_compl{ false };
  int gain{ 0 };
};

class resub_engine
{
public:
  explicit resub_engine( aig& ntk, resub_params const& ps = {} )
      : ntk_( ntk ), ps_( ps )
  {
    if ( ps_.max_leaves > 12 )
    {
      throw std::invalid_argument( "resub: window limited to 12 leaves" );
    }
  }

  /*! \brief Window leaves plus every usable divisor with its truth table. */
  divisor_set collect_divisors( uint32_t v )
  {
    divisor_set divs;
    auto window = reconv_cut( ntk_, v, ps_.max_leaves );
    divs.leaves = window.leaves;
    divs.root_tt = cut_tt( ntk_, v, divs.leaves );

    auto view = ntk_.mffc( v );
    divs.mffc = view.members;
    std::unordered_set<uint32_t> blocked( view.members.begin(), view.members.end() );

    /* the transitive fanout of the root can never be a divisor */
    std::vector<uint32_t> stack{ v };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      stack.pop_back();
      for ( auto f : ntk_.fanouts( u ) )
      {
        if ( blocked.insert( f ).second )
        {
          stack.push_back( f );
        }
      }
    }

    std::unordered_map<uint32_t, uint32_t> position; /* node -> divisor slot */
    auto push_divisor = [&]( uint32_t n, truth_table tt ) {
      position.emplace( n, static_cast<uint32_t>( divs.divisors.size() ) );
      divs.divisors.push_back( n );
      divs.tts.push_back( std::move( tt ) );
    };
    for ( uint32_t i = 0; i < divs.leaves.size(); ++i )
    {
      push_divisor( divs.leaves[i], truth_table::nth_var( static_cast<uint32_t>( divs.leaves.size() ), i ) );
    }

    /* inner window nodes in topological order, skipping the dying cone */
    std::vector<uint32_t> cone;
    collect_cone( v, divs.leaves, cone );
    for ( auto n : cone )
    {
      if ( divs.divisors.size() >= ps_.max_divisors )
      {
        break;
      }
      if ( n == v || blocked.count( n ) || position.count( n ) )
      {
        continue;
      }
      push_divisor( n, node_tt( n, position, divs ) );
    }

    /* side nodes: fanouts of divisors whose both fanins are divisors already */
    bool grew = true;
    while ( grew && divs.divisors.size() < ps_.max_divisors )
    {
      grew = false;
      std::vector<uint32_t> batch;
      for ( auto d : divs.divisors )
      {
        for ( auto f : ntk_.fanouts( d ) )
        {
          if ( !ntk_.is_and( f ) || blocked.count( f ) || position.count( f ) )
          {
            continue;
          }
          if ( position.count( ntk_.fanin0( f ).index() ) && position.count( ntk_.fanin1( f ).index() ) )
          {
            batch.push_back( f );
          }
        }
      }
      std::sort( batch.begin(), batch.end() );
      batch.erase( std::unique( batch.begin(), batch.end() ), batch.end() );
      for ( auto f : batch )
      {
        if ( divs.divisors.size() >= ps_.max_divisors )
        {
          break;
        }
        if ( position.count( f ) )
        {
          continue;
        }
        push_divisor( f, node_tt( f, position, divs ) );
        grew = true;
      }
    }
    return divs;
  }

  std::optional<resub_candidate> evaluate( uint32_t v, bool zero_cost )
  {
    auto divs = collect_divisors( v );
    return search( v, divs, zero_cost );
  }

  std::optional<resub_candidate> search( uint32_t v, divisor_set const& divs, bool zero_cost )
  {
    int saved = static_cast<int>( divs.mffc.size() );
    int gate = zero_cost ? 0 : 1;
    auto const& f = divs.root_tt;
    uint32_t num_divs = static_cast<uint32_t>( divs.divisors.size() );

    auto pol_tt = [&]( uint32_t lit ) {
      return ( lit & 1 ) ? ~divs.tts[lit >> 1] : divs.tts[lit >> 1];
    };
    auto finish = [&]( resub_candidate cand ) -> std::optional<resub_candidate> {
      int gain = price( v, divs, cand );
      if ( gain < gate )
      {
        return std::nullopt;
      }
      cand.gain = gain;
      return cand;
    };

    /* k = 0: the root function is an existing divisor */
    for ( uint32_t d = 0; d < num_divs; ++d )
    {
      if ( divs.tts[d] == f )
      {
        if ( auto c = finish( { resub_candidate::shape::copy, { 2 * d, 0, 0, 0 }, false, 0 } ) )
        {
          return c;
        }
      }
      if ( ~divs.tts[d] == f )
      {
        if ( auto c = finish( { resub_candidate::shape::copy, { 2 * d + 1, 0, 0, 0 }, false, 0 } ) )
        {
          return c;
        }
      }
    }
    if ( ps_.max_k < 1 || saved - 1 < gate )
    {
      return std::nullopt;
    }

    /* unate partitions: AND-side divisors cover f, OR-side are covered by f */
    std::vector<uint32_t> covers_f;  /* f => lit */
    std::vector<uint32_t> under_f;   /* lit => f */
    for ( uint32_t d = 0; d < num_divs; ++d )
    {
      for ( uint32_t pol = 0; pol < 2; ++pol )
      {
        auto tt = pol_tt( 2 * d + pol );
        if ( f.implies( tt ) )
        {
          covers_f.push_back( 2 * d + pol );
        }
        if ( tt.implies( f ) )
        {
          under_f.push_back( 2 * d + pol );
        }
      }
    }

    /* k = 1 */
    uint32_t budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < covers_f.size() && budget; ++i )
    {
      for ( uint32_t j = i + 1; j < covers_f.size() && budget; ++j, --budget )
      {
        if ( ( pol_tt( covers_f[i] ) & pol_tt( covers_f[j] ) ) == f )
        {
          if ( auto c = finish( { resub_candidate::shape::and2, { covers_f[i], covers_f[j], 0, 0 }, false, 0 } ) )
          {
            return c;
          }
        }
      }
    }
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < under_f.size() && budget; ++i )
    {
      for ( uint32_t j = i + 1; j < under_f.size() && budget; ++j, --budget )
      {
        if ( ( pol_tt( under_f[i] ) | pol_tt( under_f[j] ) ) == f )
        {
          if ( auto c = finish( { resub_candidate::shape::or2, { under_f[i], under_f[j], 0, 0 }, false, 0 } ) )
          {
            return c;
          }
        }
      }
    }
    if ( ps_.max_k < 2 || saved - 2 < gate )
    {
      return std::nullopt;
    }

    /* k = 2 */
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < covers_f.size() && budget; ++i )
    {
      for ( uint32_t j = i + 1; j < covers_f.size() && budget; ++j )
      {
        auto partial = pol_tt( covers_f[i] ) & pol_tt( covers_f[j] );
        if ( partial == f )
        {
          continue; /* already reachable at k = 1 */
        }
        for ( uint32_t l = j + 1; l < covers_f.size() && budget; ++l, --budget )
        {
          if ( ( partial & pol_tt( covers_f[l] ) ) == f )
          {
            if ( auto c = finish( { resub_candidate::shape::and3,
                                    { covers_f[i], covers_f[j], covers_f[l], 0 }, false, 0 } ) )
            {
              return c;
            }
          }
        }
      }
    }
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < under_f.size() && budget; ++i )
    {
      for ( uint32_t j = i + 1; j < under_f.size() && budget; ++j )
      {
        auto partial = pol_tt( under_f[i] ) | pol_tt( under_f[j] );
        if ( partial == f )
        {
          continue;
        }
        for ( uint32_t l = j + 1; l < under_f.size() && budget; ++l, --budget )
        {
          if ( ( partial | pol_tt( under_f[l] ) ) == f )
          {
            if ( auto c = finish( { resub_candidate::shape::or3,
                                    { under_f[i], under_f[j], under_f[l], 0 }, false, 0 } ) )
            {
              return c;
            }
          }
        }
      }
    }
    /* d0 & (d1 | d2): d0 covers f, the OR part matters only on d0's onset */
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < covers_f.size() && budget; ++i )
    {
      auto base = pol_tt( covers_f[i] );
      for ( uint32_t j = 0; j < 2 * num_divs && budget; ++j )
      {
        for ( uint32_t l = j + 2; l < 2 * num_divs && budget; ++l, --budget )
        {
          if ( ( j >> 1 ) == ( l >> 1 ) )
          {
            continue;
          }
          if ( ( base & ( pol_tt( j ) | pol_tt( l ) ) ) == f )
          {
            if ( auto c = finish( { resub_candidate::shape::and_or, { covers_f[i], j, l, 0 }, false, 0 } ) )
            {
              return c;
            }
          }
        }
      }
    }
    /* d0 | (d1 & d2) */
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < under_f.size() && budget; ++i )
    {
      auto base = pol_tt( under_f[i] );
      for ( uint32_t j = 0; j < 2 * num_divs && budget; ++j )
      {
        for ( uint32_t l = j + 2; l < 2 * num_divs && budget; ++l, --budget )
        {
          if ( ( j >> 1 ) == ( l >> 1 ) )
          {
            continue;
          }
          if ( ( base | ( pol_tt( j ) & pol_tt( l ) ) ) == f )
          {
            if ( auto c = finish( { resub_candidate::shape::or_and, { under_f[i], j, l, 0 }, false, 0 } ) )
            {
              return c;
            }
          }
        }
      }
    }
    if ( ps_.max_k < 3 || saved - 3 < gate )
    {
      return std::nullopt;
    }

    /* k = 3: four divisors, AND/OR trees */
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < covers_f.size() && budget; ++i )
    {
      for ( uint32_t j = i + 1; j < covers_f.size() && budget; ++j )
      {
        auto a = pol_tt( covers_f[i] ) & pol_tt( covers_f[j] );
        if ( a == f )
        {
          continue;
        }
        for ( uint32_t l = j + 1; l < covers_f.size() && budget; ++l )
        {
          for ( uint32_t m = l + 1; m < covers_f.size() && budget; ++m, --budget )
          {
            if ( ( a & pol_tt( covers_f[l] ) & pol_tt( covers_f[m] ) ) == f )
            {
              if ( auto c = finish( { resub_candidate::shape::and4,
                                      { covers_f[i], covers_f[j], covers_f[l], covers_f[m] }, false, 0 } ) )
              {
                return c;
              }
            }
          }
        }
      }
    }
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < under_f.size() && budget; ++i )
    {
      for ( uint32_t j = i + 1; j < under_f.size() && budget; ++j )
      {
        auto a = pol_tt( under_f[i] ) | pol_tt( under_f[j] );
        if ( a == f )
        {
          continue;
        }
        for ( uint32_t l = j + 1; l < under_f.size() && budget; ++l )
        {
          for ( uint32_t m = l + 1; m < under_f.size() && budget; ++m, --budget )
          {
            if ( ( a | pol_tt( under_f[l] ) | pol_tt( under_f[m] ) ) == f )
            {
              if ( auto c = finish( { resub_candidate::shape::or4,
                                      { under_f[i], under_f[j], under_f[l], under_f[m] }, false, 0 } ) )
              {
                return c;
              }
            }
          }
        }
      }
    }
    /* (d0 | d1) & (d2 | d3) and its dual */
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < 2 * num_divs && budget; ++i )
    {
      for ( uint32_t j = i + 2; j < 2 * num_divs && budget; ++j )
      {
        if ( ( i >> 1 ) == ( j >> 1 ) )
        {
          continue;
        }
        auto left = pol_tt( i ) | pol_tt( j );
        if ( !f.implies( left ) )
        {
          continue;
        }
        for ( uint32_t l = i + 2; l < 2 * num_divs && budget; ++l )
        {
          for ( uint32_t m = l + 2; m < 2 * num_divs && budget; ++m, --budget )
          {
            if ( ( l >> 1 ) == ( m >> 1 ) )
            {
              continue;
            }
            if ( ( left & ( pol_tt( l ) | pol_tt( m ) ) ) == f )
            {
              if ( auto c = finish( { resub_candidate::shape::and_or_or, { i, j, l, m }, false, 0 } ) )
              {
                return c;
              }
            }
          }
        }
      }
    }
    budget = ps_.pair_budget;
    for ( uint32_t i = 0; i < 2 * num_divs && budget; ++i )
    {
      for ( uint32_t j = i + 2; j < 2 * num_divs && budget; ++j )
      {
        if ( ( i >> 1 ) == ( j >> 1 ) )
        {
          continue;
        }
        auto left = pol_tt( i ) & pol_tt( j );
        if ( !left.implies( f ) )
        {
          continue;
        }
        for ( uint32_t l = i + 2; l < 2 * num_divs && budget; ++l )
        {
          for ( uint32_t m = l + 2; m < 2 * num_divs && budget; ++m, --budget )
          {
            if ( ( l >> 1 ) == ( m >> 1 ) )
            {
              continue;
            }
            if ( ( left | ( pol_tt( l ) & pol_tt( m ) ) ) == f )
            {
              if ( auto c = finish( { resub_candidate::shape::or_and_and, { i, j, l, m }, false, 0 } ) )
              {
                return c;
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  int apply( uint32_t v, divisor_set const& divs, resub_candidate const& cand )
  {
    uint32_t before = ntk_.num_gates();
    std::vector<uint32_t> none;
    cone_builder builder( ntk_, v, none, true );
    literal repl = build( builder, divs, cand );
    assert( !builder.failed() );
    ntk_.replace( v, repl );
    return static_cast<int>( before ) - static_cast<int>( ntk_.num_gates() );
  }

private:
  int price( uint32_t v, divisor_set const& divs, resub_candidate const& cand )
  {
    cone_builder probe( ntk_, v, divs.mffc, false );
    build( probe, divs, cand );
    if ( probe.failed() )
    {
      return -1;
    }
    return static_cast<int>( divs.mffc.size() ) - static_cast<int>( probe.added() );
  }

  literal build( cone_builder& builder, divisor_set const& divs, resub_candidate const& cand )
  {
    auto lit = [&]( uint32_t l ) {
      return literal( divs.divisors[l >> 1], ( l & 1 ) != 0 );
    };
    using shape = resub_candidate::shape;
    literal out = lit_false;
    switch ( cand.structure )
    {
    case shape::copy:
      out = lit( cand.lits[0] );
      break;
    case shape::and2:
      out = builder.make_and( lit( cand.lits[0] ), lit( cand.lits[1] ) );
      break;
    case shape::or2:
      out = builder.make_or( lit( cand.lits[0] ), lit( cand.lits[1] ) );
      break;
    case shape::and3:
      out = builder.make_and( lit( cand.lits[0] ),
                              builder.make_and( lit( cand.lits[1] ), lit( cand.lits[2] ) ) );
      break;
    case shape::or3:
      out = builder.make_or( lit( cand.lits[0] ),
                             builder.make_or( lit( cand.lits[1] ), lit( cand.lits[2] ) ) );
      break;
    case shape::and_or:
      out = builder.make_and( lit( cand.lits[0] ),
                              builder.make_or( lit( cand.lits[1] ), lit( cand.lits[2] ) ) );
      break;
    case shape::or_and:
      out = builder.make_or( lit( cand.lits[0] ),
                             builder.make_and( lit( cand.lits[1] ), lit( cand.lits[2] ) ) );
      break;
    case shape::and4:
      out = builder.make_and( builder.make_and( lit( cand.lits[0] ), lit( cand.lits[1] ) ),
                              builder.make_and( lit( cand.lits[2] ), lit( cand.lits[3] ) ) );
      break;
    case shape::or4:
      out = builder.make_or( builder.make_or( lit( cand.lits[0] ), lit( cand.lits[1] ) ),
                             builder.make_or( lit( cand.lits[2] ), lit( cand.lits[3] ) ) );
      break;
    case shape::and_or_or:
      out = builder.make_and( builder.make_or( lit( cand.lits[0] ), lit( cand.lits[1] ) ),
                              builder.make_or( lit( cand.lits[2] ), lit( cand.lits[3] ) ) );
      break;
    case shape::or_and_and:
      out = builder.make_or( builder.make_and( lit( cand.lits[0] ), lit( cand.lits[1] ) ),
                             builder.make_and( lit( cand.lits[2] ), lit( cand.lits[3] ) ) );
      break;
    }
    return out ^ cand.output_compl;
  }

  truth_table node_tt( uint32_t n, std::unordered_map<uint32_t, uint32_t> const& position,
                       divisor_set const& divs ) const
  {
    auto f0 = ntk_.fanin0( n );
    auto f1 = ntk_.fanin1( n );
    auto t0 = f0.index() == 0 ? truth_table::constant( divs.root_tt.num_vars(), false )
                              : divs.tts[position.at( f0.index() )];
    auto t1 = f1.index() == 0 ? truth_table::constant( divs.root_tt.num_vars(), false )
                              : divs.tts[position.at( f1.index() )];
    if ( f0.is_complemented() )
    {
      t0 = ~t0;
    }
    if ( f1.is_complemented() )
    {
      t1 = ~t1;
    }
    return t0 & t1;
  }

  /* inner cone nodes between the root and the leaves, fanins first */
  void collect_cone( uint32_t root, std::vector<uint32_t> const& leaves, std::vector<uint32_t>& cone )
  {
    std::unordered_set<uint32_t> seen( leaves.begin(), leaves.end() );
    seen.insert( 0 );
    std::vector<uint32_t> stack{ root };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      if ( seen.count( u ) )
      {
        stack.pop_back();
        continue;
      }
      uint32_t i0 = ntk_.fanin0( u ).index();
      uint32_t i1 = ntk_.fanin1( u ).index();
      if ( !seen.count( i0 ) )
      {
        stack.push_back( i0 );
        continue;
      }
      if ( !seen.count( i1 ) )
      {
        stack.push_back( i1 );
        continue;
      }
      stack.pop_back();
      seen.insert( u );
      cone.push_back( u );
    }
  }

  aig& ntk_;
  resub_params ps_;
};

} // namespace aigopt
