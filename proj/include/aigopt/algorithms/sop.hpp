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
  \file sop.hpp
  \brief Irredundant sum-of-products extraction and algebraic factoring

  The cover comes out of the Minato-Morreale construction, so removing any
  cube changes the function.  Factoring divides out the most frequent
  literal recursively, which never increases the literal count.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "../utils/truth_table.hpp"

namespace aigopt
{

/*! \brief Product term as positive/negative variable masks. */
struct sop_cube
{
  uint32_t pos{ 0 };
  uint32_t neg{ 0 };

  uint32_t num_literals() const
  {
    return static_cast<uint32_t>( __builtin_popcount( pos ) + __builtin_popcount( neg ) );
  }

  bool operator==( sop_cube const& other ) const { return pos == other.pos && neg == other.neg; }
};

struct sop_cover
{
  std::vector<sop_cube> cubes;
  uint32_t num_vars{ 0 };

  uint32_t num_literals() const
  {
    uint32_t n = 0;
    for ( auto const& c : cubes )
    {
      n += c.num_literals();
    }
    return n;
  }
};

inline truth_table cube_tt( sop_cube const& c, uint32_t num_vars )
{
  auto tt = truth_table::constant( num_vars, true );
  for ( uint32_t v = 0; v < num_vars; ++v )
  {
    if ( c.pos & ( 1u << v ) )
    {
      tt &= truth_table::nth_var( num_vars, v );
    }
    if ( c.neg & ( 1u << v ) )
    {
      tt &= ~truth_table::nth_var( num_vars, v );
    }
  }
  return tt;
}

inline truth_table cover_tt( sop_cover const& cover )
{
  auto tt = truth_table::constant( cover.num_vars, false );
  for ( auto const& c : cover.cubes )
  {
    tt |= cube_tt( c, cover.num_vars );
  }
  return tt;
}

namespace detail
{

inline std::vector<sop_cube> isop_rec( truth_table const& lower, truth_table const& upper, int var )
{
  assert( lower.implies( upper ) );
  if ( lower.is_const0() )
  {
    return {};
  }
  if ( upper.is_const1() )
  {
    return { sop_cube{} };
  }
  /* find the top variable both bounds still depend on */
  while ( var >= 0 && !lower.depends_on( var ) && !upper.depends_on( var ) )
  {
    --var;
  }
  assert( var >= 0 );

  auto l0 = lower.cofactor( var, false );
  auto l1 = lower.cofactor( var, true );
  auto u0 = upper.cofactor( var, false );
  auto u1 = upper.cofactor( var, true );

  auto cubes0 = isop_rec( l0 & ~u1, u0, var - 1 );
  auto cubes1 = isop_rec( l1 & ~u0, u1, var - 1 );

  sop_cover part0{ cubes0, lower.num_vars() };
  sop_cover part1{ cubes1, lower.num_vars() };
  auto f0 = cover_tt( part0 );
  auto f1 = cover_tt( part1 );
  auto remainder = ( l0 & ~f0 ) | ( l1 & ~f1 );
  auto cubes2 = isop_rec( remainder, u0 & u1, var - 1 );

  std::vector<sop_cube> result;
  result.reserve( cubes0.size() + cubes1.size() + cubes2.size() );
  for ( auto c : cubes0 )
  {
    c.neg |= 1u << var;
    result.push_back( c );
  }
  for ( auto c : cubes1 )
  {
    c.pos |= 1u << var;
    result.push_back( c );
  }
  result.insert( result.end(), cubes2.begin(), cubes2.end() );
  return result;
}

} // namespace detail

/*! \brief Irredundant sum-of-products cover of \p tt. */
inline sop_cover isop( truth_table const& tt )
{
  sop_cover cover;
  cover.num_vars = tt.num_vars();
  cover.cubes = detail::isop_rec( tt, tt, static_cast<int>( tt.num_vars() ) - 1 );
  return cover;
}

/*! \brief Factored expression tree over the cover variables. */
struct factored_form
{
  enum class op : uint8_t
  {
    constant, /* value in `polarity` */
    lit,      /* variable `var`, complemented if `polarity` */
    op_and,
    op_or
  };

  struct expr
  {
    op kind;
    uint32_t var{ 0 };
    bool polarity{ false };
    int32_t left{ -1 };
    int32_t right{ -1 };
  };

  std::vector<expr> nodes;
  int32_t root{ -1 };
  uint32_t num_vars{ 0 };

  int32_t make_const( bool value )
  {
    nodes.push_back( { op::constant, 0, value, -1, -1 } );
    return static_cast<int32_t>( nodes.size() - 1 );
  }
  int32_t make_lit( uint32_t var, bool complemented )
  {
    nodes.push_back( { op::lit, var, complemented, -1, -1 } );
    return static_cast<int32_t>( nodes.size() - 1 );
  }
  int32_t make_binary( op kind, int32_t l, int32_t r )
  {
    nodes.push_back( { kind, 0, false, l, r } );
    return static_cast<int32_t>( nodes.size() - 1 );
  }

  uint32_t literal_count() const
  {
    uint32_t n = 0;
    for ( auto const& e : nodes )
    {
      if ( e.kind == op::lit )
      {
        ++n;
      }
    }
    return n;
  }

  truth_table evaluate() const
  {
    return evaluate_rec( root );
  }

private:
  truth_table evaluate_rec( int32_t i ) const
  {
    auto const& e = nodes[i];
    switch ( e.kind )
    {
    case op::constant:
      return truth_table::constant( num_vars, e.polarity );
    case op::lit:
    {
      auto v = truth_table::nth_var( num_vars, e.var );
      return e.polarity ? ~v : v;
    }
    case op::op_and:
      return evaluate_rec( e.left ) & evaluate_rec( e.right );
    case op::op_or:
    default:
      return evaluate_rec( e.left ) | evaluate_rec( e.right );
    }
  }
};

namespace detail
{

/* literal = 2 * var + polarity, polarity 1 meaning complemented */
inline uint32_t most_frequent_literal( std::vector<sop_cube> const& cubes, uint32_t num_vars, uint32_t& frequency )
{
  uint32_t best = 0;
  frequency = 0;
  for ( uint32_t v = 0; v < num_vars; ++v )
  {
    uint32_t pos_count = 0;
    uint32_t neg_count = 0;
    for ( auto const& c : cubes )
    {
      pos_count += ( c.pos >> v ) & 1;
      neg_count += ( c.neg >> v ) & 1;
    }
    if ( pos_count > frequency )
    {
      frequency = pos_count;
      best = 2 * v;
    }
    if ( neg_count > frequency )
    {
      frequency = neg_count;
      best = 2 * v + 1;
    }
  }
  return best;
}

inline int32_t factor_rec( factored_form& form, std::vector<sop_cube> cubes, uint32_t num_vars )
{
  if ( cubes.empty() )
  {
    return form.make_const( false );
  }
  if ( cubes.size() == 1 && cubes[0].num_literals() == 0 )
  {
    return form.make_const( true );
  }

  uint32_t frequency = 0;
  uint32_t lit = most_frequent_literal( cubes, num_vars, frequency );
  uint32_t var = lit / 2;
  bool complemented = ( lit & 1 ) != 0;
  uint32_t mask = 1u << var;

  if ( frequency <= 1 && cubes.size() > 1 )
  {
    /* no common literal: expression is an OR over the factored cubes */
    int32_t acc = factor_rec( form, { cubes[0] }, num_vars );
    for ( uint32_t i = 1; i < cubes.size(); ++i )
    {
      int32_t next = factor_rec( form, { cubes[i] }, num_vars );
      acc = form.make_binary( factored_form::op::op_or, acc, next );
    }
    return acc;
  }

  /* divide: F = lit * quotient + remainder */
  std::vector<sop_cube> quotient;
  std::vector<sop_cube> remainder;
  for ( auto c : cubes )
  {
    bool has = complemented ? ( c.neg & mask ) != 0 : ( c.pos & mask ) != 0;
    if ( has )
    {
      ( complemented ? c.neg : c.pos ) &= ~mask;
      quotient.push_back( c );
    }
    else
    {
      remainder.push_back( c );
    }
  }
  int32_t lit_node = form.make_lit( var, complemented );
  int32_t q = factor_rec( form, std::move( quotient ), num_vars );
  int32_t product = q >= 0 && form.nodes[q].kind == factored_form::op::constant && form.nodes[q].polarity
                        ? lit_node
                        : form.make_binary( factored_form::op::op_and, lit_node, q );
  if ( remainder.empty() )
  {
    return product;
  }
  int32_t r = factor_rec( form, std::move( remainder ), num_vars );
  return form.make_binary( factored_form::op::op_or, product, r );
}

} // namespace detail

/*! \brief Algebraic factoring by recursive most-frequent-literal division. */
inline factored_form factor( sop_cover const& cover )
{
  factored_form form;
  form.num_vars = cover.num_vars;
  form.root = detail::factor_rec( form, cover.cubes, cover.num_vars );
  return form;
}

} // namespace aigopt
