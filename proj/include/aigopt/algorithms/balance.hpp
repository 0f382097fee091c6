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
  \file balance.hpp
  \brief Depth-oriented AND-tree balancing

  Maximal same-polarity AND trees are flattened into operand lists and
  rebuilt by repeatedly combining the two lowest-level operands.  Inverted
  edges and shared nodes terminate a super-gate, so no logic is duplicated
  and the node count never grows.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "../networks/aig.hpp"

namespace aigopt
{

inline aig balance( aig const& src )
{
  aig dst;
  dst.name = src.name;
  dst.input_names() = src.input_names();
  dst.output_names() = src.output_names();
  dst.set_flattened_latches( src.flattened_latches() );

  constexpr literal unmapped = literal( 0x3fffffffu, true );
  std::vector<literal> map( src.num_nodes(), unmapped );
  map[0] = lit_false;
  for ( uint32_t i = 0; i < src.num_pis(); ++i )
  {
    map[src.pi_at( i )] = dst.add_pi();
  }

  /* operands of the maximal same-polarity AND tree rooted at n */
  auto gather = [&]( uint32_t n, std::vector<literal>& operands ) {
    operands.clear();
    std::vector<literal> frontier{ src.fanin0( n ), src.fanin1( n ) };
    while ( !frontier.empty() )
    {
      literal f = frontier.back();
      frontier.pop_back();
      uint32_t i = f.index();
      if ( !f.is_complemented() && src.is_and( i ) && src.ref_count( i ) == 1 )
      {
        frontier.push_back( src.fanin0( i ) );
        frontier.push_back( src.fanin1( i ) );
      }
      else
      {
        operands.push_back( f );
      }
    }
  };

  std::vector<literal> operands;
  auto build = [&]( uint32_t n ) {
    gather( n, operands );
    /* operands are mapped already (their nodes lie below this super-gate) */
    std::vector<literal> mapped;
    mapped.reserve( operands.size() );
    for ( auto f : operands )
    {
      mapped.push_back( map[f.index()] ^ f.is_complemented() );
    }
    std::sort( mapped.begin(), mapped.end() );
    mapped.erase( std::unique( mapped.begin(), mapped.end() ), mapped.end() );
    for ( uint32_t i = 0; i + 1 < mapped.size(); ++i )
    {
      if ( mapped[i].index() == mapped[i + 1].index() )
      {
        map[n] = lit_false; /* x & !x */
        return;
      }
    }
    auto level_of = [&]( literal l ) { return dst.level( l.index() ); };
    auto cmp = [&]( literal a, literal b ) {
      return level_of( a ) != level_of( b ) ? level_of( a ) < level_of( b ) : a < b;
    };
    std::sort( mapped.begin(), mapped.end(), cmp );
    while ( mapped.size() > 1 )
    {
      literal a = mapped[0];
      literal b = mapped[1];
      mapped.erase( mapped.begin(), mapped.begin() + 2 );
      literal r = dst.add_and( a, b );
      mapped.insert( std::lower_bound( mapped.begin(), mapped.end(), r, cmp ), r );
    }
    map[n] = mapped.empty() ? lit_true : mapped[0];
  };

  /* build every PO cone; super-gate internals are never mapped on their own */
  std::vector<uint32_t> stack;
  auto ensure = [&]( uint32_t root ) {
    if ( map[root] != unmapped )
    {
      return;
    }
    stack.push_back( root );
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      if ( map[u] != unmapped )
      {
        stack.pop_back();
        continue;
      }
      gather( u, operands );
      bool ready = true;
      for ( auto f : operands )
      {
        if ( map[f.index()] == unmapped )
        {
          stack.push_back( f.index() );
          ready = false;
        }
      }
      if ( !ready )
      {
        continue;
      }
      stack.pop_back();
      build( u );
    }
  };

  for ( uint32_t i = 0; i < src.num_pos(); ++i )
  {
    auto po = src.po_at( i );
    ensure( po.index() );
    dst.add_po( map[po.index()] ^ po.is_complemented() );
  }
  return dst;
}

} // namespace aigopt
