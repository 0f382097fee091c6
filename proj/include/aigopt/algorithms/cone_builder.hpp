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
  \file cone_builder.hpp
  \brief Prices or materializes a replacement cone over existing leaves

  In dry mode nothing is mutated: structural-hash hits on surviving nodes are
  free, hits on nodes of the dying cone count as new (they are rebuilt or kept
  alive either way, the net effect is identical), and misses go into a local
  overlay so shared subexpressions are priced once.  A candidate that would
  resolve to the root being replaced is rejected; the same search is then
  replayed in apply mode, so dry gain and applied gain agree by construction.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "../networks/aig.hpp"

namespace aigopt
{

class cone_builder
{
public:
  static constexpr uint32_t virtual_base = 0x20000000u;

  cone_builder( aig& ntk, uint32_t root, std::vector<uint32_t> const& dying, bool apply )
      : ntk_( ntk ), root_( root ), apply_( apply )
  {
    dying_.insert( dying.begin(), dying.end() );
  }

  bool failed() const { return failed_; }
  uint32_t added() const { return added_; }

  literal make_and( literal a, literal b )
  {
    if ( failed_ )
    {
      return lit_false;
    }
    if ( b < a )
    {
      std::swap( a, b );
    }
    if ( a == lit_false )
    {
      return lit_false;
    }
    if ( a == lit_true )
    {
      return b;
    }
    if ( a == b )
    {
      return a;
    }
    if ( a.index() == b.index() )
    {
      return lit_false;
    }
    if ( a.index() == root_ || b.index() == root_ )
    {
      failed_ = true;
      return lit_false;
    }

    if ( apply_ )
    {
      literal r = ntk_.add_and( a, b );
      if ( r.index() == root_ )
      {
        failed_ = true; /* evaluation must have rejected this candidate */
        return lit_false;
      }
      return r;
    }

    uint64_t key = ( static_cast<uint64_t>( a.raw() ) << 32 ) | b.raw();
    if ( auto it = overlay_.find( key ); it != overlay_.end() )
    {
      return it->second;
    }
    if ( a.index() < virtual_base && b.index() < virtual_base )
    {
      uint32_t hit = ntk_.find_and( a, b );
      if ( hit != 0 && ntk_.is_live( hit ) && !dying_.count( hit ) )
      {
        if ( hit == root_ )
        {
          failed_ = true;
          return lit_false;
        }
        return literal( hit, false );
      }
    }
    literal fresh( virtual_base + added_, false );
    ++added_;
    overlay_.emplace( key, fresh );
    return fresh;
  }

  literal make_or( literal a, literal b )
  {
    return !make_and( !a, !b );
  }

private:
  aig& ntk_;
  uint32_t root_;
  bool apply_;
  bool failed_{ false };
  uint32_t added_{ 0 };
  std::unordered_set<uint32_t> dying_;
  std::unordered_map<uint64_t, literal> overlay_;
};

} // namespace aigopt
