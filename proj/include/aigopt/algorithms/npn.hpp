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
  \file npn.hpp
  \brief NPN canonicalization of 4-input functions

  The canonical form of a 16-bit table is the smallest value reachable under
  input permutation, input complementation, and output complementation (768
  transforms).  Transforms are searched in a fixed order, so the reported
  transform is deterministic.
*/

#pragma once

#include <array>
#include <cstdint>

namespace aigopt
{

inline constexpr std::array<std::array<uint8_t, 4>, 24> npn_permutations = { {
    { 0, 1, 2, 3 }, { 0, 1, 3, 2 }, { 0, 2, 1, 3 }, { 0, 2, 3, 1 }, { 0, 3, 1, 2 }, { 0, 3, 2, 1 },
    { 1, 0, 2, 3 }, { 1, 0, 3, 2 }, { 1, 2, 0, 3 }, { 1, 2, 3, 0 }, { 1, 3, 0, 2 }, { 1, 3, 2, 0 },
    { 2, 0, 1, 3 }, { 2, 0, 3, 1 }, { 2, 1, 0, 3 }, { 2, 1, 3, 0 }, { 2, 3, 0, 1 }, { 2, 3, 1, 0 },
    { 3, 0, 1, 2 }, { 3, 0, 2, 1 }, { 3, 1, 0, 2 }, { 3, 1, 2, 0 }, { 3, 2, 0, 1 }, { 3, 2, 1, 0 },
} };

/*! \brief One of the 768 NPN transforms on 4-input functions.
 *
 * Applied to a table T, old input j is driven by new input perm[j],
 * complemented according to bit j of input_compl; the output is complemented
 * when output_compl holds.
 */
struct npn_transform
{
  uint8_t perm_index{ 0 };
  uint8_t input_compl{ 0 };
  bool output_compl{ false };
};

/*! \brief Result table U with U(y) = out ^ T(x), x_j = y_perm[j] ^ compl_j. */
inline uint16_t npn_apply( npn_transform const& t, uint16_t table )
{
  auto const& perm = npn_permutations[t.perm_index];
  uint16_t result = 0;
  for ( uint32_t i = 0; i < 16; ++i )
  {
    uint32_t x = 0;
    for ( uint32_t j = 0; j < 4; ++j )
    {
      uint32_t xj = ( ( i >> perm[j] ) & 1 ) ^ ( ( t.input_compl >> j ) & 1 );
      x |= xj << j;
    }
    uint32_t bit = ( ( table >> x ) & 1 ) ^ ( t.output_compl ? 1 : 0 );
    result = static_cast<uint16_t>( result | ( bit << i ) );
  }
  return result;
}

/*! \brief Undoes npn_apply: npn_apply_inverse( t, npn_apply( t, T ) ) == T. */
inline uint16_t npn_apply_inverse( npn_transform const& t, uint16_t table )
{
  auto const& perm = npn_permutations[t.perm_index];
  uint16_t result = 0;
  for ( uint32_t x = 0; x < 16; ++x )
  {
    uint32_t i = 0;
    for ( uint32_t j = 0; j < 4; ++j )
    {
      uint32_t yj = ( ( x >> j ) & 1 ) ^ ( ( t.input_compl >> j ) & 1 );
      i |= yj << perm[j];
    }
    uint32_t bit = ( ( table >> i ) & 1 ) ^ ( t.output_compl ? 1 : 0 );
    result = static_cast<uint16_t>( result | ( bit << x ) );
  }
  return result;
}

/*! \brief Minimum table over all 768 transforms, with one witness transform. */
inline std::pair<uint16_t, npn_transform> npn_canon( uint16_t table )
{
  uint16_t best = table;
  npn_transform best_t{};
  bool first = true;
  for ( uint8_t p = 0; p < 24; ++p )
  {
    for ( uint16_t m = 0; m < 16; ++m )
    {
      for ( uint8_t o = 0; o < 2; ++o )
      {
        npn_transform t{ p, static_cast<uint8_t>( m ), o != 0 };
        uint16_t v = npn_apply( t, table );
        if ( first || v < best )
        {
          best = v;
          best_t = t;
          first = false;
        }
      }
    }
  }
  return { best, best_t };
}

} // namespace aigopt
