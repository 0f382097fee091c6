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
  \file truth_table.hpp
  \brief Bit-packed truth tables for up to 16 variables

  Bit i holds the function value under the assignment given by the binary
  expansion of i, variable 0 least significant.
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace aigopt
{

class truth_table
{
public:
  truth_table() = default;

  explicit truth_table( uint32_t num_vars )
      : num_vars_( num_vars ), words_( word_count( num_vars ), 0 )
  {
    assert( num_vars <= 16 );
  }

  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table tt( num_vars );
    if ( value )
    {
      for ( auto& w : tt.words_ )
      {
        w = ~static_cast<uint64_t>( 0 );
      }
      tt.mask_top();
    }
    return tt;
  }

  /*! \brief Projection of variable \p var. */
  static truth_table nth_var( uint32_t num_vars, uint32_t var )
  {
    assert( var < num_vars );
    truth_table tt( num_vars );
    if ( var < 6 )
    {
      static constexpr uint64_t patterns[] = {
          0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
          0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
      for ( auto& w : tt.words_ )
      {
        w = patterns[var];
      }
      tt.mask_top();
    }
    else
    {
      uint32_t block = 1u << ( var - 6 );
      for ( uint32_t w = 0; w < tt.words_.size(); ++w )
      {
        tt.words_[w] = ( w & block ) ? ~static_cast<uint64_t>( 0 ) : 0;
      }
    }
    return tt;
  }

  uint32_t num_vars() const { return num_vars_; }
  uint32_t num_bits() const { return 1u << num_vars_; }
  std::vector<uint64_t> const& words() const { return words_; }

  bool get_bit( uint32_t pos ) const
  {
    return ( words_[pos >> 6] >> ( pos & 63 ) ) & 1;
  }

  void set_bit( uint32_t pos, bool value = true )
  {
    if ( value )
    {
      words_[pos >> 6] |= uint64_t( 1 ) << ( pos & 63 );
    }
    else
    {
      words_[pos >> 6] &= ~( uint64_t( 1 ) << ( pos & 63 ) );
    }
  }

  bool is_const0() const
  {
    for ( auto w : words_ )
    {
      if ( w != 0 )
      {
        return false;
      }
    }
    return true;
  }

  bool is_const1() const { return ( ~*this ).is_const0(); }

  uint32_t count_ones() const
  {
    uint32_t c = 0;
    for ( auto w : words_ )
    {
      c += static_cast<uint32_t>( __builtin_popcountll( w ) );
    }
    return c;
  }

  bool depends_on( uint32_t var ) const
  {
    return cofactor( var, true ) != cofactor( var, false );
  }

  /*! \brief Cofactor, still expressed over all \c num_vars variables. */
  truth_table cofactor( uint32_t var, bool polarity ) const
  {
    truth_table proj = nth_var( num_vars_, var );
    truth_table half = polarity ? ( *this & proj ) : ( *this & ~proj );
    /* copy the kept half into the other half */
    truth_table result = half;
    if ( var < 6 )
    {
      uint32_t shift = 1u << var;
      for ( uint32_t w = 0; w < words_.size(); ++w )
      {
        if ( polarity )
        {
          result.words_[w] |= half.words_[w] >> shift;
        }
        else
        {
          result.words_[w] |= half.words_[w] << shift;
        }
      }
    }
    else
    {
      uint32_t block = 1u << ( var - 6 );
      for ( uint32_t w = 0; w < words_.size(); ++w )
      {
        uint32_t other = w ^ block;
        if ( ( ( w & block ) != 0 ) != polarity )
        {
          result.words_[w] = half.words_[other];
        }
      }
    }
    result.mask_top();
    return result;
  }

  truth_table operator~() const
  {
    truth_table r = *this;
    for ( auto& w : r.words_ )
    {
      w = ~w;
    }
    r.mask_top();
    return r;
  }

  truth_table operator&( truth_table const& other ) const { return apply( other, []( uint64_t a, uint64_t b ) { return a & b; } ); }
  truth_table operator|( truth_table const& other ) const { return apply( other, []( uint64_t a, uint64_t b ) { return a | b; } ); }
  truth_table operator^( truth_table const& other ) const { return apply( other, []( uint64_t a, uint64_t b ) { return a ^ b; } ); }

  truth_table& operator&=( truth_table const& other ) { return assign( other, []( uint64_t a, uint64_t b ) { return a & b; } ); }
  truth_table& operator|=( truth_table const& other ) { return assign( other, []( uint64_t a, uint64_t b ) { return a | b; } ); }
  truth_table& operator^=( truth_table const& other ) { return assign( other, []( uint64_t a, uint64_t b ) { return a ^ b; } ); }

  bool operator==( truth_table const& other ) const
  {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }
  bool operator!=( truth_table const& other ) const { return !( *this == other ); }

  /*! \brief True if this function's onset is contained in \p other's. */
  bool implies( truth_table const& other ) const
  {
    for ( uint32_t w = 0; w < words_.size(); ++w )
    {
      if ( words_[w] & ~other.words_[w] )
      {
        return false;
      }
    }
    return true;
  }

  /*! \brief Low 16 bits, for 4-variable tables. */
  uint16_t to_uint16() const
  {
    assert( num_vars_ <= 4 );
    uint16_t v = static_cast<uint16_t>( words_[0] & 0xffff );
    if ( num_vars_ < 4 )
    {
      /* replicate to a full 4-variable table */
      uint32_t bits = 1u << num_vars_;
      for ( uint32_t b = bits; b < 16; b <<= 1 )
      {
        v = static_cast<uint16_t>( v | ( v << b ) );
      }
    }
    return v;
  }

  static truth_table from_uint16( uint16_t bits )
  {
    truth_table tt( 4 );
    tt.words_[0] = bits;
    return tt;
  }

private:
  static uint32_t word_count( uint32_t num_vars )
  {
    return num_vars < 6 ? 1 : ( 1u << ( num_vars - 6 ) );
  }

  void mask_top()
  {
    if ( num_vars_ < 6 )
    {
      words_[0] &= ( uint64_t( 1 ) << ( 1u << num_vars_ ) ) - 1;
    }
  }

  template<typename Fn>
  truth_table apply( truth_table const& other, Fn&& fn ) const
  {
    assert( num_vars_ == other.num_vars_ );
    truth_table r( num_vars_ );
    for ( uint32_t w = 0; w < words_.size(); ++w )
    {
      r.words_[w] = fn( words_[w], other.words_[w] );
    }
    return r;
  }

  template<typename Fn>
  truth_table& assign( truth_table const& other, Fn&& fn )
  {
    assert( num_vars_ == other.num_vars_ );
    for ( uint32_t w = 0; w < words_.size(); ++w )
    {
      words_[w] = fn( words_[w], other.words_[w] );
    }
    return *this;
  }

  uint32_t num_vars_{ 0 };
  std::vector<uint64_t> words_;
};

} // namespace aigopt
