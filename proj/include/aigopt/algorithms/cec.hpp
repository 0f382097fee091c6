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
  \file cec.hpp
  \brief Combinational equivalence checking by miter simulation

  Exhaustive up to 16 inputs, otherwise seeded random patterns, 64 per word.
  A hit yields a definite counterexample; random runs without a hit report
  Unknown, never Equivalent.
*/

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "../networks/aig.hpp"

namespace aigopt
{

/*! \brief Word-parallel simulation; returns one word per PO. */
inline std::vector<uint64_t> simulate_words( aig& ntk, std::vector<uint64_t> const& pi_words )
{
  if ( pi_words.size() != ntk.num_pis() )
  {
    throw std::invalid_argument( "simulate: one word per primary input required" );
  }
  std::vector<uint64_t> value( ntk.num_nodes(), 0 );
  for ( uint32_t i = 0; i < ntk.num_pis(); ++i )
  {
    value[ntk.pi_at( i )] = pi_words[i];
  }
  for ( auto n : ntk.topo_order() )
  {
    if ( !ntk.is_and( n ) )
    {
      continue;
    }
    auto f0 = ntk.fanin0( n );
    auto f1 = ntk.fanin1( n );
    uint64_t a = value[f0.index()] ^ ( f0.is_complemented() ? ~uint64_t( 0 ) : 0 );
    uint64_t b = value[f1.index()] ^ ( f1.is_complemented() ? ~uint64_t( 0 ) : 0 );
    value[n] = a & b;
  }
  std::vector<uint64_t> out( ntk.num_pos() );
  for ( uint32_t i = 0; i < ntk.num_pos(); ++i )
  {
    auto po = ntk.po_at( i );
    out[i] = value[po.index()] ^ ( po.is_complemented() ? ~uint64_t( 0 ) : 0 );
  }
  return out;
}

/*! \brief Copies \p src into \p dst with shared hashing; returns PO literals. */
inline std::vector<literal> append_network( aig& dst, aig const& src, std::vector<literal> const& pi_map )
{
  std::vector<literal> map( src.num_nodes(), lit_false );
  for ( uint32_t i = 0; i < src.num_pis(); ++i )
  {
    map[src.pi_at( i )] = pi_map[i];
  }
  std::vector<uint32_t> stack;
  std::vector<bool> done( src.num_nodes(), false );
  done[0] = true;
  for ( uint32_t i = 0; i < src.num_pis(); ++i )
  {
    done[src.pi_at( i )] = true;
  }
  for ( uint32_t n = 1; n < src.num_nodes(); ++n )
  {
    if ( !src.is_and( n ) || done[n] )
    {
      continue;
    }
    stack.push_back( n );
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      if ( done[u] )
      {
        stack.pop_back();
        continue;
      }
      uint32_t i0 = src.fanin0( u ).index();
      uint32_t i1 = src.fanin1( u ).index();
      if ( !done[i0] )
      {
        stack.push_back( i0 );
        continue;
      }
      if ( !done[i1] )
      {
        stack.push_back( i1 );
        continue;
      }
      stack.pop_back();
      done[u] = true;
      map[u] = dst.add_and( map[i0] ^ src.fanin0( u ).is_complemented(),
                            map[i1] ^ src.fanin1( u ).is_complemented() );
    }
  }
  std::vector<literal> pos;
  pos.reserve( src.num_pos() );
  for ( uint32_t i = 0; i < src.num_pos(); ++i )
  {
    auto po = src.po_at( i );
    pos.push_back( map[po.index()] ^ po.is_complemented() );
  }
  return pos;
}

/*! \brief Single-output miter: 1 iff the two graphs differ on some output. */
inline aig miter( aig const& a, aig const& b )
{
  if ( a.num_pis() != b.num_pis() || a.num_pos() != b.num_pos() )
  {
    throw std::invalid_argument( "miter: interface mismatch" );
  }
  aig m;
  m.name = "miter";
  std::vector<literal> pis;
  pis.reserve( a.num_pis() );
  for ( uint32_t i = 0; i < a.num_pis(); ++i )
  {
    pis.push_back( m.add_pi() );
  }
  auto pos_a = append_network( m, a, pis );
  auto pos_b = append_network( m, b, pis );
  literal any_diff = lit_false;
  for ( uint32_t i = 0; i < pos_a.size(); ++i )
  {
    literal x = pos_a[i];
    literal y = pos_b[i];
    literal diff = !m.add_and( !m.add_and( x, !y ), !m.add_and( !x, y ) );
    any_diff = !m.add_and( !any_diff, !diff );
  }
  m.add_po( any_diff );
  m.cleanup();
  return m;
}

enum class cec_status
{
  equivalent,
  counterexample,
  unknown
};

struct cec_result
{
  cec_status status{ cec_status::unknown };
  std::vector<bool> pattern;  /* PI assignment witnessing the difference */
  uint64_t patterns_run{ 0 };

  explicit operator bool() const { return status == cec_status::equivalent; }
};

/*! \brief Definitive equivalence check over all input assignments (<= 16 PIs). */
inline cec_result check_exhaustive( aig const& a, aig const& b )
{
  if ( a.num_pis() > 16 )
  {
    throw std::invalid_argument( "cec: exhaustive check limited to 16 inputs" );
  }
  aig m = miter( a, b );
  uint32_t n = m.num_pis();
  cec_result result;
  uint64_t total = uint64_t( 1 ) << n;
  uint64_t blocks = ( total + 63 ) / 64;
  std::vector<uint64_t> words( n );
  for ( uint64_t blk = 0; blk < blocks; ++blk )
  {
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( i < 6 )
      {
        static constexpr uint64_t patterns[] = {
            0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
            0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
        words[i] = patterns[i];
      }
      else
      {
        words[i] = ( ( blk >> ( i - 6 ) ) & 1 ) ? ~uint64_t( 0 ) : 0;
      }
    }
    auto out = simulate_words( m, words );
    uint64_t mask = ( total < 64 ) ? ( ( uint64_t( 1 ) << total ) - 1 ) : ~uint64_t( 0 );
    result.patterns_run += std::min<uint64_t>( 64, total );
    if ( ( out[0] & mask ) != 0 )
    {
      unsigned bit = static_cast<unsigned>( __builtin_ctzll( out[0] & mask ) );
      result.status = cec_status::counterexample;
      result.pattern.resize( n );
      for ( uint32_t i = 0; i < n; ++i )
      {
        result.pattern[i] = ( words[i] >> bit ) & 1;
      }
      return result;
    }
  }
  result.status = cec_status::equivalent;
  return result;
}

/*! \brief Seeded random simulation; reports Unknown when no difference shows. */
inline cec_result check_random( aig const& a, aig const& b, uint64_t num_patterns, uint64_t seed )
{
  aig m = miter( a, b );
  uint32_t n = m.num_pis();
  std::mt19937_64 rng( seed );
  cec_result result;
  std::vector<uint64_t> words( n );
  uint64_t blocks = ( num_patterns + 63 ) / 64;
  for ( uint64_t blk = 0; blk < blocks; ++blk )
  {
    for ( auto& w : words )
    {
      w = rng();
    }
    auto out = simulate_words( m, words );
    result.patterns_run += 64;
    if ( out[0] != 0 )
    {
      unsigned bit = static_cast<unsigned>( __builtin_ctzll( out[0] ) );
      result.status = cec_status::counterexample;
      result.pattern.resize( n );
      for ( uint32_t i = 0; i < n; ++i )
      {
        result.pattern[i] = ( words[i] >> bit ) & 1;
      }
      return result;
    }
  }
  result.status = cec_status::unknown;
  return result;
}

/*! \brief Exhaustive when feasible, otherwise seeded random patterns. */
inline cec_result check( aig const& a, aig const& b, uint64_t num_patterns = uint64_t( 1 ) << 17,
                         uint64_t seed = 0xa1675 )
{
  if ( a.num_pis() <= 16 )
  {
    return check_exhaustive( a, b );
  }
  return check_random( a, b, num_patterns, seed );
}

} // namespace aigopt
