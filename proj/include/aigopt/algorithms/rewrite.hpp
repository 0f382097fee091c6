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
  \file rewrite.hpp
  \brief DAG-aware rewriting against the precomputed NPN template library

  Only irredundant cuts with exactly four leaves are evaluated, the classic
  behaviour of AIG rewriting; narrower redundancies are the business of
  refactoring and resubstitution.  The gain of a candidate is the number of
  cone nodes freed minus the nodes the template still has to add after
  structural hashing against the surviving graph.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "../networks/aig.hpp"
#include "cone_builder.hpp"
#include "cuts.hpp"
#include "rewrite_library.hpp"

namespace aigopt
{

struct rewrite_candidate
{
  std::vector<uint32_t> leaves;
  uint16_t function{ 0 };
  int gain{ 0 };
};

class rewrite_engine
{
public:
  rewrite_engine( aig& ntk, rewrite_library const& lib, cut_params const& ps = {} )
      : ntk_( ntk ), lib_( lib ), cuts_( ntk, ps )
  {
  }

  /*! \brief Best template substitution at \p v, if any passes the gain gate. */
  std::optional<rewrite_candidate> evaluate( uint32_t v, bool zero_cost )
  {
    std::optional<rewrite_candidate> best;
    for ( auto const& c : cuts_.cuts( v ) )
    {
      if ( c.leaves.size() != 4 )
      {
        continue;
      }
      uint16_t function = cut_tt( ntk_, c, v ).to_uint16();
      int gain = price( v, c.leaves, function );
      if ( gain < ( zero_cost ? 0 : 1 ) )
      {
        continue;
      }
      if ( !best || gain > best->gain )
      {
        best = rewrite_candidate{ c.leaves, function, gain };
      }
    }
    return best;
  }

  /*! \brief Replays the candidate on the graph; returns the node-count drop. */
  int apply( uint32_t v, rewrite_candidate const& cand )
  {
    uint32_t before = ntk_.num_gates();
    literal repl = instantiate( v, cand.leaves, cand.function, nullptr );
    ntk_.replace( v, repl );
    return static_cast<int>( before ) - static_cast<int>( ntk_.num_gates() );
  }

private:
  int price( uint32_t v, std::vector<uint32_t> const& leaves, uint16_t function )
  {
    std::vector<uint32_t> dying;
    int saved = static_cast<int>( ntk_.cone_mffc( v, leaves, &dying ) );
    cone_builder probe( ntk_, v, dying, false );
    build_template( probe, leaves, function );
    if ( probe.failed() )
    {
      return -1;
    }
    return saved - static_cast<int>( probe.added() );
  }

  literal instantiate( uint32_t v, std::vector<uint32_t> const& leaves, uint16_t function,
                       std::vector<uint32_t> const* dying )
  {
    std::vector<uint32_t> none;
    cone_builder builder( ntk_, v, dying ? *dying : none, true );
    literal out = build_template( builder, leaves, function );
    assert( !builder.failed() );
    return out;
  }

  literal build_template( cone_builder& builder, std::vector<uint32_t> const& leaves, uint16_t function )
  {
    auto t = lib_.transform( function );
    auto const& tpl = lib_.template_for( lib_.canon( function ) );
    auto const& perm = npn_permutations[t.perm_index];

    /* template input perm[j] is driven by leaf j, complemented per the mask */
    std::array<literal, 5> inputs{ lit_false, lit_false, lit_false, lit_false, lit_false };
    for ( uint32_t j = 0; j < 4; ++j )
    {
      inputs[1 + perm[j]] = literal( leaves[j], ( t.input_compl >> j ) & 1 );
    }

    std::vector<literal> values( inputs.begin(), inputs.end() );
    for ( auto const& s : tpl.steps )
    {
      literal a = values[s.lit0 >> 1] ^ ( ( s.lit0 & 1 ) != 0 );
      literal b = values[s.lit1 >> 1] ^ ( ( s.lit1 & 1 ) != 0 );
      values.push_back( builder.make_and( a, b ) );
      if ( builder.failed() )
      {
        return lit_false;
      }
    }
    literal out = values[tpl.output >> 1] ^ ( ( tpl.output & 1 ) != 0 );
    return out ^ t.output_compl;
  }

  aig& ntk_;
  rewrite_library const& lib_;
  cut_manager cuts_;
};

} // namespace aigopt
