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
  \file refactor.hpp
  \brief Refactoring: re-express a reconvergence-driven cone as the factored
         form of its function
*/

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "../networks/aig.hpp"
#include "cone_builder.hpp"
#include "cuts.hpp"
#include "sop.hpp"

namespace aigopt
{

struct refactor_params
{
  uint32_t max_leaves{ 10 }; /* reconvergence-driven cut size */
};

struct refactor_candidate
{
  std::vector<uint32_t> leaves;
  factored_form form;
  int gain{ 0 };
};

class refactor_engine
{
public:
  explicit refactor_engine( aig& ntk, refactor_params const& ps = {} )
      : ntk_( ntk ), ps_( ps )
  {
  }

  std::optional<refactor_candidate> evaluate( uint32_t v, bool zero_cost )
  {
    auto window = reconv_cut( ntk_, v, ps_.max_leaves );
    if ( window.leaves.size() > 16 )
    {
      return std::nullopt;
    }
    auto tt = cut_tt( ntk_, v, window.leaves );
    auto form = factor( isop( tt ) );

    std::vector<uint32_t> dying;
    int saved = static_cast<int>( ntk_.cone_mffc( v, window.leaves, &dying ) );
    cone_builder probe( ntk_, v, dying, false );
    compile( probe, form, window.leaves );
    if ( probe.failed() )
    {
      return std::nullopt;
    }
    int gain = saved - static_cast<int>( probe.added() );
    if ( gain < ( zero_cost ? 0 : 1 ) )
    {
      return std::nullopt;
    }
    return refactor_candidate{ std::move( window.leaves ), std::move( form ), gain };
  }

  int apply( uint32_t v, refactor_candidate const& cand )
  {
    uint32_t before = ntk_.num_gates();
    std::vector<uint32_t> none;
    cone_builder builder( ntk_, v, none, true );
    literal repl = compile( builder, cand.form, cand.leaves );
    assert( !builder.failed() );
    ntk_.replace( v, repl );
    return static_cast<int>( before ) - static_cast<int>( ntk_.num_gates() );
  }

private:
  static literal compile_rec( cone_builder& builder, factored_form const& form, int32_t i,
                              std::vector<uint32_t> const& leaves )
  {
    auto const& e = form.nodes[i];
    switch ( e.kind )
    {
    case factored_form::op::constant:
      return e.polarity ? lit_true : lit_false;
    case factored_form::op::lit:
      return literal( leaves[e.var], e.polarity );
    case factored_form::op::op_and:
      return builder.make_and( compile_rec( builder, form, e.left, leaves ),
                               compile_rec( builder, form, e.right, leaves ) );
    case factored_form::op::op_or:
    default:
      return builder.make_or( compile_rec( builder, form, e.left, leaves ),
                              compile_rec( builder, form, e.right, leaves ) );
    }
  }

  static literal compile( cone_builder& builder, factored_form const& form,
                          std::vector<uint32_t> const& leaves )
  {
    return compile_rec( builder, form, form.root, leaves );
  }

  aig& ntk_;
  refactor_params ps_;
};

} // namespace aigopt
