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
  \file rewrite_library.hpp
  \brief Precomputed AND/inverter templates for the 4-input NPN classes

  Every class representative is synthesized once by factoring its
  irredundant cover, giving a deterministic library.  The canonicalization
  of all 65536 tables is tabulated at construction by orbit enumeration, so
  per-cut class lookup is O(1).
*/

#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "../utils/truth_table.hpp"
#include "npn.hpp"
#include "sop.hpp"

namespace aigopt
{

/*! \brief AND/inverter DAG over four inputs.
 *
 * References: 0 is constant false, 1..4 the inputs, 5 + i the i-th step.
 * Literals are 2 * reference + complement.
 */
struct rewrite_template
{
  struct step
  {
    uint8_t lit0;
    uint8_t lit1;
  };

  std::vector<step> steps;
  uint8_t output{ 0 };
  uint8_t depth{ 0 };

  uint32_t num_nodes() const { return static_cast<uint32_t>( steps.size() ); }

  /*! \brief 16-bit table of the template output. */
  uint16_t simulate() const
  {
    std::vector<uint16_t> values{ 0x0000, 0xaaaa, 0xcccc, 0xf0f0, 0xff00 };
    for ( auto const& s : steps )
    {
      uint16_t a = values[s.lit0 >> 1];
      if ( s.lit0 & 1 )
      {
        a = static_cast<uint16_t>( ~a );
      }
      uint16_t b = values[s.lit1 >> 1];
      if ( s.lit1 & 1 )
      {
        b = static_cast<uint16_t>( ~b );
      }
      values.push_back( a & b );
    }
    uint16_t out = values[output >> 1];
    return ( output & 1 ) ? static_cast<uint16_t>( ~out ) : out;
  }
};

class rewrite_library
{
public:
  static constexpr uint32_t library_version = 1;

  rewrite_library()
  {
    build_canon_tables();
    build_templates();
  }

  uint16_t canon( uint16_t table ) const { return canon_[table]; }

  npn_transform transform( uint16_t table ) const
  {
    uint16_t packed = transform_[table];
    npn_transform t;
    t.perm_index = static_cast<uint8_t>( packed & 0x1f );
    t.input_compl = static_cast<uint8_t>( ( packed >> 5 ) & 0xf );
    t.output_compl = ( ( packed >> 9 ) & 1 ) != 0;
    return t;
  }

  rewrite_template const& template_for( uint16_t canon_table ) const
  {
    auto it = templates_.find( canon_table );
    if ( it == templates_.end() )
    {
      throw std::logic_error( "rewrite library: unknown canonical class" );
    }
    return it->second;
  }

  uint32_t num_classes() const { return static_cast<uint32_t>( templates_.size() ); }

  std::map<uint16_t, rewrite_template> const& templates() const { return templates_; }

  /*! \brief Binary cache blob; versioned, rejected on mismatch. */
  void save( std::ostream& out ) const
  {
    auto put32 = [&]( uint32_t v ) { out.write( reinterpret_cast<char const*>( &v ), 4 ); };
    out.write( "ORLB", 4 );
    put32( library_version );
    out.write( reinterpret_cast<char const*>( canon_.data() ), 2 * canon_.size() );
    out.write( reinterpret_cast<char const*>( transform_.data() ), 2 * transform_.size() );
    put32( num_classes() );
    for ( auto const& [key, tpl] : templates_ )
    {
      uint32_t header = key | ( static_cast<uint32_t>( tpl.steps.size() ) << 16 ) |
                        ( static_cast<uint32_t>( tpl.output ) << 24 );
      put32( header );
      put32( tpl.depth );
      for ( auto const& s : tpl.steps )
      {
        out.put( static_cast<char>( s.lit0 ) );
        out.put( static_cast<char>( s.lit1 ) );
      }
    }
  }

  static rewrite_library load( std::istream& in )
  {
    auto get32 = [&]() {
      uint32_t v = 0;
      in.read( reinterpret_cast<char*>( &v ), 4 );
      return v;
    };
    char magic[4];
    in.read( magic, 4 );
    if ( !in || std::string( magic, 4 ) != "ORLB" || get32() != library_version )
    {
      throw std::runtime_error( "rewrite library: bad cache blob" );
    }
    rewrite_library lib( from_blob_tag{} );
    lib.canon_.resize( 65536 );
    lib.transform_.resize( 65536 );
    in.read( reinterpret_cast<char*>( lib.canon_.data() ), 2 * 65536 );
    in.read( reinterpret_cast<char*>( lib.transform_.data() ), 2 * 65536 );
    uint32_t classes = get32();
    for ( uint32_t i = 0; i < classes; ++i )
    {
      uint32_t header = get32();
      rewrite_template tpl;
      tpl.output = static_cast<uint8_t>( header >> 24 );
      tpl.depth = static_cast<uint8_t>( get32() );
      tpl.steps.resize( ( header >> 16 ) & 0xff );
      for ( auto& s : tpl.steps )
      {
        s.lit0 = static_cast<uint8_t>( in.get() );
        s.lit1 = static_cast<uint8_t>( in.get() );
      }
      lib.templates_.emplace( static_cast<uint16_t>( header & 0xffff ), tpl );
    }
    if ( !in )
    {
      throw std::runtime_error( "rewrite library: truncated cache blob" );
    }
    return lib;
  }

private:
  struct from_blob_tag
  {
  };
  explicit rewrite_library( from_blob_tag ) {}

  static uint16_t pack_transform( npn_transform const& t )
  {
    return static_cast<uint16_t>( t.perm_index | ( t.input_compl << 5 ) |
                                  ( ( t.output_compl ? 1 : 0 ) << 9 ) );
  }

  static npn_transform invert_transform( npn_transform const& t )
  {
    auto const& p = npn_permutations[t.perm_index];
    std::array<uint8_t, 4> q{};
    for ( uint8_t j = 0; j < 4; ++j )
    {
      q[p[j]] = j;
    }
    npn_transform inv;
    inv.output_compl = t.output_compl;
    for ( uint8_t idx = 0; idx < 24; ++idx )
    {
      if ( npn_permutations[idx] == q )
      {
        inv.perm_index = idx;
        break;
      }
    }
    uint8_t mask = 0;
    for ( uint8_t k = 0; k < 4; ++k )
    {
      mask = static_cast<uint8_t>( mask | ( ( ( t.input_compl >> q[k] ) & 1 ) << k ) );
    }
    inv.input_compl = mask;
    return inv;
  }

  void build_canon_tables()
  {
    canon_.assign( 65536, 0 );
    transform_.assign( 65536, 0 );
    std::vector<bool> visited( 65536, false );

    for ( uint32_t rep = 0; rep < 65536; ++rep )
    {
      if ( visited[rep] )
      {
        continue;
      }
      /* ascending scan: the first unvisited table is its class minimum */
      auto base = static_cast<uint16_t>( rep );
      for ( uint8_t p = 0; p < 24; ++p )
      {
        for ( uint16_t m = 0; m < 16; ++m )
        {
          for ( uint8_t o = 0; o < 2; ++o )
          {
            npn_transform t{ p, static_cast<uint8_t>( m ), o != 0 };
            uint16_t member = npn_apply( t, base );
            if ( !visited[member] )
            {
              visited[member] = true;
              canon_[member] = base;
              transform_[member] = pack_transform( invert_transform( t ) );
            }
          }
        }
      }
    }
  }

  void build_templates()
  {
    for ( uint32_t t = 0; t < 65536; ++t )
    {
      auto key = static_cast<uint16_t>( t );
      if ( canon_[key] != key || templates_.count( key ) )
      {
        continue;
      }
      templates_.emplace( key, synthesize( key ) );
    }
  }

  /* ISOP + factoring, compiled with local hashing.
   * TODO: optional multiple structures per class, selected at evaluation time.
   */
  static rewrite_template synthesize( uint16_t table )
  {
    rewrite_template tpl;
    auto form = factor( isop( truth_table::from_uint16( table ) ) );

    std::map<std::pair<uint8_t, uint8_t>, uint8_t> hashed;
    std::vector<uint8_t> depths{ 0, 0, 0, 0, 0 };
    auto emit_and = [&]( uint8_t a, uint8_t b ) -> uint8_t {
      if ( b < a )
      {
        std::swap( a, b );
      }
      if ( a == 0 )
      {
        return 0;
      }
      if ( a == 1 )
      {
        return b;
      }
      if ( a == b )
      {
        return a;
      }
      if ( ( a >> 1 ) == ( b >> 1 ) )
      {
        return 0;
      }
      if ( auto it = hashed.find( { a, b } ); it != hashed.end() )
      {
        return it->second;
      }
      tpl.steps.push_back( { a, b } );
      uint8_t ref = static_cast<uint8_t>( 4 + tpl.steps.size() );
      depths.push_back( static_cast<uint8_t>( 1 + std::max( depths[a >> 1], depths[b >> 1] ) ) );
      uint8_t lit = static_cast<uint8_t>( 2 * ref );
      hashed.emplace( std::make_pair( a, b ), lit );
      return lit;
    };

    auto compile = [&]( auto&& self, int32_t i ) -> uint8_t {
      auto const& e = form.nodes[i];
      switch ( e.kind )
      {
      case factored_form::op::constant:
        return e.polarity ? 1 : 0;
      case factored_form::op::lit:
        return static_cast<uint8_t>( 2 * ( 1 + e.var ) + ( e.polarity ? 1 : 0 ) );
      case factored_form::op::op_and:
        return emit_and( self( self, e.left ), self( self, e.right ) );
      case factored_form::op::op_or:
      default:
        return static_cast<uint8_t>( emit_and( static_cast<uint8_t>( self( self, e.left ) ^ 1 ),
                                               static_cast<uint8_t>( self( self, e.right ) ^ 1 ) ) ^
                                     1 );
      }
    };

    tpl.output = compile( compile, form.root );
    tpl.depth = depths[tpl.output >> 1];
    return tpl;
  }

  std::vector<uint16_t> canon_;
  std::vector<uint16_t> transform_;
  std::map<uint16_t, rewrite_template> templates_;
};

} // namespace aigopt
