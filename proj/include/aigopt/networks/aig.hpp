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
  \file aig.hpp
  \brief Mutable And-Inverter Graph with structural hashing

  Node 0 is the constant-false node.  Primary inputs and AND nodes share
  one index space; edges are literals (2 * index + complement bit).
  Deleted AND nodes are tombstoned in place and only renumbered by an
  explicit compaction, so node indices stay stable across a pass.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace aigopt
{

/*! \brief Complementable edge, packed as 2 * node index + complement bit. */
class literal
{
public:
  constexpr literal() = default;
  constexpr literal( uint32_t index, bool complemented )
      : data_( 2 * index + static_cast<uint32_t>( complemented ) ) {}

  static constexpr literal from_raw( uint32_t packed )
  {
    literal l;
    l.data_ = packed;
    return l;
  }

  constexpr uint32_t index() const { return data_ >> 1; }
  constexpr bool is_complemented() const { return ( data_ & 1 ) != 0; }
  constexpr uint32_t raw() const { return data_; }

  constexpr literal operator!() const { return from_raw( data_ ^ 1 ); }
  constexpr literal operator^( bool c ) const { return from_raw( data_ ^ static_cast<uint32_t>( c ) ); }

  constexpr bool operator==( literal const& other ) const { return data_ == other.data_; }
  constexpr bool operator!=( literal const& other ) const { return data_ != other.data_; }
  constexpr bool operator<( literal const& other ) const { return data_ < other.data_; }

private:
  uint32_t data_{ 0 };
};

inline constexpr literal lit_false{ 0, false };
inline constexpr literal lit_true{ 0, true };

/*! \brief Maximum fanout-free cone of an AND node.
 *
 * Exactly the nodes that die when the root is dereferenced.
 */
struct mffc_view
{
  uint32_t root{ 0 };
  std::vector<uint32_t> members;
  uint32_t size{ 0 };
};

/*! \brief Observer for graph mutations.
 *
 * Passes that cache per-node data (e.g. cut sets) subscribe to stay
 * consistent while the graph is rewritten under them.
 */
struct network_listener
{
  virtual ~network_listener() = default;
  virtual void on_add( uint32_t /* node */ ) {}
  virtual void on_fanin_patched( uint32_t /* node */ ) {}
  virtual void on_delete( uint32_t /* node */ ) {}
};

class aig
{
public:
  enum class node_kind : uint8_t
  {
    constant,
    pi,
    gate
  };

  struct node
  {
    literal fanin0;
    literal fanin1;
    uint32_t ref{ 0 };
    uint32_t level{ 0 };
    node_kind kind{ node_kind::gate };
    bool dead{ false };
  };

  aig()
  {
    nodes_.push_back( node{ lit_false, lit_false, 0, 0, node_kind::constant, false } );
    fanouts_.emplace_back();
  }

  aig( aig const& other )
      : name( other.name ), nodes_( other.nodes_ ), pis_( other.pis_ ), pos_( other.pos_ ),
        strash_( other.strash_ ), fanouts_( other.fanouts_ ),
        num_gates_( other.num_gates_ ),
        input_names_( other.input_names_ ), output_names_( other.output_names_ ),
        flattened_latches_( other.flattened_latches_ )
  {
    /* listeners are bound to the original graph */
  }

  aig& operator=( aig const& other )
  {
    if ( this != &other )
    {
      nodes_ = other.nodes_;
      pis_ = other.pis_;
      pos_ = other.pos_;
      strash_ = other.strash_;
      fanouts_ = other.fanouts_;
      num_gates_ = other.num_gates_;
      name = other.name;
      input_names_ = other.input_names_;
      output_names_ = other.output_names_;
      flattened_latches_ = other.flattened_latches_;
      listeners_.clear();
      trav_marks_.clear();
      trav_id_ = 0;
    }
    return *this;
  }

  aig( aig&& ) = default;
  aig& operator=( aig&& ) = default;

  uint32_t num_nodes() const { return static_cast<uint32_t>( nodes_.size() ); }
  uint32_t num_pis() const { return static_cast<uint32_t>( pis_.size() ); }
  uint32_t num_pos() const { return static_cast<uint32_t>( pos_.size() ); }

  /*! \brief Number of live AND nodes (the paper-facing size metric). */
  uint32_t num_gates() const { return num_gates_; }

  bool is_constant( uint32_t n ) const { return nodes_[n].kind == node_kind::constant; }
  bool is_pi( uint32_t n ) const { return nodes_[n].kind == node_kind::pi; }
  bool is_and( uint32_t n ) const { return nodes_[n].kind == node_kind::gate && !nodes_[n].dead; }
  bool is_dead( uint32_t n ) const { return nodes_[n].dead; }
  bool is_live( uint32_t n ) const { return !nodes_[n].dead; }

  literal fanin0( uint32_t n ) const { return nodes_[n].fanin0; }
  literal fanin1( uint32_t n ) const { return nodes_[n].fanin1; }
  uint32_t ref_count( uint32_t n ) const { return nodes_[n].ref; }
  uint32_t level( uint32_t n ) const { return nodes_[n].level; }

  uint32_t pi_at( uint32_t i ) const { return pis_[i]; }
  literal po_at( uint32_t i ) const { return pos_[i]; }
  std::vector<literal> const& pos() const { return pos_; }
  std::vector<uint32_t> const& fanouts( uint32_t n ) const { return fanouts_[n]; }

  std::string name;

  std::vector<std::string>& input_names() { return input_names_; }
  std::vector<std::string>& output_names() { return output_names_; }
  std::vector<std::string> const& input_names() const { return input_names_; }
  std::vector<std::string> const& output_names() const { return output_names_; }

  uint32_t flattened_latches() const { return flattened_latches_; }
  void set_flattened_latches( uint32_t l ) { flattened_latches_ = l; }

  literal add_pi()
  {
    uint32_t idx = new_slot();
    nodes_[idx] = node{ lit_false, lit_false, 0, 0, node_kind::pi, false };
    pis_.push_back( idx );
    return literal( idx, false );
  }

  /*! \brief Adds an AND after constant propagation and structural hashing. */
  literal add_and( literal a, literal b )
  {
    assert( a.index() < nodes_.size() && b.index() < nodes_.size() );
    assert( is_live( a.index() ) && is_live( b.index() ) );
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
      return lit_false; /* x & !x */
    }
    if ( auto it = strash_.find( strash_key( a, b ) ); it != strash_.end() )
    {
      return literal( it->second, false );
    }
    return create_and( a, b );
  }

  /*! \brief Adds an AND verbatim, as the AIGER reader needs.
   *
   * No constant propagation; duplicates of an already hashed pair are kept
   * as separate nodes so that the parsed gate count matches the header.
   */
  literal add_and_verbatim( literal a, literal b )
  {
    if ( b < a )
    {
      std::swap( a, b );
    }
    return create_and( a, b );
  }

  void add_po( literal f )
  {
    assert( f.index() < nodes_.size() && is_live( f.index() ) );
    nodes_[f.index()].ref++;
    pos_.push_back( f );
  }

  /*! \brief Hash lookup without insertion; 0 when the pair is absent. */
  uint32_t find_and( literal a, literal b ) const
  {
    if ( b < a )
    {
      std::swap( a, b );
    }
    auto it = strash_.find( strash_key( a, b ) );
    return it == strash_.end() ? 0 : it->second;
  }

  /*! \brief Size (and members) of the maximum fanout-free cone.
   *
   * Simulated by dereferencing and re-referencing; the graph is unchanged.
   */
  mffc_view mffc( uint32_t root )
  {
    if ( !is_and( root ) )
    {
      throw std::invalid_argument( "mffc: not an internal node" );
    }
    mffc_view view;
    view.root = root;
    view.size = deref_cone( root, &view.members, nullptr );
    uint32_t restored = ref_cone( root, nullptr );
    assert( restored == view.size );
    (void)restored;
    return view;
  }

  uint32_t mffc_size( uint32_t root )
  {
    if ( !is_and( root ) )
    {
      throw std::invalid_argument( "mffc: not an internal node" );
    }
    uint32_t size = deref_cone( root, nullptr, nullptr );
    ref_cone( root, nullptr );
    return size;
  }

  /*! \brief MFFC restricted to the cone over the given leaves.
   *
   * Counts the nodes strictly inside the cut cone that die when the root is
   * replaced by a function re-expressed over the same leaves.
   */
  uint32_t cone_mffc( uint32_t root, std::vector<uint32_t> const& leaves, std::vector<uint32_t>* members = nullptr )
  {
    assert( is_and( root ) );
    new_trav();
    for ( auto l : leaves )
    {
      trav_marks_[l] = trav_id_;
    }
    uint32_t size = deref_cone( root, members, &trav_marks_ );
    ref_cone( root, &trav_marks_ );
    return size;
  }

  /*! \brief Redirects all fanouts (and POs) of \p old_root to \p new_fn.
   *
   * The old cone is dereferenced and removed; rehashing cascades merge any
   * fanout that becomes trivial or a structural duplicate.  Returns the
   * number of deleted nodes.
   */
  uint32_t replace( uint32_t old_root, literal new_fn )
  {
    if ( !is_and( old_root ) )
    {
      throw std::invalid_argument( "replace: not an internal node" );
    }
    if ( !is_live( new_fn.index() ) )
    {
      throw std::invalid_argument( "replace: dead replacement" );
    }
    if ( new_fn.index() == old_root || depends_on( new_fn.index(), old_root ) )
    {
      throw std::invalid_argument( "replacement depends on root" );
    }

    uint32_t removed = 0;
    std::vector<std::pair<uint32_t, literal>> work;
    push_merge( work, old_root, new_fn );
    while ( !work.empty() )
    {
      auto [o, nl] = work.back();
      work.pop_back();
      assert( nodes_[nl.index()].ref > 0 );
      nodes_[nl.index()].ref--; /* release worklist protection */
      if ( nodes_[o].dead || nl.index() == o )
      {
        continue;
      }
      redirect_fanouts( o, nl, work );
      if ( nodes_[o].ref == 0 )
      {
        removed += delete_cone( o );
      }
    }
    return removed;
  }

  /*! \brief Removes every AND unreachable from the POs. */
  uint32_t cleanup()
  {
    new_trav();
    for ( auto const& po : pos_ )
    {
      mark_cone( po.index() );
    }
    uint32_t removed = 0;
    for ( uint32_t n = num_nodes(); n-- > 1; )
    {
      if ( is_and( n ) && trav_marks_[n] != trav_id_ && !nodes_[n].dead )
      {
        if ( nodes_[n].ref == 0 )
        {
          removed += delete_cone( n );
        }
      }
    }
    return removed;
  }

  /*! \brief PIs first, then live ANDs in fanin-before-fanout order. */
  std::vector<uint32_t> topo_order()
  {
    std::vector<uint32_t> order;
    order.reserve( pis_.size() + num_gates_ );
    order.insert( order.end(), pis_.begin(), pis_.end() );
    new_trav();
    trav_marks_[0] = trav_id_;
    for ( auto p : pis_ )
    {
      trav_marks_[p] = trav_id_;
    }
    for ( uint32_t n = 1; n < num_nodes(); ++n )
    {
      if ( is_and( n ) )
      {
        topo_visit( n, order );
      }
    }
    return order;
  }

  /*! \brief Restores levels bottom-up; returns the largest live level. */
  uint32_t recompute_levels()
  {
    uint32_t max_level = 0;
    for ( auto n : topo_order() )
    {
      if ( is_and( n ) )
      {
        nodes_[n].level = 1 + std::max( nodes_[nodes_[n].fanin0.index()].level,
                                        nodes_[nodes_[n].fanin1.index()].level );
        max_level = std::max( max_level, nodes_[n].level );
      }
      else
      {
        nodes_[n].level = 0;
      }
    }
    return max_level;
  }

  /*! \brief Longest PI-to-PO path, counted in AND nodes. */
  uint32_t depth()
  {
    recompute_levels();
    uint32_t d = 0;
    for ( auto const& po : pos_ )
    {
      d = std::max( d, nodes_[po.index()].level );
    }
    return d;
  }

  /*! \brief True if \p target is in the transitive fanin of \p n. */
  bool depends_on( uint32_t n, uint32_t target )
  {
    if ( n == target )
    {
      return true;
    }
    new_trav();
    return depends_on_rec( n, target );
  }

  /*! \brief Renumbered tombstone-free copy, ANDs in topological order. */
  aig compacted() const
  {
    aig result;
    result.name = name;
    result.input_names_ = input_names_;
    result.output_names_ = output_names_;
    std::vector<literal> map( nodes_.size(), lit_false );
    for ( auto p : pis_ )
    {
      map[p] = result.add_pi();
    }
    /* fanins first; iterative DFS over all live ANDs */
    std::vector<bool> placed( nodes_.size(), false );
    placed[0] = true;
    for ( auto p : pis_ )
    {
      placed[p] = true;
    }
    std::vector<uint32_t> stack;
    for ( uint32_t n = 1; n < num_nodes(); ++n )
    {
      if ( !is_and( n ) || placed[n] )
      {
        continue;
      }
      stack.push_back( n );
      while ( !stack.empty() )
      {
        uint32_t u = stack.back();
        if ( placed[u] )
        {
          stack.pop_back();
          continue;
        }
        uint32_t i0 = nodes_[u].fanin0.index();
        uint32_t i1 = nodes_[u].fanin1.index();
        if ( !placed[i0] )
        {
          stack.push_back( i0 );
          continue;
        }
        if ( !placed[i1] )
        {
          stack.push_back( i1 );
          continue;
        }
        stack.pop_back();
        placed[u] = true;
        literal a = map[i0] ^ nodes_[u].fanin0.is_complemented();
        literal b = map[i1] ^ nodes_[u].fanin1.is_complemented();
        map[u] = result.add_and_verbatim( a, b );
      }
    }
    for ( auto const& po : pos_ )
    {
      result.add_po( map[po.index()] ^ po.is_complemented() );
    }
    return result;
  }

  bool has_tombstones() const
  {
    for ( uint32_t n = 1; n < num_nodes(); ++n )
    {
      if ( nodes_[n].dead )
      {
        return true;
      }
    }
    return false;
  }

  /*! \brief Structural audit: reference counts, hash soundness, liveness. */
  bool check() const
  {
    std::vector<uint32_t> refs( nodes_.size(), 0 );
    for ( uint32_t n = 1; n < num_nodes(); ++n )
    {
      if ( !is_and( n ) )
      {
        continue;
      }
      auto f0 = nodes_[n].fanin0;
      auto f1 = nodes_[n].fanin1;
      if ( nodes_[f0.index()].dead || nodes_[f1.index()].dead )
      {
        return false;
      }
      if ( f1 < f0 )
      {
        return false;
      }
      refs[f0.index()]++;
      refs[f1.index()]++;
    }
    for ( auto const& po : pos_ )
    {
      if ( nodes_[po.index()].dead )
      {
        return false;
      }
      refs[po.index()]++;
    }
    for ( uint32_t n = 0; n < num_nodes(); ++n )
    {
      if ( is_live( n ) && refs[n] != nodes_[n].ref )
      {
        return false;
      }
    }
    /* no two live ANDs may share a fanin pair unless introduced verbatim */
    for ( auto const& [key, n] : strash_ )
    {
      if ( nodes_[n].dead || strash_key( nodes_[n].fanin0, nodes_[n].fanin1 ) != key )
      {
        return false;
      }
    }
    return true;
  }

  bool strash_unique() const
  {
    std::unordered_map<uint64_t, uint32_t> pairs;
    for ( uint32_t n = 1; n < num_nodes(); ++n )
    {
      if ( !is_and( n ) )
      {
        continue;
      }
      auto [it, fresh] = pairs.emplace( strash_key( nodes_[n].fanin0, nodes_[n].fanin1 ), n );
      if ( !fresh )
      {
        return false;
      }
    }
    return true;
  }

  void add_listener( network_listener* l ) { listeners_.push_back( l ); }
  void remove_listener( network_listener* l )
  {
    listeners_.erase( std::remove( listeners_.begin(), listeners_.end(), l ), listeners_.end() );
  }

private:
  static uint64_t strash_key( literal a, literal b )
  {
    return ( static_cast<uint64_t>( a.raw() ) << 32 ) | b.raw();
  }

  uint32_t new_slot()
  {
    nodes_.emplace_back();
    fanouts_.emplace_back();
    return static_cast<uint32_t>( nodes_.size() - 1 );
  }

  literal create_and( literal a, literal b )
  {
    uint32_t idx = new_slot();
    node& nd = nodes_[idx];
    nd.fanin0 = a;
    nd.fanin1 = b;
    nd.kind = node_kind::gate;
    nd.level = 1 + std::max( nodes_[a.index()].level, nodes_[b.index()].level );
    nodes_[a.index()].ref++;
    nodes_[b.index()].ref++;
    fanouts_[a.index()].push_back( idx );
    fanouts_[b.index()].push_back( idx );
    strash_.emplace( strash_key( a, b ), idx );
    num_gates_++;
    for ( auto* l : listeners_ )
    {
      l->on_add( idx );
    }
    return literal( idx, false );
  }

  void push_merge( std::vector<std::pair<uint32_t, literal>>& work, uint32_t o, literal nl )
  {
    nodes_[nl.index()].ref++; /* keep the target alive while queued */
    work.emplace_back( o, nl );
  }

  void redirect_fanouts( uint32_t o, literal nl, std::vector<std::pair<uint32_t, literal>>& work )
  {
    auto consumers = fanouts_[o];
    fanouts_[o].clear();
    for ( uint32_t f : consumers )
    {
      /* a consumer appears once per edge; both edges are patched together */
      if ( nodes_[f].dead || ( nodes_[f].fanin0.index() != o && nodes_[f].fanin1.index() != o ) )
      {
        continue;
      }
      strash_erase( f );
      literal x0 = nodes_[f].fanin0;
      literal x1 = nodes_[f].fanin1;
      if ( x0.index() == o )
      {
        x0 = nl ^ x0.is_complemented();
        nodes_[o].ref--;
        nodes_[nl.index()].ref++;
      }
      if ( x1.index() == o )
      {
        x1 = nl ^ x1.is_complemented();
        nodes_[o].ref--;
        nodes_[nl.index()].ref++;
      }
      if ( x1 < x0 )
      {
        std::swap( x0, x1 );
      }
      nodes_[f].fanin0 = x0;
      nodes_[f].fanin1 = x1;
      nodes_[f].level = 1 + std::max( nodes_[x0.index()].level, nodes_[x1.index()].level );
      for ( auto* l : listeners_ )
      {
        l->on_fanin_patched( f );
      }

      /* the patched pair may now be trivial or collide with a hashed node */
      literal merged = lit_false;
      bool merge = false;
      if ( x0 == lit_false || x0 == !x1 )
      {
        merged = lit_false;
        merge = true;
      }
      else if ( x0 == lit_true )
      {
        merged = x1;
        merge = true;
      }
      else if ( x0 == x1 )
      {
        merged = x0;
        merge = true;
      }
      else if ( auto it = strash_.find( strash_key( x0, x1 ) ); it != strash_.end() && it->second != f )
      {
        merged = literal( it->second, false );
        merge = true;
      }
      if ( merge )
      {
        attach_fanout( x0.index(), f );
        attach_fanout( x1.index(), f );
        push_merge( work, f, merged );
      }
      else
      {
        strash_.emplace( strash_key( x0, x1 ), f );
        attach_fanout( x0.index(), f );
        attach_fanout( x1.index(), f );
      }
    }
    /* primary outputs */
    for ( auto& po : pos_ )
    {
      if ( po.index() == o )
      {
        nodes_[o].ref--;
        nodes_[nl.index()].ref++;
        po = nl ^ po.is_complemented();
      }
    }
  }

  void attach_fanout( uint32_t n, uint32_t consumer )
  {
    fanouts_[n].push_back( consumer );
  }

  void detach_fanout( uint32_t n, uint32_t consumer )
  {
    auto& v = fanouts_[n];
    auto it = std::find( v.begin(), v.end(), consumer );
    if ( it != v.end() )
    {
      v.erase( it );
    }
  }

  void strash_erase( uint32_t n )
  {
    auto it = strash_.find( strash_key( nodes_[n].fanin0, nodes_[n].fanin1 ) );
    if ( it != strash_.end() && it->second == n )
    {
      strash_.erase( it );
    }
  }

  uint32_t delete_cone( uint32_t n )
  {
    assert( is_and( n ) && nodes_[n].ref == 0 );
    uint32_t removed = 0;
    std::vector<uint32_t> stack{ n };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      stack.pop_back();
      if ( nodes_[u].dead )
      {
        continue;
      }
      strash_erase( u );
      nodes_[u].dead = true;
      num_gates_--;
      removed++;
      fanouts_[u].clear();
      for ( auto f : { nodes_[u].fanin0, nodes_[u].fanin1 } )
      {
        uint32_t i = f.index();
        detach_fanout( i, u );
        assert( nodes_[i].ref > 0 );
        if ( --nodes_[i].ref == 0 && is_and( i ) )
        {
          stack.push_back( i );
        }
      }
      for ( auto* l : listeners_ )
      {
        l->on_delete( u );
      }
    }
    return removed;
  }

  /* MFFC helpers: deref/ref pairs must mirror each other exactly. */
  uint32_t deref_cone( uint32_t n, std::vector<uint32_t>* members, std::vector<uint32_t>* leaf_marks )
  {
    uint32_t count = 1;
    if ( members )
    {
      members->push_back( n );
    }
    for ( auto f : { nodes_[n].fanin0, nodes_[n].fanin1 } )
    {
      uint32_t i = f.index();
      if ( leaf_marks && ( *leaf_marks )[i] == trav_id_ )
      {
        continue;
      }
      assert( nodes_[i].ref > 0 );
      if ( --nodes_[i].ref == 0 && is_and( i ) )
      {
        count += deref_cone( i, members, leaf_marks );
      }
    }
    return count;
  }

  uint32_t ref_cone( uint32_t n, std::vector<uint32_t>* leaf_marks )
  {
    uint32_t count = 1;
    for ( auto f : { nodes_[n].fanin0, nodes_[n].fanin1 } )
    {
      uint32_t i = f.index();
      if ( leaf_marks && ( *leaf_marks )[i] == trav_id_ )
      {
        continue;
      }
      if ( nodes_[i].ref++ == 0 && is_and( i ) )
      {
        count += ref_cone( i, leaf_marks );
      }
    }
    return count;
  }

  void mark_cone( uint32_t n )
  {
    if ( trav_marks_[n] == trav_id_ )
    {
      return;
    }
    std::vector<uint32_t> stack{ n };
    trav_marks_[n] = trav_id_;
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      stack.pop_back();
      if ( !is_and( u ) )
      {
        continue;
      }
      for ( auto f : { nodes_[u].fanin0, nodes_[u].fanin1 } )
      {
        if ( trav_marks_[f.index()] != trav_id_ )
        {
          trav_marks_[f.index()] = trav_id_;
          stack.push_back( f.index() );
        }
      }
    }
  }

  void topo_visit( uint32_t n, std::vector<uint32_t>& order )
  {
    if ( trav_marks_[n] == trav_id_ )
    {
      return;
    }
    std::vector<uint32_t> stack{ n };
    while ( !stack.empty() )
    {
      uint32_t u = stack.back();
      if ( trav_marks_[u] == trav_id_ )
      {
        stack.pop_back();
        continue;
      }
      uint32_t i0 = nodes_[u].fanin0.index();
      uint32_t i1 = nodes_[u].fanin1.index();
      if ( trav_marks_[i0] != trav_id_ )
      {
        stack.push_back( i0 );
        continue;
      }
      if ( trav_marks_[i1] != trav_id_ )
      {
        stack.push_back( i1 );
        continue;
      }
      stack.pop_back();
      trav_marks_[u] = trav_id_;
      order.push_back( u );
    }
  }

  bool depends_on_rec( uint32_t n, uint32_t target )
  {
    if ( trav_marks_[n] == trav_id_ )
    {
      return false;
    }
    trav_marks_[n] = trav_id_;
    if ( !is_and( n ) )
    {
      return false;
    }
    for ( auto f : { nodes_[n].fanin0, nodes_[n].fanin1 } )
    {
      if ( f.index() == target || depends_on_rec( f.index(), target ) )
      {
        return true;
      }
    }
    return false;
  }

  void new_trav()
  {
    trav_marks_.resize( nodes_.size(), 0 );
    if ( ++trav_id_ == 0 )
    {
      std::fill( trav_marks_.begin(), trav_marks_.end(), 0 );
      trav_id_ = 1;
    }
  }

  std::vector<node> nodes_;
  std::vector<uint32_t> pis_;
  std::vector<literal> pos_;
  std::unordered_map<uint64_t, uint32_t> strash_;
  std::vector<std::vector<uint32_t>> fanouts_;
  uint32_t num_gates_{ 0 };
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  uint32_t flattened_latches_{ 0 };
  std::vector<network_listener*> listeners_;

  mutable std::vector<uint32_t> trav_marks_;
  mutable uint32_t trav_id_{ 0 };
};

} // namespace aigopt
