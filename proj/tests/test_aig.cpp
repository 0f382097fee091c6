#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <aigopt/networks/aig.hpp>

#include "common.hpp"

using namespace aigopt;

TEST_CASE( "literal packing" )
{
  literal l( 7, true );
  CHECK( l.raw() == 15 );
  CHECK( l.index() == 7 );
  CHECK( l.is_complemented() );
  CHECK( ( !l ).raw() == 14 );
  CHECK( ( l ^ true ) == !l );
  CHECK( lit_true.index() == 0 );
  CHECK( lit_true.is_complemented() );
}

TEST_CASE( "add_and constant and trivial rules" )
{
  aig n;
  auto x = n.add_pi();
  CHECK( n.add_and( x, lit_false ) == lit_false );
  CHECK( n.add_and( x, lit_true ) == x );
  CHECK( n.add_and( x, x ) == x );
  CHECK( n.add_and( x, !x ) == lit_false );
  CHECK( n.num_gates() == 0 );
}

TEST_CASE( "add_and hash identity" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto f1 = n.add_and( a, b );
  auto f2 = n.add_and( b, a );
  CHECK( f1 == f2 );
  CHECK( n.num_gates() == 1 );
  auto f3 = n.add_and( !a, b );
  CHECK( f3 != f1 );
  CHECK( n.num_gates() == 2 );
  CHECK( n.strash_unique() );
  CHECK( n.check() );
}

TEST_CASE( "fanins are stored canonically ordered and below the node" )
{
  auto n = testing::random_aig( 42, 6, 80, 4 );
  for ( uint32_t v = 1; v < n.num_nodes(); ++v )
  {
    if ( !n.is_and( v ) )
    {
      continue;
    }
    CHECK( n.fanin0( v ).index() < v );
    CHECK( n.fanin1( v ).index() < v );
    CHECK( !( n.fanin1( v ) < n.fanin0( v ) ) );
  }
  CHECK( n.check() );
  CHECK( n.strash_unique() );
}

TEST_CASE( "mffc of a leaf cone" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto f = n.add_and( a, b );
  n.add_po( f );
  CHECK( n.mffc_size( f.index() ) == 1 );
  CHECK_THROWS_AS( (void)n.mffc( a.index() ), std::invalid_argument );
}

TEST_CASE( "mffc of a chain" )
{
  /* n1 = p & q, n2 = n1 & p, n3 = n2 & p; only n3 drives a PO.
   * Expected size 3, frozen from the delete-and-count oracle. */
  aig n;
  auto p = n.add_pi();
  auto q = n.add_pi();
  auto n1 = n.add_and( p, q );
  auto n2 = n.add_and( n1, p );
  auto n3 = n.add_and( n2, p );
  n.add_po( n3 );
  CHECK( testing::mffc_size_by_refcount( n, n3.index() ) == 3 );
  auto view = n.mffc( n3.index() );
  CHECK( view.size == 3 );
  CHECK( n.check() ); /* deref was undone */
}

TEST_CASE( "mffc stops at nodes with external fanout" )
{
  /* diamond with a shared inner node */
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto c = n.add_pi();
  auto inner = n.add_and( a, b );
  auto left = n.add_and( inner, c );
  auto top = n.add_and( left, !inner );
  n.add_po( top );
  n.add_po( inner ); /* external fanout */
  CHECK( testing::mffc_size_by_refcount( n, top.index() ) == 2 );
  auto view = n.mffc( top.index() );
  CHECK( view.size == 2 );
  for ( auto m : view.members )
  {
    CHECK( m != inner.index() );
  }
}

TEST_CASE( "mffc matches the refcount oracle on random graphs" )
{
  for ( uint64_t seed = 1; seed <= 5; ++seed )
  {
    auto n = testing::random_aig( seed, 8, 200, 6 );
    for ( uint32_t v = 1; v < n.num_nodes(); ++v )
    {
      if ( n.is_and( v ) )
      {
        CHECK( n.mffc_size( v ) == testing::mffc_size_by_refcount( n, v ) );
      }
    }
    CHECK( n.check() );
  }
}

TEST_CASE( "replace redirects fanouts and removes the old cone" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto c = n.add_pi();
  auto f = n.add_and( a, b );
  auto g = n.add_and( f, c );
  auto h = n.add_and( a, c ); /* replacement */
  n.add_po( g );
  n.add_po( h );
  uint32_t removed = n.replace( f.index(), h );
  CHECK( removed == 1 );
  CHECK( n.is_dead( f.index() ) );
  CHECK( n.check() );
  /* g now computes (a & c) & c = a & c */
  std::vector<bool> pis{ true, false, true };
  CHECK( testing::evaluate_pos( n, pis )[0] == true );
}

TEST_CASE( "replace with own fanin literal removes one node" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto f = n.add_and( a, b );
  n.add_po( f );
  CHECK( n.mffc_size( f.index() ) == 1 );
  uint32_t removed = n.replace( f.index(), a );
  CHECK( removed == 1 );
  CHECK( n.po_at( 0 ) == a );
}

TEST_CASE( "replace refuses a dependent replacement" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto f = n.add_and( a, b );
  auto g = n.add_and( f, a );
  n.add_po( g );
  CHECK_THROWS_WITH_AS( n.replace( f.index(), g ), "replacement depends on root",
                        std::invalid_argument );
}

TEST_CASE( "replace merges colliding fanouts" )
{
  /* two structurally different nodes become equal after replacement */
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto c = n.add_pi();
  auto f = n.add_and( a, b );
  auto g1 = n.add_and( f, c );  /* (a&b) & c */
  auto g2 = n.add_and( a, c );  /* a & c */
  n.add_po( g1 );
  n.add_po( g2 );
  /* replacing f by a turns g1 into a & c, a duplicate of g2 */
  n.replace( f.index(), a );
  CHECK( n.check() );
  CHECK( n.strash_unique() );
  CHECK( n.num_gates() == 1 );
  CHECK( n.po_at( 0 ) == n.po_at( 1 ) );
}

TEST_CASE( "replace preserves PO functions when the literal is equivalent" )
{
  for ( uint64_t seed = 11; seed <= 14; ++seed )
  {
    auto n = testing::random_aig( seed, 6, 60, 4 );
    /* find two distinct nodes computing equal functions over the PIs */
    std::vector<uint32_t> nodes;
    for ( uint32_t v = 1; v < n.num_nodes(); ++v )
    {
      if ( n.is_and( v ) )
      {
        nodes.push_back( v );
      }
    }
    std::vector<uint32_t> leaves;
    for ( uint32_t i = 0; i < n.num_pis(); ++i )
    {
      leaves.push_back( n.pi_at( i ) );
    }
    for ( uint32_t i = 0; i < nodes.size(); ++i )
    {
      for ( uint32_t j = i + 1; j < nodes.size(); ++j )
      {
        auto ti = testing::cone_tt_pointwise( n, nodes[i], leaves );
        auto tj = testing::cone_tt_pointwise( n, nodes[j], leaves );
        bool equal = ti == tj;
        bool inverse = ti == ~tj;
        if ( !equal && !inverse )
        {
          continue;
        }
        if ( n.depends_on( nodes[j], nodes[i] ) )
        {
          continue;
        }
        aig copy = n;
        copy.replace( nodes[j], literal( nodes[i], inverse ) );
        CHECK( testing::equivalent_exhaustive( n, copy ) );
        goto next_seed;
      }
    }
  next_seed:;
  }
}

TEST_CASE( "cleanup removes dangling cones" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto f = n.add_and( a, b );
  auto dangling1 = n.add_and( !a, b );
  auto dangling2 = n.add_and( dangling1, f );
  (void)dangling2;
  n.add_po( f );
  CHECK( n.cleanup() == 2 );
  CHECK( n.num_gates() == 1 );
  CHECK( n.check() );
}

TEST_CASE( "cleanup on an empty graph" )
{
  aig n;
  CHECK( n.cleanup() == 0 );
}

TEST_CASE( "levels of a four input chain" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto c = n.add_pi();
  auto d = n.add_pi();
  auto f = n.add_and( n.add_and( n.add_and( a, b ), c ), d );
  n.add_po( f );
  CHECK( n.recompute_levels() == 3 );
  CHECK( n.depth() == 3 );
}

TEST_CASE( "topological order lists fanins first" )
{
  auto n = testing::random_aig( 7, 8, 150, 5 );
  auto order = n.topo_order();
  std::vector<uint32_t> position( n.num_nodes(), 0 );
  uint32_t pos = 1;
  for ( auto v : order )
  {
    position[v] = pos++;
  }
  for ( auto v : order )
  {
    if ( n.is_and( v ) )
    {
      CHECK( position[n.fanin0( v ).index()] <= position[v] );
      CHECK( position[n.fanin1( v ).index()] <= position[v] );
    }
  }
}

TEST_CASE( "compaction preserves structure and removes tombstones" )
{
  auto n = testing::random_aig( 19, 6, 120, 4 );
  /* knock out a node to create tombstones */
  uint32_t victim = 0;
  for ( uint32_t v = 1; v < n.num_nodes(); ++v )
  {
    if ( n.is_and( v ) && n.ref_count( v ) > 0 && !n.depends_on( v, n.pi_at( 0 ) ) )
    {
      victim = v;
    }
  }
  if ( victim )
  {
    n.replace( victim, literal( n.pi_at( 0 ), false ) );
  }
  CHECK( n.has_tombstones() );
  auto compact = n.compacted();
  CHECK( !compact.has_tombstones() );
  CHECK( compact.num_gates() == n.num_gates() );
  CHECK( testing::equivalent_exhaustive( n, compact ) );
}
