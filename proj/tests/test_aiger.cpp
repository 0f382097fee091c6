#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <aigopt/io/aiger.hpp>

#include "common.hpp"

using namespace aigopt;

namespace
{

bool structurally_identical( aig const& a, aig const& b )
{
  if ( a.num_pis() != b.num_pis() || a.num_pos() != b.num_pos() || a.num_gates() != b.num_gates() ||
       a.num_nodes() != b.num_nodes() )
  {
    return false;
  }
  for ( uint32_t n = 0; n < a.num_nodes(); ++n )
  {
    if ( a.is_and( n ) != b.is_and( n ) || a.is_pi( n ) != b.is_pi( n ) )
    {
      return false;
    }
    if ( a.is_and( n ) && ( a.fanin0( n ) != b.fanin0( n ) || a.fanin1( n ) != b.fanin1( n ) ) )
    {
      return false;
    }
  }
  for ( uint32_t i = 0; i < a.num_pos(); ++i )
  {
    if ( a.po_at( i ) != b.po_at( i ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE( "parse a wire" )
{
  auto n = parse_aiger( "aag 1 1 0 1 0\n2\n2\n" );
  CHECK( n.num_pis() == 1 );
  CHECK( n.num_gates() == 0 );
  CHECK( n.num_pos() == 1 );
  CHECK( n.po_at( 0 ) == literal( n.pi_at( 0 ), false ) );
}

TEST_CASE( "parse a single and" )
{
  auto n = parse_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n" );
  CHECK( n.num_pis() == 2 );
  CHECK( n.num_gates() == 1 );
  auto po = n.po_at( 0 );
  CHECK( !po.is_complemented() );
  CHECK( n.is_and( po.index() ) );
}

TEST_CASE( "node count equals header A" )
{
  /* includes a duplicate and a trivial gate, which must be preserved */
  auto n = parse_aiger( "aag 5 2 0 1 3\n2\n4\n10\n6 2 4\n8 2 4\n10 6 8\n" );
  CHECK( n.num_gates() == 3 );
}

TEST_CASE( "parse errors are distinct" )
{
  CHECK_THROWS_WITH_AS( parse_aiger( "aag 1 1\n" ), "aiger: malformed header: 'aag 1 1'", parse_error );
  CHECK_THROWS_AS( parse_aiger( "xyz 0 0 0 0 0\n" ), parse_error );
  CHECK_THROWS_AS( parse_aiger( "aag 2 1 0 1 2\n2\n" ), parse_error );     /* M < I + A */
  CHECK_THROWS_AS( parse_aiger( "aag 3 2 0 1 1\n2\n4\n6\n" ), parse_error ); /* truncated */
  /* binary: first AND must reference smaller literals */
  std::string bin = "aig 3 2 0 1 1\n6\n";
  bin.push_back( 0 ); /* delta0 = 0 -> rhs0 == lhs */
  bin.push_back( 0 );
  CHECK_THROWS_AS( parse_aiger( bin ), parse_error );
}

TEST_CASE( "latches are flattened into PI/PO pairs" )
{
  auto n = parse_aiger( "aag 2 1 1 1 0\n2\n4 2\n4\n" );
  CHECK( n.flattened_latches() == 1 );
  CHECK( n.num_pis() == 2 );  /* input + latch output */
  CHECK( n.num_pos() == 2 );  /* output + latch next-state */
  CHECK( n.po_at( 0 ) == literal( n.pi_at( 1 ), false ) );
  CHECK( n.po_at( 1 ) == literal( n.pi_at( 0 ), false ) );
}

TEST_CASE( "write an empty graph" )
{
  aig n;
  CHECK( write_ascii( n ) == "aag 0 0 0 0 0\n" );
}

TEST_CASE( "write a constant-true output" )
{
  aig n;
  n.add_po( lit_true );
  CHECK( write_ascii( n ) == "aag 0 0 0 1 0\n1\n" );
}

TEST_CASE( "writers reject tombstoned graphs" )
{
  aig n;
  auto a = n.add_pi();
  auto b = n.add_pi();
  auto f = n.add_and( a, b );
  n.add_po( f );
  n.replace( f.index(), a );
  std::ostringstream out;
  CHECK_THROWS_AS( write_ascii( n, out ), std::invalid_argument );
  CHECK_NOTHROW( write_ascii( n.compacted(), out ) );
}

TEST_CASE( "binary round trip is the identity on random graphs" )
{
  for ( uint64_t seed = 0; seed < 1000; ++seed )
  {
    auto n = testing::random_aig( seed, 3 + seed % 8, 10 + seed % 60, 1 + seed % 4 ).compacted();
    auto once = parse_aiger( write_binary( n ) );
    CHECK( structurally_identical( n, once ) );
    auto twice = parse_aiger( write_binary( once ) );
    REQUIRE( structurally_identical( once, twice ) );
  }
}

TEST_CASE( "ascii round trip preserves structure" )
{
  for ( uint64_t seed = 0; seed < 50; ++seed )
  {
    auto n = testing::random_aig( seed * 31 + 1, 5, 40, 3 ).compacted();
    auto back = parse_aiger( write_ascii( n ) );
    CHECK( structurally_identical( n, back ) );
  }
}

TEST_CASE( "symbol tables survive a round trip" )
{
  auto n = parse_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\ni0 alpha\ni1 beta\no0 out, with comma\n" );
  CHECK( n.input_names()[0] == "alpha" );
  CHECK( n.input_names()[1] == "beta" );
  CHECK( n.output_names()[0] == "out, with comma" );
  auto back = parse_aiger( write_ascii( n ) );
  CHECK( back.input_names() == n.input_names() );
  CHECK( back.output_names() == n.output_names() );
  auto bin = parse_aiger( write_binary( n ) );
  CHECK( bin.input_names() == n.input_names() );
}

TEST_CASE( "verbatim duplicates survive a round trip" )
{
  auto n = parse_aiger( "aag 5 2 0 1 3\n2\n4\n10\n6 2 4\n8 2 4\n10 6 8\n" );
  auto back = parse_aiger( write_binary( n ) );
  CHECK( structurally_identical( n, back ) );
}
