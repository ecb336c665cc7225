#include <doctest.h>

#include "qembed/counting.hpp"
#include "qembed/pla.hpp"
#include "test_util.hpp"

using namespace qembed;
using namespace qembed::testing;

TEST_CASE( "parse_pla reads the half adder" )
{
  auto const f = parse_pla( ".i 2\n.o 2\n00 00\n01 01\n10 01\n11 10\n.e", "ha" );
  CHECK( f.n == 2 );
  CHECK( f.m == 2 );
  CHECK( f.cubes.size() == 4 );
  CHECK( extensionally_equal( f, half_adder() ) );
}

TEST_CASE( "parse_pla accepts a full-cover don't-care cube" )
{
  auto const f = parse_pla( ".i 1\n.o 1\n- 1\n.e" );
  CHECK( f.cubes.size() == 1 );
  CHECK( evaluate( f, bit_pattern::from_string( "0" ) ) == bit_pattern::from_string( "1" ) );
  CHECK( evaluate( f, bit_pattern::from_string( "1" ) ) == bit_pattern::from_string( "1" ) );
}

TEST_CASE( "a row with an input don't-care covers 2^k minterms" )
{
  auto const f = parse_pla( ".i 2\n.o 1\n0- 1\n1- 0\n.e" );
  // oracle: enumerate the two minterms covered by "0-"
  CHECK( f.cubes[0].covers( 0b00 ) );
  CHECK( f.cubes[0].covers( 0b01 ) );
  CHECK( !f.cubes[0].covers( 0b10 ) );
  auto const h = count_enumerate( f );
  CHECK( h.entries.at( bit_pattern::from_string( "1" ) ) == 2 );
}

TEST_CASE( "parse_pla error paths" )
{
  CHECK_THROWS_AS( parse_pla( ".i 2\n.o 1\n0- -\n.e" ), unsupported_feature );
  CHECK_THROWS_AS( parse_pla( ".i 2\n.o 1\n.type fr\n00 1\n.e" ), unsupported_feature );
  CHECK_THROWS_AS( parse_pla( ".i 2\n.o 1\n011 1\n.e" ), syntax_error );
  CHECK_THROWS_AS( parse_pla( ".i 2\n.o 1\n.e" ), empty_function );
  CHECK_THROWS_AS( parse_pla( ".o 1\n0 1\n.e" ), syntax_error );

  std::vector<std::string> warnings;
  auto const f = parse_pla( ".i 1\n.o 1\n.ilb a\n.phase 1\n0 0\n1 1\n.e", "", &warnings );
  CHECK( f.cubes.size() == 2 );
  CHECK( warnings.size() == 2 );
}

TEST_CASE( "parse_tt reads explicit truth tables" )
{
  auto const f = parse_tt( table2_tt_text(), "table2" );
  CHECK( f.n == 3 );
  CHECK( f.m == 3 );
  CHECK( extensionally_equal( f, table2_function() ) );

  auto const id = parse_tt( "1 1\n0 0\n1 1\n" );
  CHECK( evaluate( id, bit_pattern::from_string( "0" ) ) == bit_pattern::from_string( "0" ) );
  CHECK( evaluate( id, bit_pattern::from_string( "1" ) ) == bit_pattern::from_string( "1" ) );
}

TEST_CASE( "parse_tt accepts rows in any order" )
{
  auto const f = parse_tt( "2 1\n11 1\n00 0\n10 1\n01 0\n" );
  CHECK( evaluate( f, bit_pattern::from_string( "10" ) ) == bit_pattern::from_string( "1" ) );
}

TEST_CASE( "parse_tt error paths" )
{
  CHECK_THROWS_AS( parse_tt( "1 1\n0 0\n0 1\n" ), duplicate_row );
  CHECK_THROWS_AS( parse_tt( "2 1\n00 0\n01 1\n" ), missing_row );
  CHECK_THROWS_AS( parse_tt( "1 1\n0 zz\n1 1\n" ), syntax_error );
  CHECK_THROWS_AS( parse_tt( "" ), syntax_error );
  CHECK_THROWS_AS( parse_tt( "21 1\n" ), too_large );
}

TEST_CASE( "serialize_tt emits the canonical half adder table" )
{
  CHECK( serialize_tt( half_adder() ) == "2 2\n00 00\n01 01\n10 01\n11 10\n" );
  auto const id = parse_tt( "1 1\n0 0\n1 1\n" );
  CHECK( serialize_tt( id ) == "1 1\n0 0\n1 1\n" );
  CHECK( serialize_tt( parse_tt( table2_tt_text() ) ) == table2_tt_text() );
}

TEST_CASE( "serialize_tt refuses n > 20" )
{
  CHECK_THROWS_AS( serialize_tt( constant_function( 21, 1, 0 ) ), too_large );
}

TEST_CASE( "truth-table round-trip on random tables" )
{
  std::mt19937_64 rng( 23 );
  for ( int it = 0; it < 50; ++it )
  {
    unsigned const n = 1 + rng() % 8;
    unsigned const m = 1 + rng() % 6;
    auto const f = random_truth_table( rng, n, m );
    CHECK( extensionally_equal( parse_tt( serialize_tt( f ) ), f ) );
  }
}

TEST_CASE( "a PLA enumerating all minterms equals the truth table" )
{
  auto const from_pla = parse_pla( ".i 2\n.o 2\n00 00\n01 01\n10 01\n11 10\n.end" );
  auto const from_tt = parse_tt( "2 2\n00 00\n01 01\n10 01\n11 10\n" );
  CHECK( extensionally_equal( from_pla, from_tt ) );
}
