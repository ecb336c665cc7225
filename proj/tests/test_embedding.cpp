#include <doctest.h>

#include "qembed/counting.hpp"
#include "qembed/embedding.hpp"
#include "qembed/pla.hpp"
#include "test_util.hpp"

using namespace qembed;
using namespace qembed::testing;

namespace
{

code_book codebook_for( output_histogram const& h )
{
  return assign_codes( build_ph_tree( h ) );
}

} // namespace

TEST_CASE( "widths of the worked examples" )
{
  auto const ha = half_adder();
  auto const hah = histogram( ha );
  CHECK( width_bennett( ha ) == 4 );
  CHECK( width_minimal( ha, hah ) == 3 );
  CHECK( width_encoded( ha, hah ) == 2 );

  auto const t2 = table2_function();
  auto const t2h = histogram( t2 );
  CHECK( width_bennett( t2 ) == 6 );
  CHECK( width_minimal( t2, t2h ) == 5 );
  CHECK( width_encoded( t2, t2h ) == 3 );

  auto const id = parse_tt( "1 1\n0 0\n1 1\n" );
  auto const idh = histogram( id );
  CHECK( width_bennett( id ) == 2 );
  CHECK( width_minimal( id, idh ) == 1 );
  CHECK( width_encoded( id, idh ) == 1 );
}

TEST_CASE( "width_encoded needs one extra qubit iff some mu is not a power of two" )
{
  // n = 2, outputs 0,0,0,1: mu = {3, 1}
  auto const f = parse_tt( "2 1\n00 0\n01 0\n10 0\n11 1\n" );
  auto const h = histogram( f );
  CHECK( width_encoded( f, h ) == 3 );
  CHECK( width_minimal( f, h ) == 3 );
}

TEST_CASE( "minimal embedding of the half adder" )
{
  auto const f = half_adder();
  auto const spec = embed_minimal( f, histogram( f ) );
  CHECK( spec.width == 3 );
  CHECK( spec.ancilla_inputs == 1 );

  // ancilla = 0 restriction reproduces the original outputs on the primary columns
  std::vector<std::uint64_t> expected{ 0b00, 0b01, 0b01, 0b10 };
  for ( std::uint64_t x = 0; x < 4; ++x )
    CHECK( ( spec.apply( x ) & 0b11 ) == expected[x] );

  auto const report = verify_embedding( spec, f );
  CHECK_MESSAGE( report.pass, report.detail );
}

TEST_CASE( "minimal embedding of a reversible function is the function itself" )
{
  auto const f = parse_tt( "2 2\n00 01\n01 10\n10 11\n11 00\n" );
  auto const spec = embed_minimal( f, histogram( f ) );
  CHECK( spec.width == 2 );
  CHECK( spec.ancilla_inputs == 0 );
  for ( std::uint64_t x = 0; x < 4; ++x )
    CHECK( spec.apply( x ) == evaluate( f, bit_pattern( x, 2 ) ).bits );
}

TEST_CASE( "coded embedding matches the worked encoded table on forced rows" )
{
  auto const f = table2_function();
  auto const h = histogram( f );
  auto const spec = embed_coded( f, h, codebook_for( h ) );
  CHECK( spec.width == 3 );
  CHECK( spec.ancilla_inputs == 0 );
  // length-3 codes leave no garbage freedom
  CHECK( spec.apply( 0b011 ) == 0b110 );
  CHECK( spec.apply( 0b101 ) == 0b111 );

  auto const report = verify_embedding( spec, f );
  CHECK_MESSAGE( report.pass, report.detail );
}

TEST_CASE( "coded embedding of the half adder under the default rules" )
{
  auto const f = half_adder();
  auto const h = histogram( f );
  auto const spec = embed_coded( f, h, codebook_for( h ) );
  CHECK( spec.width == 2 );
  CHECK( spec.apply( 0b00 ) == 0b10 );
  CHECK( spec.apply( 0b01 ) == 0b00 );
  CHECK( spec.apply( 0b10 ) == 0b01 );
  CHECK( spec.apply( 0b11 ) == 0b11 );
  CHECK( verify_embedding( spec, f ).pass );
}

TEST_CASE( "coded embedding of a constant function is the identity" )
{
  auto const f = constant_function( 3, 2, 0b10 );
  auto const h = histogram( f );
  auto const spec = embed_coded( f, h, codebook_for( h ) );
  CHECK( spec.width == 3 );
  for ( std::uint64_t x = 0; x < 8; ++x )
    CHECK( spec.apply( x ) == x );
  CHECK( verify_embedding( spec, f ).pass );
}

TEST_CASE( "coded embedding with an ancilla qubit" )
{
  auto const f = parse_tt( "2 1\n00 0\n01 0\n10 0\n11 1\n" );
  auto const h = histogram( f );
  auto const spec = embed_coded( f, h, codebook_for( h ) );
  CHECK( spec.width == 3 );
  CHECK( spec.ancilla_inputs == 1 );
  auto const report = verify_embedding( spec, f );
  CHECK_MESSAGE( report.pass, report.detail );
}

TEST_CASE( "bennett embedding restriction (x, 0) -> (x, f(x))" )
{
  auto const f = table2_function();
  auto const spec = embed_bennett( f );
  CHECK( spec.width == 6 );
  CHECK( spec.rule_based );
  for ( std::uint64_t x = 0; x < 8; ++x )
    CHECK( spec.apply( x << 3 ) == ( ( x << 3 ) | evaluate( f, bit_pattern( x, 3 ) ).bits ) );
  CHECK( verify_embedding( spec, f ).pass );
}

TEST_CASE( "bennett embedding is an involution on the garbage register" )
{
  std::mt19937_64 rng( 83 );
  auto const f = random_truth_table( rng, 3, 3 );
  auto const spec = embed_bennett( f );
  for ( std::uint64_t w = 0; w < 64; ++w )
    CHECK( spec.apply( spec.apply( w ) ) == w );
}

TEST_CASE( "verify_embedding reports the first counterexample" )
{
  auto const f = half_adder();
  auto spec = embed_minimal( f, histogram( f ) );
  spec.table[5] = spec.table[4]; // break bijectivity
  auto const report = verify_embedding( spec, f );
  CHECK( !report.pass );
  CHECK( report.detail.find( "not bijective" ) != std::string::npos );
}

TEST_CASE( "random embedding sweep over both table-based schemes" )
{
  std::mt19937_64 rng( 89 );
  for ( int it = 0; it < 200; ++it )
  {
    unsigned const n = 1 + rng() % 4;
    unsigned const m = 1 + rng() % 4;
    auto const f = random_truth_table( rng, n, m );
    auto const h = histogram( f );

    auto const minimal = embed_minimal( f, h );
    CHECK_MESSAGE( verify_embedding( minimal, f ).pass, verify_embedding( minimal, f ).detail );

    auto const coded = embed_coded( f, h, codebook_for( h ) );
    CHECK_MESSAGE( verify_embedding( coded, f ).pass, verify_embedding( coded, f ).detail );

    CHECK( width_encoded( f, h ) <= width_minimal( f, h ) );
    CHECK( width_minimal( f, h ) <= width_bennett( f ) );
  }
}

TEST_CASE( "explicit completion bound" )
{
  auto const f = constant_function( 21, 1, 0 );
  output_histogram h;
  h.n = 21;
  h.m = 1;
  h.entries[bit_pattern( 0, 1 )] = std::uint64_t( 1 ) << 21;
  CHECK_THROWS_AS( embed_minimal( f, h ), too_wide_for_completion );
  code_book cb;
  cb.total_width = 21;
  cb.entries[bit_pattern( 0, 1 )] = { "", 21 };
  CHECK_THROWS_AS( embed_coded( f, h, cb ), too_wide_for_completion );
}

TEST_CASE( "embedding serialization" )
{
  auto const f = half_adder();
  auto const h = histogram( f );
  auto const spec = embed_coded( f, h, codebook_for( h ) );
  auto const text = serialize_embedding( spec );
  CHECK( text.find( ".scheme coded\n" ) != std::string::npos );
  CHECK( text.find( ".width 2\n" ) != std::string::npos );
  CHECK( text.find( ".ancilla 0\n" ) != std::string::npos );
  CHECK( text.find( ".code 01=0\n" ) != std::string::npos );
  CHECK( text.find( "\n00 10\n" ) != std::string::npos );

  auto const minimal = serialize_embedding( embed_minimal( f, h ) );
  CHECK( minimal.find( ".scheme minimal\n" ) != std::string::npos );
  CHECK( minimal.find( ".code" ) == std::string::npos );
}
