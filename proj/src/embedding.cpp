/* qembed: coded reversible embeddings for quantum oracle design */

#include "qembed/embedding.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace qembed
{

namespace
{

std::uint64_t mask_bits( unsigned w )
{
  return w >= 64 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << w ) - 1;
}

std::uint64_t code_value( std::string const& codeword )
{
  std::uint64_t v = 0;
  for ( char c : codeword )
    v = ( v << 1 ) | ( c == '1' ? 1 : 0 );
  return v;
}

/* fills the ancilla != 0 half: unused output words to unused input words, both ascending */
void complete_table( std::vector<std::uint64_t>& table, std::vector<bool> const& used_output,
                     std::uint64_t first_free_input )
{
  std::uint64_t next_out = 0;
  for ( std::uint64_t in = first_free_input; in < table.size(); ++in )
  {
    while ( next_out < used_output.size() && used_output[next_out] )
      ++next_out;
    table[in] = next_out++;
  }
}

std::vector<unsigned> low_positions( unsigned m )
{
  std::vector<unsigned> pos( m );
  for ( unsigned i = 0; i < m; ++i )
    pos[i] = i;
  return pos;
}

} // namespace

std::string to_string( embedding_scheme s )
{
  switch ( s )
  {
  case embedding_scheme::bennett:
    return "bennett";
  case embedding_scheme::minimal:
    return "minimal";
  default:
    return "coded";
  }
}

std::uint64_t embedding_spec::apply( std::uint64_t input ) const
{
  if ( rule_based )
  {
    // (x, g) -> (x, g xor f(x)); x occupies the top n bits
    unsigned const m = source.m;
    std::uint64_t const x = input >> m;
    std::uint64_t const g = input & mask_bits( m );
    std::uint64_t const fx = evaluate( source, bit_pattern( x, source.n ) ).bits;
    return ( x << m ) | ( g ^ fx );
  }
  return table.at( input );
}

unsigned width_bennett( boolean_function const& f )
{
  return f.n + f.m;
}

unsigned width_minimal( boolean_function const& f, output_histogram const& h )
{
  if ( h.entries.empty() )
    throw empty_histogram( "width_minimal: histogram has no entries" );
  return std::max( f.n, f.m + ceil_log2( h.max_multiplicity() ) );
}

unsigned width_encoded( boolean_function const& f, output_histogram const& h )
{
  return root_weight_bound( h ) == root_bound::exactly_n ? f.n : f.n + 1;
}

embedding_spec embed_bennett( boolean_function const& f )
{
  embedding_spec spec;
  spec.scheme = embedding_scheme::bennett;
  spec.width = width_bennett( f );
  spec.ancilla_inputs = f.m;
  spec.source = f;
  spec.rule_based = true;
  spec.primary_output_positions = low_positions( f.m );
  return spec;
}

embedding_spec embed_minimal( boolean_function const& f, output_histogram const& h )
{
  unsigned const width = width_minimal( f, h );
  if ( width > 20 )
    throw too_wide_for_completion( "embed_minimal: width " + std::to_string( width ) + " exceeds 20" );

  embedding_spec spec;
  spec.scheme = embedding_scheme::minimal;
  spec.width = width;
  spec.ancilla_inputs = width - f.n;
  spec.source = f;
  spec.primary_output_positions = low_positions( f.m );

  std::uint64_t const space = std::uint64_t( 1 ) << width;
  spec.table.assign( space, 0 );
  std::vector<bool> used_output( space, false );

  // ancilla = 0 half: garbage values count up per output pattern in
  // ascending input order; output word = (garbage, f(x))
  std::map<bit_pattern, std::uint64_t> next_garbage;
  for ( std::uint64_t x = 0; x < ( std::uint64_t( 1 ) << f.n ); ++x )
  {
    bit_pattern const p = evaluate( f, bit_pattern( x, f.n ) );
    std::uint64_t const g = next_garbage[p]++;
    std::uint64_t const out = ( g << f.m ) | p.bits;
    spec.table[x] = out;
    used_output[out] = true;
  }
  complete_table( spec.table, used_output, std::uint64_t( 1 ) << f.n );
  return spec;
}

embedding_spec embed_coded( boolean_function const& f, output_histogram const& h, code_book const& cb )
{
  unsigned const width = std::max( f.n, cb.total_width );
  if ( width > 20 )
    throw too_wide_for_completion( "embed_coded: width " + std::to_string( width ) + " exceeds 20" );
  for ( auto const& [p, mu] : h.entries )
  {
    if ( !cb.entries.count( p ) )
      throw qembed_error( "embed_coded: codebook is missing pattern " + p.to_string() );
  }

  embedding_spec spec;
  spec.scheme = embedding_scheme::coded;
  spec.width = width;
  spec.ancilla_inputs = width - f.n;
  spec.source = f;
  spec.codebook = cb;

  std::uint64_t const space = std::uint64_t( 1 ) << width;
  spec.table.assign( space, 0 );
  std::vector<bool> used_output( space, false );

  // output word = codeword at the top, garbage rank below
  std::map<bit_pattern, std::uint64_t> next_garbage;
  for ( std::uint64_t x = 0; x < ( std::uint64_t( 1 ) << f.n ); ++x )
  {
    bit_pattern const p = evaluate( f, bit_pattern( x, f.n ) );
    auto const& entry = cb.entries.at( p );
    unsigned const garbage_width = width - static_cast<unsigned>( entry.codeword.size() );
    std::uint64_t const rank = next_garbage[p]++;
    if ( rank > mask_bits( garbage_width ) )
      throw qembed_error( "embed_coded: garbage overflow for pattern " + p.to_string() );
    std::uint64_t const out = ( code_value( entry.codeword ) << garbage_width ) | rank;
    spec.table[x] = out;
    used_output[out] = true;
  }
  complete_table( spec.table, used_output, std::uint64_t( 1 ) << f.n );
  return spec;
}

namespace
{

std::uint64_t lift_input( embedding_spec const& spec, std::uint64_t x )
{
  // rule-based (Bennett): garbage inputs sit in the low m bits; otherwise
  // ancilla inputs are the high bits and x passes through unchanged
  return spec.rule_based ? x << spec.source.m : x;
}

} // namespace

verification_report verify_embedding( embedding_spec const& spec, boolean_function const& f )
{
  if ( spec.width > 20 )
    throw too_large( "verify_embedding: width " + std::to_string( spec.width ) + " exceeds 20" );

  verification_report report;
  std::uint64_t const space = std::uint64_t( 1 ) << spec.width;

  // (1) bijectivity
  std::vector<std::int64_t> seen( space, -1 );
  for ( std::uint64_t in = 0; in < space; ++in )
  {
    std::uint64_t const out = spec.apply( in );
    if ( out >= space )
    {
      report.detail = "output word out of range for input " + bit_pattern( in, spec.width ).to_string();
      return report;
    }
    if ( seen[out] >= 0 )
    {
      report.detail = "not bijective: inputs " + bit_pattern( static_cast<std::uint64_t>( seen[out] ), spec.width ).to_string() +
                      " and " + bit_pattern( in, spec.width ).to_string() + " both map to " +
                      bit_pattern( out, spec.width ).to_string();
      return report;
    }
    seen[out] = static_cast<std::int64_t>( in );
  }

  // (2)/(3) ancilla-0 restriction reproduces f (or code of f, decodable)
  for ( std::uint64_t x = 0; x < ( std::uint64_t( 1 ) << f.n ); ++x )
  {
    bit_pattern const expected = evaluate( f, bit_pattern( x, f.n ) );
    std::uint64_t const out = spec.apply( lift_input( spec, x ) );

    if ( spec.scheme == embedding_scheme::coded )
    {
      std::string const word = bit_pattern( out, spec.width ).to_string();
      bit_pattern decoded;
      bool found = false;
      for ( auto const& [p, entry] : spec.codebook.entries )
      {
        if ( word.compare( 0, entry.codeword.size(), entry.codeword ) == 0 )
        {
          decoded = p;
          found = true;
          break;
        }
      }
      if ( !found )
      {
        report.detail = "no codeword prefixes output word " + word + " for input " +
                        bit_pattern( x, f.n ).to_string();
        return report;
      }
      if ( decoded != expected )
      {
        report.detail = "decode(project(.)) mismatch at input " + bit_pattern( x, f.n ).to_string() +
                        ": got " + decoded.to_string() + ", expected " + expected.to_string();
        return report;
      }
    }
    else
    {
      std::uint64_t const primary = out & mask_bits( f.m );
      if ( primary != expected.bits )
      {
        report.detail = "restriction mismatch at input " + bit_pattern( x, f.n ).to_string() +
                        ": got " + bit_pattern( primary, f.m ).to_string() + ", expected " +
                        expected.to_string();
        return report;
      }
    }
  }

  report.pass = true;
  return report;
}

std::string serialize_embedding( embedding_spec const& spec )
{
  if ( spec.width > 20 )
    throw too_wide_for_completion( "serialize_embedding: width " + std::to_string( spec.width ) + " exceeds 20" );

  std::ostringstream out;
  out << ".scheme " << to_string( spec.scheme ) << '\n';
  out << ".width " << spec.width << '\n';
  out << ".ancilla " << spec.ancilla_inputs << '\n';
  out << ".n " << spec.source.n << '\n';
  out << ".m " << spec.source.m << '\n';
  if ( spec.scheme == embedding_scheme::coded )
  {
    for ( auto const& [p, entry] : spec.codebook.entries )
      out << ".code " << p.to_string() << '=' << entry.codeword << '\n';
  }
  out << spec.width << ' ' << spec.width << '\n';
  std::uint64_t const space = std::uint64_t( 1 ) << spec.width;
  for ( std::uint64_t in = 0; in < space; ++in )
    out << bit_pattern( in, spec.width ).to_string() << ' '
        << bit_pattern( spec.apply( in ), spec.width ).to_string() << '\n';
  return out.str();
}

} // namespace qembed
