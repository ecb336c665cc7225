/* qembed: coded reversible embeddings for quantum oracle design */

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "qembed/embedding.hpp"
#include "qembed/pla.hpp"
#include "qembed/report.hpp"

namespace
{

using namespace qembed;

void write_output( std::string const& text, std::string const& path )
{
  if ( path.empty() )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( path );
  if ( !out )
    throw qembed_error( "cannot write " + path );
  out << text;
}

input_format parse_format( std::string const& s )
{
  if ( s == "pla" )
    return input_format::pla;
  if ( s == "tt" )
    return input_format::tt;
  return input_format::automatic;
}

/* Table-2(b)-style listing: patterns by descending multiplicity */
std::vector<std::pair<bit_pattern, std::uint64_t>> by_multiplicity( output_histogram const& h )
{
  std::vector<std::pair<bit_pattern, std::uint64_t>> rows( h.entries.begin(), h.entries.end() );
  std::stable_sort( rows.begin(), rows.end(),
                    []( auto const& a, auto const& b ) { return a.second > b.second; } );
  return rows;
}

int cmd_analyze( run_config const& cfg )
{
  bool failed = false;
  for ( auto const& path : cfg.inputs )
  {
    try
    {
      auto const f = load_function( path, cfg );
      auto const h = histogram( f, cfg.backend );
      if ( cfg.skip_reversible && f.n == f.m && h.max_multiplicity() == 1 )
      {
        std::cout << f.name << ": reversible, skipped\n";
        continue;
      }
      auto const tree = build_ph_tree( h );
      auto const cb = assign_codes( tree );

      std::cout << f.name << ": n=" << f.n << " m=" << f.m << "\n";
      std::cout << "  i  p_i";
      for ( unsigned s = 3; s < f.m; ++s )
        std::cout << ' ';
      std::cout << "  mu  code\n";
      unsigned i = 1;
      for ( auto const& [p, mu] : by_multiplicity( h ) )
        std::cout << "  " << i++ << "  " << p.to_string() << "  " << mu << "   "
                  << cb.entries.at( p ).codeword << "\n";
      std::cout << "  widths: bennett=" << width_bennett( f ) << " minimal=" << width_minimal( f, h )
                << " encoded=" << width_encoded( f, h ) << "\n";
    }
    catch ( std::exception const& e )
    {
      std::cerr << path << ": " << e.what() << "\n";
      failed = true;
    }
  }
  return failed ? 2 : 0;
}

int cmd_report( run_config const& cfg, std::string const& output_path )
{
  std::vector<std::string> errors;
  auto const reports = analyze_batch( cfg, &errors );
  write_output( report_csv( reports ), output_path );
  for ( auto const& e : errors )
    std::cerr << e << "\n";
  return errors.empty() ? 0 : 2;
}

int cmd_embed( run_config const& cfg, std::string const& scheme, std::string const& output_path )
{
  auto const& path = cfg.inputs.front();
  try
  {
    auto const f = load_function( path, cfg );
    auto const h = histogram( f, cfg.backend );
    embedding_spec spec;
    if ( scheme == "bennett" )
      spec = embed_bennett( f );
    else if ( scheme == "minimal" )
      spec = embed_minimal( f, h );
    else
      spec = embed_coded( f, h, assign_codes( build_ph_tree( h ) ) );

    write_output( serialize_embedding( spec ), output_path );
    if ( spec.width <= 20 )
    {
      auto const report = verify_embedding( spec, f );
      std::cerr << "verify_embedding: " << ( report.pass ? "pass" : "FAIL: " + report.detail ) << "\n";
      if ( !report.pass )
        return 2;
    }
    return 0;
  }
  catch ( std::exception const& e )
  {
    std::cerr << path << ": " << e.what() << "\n";
    return 2;
  }
}

int cmd_tree( run_config const& cfg, bool dot, std::string const& output_path )
{
  auto const& path = cfg.inputs.front();
  try
  {
    auto const f = load_function( path, cfg );
    auto const h = histogram( f, cfg.backend );
    auto const tree = build_ph_tree( h );
    write_output( dot ? tree_to_dot( tree, f.name.empty() ? "ph_tree" : f.name ) : tree_to_text( tree ),
                  output_path );
    return 0;
  }
  catch ( std::exception const& e )
  {
    std::cerr << path << ": " << e.what() << "\n";
    return 2;
  }
}

int cmd_selftest( unsigned iterations, unsigned max_n, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  unsigned held = 0;
  for ( unsigned it = 0; it < iterations; ++it )
  {
    unsigned const n = 1 + static_cast<unsigned>( rng() % max_n );
    unsigned const m = 1 + static_cast<unsigned>( rng() % 8 );
    output_histogram h;
    h.n = n;
    h.m = m;
    for ( std::uint64_t x = 0; x < ( std::uint64_t( 1 ) << n ); ++x )
      ++h.entries[bit_pattern( rng() & ( ( std::uint64_t( 1 ) << m ) - 1 ), m )];

    auto const tree = build_ph_tree( h );
    unsigned const root = tree.nodes[tree.root].weight;
    bool ok = root == n || root == n + 1;
    ok = ok && ( ( root_weight_bound( h ) == root_bound::exactly_n ) == ( root == n ) );

    std::vector<std::uint64_t> counts;
    for ( auto const& [p, mu] : h.entries )
      counts.push_back( mu );
    auto const theorem = verify_theorem_instance( counts, n );
    ok = ok && theorem.passed && theorem.root_weight == root;
    if ( ok )
      ++held;
    else
      std::cerr << "selftest iteration " << it << " failed (n=" << n << ", m=" << m << ")\n";
  }
  std::cout << "theorem holds: " << held << "/" << iterations << "\n";
  return held == iterations ? 0 : 2;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "qembed: coded reversible embeddings for quantum oracle design" };
  app.require_subcommand( 1 );

  run_config cfg;
  std::string format = "auto";
  std::string backend = "cofactor";
  std::string output_path;
  std::string scheme = "coded";
  bool dot = false;
  unsigned iterations = 10000;
  unsigned max_n = 10;
  std::uint64_t seed = 1;

  auto add_common = [&]( CLI::App* sub, bool many_inputs ) {
    sub->add_option( "inputs", cfg.inputs, many_inputs ? "input files or directories" : "input file" )
        ->required()
        ->expected( many_inputs ? -1 : 1 );
    sub->add_option( "--format", format, "input format: auto|pla|tt" )
        ->check( CLI::IsMember( { "auto", "pla", "tt" } ) );
    sub->add_option( "--backend", backend, "counting backend: enumerate|cofactor" )
        ->check( CLI::IsMember( { "enumerate", "cofactor" } ) );
    sub->add_flag( "--implicit-zero", cfg.backend.implicit_zero,
                   "treat uncovered minterms as output 0^m" );
  };

  auto* analyze = app.add_subcommand( "analyze", "print histogram, code table, and qubit widths" );
  add_common( analyze, true );
  analyze->add_flag( "--skip-reversible", cfg.skip_reversible, "skip reversible functions" );

  auto* report = app.add_subcommand( "report", "batch analysis as CSV" );
  add_common( report, true );
  report->add_flag( "--skip-reversible", cfg.skip_reversible, "skip reversible functions" );
  report->add_option( "-o,--output", output_path, "output file (default stdout)" );

  auto* embed = app.add_subcommand( "embed", "emit a complete reversible embedding" );
  add_common( embed, false );
  embed->add_option( "--scheme", scheme, "bennett|minimal|coded" )
      ->check( CLI::IsMember( { "bennett", "minimal", "coded" } ) );
  embed->add_option( "-o,--output", output_path, "output file (default stdout)" );

  auto* tree = app.add_subcommand( "tree", "dump the Pseudo-Huffman tree" );
  add_common( tree, false );
  tree->add_flag( "--dot", dot, "emit DOT instead of indented text" );
  tree->add_option( "-o,--output", output_path, "output file (default stdout)" );

  auto* selftest = app.add_subcommand( "selftest", "randomized root-weight bound suite" );
  selftest->add_option( "--iterations", iterations, "number of random functions" );
  selftest->add_option( "--max-n", max_n, "maximum input count" )->check( CLI::Range( 1u, 20u ) );
  selftest->add_option( "--seed", seed, "RNG seed" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    return app.exit( e ) == 0 ? 0 : 1;
  }

  cfg.format = parse_format( format );
  cfg.backend.variant =
      backend == "enumerate" ? count_backend::kind::enumerate : count_backend::kind::cofactor;

  if ( analyze->parsed() )
    return cmd_analyze( cfg );
  if ( report->parsed() )
    return cmd_report( cfg, output_path );
  if ( embed->parsed() )
    return cmd_embed( cfg, scheme, output_path );
  if ( tree->parsed() )
    return cmd_tree( cfg, dot, output_path );
  return cmd_selftest( iterations, max_n, seed );
}
