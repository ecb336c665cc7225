/* qembed: coded reversible embeddings for quantum oracle design */

#include "qembed/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "qembed/embedding.hpp"
#include "qembed/pla.hpp"

namespace fs = std::filesystem;

namespace qembed
{

namespace
{

input_format resolve_format( std::string const& path, input_format requested )
{
  if ( requested != input_format::automatic )
    return requested;
  auto const ext = fs::path( path ).extension().string();
  if ( ext == ".pla" )
    return input_format::pla;
  if ( ext == ".tt" )
    return input_format::tt;
  throw qembed_error( "cannot infer format of " + path + " (expected .pla or .tt extension)" );
}

unsigned worker_count()
{
  if ( char const* env = std::getenv( "QEMBED_THREADS" ) )
  {
    int const v = std::atoi( env );
    if ( v >= 1 )
      return static_cast<unsigned>( v );
  }
  unsigned const hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

} // namespace

boolean_function load_function( std::string const& path, run_config const& cfg )
{
  std::ifstream in( path );
  if ( !in )
    throw qembed_error( "cannot open " + path );
  std::string const stem = fs::path( path ).stem().string();
  if ( resolve_format( path, cfg.format ) == input_format::pla )
    return parse_pla( in, stem );
  return parse_tt( in, stem );
}

width_report analyze_file( std::string const& path, run_config const& cfg )
{
  auto const f = load_function( path, cfg );
  auto const h = histogram( f, cfg.backend );
  width_report report;
  report.name = f.name;
  report.n = f.n;
  report.m = f.m;
  report.bennett = width_bennett( f );
  report.minimal = width_minimal( f, h );
  report.encoded = width_encoded( f, h );
  report.reversible = f.n == f.m && h.max_multiplicity() == 1;
  return report;
}

std::vector<width_report> analyze_batch( run_config const& cfg, std::vector<std::string>* errors )
{
  std::vector<std::string> paths;
  for ( auto const& input : cfg.inputs )
  {
    if ( fs::is_directory( input ) )
    {
      for ( auto const& entry : fs::recursive_directory_iterator( input ) )
      {
        if ( !entry.is_regular_file() )
          continue;
        auto const ext = entry.path().extension().string();
        if ( ext == ".pla" || ext == ".tt" )
          paths.push_back( entry.path().string() );
      }
    }
    else
    {
      paths.push_back( input );
    }
  }
  std::sort( paths.begin(), paths.end() );
  paths.erase( std::unique( paths.begin(), paths.end() ), paths.end() );

  struct slot
  {
    bool ok = false;
    bool skipped = false;
    width_report report;
    std::string error;
  };
  std::vector<slot> slots( paths.size() );

  auto process = [&]( std::size_t i ) {
    try
    {
      slots[i].report = analyze_file( paths[i], cfg );
      if ( cfg.skip_reversible && slots[i].report.reversible )
        slots[i].skipped = true;
      else
        slots[i].ok = true;
    }
    catch ( std::exception const& e )
    {
      slots[i].error = paths[i] + ": " + e.what();
    }
  };

  unsigned const workers = std::min<std::size_t>( worker_count(), paths.size() );
  if ( workers <= 1 )
  {
    for ( std::size_t i = 0; i < paths.size(); ++i )
      process( i );
  }
  else
  {
    std::atomic<std::size_t> next{ 0 };
    std::vector<std::thread> pool;
    for ( unsigned w = 0; w < workers; ++w )
    {
      pool.emplace_back( [&]() {
        for ( std::size_t i = next.fetch_add( 1 ); i < paths.size(); i = next.fetch_add( 1 ) )
          process( i );
      } );
    }
    for ( auto& th : pool )
      th.join();
  }

  std::vector<width_report> reports;
  for ( auto& s : slots )
  {
    if ( s.ok )
      reports.push_back( std::move( s.report ) );
    else if ( !s.skipped && errors )
      errors->push_back( std::move( s.error ) );
  }
  return reports;
}

double average_reduction_percent( std::vector<width_report> const& reports )
{
  if ( reports.empty() )
    return 0.0;
  double sum = 0.0;
  for ( auto const& r : reports )
    sum += static_cast<double>( r.minimal - r.encoded ) / r.minimal;
  return 100.0 * sum / static_cast<double>( reports.size() );
}

std::string report_csv( std::vector<width_report> const& reports )
{
  std::ostringstream out;
  out << "name,n,m,bennett,minimal,encoded\n";
  for ( auto const& r : reports )
    out << r.name << ',' << r.n << ',' << r.m << ',' << r.bennett << ',' << r.minimal << ','
        << r.encoded << '\n';
  char buf[64];
  std::snprintf( buf, sizeof( buf ), "%.2f", average_reduction_percent( reports ) );
  out << "# reduction = mean over functions of (minimal-encoded)/minimal, functions weighted equally\n";
  out << "# avg_reduction_vs_minimal=" << buf << '\n';
  return out.str();
}

} // namespace qembed
