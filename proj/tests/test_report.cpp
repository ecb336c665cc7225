#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "qembed/pla.hpp"
#include "qembed/report.hpp"
#include "test_util.hpp"

using namespace qembed;
using namespace qembed::testing;
namespace fs = std::filesystem;

namespace
{

struct temp_dir
{
  fs::path path;

  temp_dir()
  {
    path = fs::temp_directory_path() / ( "qembed_test_" + std::to_string( ::getpid() ) + "_" +
                                         std::to_string( counter()++ ) );
    fs::create_directories( path );
  }
  ~temp_dir() { fs::remove_all( path ); }

  std::string write( std::string const& name, std::string const& content ) const
  {
    auto const file = path / name;
    std::ofstream out( file );
    out << content;
    return file.string();
  }

  static int& counter()
  {
    static int c = 0;
    return c;
  }
};

std::string ha_tt_text()
{
  return "2 2\n00 00\n01 01\n10 01\n11 10\n";
}

} // namespace

TEST_CASE( "analyze_file on the worked examples" )
{
  temp_dir dir;
  run_config cfg;

  auto const ha = analyze_file( dir.write( "ha.tt", ha_tt_text() ), cfg );
  CHECK( ha == width_report{ "ha", 2, 2, 4, 3, 2, false } );

  auto const t2 = analyze_file( dir.write( "table2.tt", table2_tt_text() ), cfg );
  CHECK( t2 == width_report{ "table2", 3, 3, 6, 5, 3, false } );

  auto const rev = analyze_file(
      dir.write( "rot.tt", "3 3\n000 001\n001 010\n010 011\n011 100\n100 101\n101 110\n110 111\n111 000\n" ),
      cfg );
  CHECK( rev == width_report{ "rot", 3, 3, 6, 3, 3, true } );
}

TEST_CASE( "analyze_file resolves formats by extension" )
{
  temp_dir dir;
  run_config cfg;
  auto const ha = analyze_file( dir.write( "ha.pla", ".i 2\n.o 2\n00 00\n01 01\n10 01\n11 10\n.e" ), cfg );
  CHECK( ha.minimal == 3 );
  CHECK( ha.encoded == 2 );

  CHECK_THROWS_AS( analyze_file( dir.write( "ha.bogus", ha_tt_text() ), cfg ), qembed_error );
}

TEST_CASE( "report_csv layout and average reduction" )
{
  width_report const ha{ "ha", 2, 2, 4, 3, 2, false };
  CHECK( report_csv( { ha } ) ==
         "name,n,m,bennett,minimal,encoded\n"
         "ha,2,2,4,3,2\n"
         "# reduction = mean over functions of (minimal-encoded)/minimal, functions weighted equally\n"
         "# avg_reduction_vs_minimal=33.33\n" );

  width_report const rev{ "rot", 3, 3, 6, 3, 3, true };
  CHECK( average_reduction_percent( { rev } ) == doctest::Approx( 0.0 ) );
  CHECK( report_csv( { rev } ).find( "# avg_reduction_vs_minimal=0.00" ) != std::string::npos );

  CHECK( average_reduction_percent( { ha, rev } ) == doctest::Approx( 100.0 / 6 ) );
}

TEST_CASE( "analyze_batch expands directories in sorted path order" )
{
  temp_dir dir;
  dir.write( "b_table2.tt", table2_tt_text() );
  dir.write( "a_ha.tt", ha_tt_text() );
  dir.write( "notes.txt", "ignored" );

  run_config cfg;
  cfg.inputs = { dir.path.string() };
  std::vector<std::string> errors;
  auto const reports = analyze_batch( cfg, &errors );
  CHECK( errors.empty() );
  REQUIRE( reports.size() == 2 );
  CHECK( reports[0].name == "a_ha" );
  CHECK( reports[1].name == "b_table2" );
}

TEST_CASE( "analyze_batch collects per-file errors" )
{
  temp_dir dir;
  dir.write( "good.tt", ha_tt_text() );
  dir.write( "bad.tt", "2 2\n00 00\n" );

  run_config cfg;
  cfg.inputs = { dir.path.string() };
  std::vector<std::string> errors;
  auto const reports = analyze_batch( cfg, &errors );
  CHECK( reports.size() == 1 );
  REQUIRE( errors.size() == 1 );
  CHECK( errors[0].find( "bad.tt" ) != std::string::npos );
}

TEST_CASE( "skip-reversible drops reversible functions without error" )
{
  temp_dir dir;
  dir.write( "ha.tt", ha_tt_text() );
  dir.write( "rot.tt", "1 1\n0 1\n1 0\n" );

  run_config cfg;
  cfg.inputs = { dir.path.string() };
  cfg.skip_reversible = true;
  std::vector<std::string> errors;
  auto const reports = analyze_batch( cfg, &errors );
  CHECK( errors.empty() );
  REQUIRE( reports.size() == 1 );
  CHECK( reports[0].name == "ha" );
}

TEST_CASE( "batch output is independent of the worker count" )
{
  temp_dir dir;
  std::mt19937_64 rng( 97 );
  for ( int i = 0; i < 12; ++i )
    dir.write( "f" + std::to_string( i ) + ".tt", serialize_tt( random_truth_table( rng, 1 + rng() % 7, 1 + rng() % 5 ) ) );

  run_config cfg;
  cfg.inputs = { dir.path.string() };

  ::setenv( "QEMBED_THREADS", "1", 1 );
  auto const sequential = analyze_batch( cfg );
  ::setenv( "QEMBED_THREADS", "4", 1 );
  auto const parallel = analyze_batch( cfg );
  ::unsetenv( "QEMBED_THREADS" );
  CHECK( sequential == parallel );
  CHECK( report_csv( sequential ) == report_csv( parallel ) );
}
