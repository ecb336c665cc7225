/* qembed: coded reversible embeddings for quantum oracle design */

#include "qembed/pla.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace qembed
{

namespace
{

std::string trim( std::string const& s )
{
  auto const begin = s.find_first_not_of( " \t\r" );
  if ( begin == std::string::npos )
    return "";
  auto const end = s.find_last_not_of( " \t\r" );
  return s.substr( begin, end - begin + 1 );
}

std::vector<std::string> tokens( std::string const& line )
{
  std::vector<std::string> out;
  std::istringstream iss( line );
  std::string tok;
  while ( iss >> tok )
    out.push_back( tok );
  return out;
}

unsigned parse_positive( std::string const& tok, std::string const& what, unsigned line_no )
{
  try
  {
    unsigned long v = std::stoul( tok );
    if ( v < 1 || v > 64 )
      throw std::out_of_range( "" );
    return static_cast<unsigned>( v );
  }
  catch ( std::exception const& )
  {
    throw syntax_error( "line " + std::to_string( line_no ) + ": " + what + " must be an integer in [1, 64], got \"" + tok + "\"" );
  }
}

} // namespace

boolean_function parse_pla( std::istream& in, std::string const& name, std::vector<std::string>* warnings )
{
  pla_document doc;
  doc.name = name;
  bool have_i = false, have_o = false, terminated = false;

  std::string raw;
  unsigned line_no = 0;
  while ( !terminated && std::getline( in, raw ) )
  {
    ++line_no;
    std::string line = trim( raw );
    if ( line.empty() || line[0] == '#' )
      continue;
    if ( line[0] == '.' )
    {
      auto toks = tokens( line );
      std::string const& dir = toks[0];
      if ( dir == ".i" )
      {
        if ( toks.size() != 2 )
          throw syntax_error( "line " + std::to_string( line_no ) + ": .i expects one argument" );
        doc.declared_inputs = parse_positive( toks[1], ".i", line_no );
        have_i = true;
      }
      else if ( dir == ".o" )
      {
        if ( toks.size() != 2 )
          throw syntax_error( "line " + std::to_string( line_no ) + ": .o expects one argument" );
        doc.declared_outputs = parse_positive( toks[1], ".o", line_no );
        have_o = true;
      }
      else if ( dir == ".p" )
      {
        if ( toks.size() != 2 )
          throw syntax_error( "line " + std::to_string( line_no ) + ": .p expects one argument" );
        doc.declared_terms = static_cast<unsigned>( std::stoul( toks[1] ) );
      }
      else if ( dir == ".e" || dir == ".end" )
      {
        terminated = true;
      }
      else if ( dir == ".type" )
      {
        if ( toks.size() != 2 || ( toks[1] != "f" && toks[1] != "F" ) )
          throw unsupported_feature( "line " + std::to_string( line_no ) +
                                     ": only fully specified PLA semantics (.type f) are supported" );
      }
      else
      {
        if ( warnings )
          warnings->push_back( "line " + std::to_string( line_no ) + ": skipping directive " + dir );
      }
      continue;
    }

    auto toks = tokens( line );
    if ( toks.size() != 2 )
      throw syntax_error( "line " + std::to_string( line_no ) + ": expected \"<inputs> <outputs>\" row" );
    doc.rows.emplace_back( toks[0], toks[1] );
    if ( !have_i || !have_o )
      throw syntax_error( "line " + std::to_string( line_no ) + ": row before .i/.o declarations" );
    auto const& [in_str, out_str] = doc.rows.back();
    if ( in_str.size() != doc.declared_inputs )
      throw syntax_error( "line " + std::to_string( line_no ) + ": input field has width " +
                          std::to_string( in_str.size() ) + ", expected " + std::to_string( doc.declared_inputs ) );
    if ( out_str.size() != doc.declared_outputs )
      throw syntax_error( "line " + std::to_string( line_no ) + ": output field has width " +
                          std::to_string( out_str.size() ) + ", expected " + std::to_string( doc.declared_outputs ) );
    for ( char c : out_str )
    {
      if ( c == '-' || c == '~' )
        throw unsupported_feature( "line " + std::to_string( line_no ) +
                                   ": don't-care output bits are not supported (outputs must be fully specified)" );
      if ( c != '0' && c != '1' )
        throw syntax_error( "line " + std::to_string( line_no ) + ": invalid output character '" + std::string( 1, c ) + "'" );
    }
    for ( char c : in_str )
    {
      if ( c != '0' && c != '1' && c != '-' )
        throw syntax_error( "line " + std::to_string( line_no ) + ": invalid input character '" + std::string( 1, c ) + "'" );
    }
  }

  if ( !have_i || !have_o )
    throw syntax_error( "missing .i/.o declaration" );
  if ( doc.rows.empty() )
    throw empty_function( "PLA file" + ( name.empty() ? std::string() : " " + name ) + " has no rows" );

  std::vector<cube> cubes;
  cubes.reserve( doc.rows.size() );
  for ( auto const& [in_str, out_str] : doc.rows )
    cubes.push_back( cube::from_strings( in_str, out_str ) );
  return boolean_function( doc.declared_inputs, doc.declared_outputs, std::move( cubes ), name );
}

boolean_function parse_pla( std::string const& text, std::string const& name, std::vector<std::string>* warnings )
{
  std::istringstream in( text );
  return parse_pla( in, name, warnings );
}

boolean_function parse_tt( std::istream& in, std::string const& name )
{
  std::string raw;
  unsigned line_no = 0;
  unsigned n = 0, m = 0;
  bool have_header = false;
  std::vector<bool> seen;
  std::vector<cube> cubes;

  while ( std::getline( in, raw ) )
  {
    ++line_no;
    std::string line = trim( raw );
    if ( line.empty() || line[0] == '#' )
      continue;
    auto toks = tokens( line );
    if ( !have_header )
    {
      if ( toks.size() != 2 )
        throw syntax_error( "line " + std::to_string( line_no ) + ": expected header \"n m\"" );
      n = parse_positive( toks[0], "input count", line_no );
      m = parse_positive( toks[1], "output count", line_no );
      if ( n > 20 )
        throw too_large( "truth-table format is limited to n <= 20, got n = " + std::to_string( n ) );
      seen.assign( std::size_t( 1 ) << n, false );
      have_header = true;
      continue;
    }
    if ( toks.size() != 2 )
      throw syntax_error( "line " + std::to_string( line_no ) + ": expected \"<input> <output>\" row" );
    if ( toks[0].size() != n )
      throw syntax_error( "line " + std::to_string( line_no ) + ": input field width mismatch" );
    if ( toks[1].size() != m )
      throw syntax_error( "line " + std::to_string( line_no ) + ": output field width mismatch" );
    bit_pattern input, output;
    try
    {
      input = bit_pattern::from_string( toks[0] );
      output = bit_pattern::from_string( toks[1] );
    }
    catch ( std::invalid_argument const& e )
    {
      throw syntax_error( "line " + std::to_string( line_no ) + ": " + e.what() );
    }
    if ( seen[input.bits] )
      throw duplicate_row( "line " + std::to_string( line_no ) + ": input " + toks[0] + " listed twice" );
    seen[input.bits] = true;
    cubes.push_back( cube( n == 64 ? ~std::uint64_t( 0 ) : ( std::uint64_t( 1 ) << n ) - 1, input.bits, output ) );
  }

  if ( !have_header )
    throw syntax_error( "empty truth-table file" );
  for ( std::uint64_t x = 0; x < seen.size(); ++x )
  {
    if ( !seen[x] )
      throw missing_row( "truth table is missing input " + bit_pattern( x, n ).to_string() );
  }
  return boolean_function( n, m, std::move( cubes ), name );
}

boolean_function parse_tt( std::string const& text, std::string const& name )
{
  std::istringstream in( text );
  return parse_tt( in, name );
}

std::string serialize_tt( boolean_function const& f )
{
  if ( f.n > 20 )
    throw too_large( "serialize_tt: n = " + std::to_string( f.n ) + " exceeds explicit expansion bound 20" );
  std::ostringstream out;
  out << f.n << ' ' << f.m << '\n';
  std::uint64_t const space = std::uint64_t( 1 ) << f.n;
  for ( std::uint64_t x = 0; x < space; ++x )
  {
    bit_pattern const input( x, f.n );
    out << input.to_string() << ' ' << evaluate( f, input ).to_string() << '\n';
  }
  return out.str();
}

} // namespace qembed
