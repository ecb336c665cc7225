/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bit_pattern.hpp"
#include "errors.hpp"

namespace qembed
{

enum class literal : std::uint8_t
{
  zero,
  one,
  dont_care
};

/*! \brief A PLA-style cube: input literals over {0, 1, -} plus one output pattern.
 *
 * Input literals are stored as two masks indexed by variable: `care` marks
 * bound positions, `value` holds their polarity.  Variable 0 is the
 * rightmost character of the text form.
 */
struct cube
{
  std::uint64_t care = 0;
  std::uint64_t value = 0;
  bit_pattern output;

  cube() = default;

  cube( std::uint64_t care_, std::uint64_t value_, bit_pattern output_ )
      : care( care_ ), value( value_ & care_ ), output( output_ ) {}

  /*! \brief Parses the input part from a {0,1,-} string, leftmost = highest variable. */
  static cube from_strings( std::string const& input, std::string const& output )
  {
    cube c;
    unsigned const n = static_cast<unsigned>( input.size() );
    if ( n < 1 || n > 64 )
      throw std::invalid_argument( "cube: input length must be in [1, 64]" );
    for ( unsigned i = 0; i < n; ++i )
    {
      char const ch = input[n - 1 - i];
      switch ( ch )
      {
      case '0':
        c.care |= std::uint64_t( 1 ) << i;
        break;
      case '1':
        c.care |= std::uint64_t( 1 ) << i;
        c.value |= std::uint64_t( 1 ) << i;
        break;
      case '-':
        break;
      default:
        throw std::invalid_argument( std::string( "cube: invalid literal '" ) + ch + "'" );
      }
    }
    c.output = bit_pattern::from_string( output );
    return c;
  }

  literal input_literal( unsigned i ) const
  {
    if ( !( ( care >> i ) & 1 ) )
      return literal::dont_care;
    return ( ( value >> i ) & 1 ) ? literal::one : literal::zero;
  }

  bool covers( std::uint64_t x ) const { return ( ( x ^ value ) & care ) == 0; }

  std::string input_string( unsigned n ) const
  {
    std::string s( n, '-' );
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( ( care >> i ) & 1 )
        s[n - 1 - i] = ( ( value >> i ) & 1 ) ? '1' : '0';
    }
    return s;
  }
};

/*! \brief A multi-output Boolean function f: B^n -> B^m given as an ordered cube list.
 *
 * Overlapping cubes are permitted as long as they agree on shared minterms;
 * `evaluate` returns the first match.  Full specification (every minterm
 * covered) is not enforced at construction but surfaces as
 * `uncovered_minterm` when the function is evaluated or counted.
 */
struct boolean_function
{
  unsigned n = 0;
  unsigned m = 0;
  std::vector<cube> cubes;
  std::string name;

  boolean_function() = default;

  boolean_function( unsigned n_, unsigned m_, std::vector<cube> cubes_, std::string name_ = "" )
      : n( n_ ), m( m_ ), cubes( std::move( cubes_ ) ), name( std::move( name_ ) )
  {
    if ( n < 1 || n > 64 || m < 1 || m > 64 )
      throw std::invalid_argument( "boolean_function: n and m must be in [1, 64]" );
    for ( auto const& c : cubes )
    {
      if ( c.output.width != m )
        throw std::invalid_argument( "boolean_function: cube output width mismatch" );
      if ( n < 64 && ( ( c.care >> n ) != 0 ) )
        throw std::invalid_argument( "boolean_function: cube literal beyond input count" );
    }
  }
};

/*! \brief Evaluates f at minterm x (first covering cube wins). */
bit_pattern evaluate( boolean_function const& f, bit_pattern const& x );

/*! \brief Evaluates f at x while checking that all covering cubes agree. */
bit_pattern evaluate_checked( boolean_function const& f, bit_pattern const& x );

/*! \brief Multiset of occurring output patterns p with exact minterm counts mu(p). */
struct output_histogram
{
  unsigned n = 0;
  unsigned m = 0;
  std::map<bit_pattern, std::uint64_t> entries;

  std::uint64_t total() const
  {
    std::uint64_t sum = 0;
    for ( auto const& [p, mu] : entries )
      sum += mu;
    return sum;
  }

  /*! \brief Largest multiplicity mu(p1). */
  std::uint64_t max_multiplicity() const
  {
    std::uint64_t best = 0;
    for ( auto const& [p, mu] : entries )
      best = std::max( best, mu );
    return best;
  }

  /*! \brief True iff sum of mu equals 2^n (fully specified source function). */
  bool is_complete() const
  {
    if ( n >= 64 )
      return false;
    return total() == ( std::uint64_t( 1 ) << n );
  }

  bool operator==( output_histogram const& other ) const = default;
};

} // namespace qembed
