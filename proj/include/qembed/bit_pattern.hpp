/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qembed
{

/*! \brief A fixed-width bit vector of at most 64 bits.
 *
 * Bit 0 is the least-significant (rightmost) position; the string form
 * prints the most-significant bit first.  All bits above `width` are kept
 * zero in the stored word.
 */
struct bit_pattern
{
  std::uint64_t bits = 0;
  unsigned width = 0;

  bit_pattern() = default;

  bit_pattern( std::uint64_t bits_, unsigned width_ ) : bits( bits_ ), width( width_ )
  {
    if ( width_ < 1 || width_ > 64 )
      throw std::invalid_argument( "bit_pattern: width must be in [1, 64]" );
    if ( width_ < 64 )
      bits &= ( std::uint64_t( 1 ) << width_ ) - 1;
  }

  bool bit( unsigned i ) const { return ( bits >> i ) & 1; }

  auto operator<=>( bit_pattern const& other ) const = default;

  std::string to_string() const
  {
    std::string s( width, '0' );
    for ( unsigned i = 0; i < width; ++i )
      s[width - 1 - i] = bit( i ) ? '1' : '0';
    return s;
  }

  static bit_pattern from_string( std::string const& s )
  {
    if ( s.empty() || s.size() > 64 )
      throw std::invalid_argument( "bit_pattern: string length must be in [1, 64]" );
    std::uint64_t v = 0;
    for ( char c : s )
    {
      if ( c != '0' && c != '1' )
        throw std::invalid_argument( "bit_pattern: invalid character in \"" + s + "\"" );
      v = ( v << 1 ) | ( c == '1' ? 1 : 0 );
    }
    return bit_pattern( v, static_cast<unsigned>( s.size() ) );
  }
};

/*! \brief Ceiling of log2 for positive integers, with ceil_log2(1) = 0. */
inline unsigned ceil_log2( std::uint64_t x )
{
  if ( x == 0 )
    throw std::invalid_argument( "ceil_log2: argument must be positive" );
  return static_cast<unsigned>( std::bit_width( x - 1 ) );
}

} // namespace qembed

template<>
struct std::hash<qembed::bit_pattern>
{
  std::size_t operator()( qembed::bit_pattern const& p ) const noexcept
  {
    return std::hash<std::uint64_t>{}( p.bits * 0x9e3779b97f4a7c15ULL + p.width );
  }
};
