/* qembed: coded reversible embeddings for quantum oracle design */

#include "qembed/function.hpp"

namespace qembed
{

bit_pattern evaluate( boolean_function const& f, bit_pattern const& x )
{
  if ( x.width != f.n )
    throw std::invalid_argument( "evaluate: input width " + std::to_string( x.width ) +
                                 " does not match n = " + std::to_string( f.n ) );
  for ( auto const& c : f.cubes )
  {
    if ( c.covers( x.bits ) )
      return c.output;
  }
  throw uncovered_minterm( "evaluate: no cube covers input " + x.to_string() +
                           ( f.name.empty() ? "" : " of " + f.name ) );
}

bit_pattern evaluate_checked( boolean_function const& f, bit_pattern const& x )
{
  if ( x.width != f.n )
    throw std::invalid_argument( "evaluate_checked: input width mismatch" );
  bit_pattern result;
  bool found = false;
  for ( auto const& c : f.cubes )
  {
    if ( !c.covers( x.bits ) )
      continue;
    if ( found && c.output != result )
      throw inconsistent_function( "conflicting cubes cover input " + x.to_string() + ": outputs " +
                                   result.to_string() + " and " + c.output.to_string() );
    result = c.output;
    found = true;
  }
  if ( !found )
    throw uncovered_minterm( "no cube covers input " + x.to_string() );
  return result;
}

} // namespace qembed
