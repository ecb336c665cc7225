/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include "function.hpp"

namespace qembed
{

/*! \brief Selects how per-pattern minterm counts are computed. */
struct count_backend
{
  enum class kind
  {
    enumerate, // ground-truth oracle, bounded by enumerate_limit
    cofactor   // recursive Shannon cofactoring on the cube list
  };

  kind variant = kind::cofactor;
  unsigned enumerate_limit = 20;
  bool implicit_zero = false; // uncovered minterms map to 0^m instead of erroring
  bool memoize = true;        // cofactor backend only; results must not depend on it
};

/*! \brief Tallies output patterns by evaluating all 2^n minterms.
 *
 * Every covering cube is checked per minterm, so conflicting cube lists are
 * rejected here rather than silently resolved first-match.
 */
output_histogram count_enumerate( boolean_function const& f, count_backend const& backend = { count_backend::kind::enumerate, 20, false, true } );

/*! \brief Tallies output patterns by recursive cofactoring, without materializing 2^n rows.
 *
 * Splits on the most-bound remaining variable, terminates when the cube list
 * is empty, a single cube, or all cubes are tautological over the free
 * variables, and memoizes on the canonicalized (sorted, deduplicated,
 * variable-compacted) cofactored cube list.  Uses an explicit work stack.
 * Bit-identical to count_enumerate wherever both apply.
 */
output_histogram count_cofactor( boolean_function const& f, count_backend const& backend = {} );

/*! \brief Dispatches on backend.variant. */
output_histogram histogram( boolean_function const& f, count_backend const& backend = {} );

} // namespace qembed
