/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "function.hpp"
#include "ph_tree.hpp"

namespace qembed
{

enum class embedding_scheme
{
  bennett,
  minimal,
  coded
};

std::string to_string( embedding_scheme s );

/*! \brief A completed reversible embedding: a bijection on B^width.
 *
 * Word layout: ancilla inputs occupy the highest input bits (fixed to 0 to
 * select the embedded function), the original inputs the low n bits.  On
 * the output side the primary field sits in the low bits for Bennett and
 * minimal embeddings; coded embeddings place the codeword at the top of the
 * word with the garbage field below it.
 *
 * Bennett embeddings are rule-based, (x, g) -> (x, g xor f(x)), and work at
 * any n + m; minimal and coded embeddings carry an explicit permutation
 * table and require width <= 20.
 */
struct embedding_spec
{
  embedding_scheme scheme = embedding_scheme::bennett;
  unsigned width = 0;
  unsigned ancilla_inputs = 0;
  boolean_function source;                   // the embedded function
  std::vector<std::uint64_t> table;          // 2^width entries when tabled
  bool rule_based = false;
  code_book codebook;                        // coded only
  std::vector<unsigned> primary_output_positions;

  /*! \brief Applies the bijection to one width-bit input word. */
  std::uint64_t apply( std::uint64_t input ) const;
};

/*! \brief Bennett width: n + m. */
unsigned width_bennett( boolean_function const& f );

/*! \brief Minimal classical embedding width: max(n, m + ceil(log2 mu(p1))). */
unsigned width_minimal( boolean_function const& f, output_histogram const& h );

/*! \brief Coded embedding width: n or n + 1, decided by root_weight_bound. */
unsigned width_encoded( boolean_function const& f, output_histogram const& h );

/*! \brief Rule-based Bennett embedding (x, g) -> (x, g xor f(x)). */
embedding_spec embed_bennett( boolean_function const& f );

/*! \brief Minimal-width embedding with deterministic garbage completion.
 *
 * Within each output pattern, preimages in ascending input order receive
 * garbage values 0, 1, 2, ...; unused output words then fill the remaining
 * (ancilla != 0) input words in ascending order.
 */
embedding_spec embed_minimal( boolean_function const& f, output_histogram const& h );

/*! \brief Coded embedding: each input maps to code(f(x)) followed by a
 * garbage field, completed to a bijection by the same ascending-order rule. */
embedding_spec embed_coded( boolean_function const& f, output_histogram const& h, code_book const& cb );

struct verification_report
{
  bool pass = false;
  std::string detail; // first counterexample, or empty
};

/*! \brief Checks bijectivity, that the ancilla-0 restriction reproduces f
 * (or code of f for coded specs), and for coded specs that decoding the
 * projected output recovers f pointwise.  Requires width <= 20. */
verification_report verify_embedding( embedding_spec const& spec, boolean_function const& f );

/*! \brief Serializes a spec as an annotated truth table: a header line with
 * scheme, width, ancilla count, and (for coded) `code pattern=codeword`
 * lines, followed by the 2^width mapping rows. */
std::string serialize_embedding( embedding_spec const& spec );

} // namespace qembed
