/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "function.hpp"

namespace qembed
{

/*! \brief Raw contents of a PLA file before conversion to a boolean_function. */
struct pla_document
{
  unsigned declared_inputs = 0;
  unsigned declared_outputs = 0;
  std::optional<unsigned> declared_terms;
  std::vector<std::pair<std::string, std::string>> rows;
  std::string name;
};

/*! \brief Parses a PLA file (.i/.o/.p, rows over {0,1,-} / {0,1}, .e/.end).
 *
 * Comment lines (#) are skipped; unknown dot-directives are skipped with a
 * warning.  Output don't-cares and .type variants other than fully
 * specified semantics are rejected.  Rows describe the exact output
 * pattern of every covered minterm.
 */
boolean_function parse_pla( std::istream& in, std::string const& name = "",
                            std::vector<std::string>* warnings = nullptr );
boolean_function parse_pla( std::string const& text, std::string const& name = "",
                            std::vector<std::string>* warnings = nullptr );

/*! \brief Parses a plain truth table: header "n m", then exactly 2^n rows "input output". */
boolean_function parse_tt( std::istream& in, std::string const& name = "" );
boolean_function parse_tt( std::string const& text, std::string const& name = "" );

/*! \brief Writes the canonical ascending-input-order truth table (n <= 20). */
std::string serialize_tt( boolean_function const& f );

} // namespace qembed
