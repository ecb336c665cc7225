/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <string>
#include <vector>

#include "counting.hpp"

namespace qembed
{

/*! \brief Qubit counts for one function under the three embedding schemes. */
struct width_report
{
  std::string name;
  unsigned n = 0;
  unsigned m = 0;
  unsigned bennett = 0;
  unsigned minimal = 0;
  unsigned encoded = 0;
  bool reversible = false; // n == m and every pattern occurs exactly once

  bool operator==( width_report const& ) const = default;
};

enum class input_format
{
  automatic, // by extension: .pla / .tt
  pla,
  tt
};

struct run_config
{
  std::vector<std::string> inputs;
  input_format format = input_format::automatic;
  count_backend backend = {};
  bool skip_reversible = false;
};

/*! \brief Parses one file per cfg and returns its width report. */
width_report analyze_file( std::string const& path, run_config const& cfg );

/*! \brief Loads a function from a file (format resolved per cfg). */
boolean_function load_function( std::string const& path, run_config const& cfg );

/*! \brief Expands directories, resolves formats, sorts paths, and analyzes
 * the batch with up to QEMBED_THREADS workers; row order is by sorted path
 * regardless of parallelism. */
std::vector<width_report> analyze_batch( run_config const& cfg, std::vector<std::string>* errors = nullptr );

/*! \brief CSV table `name,n,m,bennett,minimal,encoded` plus a trailing
 * `# avg_reduction_vs_minimal=<percent>` comment, functions weighted equally. */
std::string report_csv( std::vector<width_report> const& reports );

/*! \brief Mean over functions of (minimal - encoded) / minimal, in percent. */
double average_reduction_percent( std::vector<width_report> const& reports );

} // namespace qembed
