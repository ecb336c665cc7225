/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <stdexcept>
#include <string>

namespace qembed
{

struct qembed_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/* function model / counting */
struct uncovered_minterm : qembed_error
{
  using qembed_error::qembed_error;
};
struct inconsistent_function : qembed_error
{
  using qembed_error::qembed_error;
};
struct width_overflow : qembed_error
{
  using qembed_error::qembed_error;
};
struct too_large : qembed_error
{
  using qembed_error::qembed_error;
};

/* parsing */
struct syntax_error : qembed_error
{
  using qembed_error::qembed_error;
};
struct unsupported_feature : qembed_error
{
  using qembed_error::qembed_error;
};
struct empty_function : qembed_error
{
  using qembed_error::qembed_error;
};
struct duplicate_row : qembed_error
{
  using qembed_error::qembed_error;
};
struct missing_row : qembed_error
{
  using qembed_error::qembed_error;
};

/* coder / embedder */
struct empty_histogram : qembed_error
{
  using qembed_error::qembed_error;
};
struct histogram_not_complete : qembed_error
{
  using qembed_error::qembed_error;
};
struct hypothesis_violated : qembed_error
{
  using qembed_error::qembed_error;
};
struct too_wide_for_completion : qembed_error
{
  using qembed_error::qembed_error;
};

} // namespace qembed
