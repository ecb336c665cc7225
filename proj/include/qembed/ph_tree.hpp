/* qembed: coded reversible embeddings for quantum oracle design */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "function.hpp"

namespace qembed
{

/*! \brief Node of a Pseudo-Huffman tree.
 *
 * Terminals carry an output pattern with its multiplicity and weigh
 * ceil(log2 mu); internal nodes have two children and weigh
 * max(w(left), w(right)) + 1.
 */
struct ph_node
{
  unsigned weight = 0;
  int left = -1;  // -1 for terminals
  int right = -1;
  bit_pattern pattern;    // terminals only
  std::uint64_t mu = 0;   // terminals only

  bool is_terminal() const { return left < 0; }
};

struct ph_tree
{
  std::vector<ph_node> nodes;
  int root = -1;
  std::map<bit_pattern, int> terminal_of;
};

/*! \brief Prefix-free variable-length code: pattern -> codeword plus garbage budget. */
struct code_book
{
  struct entry
  {
    std::string codeword;       // over {'0','1'}, root-to-terminal edge labels
    unsigned garbage_budget = 0; // total_width - codeword length

    bool operator==( entry const& ) const = default;
  };

  std::map<bit_pattern, entry> entries;
  unsigned total_width = 0; // weight of the tree root

  bool operator==( code_book const& ) const = default;
};

/*! \brief Builds the Pseudo-Huffman tree by greedily merging the two
 * minimum-weight available roots.
 *
 * Ties are broken by creation order: terminals are created in ascending
 * pattern value, merged nodes in merge order, and of the two chosen nodes
 * the lower-ordered one becomes the left child.
 */
ph_tree build_ph_tree( output_histogram const& h );

/*! \brief Assigns 0 to left edges and 1 to right edges; the codeword of a
 * pattern is the concatenated edge labels on the root-to-terminal path. */
code_book assign_codes( ph_tree const& t );

enum class root_bound
{
  exactly_n,
  n_plus_one
};

/*! \brief Predicts the root weight without building the tree: exactly n iff
 * sum of 2^ceil(log2 mu(p)) equals 2^n, equivalently iff every mu(p) is a
 * power of two.  Requires sum of mu = 2^n. */
root_bound root_weight_bound( output_histogram const& h );

/*! \brief Checks structural validity: arena shape, weights, terminal map,
 * and the pairwise child-weight ordering condition of a greedy-merge tree. */
bool validate_ph_tree( ph_tree const& t, std::string* why = nullptr );

/*! \brief Trace of replaying the greedy merge under the w -> 2^w transform. */
struct theorem_report
{
  bool passed = false;
  unsigned root_weight = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> w_total_trace; // sum over current root set, after each step
  std::string failure;
};

/*! \brief Replays tree construction for terminal assignments s_v (multiplicities
 * summing to 2^n), tracking the transformed weight total over the current
 * root set; checks it never exceeds 2^(n+1) and the final root weighs n or n+1. */
theorem_report verify_theorem_instance( std::vector<std::uint64_t> const& terminal_counts, unsigned n );

/*! \brief Indented text rendering of the tree. */
std::string tree_to_text( ph_tree const& t );

/*! \brief DOT-format rendering (node label = weight, terminal label = pattern/mu). */
std::string tree_to_dot( ph_tree const& t, std::string const& graph_name = "ph_tree" );

} // namespace qembed
