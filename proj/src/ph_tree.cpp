/* qembed: coded reversible embeddings for quantum oracle design */

#include "qembed/ph_tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace qembed
{

namespace
{

std::uint64_t pow2( unsigned w )
{
  return std::uint64_t( 1 ) << w;
}

} // namespace

ph_tree build_ph_tree( output_histogram const& h )
{
  if ( h.entries.empty() )
    throw empty_histogram( "build_ph_tree: histogram has no entries" );

  ph_tree t;
  // terminals in ascending pattern value; creation order doubles as tie-break order
  for ( auto const& [p, mu] : h.entries )
  {
    ph_node node;
    node.weight = ceil_log2( mu );
    node.pattern = p;
    node.mu = mu;
    t.terminal_of[p] = static_cast<int>( t.nodes.size() );
    t.nodes.push_back( node );
  }

  // min-heap on (weight, creation id); the lower-ordered of the two chosen
  // nodes becomes the left child
  using item = std::pair<unsigned, int>;
  std::priority_queue<item, std::vector<item>, std::greater<item>> heap;
  for ( int i = 0; i < static_cast<int>( t.nodes.size() ); ++i )
    heap.push( { t.nodes[i].weight, i } );

  while ( heap.size() > 1 )
  {
    auto const [wa, a] = heap.top();
    heap.pop();
    auto const [wb, b] = heap.top();
    heap.pop();
    ph_node merged;
    merged.weight = std::max( wa, wb ) + 1;
    merged.left = a;
    merged.right = b;
    int const id = static_cast<int>( t.nodes.size() );
    t.nodes.push_back( merged );
    heap.push( { merged.weight, id } );
  }
  t.root = heap.top().second;
  return t;
}

code_book assign_codes( ph_tree const& t )
{
  if ( t.root < 0 )
    throw empty_histogram( "assign_codes: tree has no root" );

  code_book cb;
  cb.total_width = t.nodes[t.root].weight;

  // iterative DFS; 0 on left edges, 1 on right edges
  std::vector<std::pair<int, std::string>> stack{ { t.root, "" } };
  while ( !stack.empty() )
  {
    auto [id, path] = std::move( stack.back() );
    stack.pop_back();
    ph_node const& node = t.nodes[id];
    if ( node.is_terminal() )
    {
      cb.entries[node.pattern] = { path, cb.total_width - static_cast<unsigned>( path.size() ) };
      continue;
    }
    stack.push_back( { node.right, path + '1' } );
    stack.push_back( { node.left, path + '0' } );
  }
  return cb;
}

root_bound root_weight_bound( output_histogram const& h )
{
  if ( h.entries.empty() )
    throw empty_histogram( "root_weight_bound: histogram has no entries" );
  if ( !h.is_complete() )
    throw histogram_not_complete( "root_weight_bound: sum of multiplicities is " +
                                  std::to_string( h.total() ) + ", expected 2^" +
                                  std::to_string( h.n ) );
  std::uint64_t sum = 0;
  for ( auto const& [p, mu] : h.entries )
    sum += pow2( ceil_log2( mu ) );
  return sum == pow2( h.n ) ? root_bound::exactly_n : root_bound::n_plus_one;
}

bool validate_ph_tree( ph_tree const& t, std::string* why )
{
  auto fail = [&]( std::string msg ) {
    if ( why )
      *why = std::move( msg );
    return false;
  };
  if ( t.root < 0 || t.root >= static_cast<int>( t.nodes.size() ) )
    return fail( "invalid root index" );

  std::vector<int> parent_count( t.nodes.size(), 0 );
  std::size_t terminal_count = 0;
  for ( std::size_t i = 0; i < t.nodes.size(); ++i )
  {
    ph_node const& node = t.nodes[i];
    if ( node.is_terminal() )
    {
      ++terminal_count;
      if ( node.mu == 0 )
        return fail( "terminal with zero multiplicity" );
      if ( node.weight != ceil_log2( node.mu ) )
        return fail( "terminal weight is not ceil(log2 mu)" );
      auto it = t.terminal_of.find( node.pattern );
      if ( it == t.terminal_of.end() || it->second != static_cast<int>( i ) )
        return fail( "terminal map does not point back at terminal" );
    }
    else
    {
      if ( node.right < 0 || node.left >= static_cast<int>( t.nodes.size() ) ||
           node.right >= static_cast<int>( t.nodes.size() ) )
        return fail( "internal node with invalid children" );
      ++parent_count[node.left];
      ++parent_count[node.right];
      unsigned const wl = t.nodes[node.left].weight;
      unsigned const wr = t.nodes[node.right].weight;
      if ( node.weight != std::max( wl, wr ) + 1 )
        return fail( "internal weight is not max(children) + 1" );
    }
  }
  if ( terminal_count != t.terminal_of.size() )
    return fail( "terminal map size mismatch" );
  for ( std::size_t i = 0; i < t.nodes.size(); ++i )
  {
    int const expected = static_cast<int>( i ) == t.root ? 0 : 1;
    if ( parent_count[i] != expected )
      return fail( "node " + std::to_string( i ) + " has " + std::to_string( parent_count[i] ) +
                   " parents" );
  }

  // pairwise child-weight ordering: for internal v1 with children weights
  // a1 <= b1 and any other internal v2, both of v2's child weights lie at or
  // below a1, or at or above b1
  for ( std::size_t i = 0; i < t.nodes.size(); ++i )
  {
    if ( t.nodes[i].is_terminal() )
      continue;
    unsigned a1 = t.nodes[t.nodes[i].left].weight;
    unsigned b1 = t.nodes[t.nodes[i].right].weight;
    if ( a1 > b1 )
      std::swap( a1, b1 );
    for ( std::size_t j = 0; j < t.nodes.size(); ++j )
    {
      if ( j == i || t.nodes[j].is_terminal() )
        continue;
      unsigned const a2 = t.nodes[t.nodes[j].left].weight;
      unsigned const b2 = t.nodes[t.nodes[j].right].weight;
      bool const below = a2 <= a1 && b2 <= a1;
      bool const above = a2 >= b1 && b2 >= b1;
      if ( !below && !above )
        return fail( "child-weight ordering violated between internal nodes " + std::to_string( i ) +
                     " and " + std::to_string( j ) );
    }
  }
  return true;
}

theorem_report verify_theorem_instance( std::vector<std::uint64_t> const& terminal_counts, unsigned n )
{
  theorem_report report;
  report.n = n;
  if ( n > 62 )
  {
    report.failure = "n > 62 unsupported";
    return report;
  }
  if ( terminal_counts.empty() )
    throw hypothesis_violated( "verify_theorem_instance: no terminal counts" );
  std::uint64_t sum = 0;
  for ( auto s : terminal_counts )
  {
    if ( s == 0 )
      throw hypothesis_violated( "verify_theorem_instance: zero count violates 2^(w-1) < s_v" );
    sum += s;
  }
  if ( sum != pow2( n ) )
  {
    throw hypothesis_violated( "verify_theorem_instance: counts sum to " + std::to_string( sum ) +
                               ", expected 2^" + std::to_string( n ) );
  }

  // replay the greedy merge under w -> 2^w; the merge rule becomes
  // 2 * max(w(a), w(b))
  using item = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<item, std::vector<item>, std::greater<item>> heap;
  std::uint64_t w_total = 0;
  for ( std::size_t i = 0; i < terminal_counts.size(); ++i )
  {
    std::uint64_t const tw = pow2( ceil_log2( terminal_counts[i] ) );
    heap.push( { tw, i } );
    w_total += tw;
  }
  report.w_total_trace.push_back( w_total );
  std::uint64_t const limit = pow2( n + 1 );
  std::size_t next_id = terminal_counts.size();
  while ( heap.size() > 1 )
  {
    auto const [wa, ia] = heap.top();
    heap.pop();
    auto const [wb, ib] = heap.top();
    heap.pop();
    std::uint64_t const wc = 2 * std::max( wa, wb );
    w_total += wc - wa - wb;
    report.w_total_trace.push_back( w_total );
    if ( w_total > limit )
    {
      report.failure = "w_total exceeded 2^(n+1) after merging nodes " + std::to_string( ia ) +
                       " and " + std::to_string( ib );
      return report;
    }
    heap.push( { wc, next_id++ } );
  }
  std::uint64_t const root = heap.top().first;
  if ( root != pow2( n ) && root != pow2( n + 1 ) )
  {
    report.failure = "root weight 2^w = " + std::to_string( root ) + " is neither 2^n nor 2^(n+1)";
    return report;
  }
  report.root_weight = root == pow2( n ) ? n : n + 1;
  report.passed = true;
  return report;
}

namespace
{

void render_text( ph_tree const& t, int id, unsigned depth, std::ostringstream& out )
{
  ph_node const& node = t.nodes[id];
  out << std::string( 2 * depth, ' ' );
  if ( node.is_terminal() )
    out << "[" << node.weight << "] " << node.pattern.to_string() << " (mu=" << node.mu << ")\n";
  else
  {
    out << "[" << node.weight << "]\n";
    render_text( t, node.left, depth + 1, out );
    render_text( t, node.right, depth + 1, out );
  }
}

} // namespace

std::string tree_to_text( ph_tree const& t )
{
  std::ostringstream out;
  if ( t.root >= 0 )
    render_text( t, t.root, 0, out );
  return out.str();
}

std::string tree_to_dot( ph_tree const& t, std::string const& graph_name )
{
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  node [shape=circle];\n";
  for ( std::size_t i = 0; i < t.nodes.size(); ++i )
  {
    ph_node const& node = t.nodes[i];
    if ( node.is_terminal() )
      out << "  n" << i << " [shape=box, label=\"" << node.weight << "\\n"
          << node.pattern.to_string() << "/" << node.mu << "\"];\n";
    else
      out << "  n" << i << " [label=\"" << node.weight << "\"];\n";
  }
  for ( std::size_t i = 0; i < t.nodes.size(); ++i )
  {
    ph_node const& node = t.nodes[i];
    if ( node.is_terminal() )
      continue;
    out << "  n" << i << " -> n" << node.left << " [label=\"0\"];\n";
    out << "  n" << i << " -> n" << node.right << " [label=\"1\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace qembed
