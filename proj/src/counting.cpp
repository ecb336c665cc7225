/* qembed: coded reversible embeddings for quantum oracle design */

#include "qembed/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <unordered_map>

namespace qembed
{

namespace
{

/* cube restricted to the compacted free-variable space of a subproblem */
struct wcube
{
  std::uint64_t care;
  std::uint64_t value;
  std::uint64_t out;

  auto operator<=>( wcube const& ) const = default;
};

using tally = std::unordered_map<std::uint64_t, std::uint64_t>; // output bits -> count

void add_tally( tally& dst, tally const& src )
{
  for ( auto const& [out, cnt] : src )
    dst[out] += cnt;
}

std::string make_key( std::vector<wcube> const& cubes, unsigned k )
{
  std::string key;
  key.reserve( cubes.size() * 24 + 4 );
  auto append_u64 = [&]( std::uint64_t v ) { key.append( reinterpret_cast<char const*>( &v ), 8 ); };
  append_u64( k );
  for ( auto const& c : cubes )
  {
    append_u64( c.care );
    append_u64( c.value );
    append_u64( c.out );
  }
  return key;
}

/* remove bit position v, shifting higher bits down */
std::uint64_t drop_bit( std::uint64_t x, unsigned v )
{
  std::uint64_t const low = ( std::uint64_t( 1 ) << v ) - 1;
  return ( x & low ) | ( ( x >> 1 ) & ~low );
}

struct frame
{
  std::vector<wcube> cubes;
  unsigned k = 0;
  int stage = 0;
  unsigned split_var = 0;
  std::string key;
  tally local;
};

class cofactor_engine
{
public:
  cofactor_engine( boolean_function const& f, count_backend const& backend )
      : f_( f ), backend_( backend ) {}

  tally run()
  {
    std::vector<wcube> root;
    root.reserve( f_.cubes.size() );
    for ( auto const& c : f_.cubes )
      root.push_back( { c.care, c.value, c.output.bits } );
    canonicalize( root );

    std::vector<frame> stack;
    frame first;
    first.cubes = std::move( root );
    first.k = f_.n;
    stack.push_back( std::move( first ) );

    tally result;
    while ( !stack.empty() )
    {
      frame& top = stack.back();
      if ( top.stage == 0 )
      {
        if ( resolve_terminal( top ) )
        {
          finish( stack, result, false );
          continue;
        }
        top.key = make_key( top.cubes, top.k );
        if ( backend_.memoize )
        {
          auto it = memo_.find( top.key );
          if ( it != memo_.end() )
          {
            top.local = it->second;
            finish( stack, result, false );
            continue;
          }
        }
        top.split_var = pick_split_var( top );
        top.stage = 1;
        push_child( stack, top, 0 );
      }
      else if ( top.stage == 1 )
      {
        top.stage = 2;
        push_child( stack, top, 1 );
      }
      else
      {
        finish( stack, result, backend_.memoize );
      }
    }
    return result;
  }

private:
  bool resolve_terminal( frame& fr )
  {
    std::uint64_t const space = std::uint64_t( 1 ) << fr.k;
    if ( fr.cubes.empty() )
    {
      if ( !backend_.implicit_zero )
        throw uncovered_minterm( "count_cofactor: " + std::to_string( space ) +
                                 " minterm(s) covered by no cube" +
                                 ( f_.name.empty() ? "" : " in " + f_.name ) );
      fr.local[0] += space;
      return true;
    }
    bool all_tautological = true;
    bool all_same_out = true;
    for ( auto const& c : fr.cubes )
    {
      all_tautological = all_tautological && c.care == 0;
      all_same_out = all_same_out && c.out == fr.cubes.front().out;
    }
    if ( all_tautological )
    {
      if ( !all_same_out )
        throw inconsistent_function( "count_cofactor: overlapping cubes disagree on a shared minterm" );
      fr.local[fr.cubes.front().out] += space;
      return true;
    }
    if ( fr.cubes.size() == 1 )
    {
      wcube const& c = fr.cubes.front();
      std::uint64_t const covered = std::uint64_t( 1 ) << ( fr.k - std::popcount( c.care ) );
      fr.local[c.out] += covered;
      if ( covered < space )
      {
        if ( !backend_.implicit_zero )
          throw uncovered_minterm( "count_cofactor: " + std::to_string( space - covered ) +
                                   " minterm(s) covered by no cube" );
        fr.local[0] += space - covered;
      }
      return true;
    }
    return false;
  }

  unsigned pick_split_var( frame const& fr ) const
  {
    unsigned best = 0;
    std::size_t best_bound = 0;
    for ( unsigned v = 0; v < fr.k; ++v )
    {
      std::size_t bound = 0;
      for ( auto const& c : fr.cubes )
        bound += ( c.care >> v ) & 1;
      if ( bound > best_bound )
      {
        best_bound = bound;
        best = v;
      }
    }
    return best;
  }

  void push_child( std::vector<frame>& stack, frame const& parent, int polarity )
  {
    unsigned const v = parent.split_var;
    std::vector<wcube> child;
    child.reserve( parent.cubes.size() );
    for ( auto const& c : parent.cubes )
    {
      if ( ( ( c.care >> v ) & 1 ) && static_cast<int>( ( c.value >> v ) & 1 ) != polarity )
        continue;
      child.push_back( { drop_bit( c.care, v ), drop_bit( c.value, v ), c.out } );
    }
    canonicalize( child );
    frame next;
    next.cubes = std::move( child );
    next.k = parent.k - 1;
    stack.push_back( std::move( next ) );
  }

  void finish( std::vector<frame>& stack, tally& result, bool store_memo )
  {
    frame done = std::move( stack.back() );
    stack.pop_back();
    if ( store_memo )
      memo_.emplace( std::move( done.key ), done.local );
    if ( stack.empty() )
      result = std::move( done.local );
    else
      add_tally( stack.back().local, done.local );
  }

  static void canonicalize( std::vector<wcube>& cubes )
  {
    std::sort( cubes.begin(), cubes.end() );
    cubes.erase( std::unique( cubes.begin(), cubes.end() ), cubes.end() );
  }

  boolean_function const& f_;
  count_backend const& backend_;
  std::unordered_map<std::string, tally> memo_;
};

output_histogram to_histogram( tally const& t, boolean_function const& f, bool implicit_zero )
{
  output_histogram h;
  h.n = f.n;
  h.m = f.m;
  for ( auto const& [out, cnt] : t )
  {
    if ( cnt > 0 )
      h.entries[bit_pattern( out, f.m )] += cnt;
  }
  // zero-count entries can only arise from implicit-zero bookkeeping
  (void)implicit_zero;
  return h;
}

void check_complete( output_histogram const& h )
{
  if ( !h.is_complete() )
    throw inconsistent_function( "histogram total " + std::to_string( h.total() ) +
                                 " does not equal 2^" + std::to_string( h.n ) );
}

} // namespace

output_histogram count_enumerate( boolean_function const& f, count_backend const& backend )
{
  if ( f.n > 63 )
    throw width_overflow( "count_enumerate: n > 63 unsupported" );
  if ( f.n > backend.enumerate_limit )
    throw too_large( "count_enumerate: n = " + std::to_string( f.n ) + " exceeds enumerate limit " +
                     std::to_string( backend.enumerate_limit ) );
  output_histogram h;
  h.n = f.n;
  h.m = f.m;
  std::uint64_t const space = std::uint64_t( 1 ) << f.n;
  for ( std::uint64_t x = 0; x < space; ++x )
  {
    std::uint64_t out = 0;
    bool found = false;
    for ( auto const& c : f.cubes )
    {
      if ( !c.covers( x ) )
        continue;
      if ( found && c.output.bits != out )
        throw inconsistent_function( "count_enumerate: conflicting cubes cover input " +
                                     bit_pattern( x, f.n ).to_string() );
      out = c.output.bits;
      found = true;
    }
    if ( !found )
    {
      if ( !backend.implicit_zero )
        throw uncovered_minterm( "count_enumerate: no cube covers input " +
                                 bit_pattern( x, f.n ).to_string() );
      out = 0;
    }
    ++h.entries[bit_pattern( out, f.m )];
  }
  check_complete( h );
  return h;
}

output_histogram count_cofactor( boolean_function const& f, count_backend const& backend )
{
  if ( f.n > 63 )
    throw width_overflow( "count_cofactor: n > 63 unsupported" );
  cofactor_engine engine( f, backend );
  auto h = to_histogram( engine.run(), f, backend.implicit_zero );
  check_complete( h );
  return h;
}

output_histogram histogram( boolean_function const& f, count_backend const& backend )
{
  if ( backend.variant == count_backend::kind::enumerate )
    return count_enumerate( f, backend );
  return count_cofactor( f, backend );
}

} // namespace qembed
