#include "fnclass/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fnclass/separability.hpp"

namespace fnclass
{

namespace
{

std::atomic<int> g_ordering_limit{ 8 };

void require_reduced( const OrderedDiagram& d )
{
  if ( !d.reduced() )
    throw std::invalid_argument( "operation requires a reduced diagram" );
}

std::string join_digits( const std::vector<int>& xs, int max_single )
{
  const bool compact = std::all_of( xs.begin(), xs.end(), [max_single]( int x ) { return x <= max_single; } );
  std::string s;
  for ( std::size_t i = 0; i < xs.size(); ++i )
  {
    if ( i && !compact )
      s += ',';
    s += std::to_string( xs[i] );
  }
  return s;
}

/// Orderings start with the essential variables in the given order, inessential ones appended.
std::vector<int> complete_ordering( const KFunction& f, const std::vector<int>& head )
{
  std::vector<int> out = head;
  for ( int i = 1; i <= f.n(); ++i )
    if ( std::find( head.begin(), head.end(), i ) == head.end() )
      out.push_back( i );
  return out;
}

} // namespace

/* Implementation */

std::string Implementation::var_word() const
{
  return join_digits( vars, 9 );
}

std::string Implementation::const_word() const
{
  std::vector<int> xs( consts.begin(), consts.end() );
  xs.push_back( output );
  return join_digits( xs, 9 );
}

std::string Implementation::to_string() const
{
  return "(" + var_word() + "," + const_word() + ")";
}

/* OrderedDiagram */

std::size_t OrderedDiagram::internal_count() const
{
  return std::count_if( nodes_.begin(), nodes_.end(), []( const auto& nd ) { return !nd.is_terminal(); } );
}

std::size_t OrderedDiagram::terminal_count() const
{
  return nodes_.size() - internal_count();
}

struct DiagramBuilder
{
  static OrderedDiagram make( int k, int n, std::vector<int> ordering, std::vector<DiagramNode> nodes, bool reduced )
  {
    OrderedDiagram d;
    d.k_ = k;
    d.n_ = n;
    d.ordering_ = std::move( ordering );
    d.nodes_ = std::move( nodes );
    d.reduced_ = reduced;
    return d;
  }
};

OrderedDiagram build_odt( const KFunction& f, std::vector<int> ordering )
{
  auto sorted = ordering;
  std::sort( sorted.begin(), sorted.end() );
  std::vector<int> expected( f.n() );
  std::iota( expected.begin(), expected.end(), 1 );
  if ( sorted != expected )
    throw std::invalid_argument( "ordering must be a permutation of 1.." + std::to_string( f.n() ) );

  std::vector<DiagramNode> nodes;
  std::vector<Value> point( f.n(), 0 );
  auto grow = [&]( auto&& self, std::size_t level ) -> std::uint32_t {
    const auto id = static_cast<std::uint32_t>( nodes.size() );
    nodes.emplace_back();
    if ( level == ordering.size() )
    {
      nodes[id].value = eval( f, point );
      return id;
    }
    const int var = ordering[level];
    std::vector<std::uint32_t> children;
    for ( int c = 0; c < f.k(); ++c )
    {
      point[var - 1] = static_cast<Value>( c );
      children.push_back( self( self, level + 1 ) );
    }
    point[var - 1] = 0;
    nodes[id].var = var;
    nodes[id].children = std::move( children );
    return id;
  };
  grow( grow, 0 );
  return DiagramBuilder::make( f.k(), f.n(), std::move( ordering ), std::move( nodes ), false );
}

OrderedDiagram reduce( const OrderedDiagram& d, const ReduceOptions& options )
{
  // Bottom-up into a unique table, then re-emit in preorder.
  std::vector<DiagramNode> pool;
  std::map<std::pair<int, std::vector<std::uint32_t>>, std::uint32_t> unique;
  std::vector<std::int64_t> memo( d.nodes().size(), -1 );

  auto intern = [&]( DiagramNode node ) -> std::uint32_t {
    std::pair<int, std::vector<std::uint32_t>> key{ node.var, node.children };
    if ( node.is_terminal() )
      key.second = { node.value };
    if ( options.merge_isomorphic )
    {
      if ( auto it = unique.find( key ); it != unique.end() )
        return it->second;
    }
    const auto id = static_cast<std::uint32_t>( pool.size() );
    pool.push_back( std::move( node ) );
    unique.emplace( std::move( key ), id );
    return id;
  };

  auto walk = [&]( auto&& self, std::uint32_t u ) -> std::uint32_t {
    if ( memo[u] >= 0 )
      return static_cast<std::uint32_t>( memo[u] );
    const auto& node = d.nodes()[u];
    std::uint32_t result;
    if ( node.is_terminal() )
    {
      result = intern( node );
    }
    else
    {
      DiagramNode copy;
      copy.var = node.var;
      for ( auto c : node.children )
        copy.children.push_back( self( self, c ) );
      const bool redundant = std::all_of( copy.children.begin(), copy.children.end(),
                                          [&]( auto c ) { return c == copy.children.front(); } );
      result = ( options.remove_redundant && redundant ) ? copy.children.front() : intern( std::move( copy ) );
    }
    memo[u] = result;
    return result;
  };
  const auto pool_root = walk( walk, d.root() );

  std::vector<DiagramNode> out;
  std::vector<std::int64_t> renumber( pool.size(), -1 );
  auto emit = [&]( auto&& self, std::uint32_t p ) -> std::uint32_t {
    if ( renumber[p] >= 0 )
      return static_cast<std::uint32_t>( renumber[p] );
    const auto id = static_cast<std::uint32_t>( out.size() );
    renumber[p] = id;
    out.push_back( pool[p] );
    std::vector<std::uint32_t> children;
    for ( auto c : pool[p].children )
      children.push_back( self( self, c ) );
    out[id].children = std::move( children );
    return id;
  };
  emit( emit, pool_root );
  return DiagramBuilder::make( d.k(), d.n(), d.ordering(), std::move( out ), true );
}

OrderedDiagram build_odd( const KFunction& f, std::vector<int> ordering )
{
  return reduce( build_odt( f, std::move( ordering ) ) );
}

Value evaluate( const OrderedDiagram& d, std::span<const Value> point )
{
  if ( point.size() != static_cast<std::size_t>( d.n() ) )
    throw std::invalid_argument( "point length does not match diagram arity" );
  auto u = d.root();
  while ( !d.nodes()[u].is_terminal() )
  {
    const auto& node = d.nodes()[u];
    u = node.children.at( point[node.var - 1] );
  }
  return d.nodes()[u].value;
}

VarSet diagram_labels( const OrderedDiagram& d )
{
  require_reduced( d );
  VarSet s;
  for ( const auto& node : d.nodes() )
    if ( !node.is_terminal() )
      s.insert( node.var );
  return s;
}

std::vector<Implementation> implementations_of( const OrderedDiagram& d )
{
  require_reduced( d );
  std::vector<Implementation> out;
  Implementation current;
  auto walk = [&]( auto&& self, std::uint32_t u ) -> void {
    const auto& node = d.nodes()[u];
    if ( node.is_terminal() )
    {
      current.output = node.value;
      out.push_back( current );
      return;
    }
    current.vars.push_back( node.var );
    current.consts.push_back( 0 );
    for ( std::size_t c = 0; c < node.children.size(); ++c )
    {
      current.consts.back() = static_cast<Value>( c );
      self( self, node.children[c] );
    }
    current.vars.pop_back();
    current.consts.pop_back();
  };
  walk( walk, d.root() );
  std::sort( out.begin(), out.end() );
  return out;
}

std::uint64_t path_count( const OrderedDiagram& d )
{
  std::vector<std::uint64_t> memo( d.nodes().size(), 0 );
  auto walk = [&]( auto&& self, std::uint32_t u ) -> std::uint64_t {
    const auto& node = d.nodes()[u];
    if ( node.is_terminal() )
      return 1;
    if ( memo[u] )
      return memo[u];
    std::uint64_t total = 0;
    for ( auto c : node.children )
      total += self( self, c );
    return memo[u] = total;
  };
  return walk( walk, d.root() );
}

int depth( const OrderedDiagram& d )
{
  std::vector<int> memo( d.nodes().size(), -1 );
  auto walk = [&]( auto&& self, std::uint32_t u ) -> int {
    const auto& node = d.nodes()[u];
    if ( node.is_terminal() )
      return 0;
    if ( memo[u] >= 0 )
      return memo[u];
    int longest = 0;
    for ( auto c : node.children )
      longest = std::max( longest, self( self, c ) + 1 );
    return memo[u] = longest;
  };
  return walk( walk, d.root() ) + 1;
}

int ordering_limit()
{
  return g_ordering_limit.load();
}

void set_ordering_limit( int max_ess )
{
  g_ordering_limit.store( max_ess );
}

std::vector<Implementation> implementations( const KFunction& f )
{
  auto e = essential_set( f ).members();
  if ( static_cast<int>( e.size() ) > ordering_limit() )
    throw budget_exceeded( "ess(f) = " + std::to_string( e.size() ) + " exceeds the ordering limit of " +
                           std::to_string( ordering_limit() ) );
  std::vector<Implementation> all;
  do
  {
    auto d = build_odd( f, complete_ordering( f, e ) );
    auto imps = implementations_of( d );
    all.insert( all.end(), imps.begin(), imps.end() );
  } while ( std::next_permutation( e.begin(), e.end() ) );
  std::sort( all.begin(), all.end() );
  all.erase( std::unique( all.begin(), all.end() ), all.end() );
  return all;
}

namespace
{

std::uint64_t imp_recursion( const KFunction& f, std::unordered_map<KFunction, std::uint64_t, KFunctionHash>& memo )
{
  if ( auto it = memo.find( f ); it != memo.end() )
    return it->second;
  const auto e = essential_set( f );
  std::uint64_t total = 0;
  if ( e.empty() )
    total = 1;
  else if ( e.size() == 1 )
    total = static_cast<std::uint64_t>( f.k() );
  else
    for ( int i : e.members() )
      for ( int c = 0; c < f.k(); ++c )
        total += imp_recursion( cofactor( f, i, static_cast<Value>( c ) ), memo );
  memo.emplace( f, total );
  return total;
}

} // namespace

std::uint64_t imp_recursive( const KFunction& f )
{
  std::unordered_map<KFunction, std::uint64_t, KFunctionHash> memo;
  return imp_recursion( f, memo );
}

std::uint64_t imp_count( const KFunction& f )
{
  if ( f.k() == 2 )
    return imp_recursive( f );
  return implementations( f ).size();
}

std::vector<int> find_full_depth_ordering( const KFunction& f )
{
  const auto e = essential_set( f );
  if ( e.empty() )
    throw std::invalid_argument( "a full-depth ordering needs at least one essential variable" );
  const int target = e.size() + 1;

  // Guided: a chain from a single-variable subfunction up to f fixes the other
  // essential variables one at a time, each keeping the last variable alive.
  for ( int x : e.members() )
  {
    const auto rest = e - VarSet{ x };
    const auto count = assignment_count( f.k(), rest );
    for ( std::uint64_t code = 0; code < count; ++code )
    {
      const auto g = restrict_set( f, rest, code );
      if ( essential_set( g ) != VarSet{ x } )
        continue;
      const auto chain = subfunction_chain( f, g );
      std::vector<int> head;
      for ( std::size_t i = chain.size() - 1; i >= 1; --i )
        head.push_back( ( essential_set( chain[i] ) - essential_set( chain[i - 1] ) ).members().front() );
      head.push_back( x );
      auto ordering = complete_ordering( f, head );
      if ( depth( build_odd( f, ordering ) ) == target )
        return ordering;
      break;
    }
  }

  auto members = e.members();
  do
  {
    auto ordering = complete_ordering( f, members );
    if ( depth( build_odd( f, ordering ) ) == target )
      return ordering;
  } while ( std::next_permutation( members.begin(), members.end() ) );
  throw std::logic_error( "no ordering reaches full depth" );
}

std::vector<int> find_shallow_ordering( const KFunction& f, VarSet M )
{
  const auto e = essential_set( f );
  if ( M.empty() || !M.is_subset_of( e ) || M == e )
    throw std::invalid_argument( M.to_string() + " must be a non-empty proper subset of Ess(f)" );
  if ( is_separable( f, M ) )
    throw std::invalid_argument( M.to_string() + " is separable" );
  // fixing a whole distributive set first blocks M on every path; leading
  // with the set's s-system member alone is not enough in general
  const auto dis = distributive_sets( M, f );
  const auto beta = s_systems( dis ).front();
  const VarSet J = dis.sets().front();
  const int head = ( J & beta ).members().front();
  std::vector<int> order{ head };
  for ( int v : ( J - VarSet{ head } ).members() )
    order.push_back( v );
  for ( int v : ( e - J ).members() )
    order.push_back( v );
  return complete_ordering( f, order );
}

std::string to_dot( const OrderedDiagram& d, const std::string& name )
{
  std::ostringstream os;
  os << "digraph ODD {\n";
  os << "  fn [label=\"" << name << "\", shape=plaintext];\n";
  for ( std::size_t u = 0; u < d.nodes().size(); ++u )
  {
    const auto& node = d.nodes()[u];
    if ( node.is_terminal() )
      os << "  n" << u << " [label=\"" << int( node.value ) << "\", shape=box];\n";
    else
      os << "  n" << u << " [label=\"x" << node.var << "\", shape=circle];\n";
  }
  os << "  fn -> n" << d.root() << ";\n";
  for ( std::size_t u = 0; u < d.nodes().size(); ++u )
  {
    const auto& node = d.nodes()[u];
    for ( std::size_t c = 0; c < node.children.size(); ++c )
    {
      os << "  n" << u << " -> n" << node.children[c];
      if ( d.k() == 2 )
        os << ( c == 0 ? " [style=dashed]" : " [style=solid]" );
      else
        os << " [label=\"" << c << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace fnclass
