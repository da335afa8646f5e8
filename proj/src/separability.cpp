#include "fnclass/separability.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace fnclass
{

SetFamily::SetFamily( std::vector<VarSet> sets ) : sets_( std::move( sets ) )
{
  for ( auto s : sets_ )
    if ( s.empty() )
      throw std::invalid_argument( "set family members must be non-empty" );
  std::sort( sets_.begin(), sets_.end() );
  sets_.erase( std::unique( sets_.begin(), sets_.end() ), sets_.end() );
}

VarSet SetFamily::support() const
{
  VarSet u;
  for ( auto s : sets_ )
    u = u | s;
  return u;
}

std::vector<KFunction> subfunctions( const KFunction& f )
{
  std::unordered_set<KFunction, KFunctionHash> seen{ f };
  std::deque<KFunction> queue{ f };
  while ( !queue.empty() )
  {
    const auto h = std::move( queue.front() );
    queue.pop_front();
    for ( int i : essential_set( h ).members() )
    {
      for ( int c = 0; c < h.k(); ++c )
      {
        auto g = cofactor( h, i, static_cast<Value>( c ) );
        if ( seen.insert( g ).second )
          queue.push_back( std::move( g ) );
      }
    }
  }
  std::vector<KFunction> out( seen.begin(), seen.end() );
  std::sort( out.begin(), out.end() );
  return out;
}

std::vector<std::uint64_t> sub_vector( const KFunction& f )
{
  std::vector<std::uint64_t> counts( f.n() + 1, 0 );
  for ( const auto& g : subfunctions( f ) )
    ++counts[ess( g )];
  return counts;
}

std::vector<VarSet> separable_sets( const KFunction& f )
{
  std::vector<VarSet> out;
  for ( const auto& g : subfunctions( f ) )
  {
    const auto e = essential_set( g );
    if ( !e.empty() )
      out.push_back( e );
  }
  std::sort( out.begin(), out.end() );
  out.erase( std::unique( out.begin(), out.end() ), out.end() );
  return out;
}

std::vector<std::uint64_t> sep_vector( const KFunction& f )
{
  std::vector<std::uint64_t> counts( f.n(), 0 );
  for ( auto M : separable_sets( f ) )
    ++counts[M.size() - 1];
  return counts;
}

namespace
{

bool all_essential( const KFunction& g, VarSet M )
{
  for ( int i : M.members() )
    if ( !is_essential( g, i ) )
      return false;
  return true;
}

} // namespace

bool is_separable( const KFunction& f, VarSet M )
{
  const auto e = essential_set( f );
  if ( M.empty() )
    throw std::invalid_argument( "separability is defined for non-empty sets" );
  if ( !M.is_subset_of( e ) )
    throw std::invalid_argument( M.to_string() + " is not a set of essential variables" );
  const auto rest = e - M;
  const auto count = assignment_count( f.k(), rest );
  for ( std::uint64_t code = 0; code < count; ++code )
    if ( all_essential( restrict_set( f, rest, code ), M ) )
      return true;
  return false;
}

bool is_blocking( const KFunction& f, VarSet M, VarSet J )
{
  const auto count = assignment_count( f.k(), J );
  for ( std::uint64_t code = 0; code < count; ++code )
    if ( all_essential( restrict_set( f, J, code ), M ) )
      return false;
  return true;
}

SetFamily distributive_sets( VarSet M, const KFunction& f, DisReading reading )
{
  const auto e = essential_set( f );
  if ( !M.is_subset_of( e ) )
    throw std::invalid_argument( M.to_string() + " is not a set of essential variables" );
  const auto pool = ( e - M ).members();
  const auto p = pool.size();

  std::vector<std::vector<VarSet>> by_size( p + 1 );
  for ( std::uint32_t mask = 1; mask < ( 1u << p ); ++mask )
  {
    VarSet J;
    for ( std::size_t b = 0; b < p; ++b )
      if ( ( mask >> b ) & 1u )
        J.insert( pool[b] );
    by_size[J.size()].push_back( J );
  }

  std::vector<VarSet> accepted;
  for ( std::size_t size = 1; size <= p; ++size )
  {
    for ( auto J : by_size[size] )
    {
      if ( reading == DisReading::minimal &&
           std::any_of( accepted.begin(), accepted.end(), [J]( VarSet a ) { return a.is_subset_of( J ); } ) )
        continue;
      if ( is_blocking( f, M, J ) )
        accepted.push_back( J );
    }
  }
  return SetFamily( std::move( accepted ) );
}

std::vector<VarSet> s_systems( const SetFamily& F )
{
  const auto universe = F.support().members();
  const auto u = universe.size();
  std::vector<VarSet> out;
  for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << u ); ++mask )
  {
    VarSet beta;
    for ( std::size_t b = 0; b < u; ++b )
      if ( ( mask >> b ) & 1u )
        beta.insert( universe[b] );

    const bool hits_all =
        std::all_of( F.sets().begin(), F.sets().end(), [beta]( VarSet P ) { return P.intersects( beta ); } );
    if ( !hits_all )
      continue;
    bool witnessed = true;
    for ( int x : beta.members() )
    {
      const VarSet single{ x };
      if ( std::none_of( F.sets().begin(), F.sets().end(),
                         [beta, single]( VarSet P ) { return ( P & beta ) == single; } ) )
      {
        witnessed = false;
        break;
      }
    }
    if ( witnessed )
      out.push_back( beta );
  }
  std::sort( out.begin(), out.end() );
  return out;
}

std::vector<VarSet> minimal_transversals( const SetFamily& F )
{
  std::vector<VarSet> current{ VarSet{} };
  for ( auto P : F.sets() )
  {
    std::vector<VarSet> next;
    for ( auto T : current )
    {
      if ( T.intersects( P ) )
        next.push_back( T );
      else
        for ( int x : P.members() )
          next.push_back( T | VarSet{ x } );
    }
    std::sort( next.begin(), next.end(), []( VarSet a, VarSet b ) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    } );
    next.erase( std::unique( next.begin(), next.end() ), next.end() );
    current.clear();
    for ( auto T : next )
      if ( std::none_of( current.begin(), current.end(), [T]( VarSet m ) { return m.is_subset_of( T ); } ) )
        current.push_back( T );
  }
  std::sort( current.begin(), current.end() );
  return current;
}

bool is_subfunction( const KFunction& g, const KFunction& f )
{
  if ( g.k() != f.k() || g.n() != f.n() )
    return false;
  const auto ef = essential_set( f );
  const auto eg = essential_set( g );
  if ( !eg.is_subset_of( ef ) )
    return false;
  const auto rest = ef - eg;
  const auto count = assignment_count( f.k(), rest );
  for ( std::uint64_t code = 0; code < count; ++code )
    if ( restrict_set( f, rest, code ) == g )
      return true;
  return false;
}

namespace
{

/// Top-down search from h towards g, one essential variable per step.
bool descend( const KFunction& h, const KFunction& g, int target_ess, std::vector<KFunction>& chain,
              std::unordered_set<KFunction, KFunctionHash>& dead )
{
  const auto eh = essential_set( h );
  if ( eh.size() == target_ess )
  {
    if ( h != g )
      return false;
    chain.push_back( h );
    return true;
  }
  if ( dead.contains( h ) )
    return false;
  for ( int i : eh.members() )
  {
    for ( int c = 0; c < h.k(); ++c )
    {
      auto next = cofactor( h, i, static_cast<Value>( c ) );
      if ( ess( next ) != eh.size() - 1 || !is_subfunction( g, next ) )
        continue;
      if ( descend( next, g, target_ess, chain, dead ) )
      {
        chain.push_back( h );
        return true;
      }
    }
  }
  dead.insert( h );
  return false;
}

} // namespace

std::vector<KFunction> subfunction_chain( const KFunction& f, const KFunction& g )
{
  if ( !is_subfunction( g, f ) )
    throw std::invalid_argument( "g is not a subfunction of f" );
  std::vector<KFunction> chain;
  std::unordered_set<KFunction, KFunctionHash> dead;
  if ( !descend( f, g, ess( g ), chain, dead ) )
    throw std::logic_error( "no chain with unit essential-count steps exists" );
  return chain;
}

} // namespace fnclass
