#include "fnclass/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "fnclass/bit_kernels.hpp"
#include "fnclass/diagram.hpp"
#include "fnclass/separability.hpp"

namespace fnclass
{

namespace
{

std::string join( const std::vector<std::uint64_t>& v )
{
  std::string s;
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    if ( i )
      s += ',';
    s += std::to_string( v[i] );
  }
  return s;
}

class ImpStringMemo
{
public:
  const std::string& signature( const KFunction& f )
  {
    if ( auto it = memo_.find( f ); it != memo_.end() )
      return it->second;
    const auto e = essential_set( f );
    std::string sig;
    if ( e.size() <= 1 )
      sig = "e" + std::to_string( e.size() );
    else
    {
      std::vector<std::string> per_var;
      for ( int i : e.members() )
      {
        std::vector<std::string> children;
        for ( int j = 0; j < f.k(); ++j )
          children.push_back( signature( cofactor( f, i, static_cast<Value>( j ) ) ) );
        std::sort( children.begin(), children.end() );
        std::string d = "(";
        for ( std::size_t c = 0; c < children.size(); ++c )
          d += ( c ? "," : "" ) + children[c];
        per_var.push_back( d + ")" );
      }
      std::sort( per_var.begin(), per_var.end() );
      sig = "[";
      for ( const auto& d : per_var )
        sig += d;
      sig += "]";
    }
    return memo_.emplace( f, std::move( sig ) ).first->second;
  }

private:
  std::unordered_map<KFunction, std::string, KFunctionHash> memo_;
};

std::string profile_key( const KFunction& f, RelationKind kind, ImpStringMemo& memo )
{
  switch ( kind )
  {
  case RelationKind::imp:
    return "i:" + std::to_string( imp_count( f ) );
  case RelationKind::imp_signature:
    return memo.signature( f );
  case RelationKind::sub:
  {
    const auto e = ess( f );
    if ( e == 0 )
      return "e0";
    if ( e == 1 )
    {
      std::string r = "e1:";
      for ( auto v : range_of( f ) )
        r += std::to_string( v );
      return r;
    }
    if ( f.k() == 2 && f.n() <= bits::max_vars )
      return "s:" + join( bits::sub_vector_word( bits::to_word( f ), f.n() ) );
    return "s:" + join( sub_vector( f ) );
  }
  case RelationKind::sep:
    if ( f.k() == 2 && f.n() <= bits::max_vars )
      return "p:" + join( bits::sep_vector_word( bits::to_word( f ), f.n() ) );
    return "p:" + join( sep_vector( f ) );
  case RelationKind::group:
    break;
  }
  throw std::invalid_argument( "group relations have no profile key" );
}

} // namespace

ImpSignature imp_signature( const KFunction& f )
{
  ImpStringMemo memo;
  return { memo.signature( f ) };
}

std::uint32_t ImpSignatureInterner::id( const KFunction& f )
{
  if ( auto it = memo_.find( f ); it != memo_.end() )
    return it->second;
  const auto e = essential_set( f );
  std::string key;
  if ( e.size() <= 1 )
    key = "e" + std::to_string( e.size() );
  else
  {
    std::vector<std::vector<std::uint32_t>> per_var;
    for ( int i : e.members() )
    {
      std::vector<std::uint32_t> children;
      for ( int j = 0; j < f.k(); ++j )
        children.push_back( id( cofactor( f, i, static_cast<Value>( j ) ) ) );
      std::sort( children.begin(), children.end() );
      per_var.push_back( std::move( children ) );
    }
    std::sort( per_var.begin(), per_var.end() );
    for ( const auto& d : per_var )
    {
      key += '(';
      for ( auto c : d )
        key += std::to_string( c ) + ' ';
      key += ')';
    }
  }
  const auto next = static_cast<std::uint32_t>( by_key_.size() );
  const auto result = by_key_.emplace( std::move( key ), next ).first->second;
  memo_.emplace( f, result );
  return result;
}

std::uint64_t ComplexityProfile::sub_total() const
{
  return std::accumulate( sub.begin(), sub.end(), std::uint64_t{ 0 } );
}

std::uint64_t ComplexityProfile::sep_total() const
{
  return std::accumulate( sep.begin(), sep.end(), std::uint64_t{ 0 } );
}

ComplexityProfile complexity_profile( const KFunction& f )
{
  ComplexityProfile p;
  p.imp = imp_count( f );
  if ( f.k() == 2 && f.n() <= bits::max_vars )
  {
    const auto w = bits::to_word( f );
    p.sub = bits::sub_vector_word( w, f.n() );
    p.sep = bits::sep_vector_word( w, f.n() );
  }
  else
  {
    p.sub = sub_vector( f );
    p.sep = sep_vector( f );
  }
  return p;
}

std::string Relation::name() const
{
  switch ( kind )
  {
  case RelationKind::imp:
    return "imp";
  case RelationKind::imp_signature:
    return "imp-sig";
  case RelationKind::sub:
    return "sub";
  case RelationKind::sep:
    return "sep";
  case RelationKind::group:
    return std::string( group_name( group ) );
  }
  return "?";
}

Relation Relation::parse( std::string_view text )
{
  if ( text == "imp" )
    return { RelationKind::imp };
  if ( text == "imp-sig" )
    return { RelationKind::imp_signature };
  if ( text == "sub" )
    return { RelationKind::sub };
  if ( text == "sep" )
    return { RelationKind::sep };
  return of_group( parse_group_name( text ) );
}

std::string class_key( const KFunction& f, RelationKind kind )
{
  ImpStringMemo memo;
  return profile_key( f, kind, memo );
}

std::optional<std::size_t> ClassificationReport::class_of( const KFunction& f ) const
{
  if ( f.k() != k || f.n() != n || membership.empty() )
    return std::nullopt;
  return membership[numeral( f )];
}

ClassificationReport classify_space( int k, int n, const Relation& relation, const ClassifyOptions& options )
{
  if ( relation.kind == RelationKind::group )
    GroupDescriptor{ relation.group, k, n }.validate();
  const auto space = space_size( k, n );
  if ( space > orbit_space_limit() )
    throw budget_exceeded( "P_" + std::to_string( k ) + "^" + std::to_string( n ) + " has " + std::to_string( space ) +
                           " functions, above the scan limit of " + std::to_string( orbit_space_limit() ) );

  ClassificationReport report;
  report.relation = relation.name();
  report.k = k;
  report.n = n;
  report.total = space;
  std::vector<std::uint32_t> membership;

  if ( relation.kind == RelationKind::group )
  {
    auto partition = orbit_partition( { relation.group, k, n } );
    for ( auto& orbit : partition.orbits )
      report.classes.push_back( { std::to_string( numeral( orbit.representative ) ), orbit.size,
                                  orbit.representative, {} } );
    membership = std::move( partition.orbit_of );
  }
  else
  {
    std::vector<std::string> keys( space );
    const unsigned jobs = std::max( 1u, options.jobs );
    auto work = [&]( unsigned worker ) {
      ImpStringMemo memo;
      for ( std::uint64_t id = worker; id < space; id += jobs )
        keys[id] = profile_key( from_numeral( k, n, id ), relation.kind, memo );
    };
    if ( jobs == 1 )
      work( 0 );
    else
    {
      std::vector<std::jthread> pool;
      for ( unsigned w = 0; w < jobs; ++w )
        pool.emplace_back( work, w );
    }

    std::unordered_map<std::string, std::uint32_t> index;
    membership.resize( space );
    for ( std::uint64_t id = 0; id < space; ++id )
    {
      auto [it, fresh] = index.emplace( keys[id], static_cast<std::uint32_t>( report.classes.size() ) );
      if ( fresh )
        report.classes.push_back( { keys[id], 0, from_numeral( k, n, id ), {} } );
      ++report.classes[it->second].size;
      membership[id] = it->second;
    }
  }

  for ( auto& c : report.classes )
    c.profile = complexity_profile( c.representative );

  if ( relation.kind == RelationKind::sep )
  {
    std::vector<std::uint32_t> order( report.classes.size() );
    std::iota( order.begin(), order.end(), 0u );
    std::stable_sort( order.begin(), order.end(), [&]( auto a, auto b ) {
      const auto& x = report.classes[a].profile.sep;
      const auto& y = report.classes[b].profile.sep;
      return std::lexicographical_compare( x.rbegin(), x.rend(), y.rbegin(), y.rend() );
    } );
    std::vector<std::uint32_t> rank( order.size() );
    std::vector<ClassRecord> sorted;
    for ( std::size_t r = 0; r < order.size(); ++r )
    {
      rank[order[r]] = static_cast<std::uint32_t>( r );
      sorted.push_back( std::move( report.classes[order[r]] ) );
    }
    report.classes = std::move( sorted );
    for ( auto& m : membership )
      m = rank[m];
  }

  if ( options.keep_membership )
    report.membership = std::move( membership );
  return report;
}

ClassCounts class_counts( int k, int n, unsigned jobs )
{
  ClassifyOptions options{ jobs, false };
  return { classify_space( k, n, { RelationKind::imp }, options ).classes.size(),
           classify_space( k, n, { RelationKind::sub }, options ).classes.size(),
           classify_space( k, n, { RelationKind::sep }, options ).classes.size() };
}

std::optional<std::pair<KFunction, KFunction>> refinement_witness( const ClassificationReport& a,
                                                                   const ClassificationReport& b )
{
  if ( a.k != b.k || a.n != b.n )
    throw std::invalid_argument( "reports cover different function spaces" );
  if ( a.membership.size() != a.total || b.membership.size() != b.total )
    throw std::invalid_argument( "refinement checks need per-function membership" );
  constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> first( a.classes.size(), unset );
  for ( std::uint64_t id = 0; id < a.total; ++id )
  {
    auto& f = first[a.membership[id]];
    if ( f == unset )
      f = id;
    else if ( b.membership[f] != b.membership[id] )
      return std::make_pair( from_numeral( a.k, a.n, f ), from_numeral( a.k, a.n, id ) );
  }
  return std::nullopt;
}

bool refinement_check( const ClassificationReport& a, const ClassificationReport& b )
{
  return !refinement_witness( a, b ).has_value();
}

} // namespace fnclass
