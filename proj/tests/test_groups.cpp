#include <doctest.h>

#include <random>

#include <fnclass/classify.hpp>
#include <fnclass/diagram.hpp>
#include <fnclass/groups.hpp>
#include <fnclass/separability.hpp>
#include <fnclass/sp_expr.hpp>

#include "oracles.hpp"

using namespace fnclass;

namespace
{

KFunction random_function( std::mt19937_64& rng, int k, int n )
{
  std::vector<Value> v( static_cast<std::size_t>( std::pow( k, n ) ) );
  for ( auto& x : v )
    x = static_cast<Value>( rng() % k );
  return KFunction( k, n, v );
}

/// Orbit count by Burnside's lemma over the explicit element list.
std::uint64_t burnside( const GroupDescriptor& gd )
{
  const auto elements = group_elements( gd );
  std::uint64_t fixed = 0;
  for ( const auto& t : elements )
    for ( std::uint64_t id = 0; id < space_size( gd.k, gd.n ); ++id )
    {
      const auto h = from_numeral( gd.k, gd.n, id );
      fixed += fnclass::apply( t, h ) == h;
    }
  REQUIRE( fixed % elements.size() == 0 );
  return fixed / elements.size();
}

/// Big-endian numeral of a point, most significant digit x_1.
std::size_t big_endian( const std::vector<Value>& p, int k )
{
  std::size_t r = 0;
  for ( auto v : p )
    r = r * k + v;
  return r;
}

/// Cycles (length > 1) of a permutation given on big-endian indices, each
/// rotated to start at its smallest element.
std::set<std::vector<std::size_t>> cycles( const std::vector<std::size_t>& perm )
{
  std::set<std::vector<std::size_t>> r;
  std::vector<bool> seen( perm.size() );
  for ( std::size_t s = 0; s < perm.size(); ++s )
  {
    if ( seen[s] || perm[s] == s )
      continue;
    std::vector<std::size_t> c;
    for ( auto x = s; !seen[x]; x = perm[x] )
    {
      seen[x] = true;
      c.push_back( x );
    }
    r.insert( c );
  }
  return r;
}

/// The point permutation x -> domain_map(x), re-indexed big-endian.
std::vector<std::size_t> point_permutation( const Transformation& t, int k, int n )
{
  const auto dom = domain_map( t, k, n );
  REQUIRE( dom.has_value() );
  const auto probe = KFunction::constant( k, n, 0 );
  std::vector<std::size_t> perm( probe.size() );
  for ( std::size_t x = 0; x < probe.size(); ++x )
    perm[big_endian( probe.point_of( x ), k )] = big_endian( probe.point_of( ( *dom )[x] ), k );
  return perm;
}

} // namespace

TEST_CASE( "argument translation cycles" )
{
  // (2,1,0) on Z_3^3 sends 000 -> 210 -> 120 -> 000
  const auto c = cycles( point_permutation( ArgTranslate{ { 2, 1, 0 } }, 3, 3 ) );
  const std::set<std::vector<std::size_t>> expected{ { 0, 21, 15 },  { 1, 22, 16 }, { 2, 23, 17 },
                                                     { 3, 24, 9 },   { 4, 25, 10 }, { 5, 26, 11 },
                                                     { 6, 18, 12 },  { 7, 19, 13 }, { 8, 20, 14 } };
  CHECK( c == expected );
}

TEST_CASE( "variable swap cycles" )
{
  const auto c = cycles( point_permutation( VarPerm{ { 2, 1, 3 } }, 3, 3 ) );
  const std::set<std::vector<std::size_t>> expected{ { 3, 9 },   { 4, 10 },  { 5, 11 },  { 6, 18 },  { 7, 19 },
                                                     { 8, 20 },  { 15, 21 }, { 16, 22 }, { 17, 23 } };
  CHECK( c == expected );
}

TEST_CASE( "transformations act as documented" )
{
  const auto f = parse_expression( "x1*x2^0 + 2*x3", 3, 3 );
  std::mt19937_64 rng( 29 );
  for ( std::size_t x = 0; x < f.size(); ++x )
  {
    const auto p = f.point_of( x );
    auto at = [&]( const KFunction& h, std::vector<Value> q ) { return h[h.index_of( q )]; };
    CHECK( fnclass::apply( VarPerm{ { 3, 1, 2 } }, f )[x] == at( f, { p[2], p[0], p[1] } ) );
    CHECK( fnclass::apply( ArgTranslate{ { 1, 0, 2 } }, f )[x] ==
           at( f, { Value( ( p[0] + 1 ) % 3 ), p[1], Value( ( p[2] + 2 ) % 3 ) } ) );
    CHECK( fnclass::apply( OutputTranslate{ 2 }, f )[x] == ( f[x] + 2 ) % 3 );
    CHECK( fnclass::apply( OutputMap{ { 1, 2, 0 } }, f )[x] == ( f[x] + 1 ) % 3 );
    CHECK( fnclass::apply( AddLinear{ { 1, 0, 2 } }, f )[x] == ( f[x] + p[0] + 2 * p[2] ) % 3 );
    const VarPermValueMaps vm{ { 2, 1, 3 }, { { 1, 0, 2 }, { 0, 2, 1 }, { 2, 1, 0 } }, { 0, 2, 1 } };
    const std::vector<Value> out{ 0, 2, 1 };
    CHECK( fnclass::apply( vm, f )[x] == out[at( f, { Value( p[1] == 0 ? 1 : p[1] == 1 ? 0 : 2 ),
                                            Value( p[0] == 0 ? 0 : p[0] == 1 ? 2 : 1 ),
                                            Value( 2 - p[2] ) } )] );
    // u * f(xA + c) + a.x + d with A = [[1,1,0],[0,1,0],[0,0,2]]
    const Affine aff{ { { 1, 1, 0 }, { 0, 1, 0 }, { 0, 0, 2 } }, { 1, 0, 0 }, { 0, 1, 0 }, 2, 2 };
    const Value y0 = ( p[0] + 1 ) % 3, y1 = ( p[0] + p[1] ) % 3, y2 = ( 2 * p[2] ) % 3;
    CHECK( fnclass::apply( aff, f )[x] == ( 2 * at( f, { y0, y1, y2 } ) + p[1] + 2 ) % 3 );
  }
  CHECK_THROWS_AS( fnclass::apply( VarPerm{ { 1, 1, 3 } }, f ), std::invalid_argument );
  CHECK_THROWS_AS( fnclass::apply( OutputMap{ { 0, 0, 1 } }, f ), std::invalid_argument );
  CHECK_THROWS_AS( fnclass::apply( Affine{ { { 1, 1, 0 }, { 1, 1, 0 }, { 0, 0, 1 } }, { 0, 0, 0 }, { 0, 0, 0 }, 0, 1 }, f ),
                   std::invalid_argument );
  CHECK_THROWS_AS( fnclass::apply( ArgTranslate{ { 1, 0 } }, f ), std::invalid_argument );
}

TEST_CASE( "composition matches sequential application" )
{
  std::mt19937_64 rng( 31 );
  for ( auto name : { GroupName::G, GroupName::GE, GroupName::FullSym, GroupName::A, GroupName::AxA1, GroupName::RAG } )
  {
    const GroupDescriptor gd{ name, 3, 2 };
    const auto elements = group_elements( gd );
    for ( int r = 0; r < 40; ++r )
    {
      const auto& a = elements[rng() % elements.size()];
      const auto& b = elements[rng() % elements.size()];
      const auto h = random_function( rng, 3, 2 );
      CHECK( fnclass::apply( compose( a, b, 3 ), h ) == fnclass::apply( a, fnclass::apply( b, h ) ) );
    }
  }
}

TEST_CASE( "group orders" )
{
  CHECK( general_linear_order( 2, 3 ) == 168 );
  CHECK( general_linear_order( 3, 2 ) == 48 );
  CHECK( group_order( { GroupName::RAG, 2, 3 } ) == 168 * 64 * 2 );
  CHECK( group_order( { GroupName::FullSym, 3, 2 } ) == 2 * 6 * 6 * 6 );
  CHECK( group_order( { GroupName::AxA1, 3, 2 } ) == 48 * 9 * 3 * 2 );
  CHECK_THROWS_AS( ( GroupDescriptor{ GroupName::LG, 4, 2 } ).validate(), std::invalid_argument );

  // distinct elements, told apart by their action on probe functions
  std::mt19937_64 rng( 37 );
  for ( auto [k, n] : { std::pair{ 2, 2 }, std::pair{ 3, 2 }, std::pair{ 2, 3 } } )
  {
    std::vector<KFunction> probes;
    for ( int r = 0; r < 12; ++r )
      probes.push_back( random_function( rng, k, n ) );
    for ( auto name : all_groups() )
    {
      const GroupDescriptor gd{ name, k, n };
      if ( group_order( gd ) > 30000 )
        continue;
      std::set<std::vector<KFunction>> actions;
      for ( const auto& t : group_elements( gd ) )
      {
        std::vector<KFunction> images;
        for ( const auto& p : probes )
          images.push_back( fnclass::apply( t, p ) );
        actions.insert( images );
      }
      CAPTURE( group_name( name ) );
      CAPTURE( k );
      CAPTURE( n );
      CHECK( actions.size() == group_order( gd ) );
    }
  }
}

TEST_CASE( "orbit counts agree with Burnside's lemma" )
{
  for ( auto name : all_groups() )
  {
    CAPTURE( group_name( name ) );
    CHECK( count_orbits( { name, 2, 2 } ) == burnside( { name, 2, 2 } ) );
    CHECK( count_orbits( { name, 2, 3 } ) == burnside( { name, 2, 3 } ) );
  }
  for ( auto name : { GroupName::S, GroupName::CA, GroupName::G, GroupName::GE, GroupName::CF, GroupName::LF,
                      GroupName::LG, GroupName::A, GroupName::FullSym } )
  {
    CAPTURE( group_name( name ) );
    CHECK( count_orbits( { name, 3, 2 } ) == burnside( { name, 3, 2 } ) );
  }
  // seven classes of two-variable functions under argument complementation
  CHECK( count_orbits( { GroupName::CA, 2, 2 } ) == 7 );
  CHECK( count_orbits( { GroupName::G, 2, 2 } ) == 6 );
  CHECK( count_orbits( { GroupName::LG, 2, 2 } ) == 8 );
  CHECK( count_orbits( { GroupName::A, 2, 2 } ) == 5 );
}

TEST_CASE( "canonical forms" )
{
  std::mt19937_64 rng( 41 );
  for ( auto name : all_groups() )
    for ( int r = 0; r < 20; ++r )
    {
      const auto h = random_function( rng, 2, 3 );
      const GroupDescriptor gd{ name, 2, 3 };
      const auto c = canonical_form( h, gd );
      CHECK( c == canonical_form_by_elements( h, gd ) );
      // smallest numeral in the orbit
      for ( const auto& t : group_generators( gd ) )
        CHECK( canonical_form( fnclass::apply( t, h ), gd ) == c );
      CHECK( numeral( c ) <= numeral( h ) );
    }
  const auto partition = orbit_partition( { GroupName::GE, 2, 3 } );
  std::uint64_t total = 0;
  for ( std::size_t i = 0; i < partition.orbits.size(); ++i )
  {
    total += partition.orbits[i].size;
    CHECK( partition.orbit_of[numeral( partition.orbits[i].representative )] == i );
  }
  CHECK( total == 256 );
  CHECK( partition.orbits.size() == 14 );
}

TEST_CASE( "output permutations preserve the profiles; collapsing maps do not" )
{
  std::mt19937_64 rng( 43 );
  for ( int r = 0; r < 100; ++r )
  {
    const auto h = random_function( rng, 3, 2 );
    std::vector<Value> sigma{ 0, 1, 2 };
    std::shuffle( sigma.begin(), sigma.end(), rng );
    const auto t = fnclass::apply( OutputMap{ sigma }, h );
    CHECK( imp_count( t ) == imp_count( h ) );
    CHECK( sub_vector( t ) == sub_vector( h ) );
    CHECK( imp_signature( t ) == imp_signature( h ) );
  }
  // a1 at b, a2 elsewhere, and sigma(a1) = sigma(a2)
  for ( auto [a1, a2] : { std::pair<Value, Value>{ 0, 2 }, std::pair<Value, Value>{ 1, 0 } } )
  {
    std::vector<Value> v( 9, a2 );
    v[5] = a1;
    const KFunction h( 3, 2, v );
    std::vector<Value> sigma{ 0, 1, 2 };
    sigma[a2] = sigma[a1];
    const auto t = map_outputs( h, sigma );
    CHECK( ess( h ) == 2 );
    CHECK( ess( t ) == 0 );
    CHECK( imp_count( t ) != imp_count( h ) );
    CHECK( sub_vector( t ) != sub_vector( h ) );
  }
}

TEST_CASE( "full symmetry group preserves the profiles" )
{
  std::mt19937_64 rng( 47 );
  for ( auto [k, n] : { std::pair{ 2, 3 }, std::pair{ 3, 2 }, std::pair{ 2, 4 } } )
  {
    const auto elements = group_elements( { GroupName::FullSym, k, n } );
    for ( int r = 0; r < 60; ++r )
    {
      const auto h = random_function( rng, k, n );
      const auto& t = elements[rng() % elements.size()];
      const auto image = fnclass::apply( t, h );
      CHECK( imp_count( image ) == imp_count( h ) );
      CHECK( sub_vector( image ) == sub_vector( h ) );
      CHECK( sep_vector( image ) == sep_vector( h ) );
    }
  }
}
