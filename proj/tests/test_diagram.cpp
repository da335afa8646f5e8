#include <doctest.h>

#include <random>

#include <fnclass/diagram.hpp>
#include <fnclass/separability.hpp>
#include <fnclass/sp_expr.hpp>

#include "oracles.hpp"

using namespace fnclass;

namespace
{

std::set<std::string> words( const std::vector<Implementation>& imps )
{
  std::set<std::string> r;
  for ( const auto& i : imps )
    r.insert( i.to_string() );
  return r;
}

std::set<std::string> words( const std::set<oracle::Path>& paths )
{
  std::set<std::string> r;
  for ( const auto& p : paths )
    r.insert( oracle::path_string( p ) );
  return r;
}

KFunction random_function( std::mt19937_64& rng, int k, int n )
{
  std::vector<Value> v( static_cast<std::size_t>( std::pow( k, n ) ) );
  for ( auto& x : v )
    x = static_cast<Value>( rng() % k );
  return KFunction( k, n, v );
}

const auto f = parse_expression( "x1*x2 + x1*x3", 2, 3 );
const auto g = parse_expression( "x1*x2 + x1^0*x3", 2, 3 );

} // namespace

TEST_CASE( "diagrams of the worked examples" )
{
  const auto df = build_odd( f, { 1, 2, 3 } );
  const auto dg = build_odd( g, { 1, 2, 3 } );
  CHECK( implementations_of( df ).size() == 5 );
  CHECK( implementations_of( dg ).size() == 4 );
  CHECK( path_count( df ) == 5 );
  CHECK( path_count( dg ) == 4 );
  CHECK( depth( df ) == 4 );
  CHECK( depth( dg ) == 3 );

  CHECK( words( implementations_of( df ) ) ==
         std::set<std::string>{ "(1,00)", "(123,1000)", "(123,1011)", "(123,1101)", "(123,1110)" } );
  CHECK( words( implementations_of( build_odd( f, { 2, 1, 3 } ) ) ) ==
         std::set<std::string>{ "(21,000)", "(213,0100)", "(213,0111)", "(21,100)", "(213,1101)", "(213,1110)" } );
  CHECK( words( implementations_of( dg ) ) == std::set<std::string>{ "(13,000)", "(13,011)", "(12,100)", "(12,111)" } );
  CHECK( words( implementations_of( build_odd( g, { 2, 1, 3 } ) ) ) ==
         std::set<std::string>{ "(21,010)", "(213,0000)", "(213,0011)", "(213,1000)", "(213,1011)", "(21,111)" } );

  // the path (f; x1:1; x2:0; x3:1; 1)
  CHECK( words( implementations( f ) ).contains( "(123,1011)" ) );
  CHECK( words( implementations( g ) ).contains( "(231,0101)" ) );
}

TEST_CASE( "implementation counts" )
{
  CHECK( implementations( f ).size() == 33 );
  CHECK( implementations( g ).size() == 28 );
  CHECK( imp_count( f ) == 33 );
  CHECK( imp_count( g ) == 28 );
  CHECK( imp_count( parse_expression( "x1*x2*x3", 2 ) ) == 21 );
  CHECK( imp_count( parse_expression( "x1*x2^0*x3^0 + x1", 2 ) ) == 23 );
  CHECK( imp_count( KFunction::constant( 2, 3, 1 ) ) == 1 );
  CHECK( imp_count( KFunction::projection( 2, 3, 2 ) ) == 2 );
  CHECK( imp_count( KFunction::projection( 3, 2, 2 ) ) == 3 );
}

TEST_CASE( "implementations agree with the cofactor oracle" )
{
  for ( std::uint64_t id = 0; id < 256; ++id )
  {
    const auto h = from_numeral( 2, 3, id );
    const auto expected = oracle::implementations( h );
    CHECK( words( implementations( h ) ) == words( expected ) );
    CHECK( imp_recursive( h ) == expected.size() );
  }
  std::mt19937_64 rng( 17 );
  for ( int r = 0; r < 150; ++r )
  {
    const bool ternary = r % 3 == 0;
    const auto h = random_function( rng, ternary ? 3 : 2, ternary ? 2 + r % 2 : 4 );
    const auto expected = oracle::implementations( h );
    CHECK( words( implementations( h ) ) == words( expected ) );
    CHECK( imp_count( h ) == expected.size() );
  }
}

TEST_CASE( "parallel edges count as separate implementations" )
{
  // x1^0 over Z_3: values 1 and 2 lead to the same terminal
  const auto h = parse_expression( "x1^0", 3, 1 );
  const auto d = build_odd( h, { 1 } );
  CHECK( d.internal_count() == 1 );
  CHECK( d.terminal_count() == 2 );
  CHECK( words( implementations_of( d ) ) == std::set<std::string>{ "(1,01)", "(1,10)", "(1,20)" } );
}

TEST_CASE( "reduction" )
{
  std::mt19937_64 rng( 19 );
  for ( int r = 0; r < 200; ++r )
  {
    const auto h = random_function( rng, 2 + r % 2, 3 );
    std::vector<int> order{ 1, 2, 3 };
    for ( int s = 0; s < r % 6; ++s )
      std::next_permutation( order.begin(), order.end() );
    const auto tree = build_odt( h, order );
    const auto d = reduce( tree );
    CHECK( d == build_odd( h, order ) );
    CHECK( reduce( d ) == d );
    for ( std::size_t x = 0; x < h.size(); ++x )
      CHECK( evaluate( d, h.point_of( x ) ) == h[x] );
    // labels of a reduced diagram are exactly the essential variables
    CHECK( diagram_labels( d ) == essential_set( h ) );
    CHECK( depth( d ) <= ess( h ) + 1 );
    CHECK( tree.internal_count() == ( std::pow( h.k(), 3 ) - 1 ) / ( h.k() - 1 ) );
  }
  // without removing redundant tests a constant keeps its labels
  const auto c = KFunction::constant( 2, 2, 0 );
  const auto kept = reduce( build_odt( c, { 1, 2 } ), { true, false } );
  CHECK( diagram_labels( kept ) == VarSet{ 1, 2 } );
  CHECK( diagram_labels( build_odd( c, { 1, 2 } ) ).empty() );
}

TEST_CASE( "orderings" )
{
  CHECK_THROWS_AS( build_odd( f, { 1, 2 } ), std::invalid_argument );
  CHECK_THROWS_AS( build_odd( f, { 1, 1, 3 } ), std::invalid_argument );
  CHECK_THROWS_AS( build_odd( f, { 1, 2, 4 } ), std::invalid_argument );

  std::mt19937_64 rng( 23 );
  for ( int r = 0; r < 100; ++r )
  {
    const auto h = random_function( rng, 2, 4 );
    const auto e = essential_set( h );
    if ( e.empty() )
      continue;
    CHECK( depth( build_odd( h, find_full_depth_ordering( h ) ) ) == e.size() + 1 );
    const auto em = e.members();
    for ( std::uint32_t mask = 1; mask < ( 1u << em.size() ); ++mask )
    {
      VarSet M;
      for ( std::size_t b = 0; b < em.size(); ++b )
        if ( ( mask >> b ) & 1u )
          M.insert( em[b] );
      if ( M == e || is_separable( h, M ) )
        continue;
      CHECK( depth( build_odd( h, find_shallow_ordering( h, M ) ) ) < e.size() + 1 );
    }
  }
  // a set whose s-system member does not block it alone
  const auto h = parse_table( "828e", 2, 4 );
  const auto o = find_shallow_ordering( h, { 1, 4 } );
  CHECK( ( o.front() == 2 || o.front() == 3 ) );
  CHECK( depth( build_odd( h, o ) ) == 4 );
}

TEST_CASE( "dot output" )
{
  const auto dot = to_dot( build_odd( g, { 1, 2, 3 } ), "g" );
  CHECK( dot.find( "digraph" ) != std::string::npos );
  CHECK( dot.find( "label=\"x1\"" ) != std::string::npos );
  CHECK( dot.find( "style=dashed" ) != std::string::npos );
  const auto single = to_dot( build_odd( KFunction::constant( 2, 2, 1 ), { 1, 2 } ) );
  CHECK( single.find( "shape=circle" ) == std::string::npos );
  CHECK( single.find( "label=\"1\", shape=box" ) != std::string::npos );
}
