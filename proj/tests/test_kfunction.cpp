#include <doctest.h>

#include <random>

#include <fnclass/kfunction.hpp>
#include <fnclass/sp_expr.hpp>

#include "oracles.hpp"

using namespace fnclass;

namespace
{

std::set<int> as_set( VarSet s )
{
  const auto m = s.members();
  return { m.begin(), m.end() };
}

KFunction random_function( std::mt19937_64& rng, int k, int n )
{
  std::vector<Value> v( static_cast<std::size_t>( std::pow( k, n ) ) );
  for ( auto& x : v )
    x = static_cast<Value>( rng() % k );
  return KFunction( k, n, v );
}

} // namespace

TEST_CASE( "table index is little-endian" )
{
  const auto x1 = KFunction::projection( 2, 3, 1 );
  CHECK( x1[1] == 1 );
  CHECK( x1[2] == 0 );
  const auto x3 = KFunction::projection( 3, 2, 2 );
  CHECK( x3[3] == 1 );
  CHECK( x3[6] == 2 );
  CHECK( x3.index_of( std::vector<Value>{ 2, 1 } ) == 5 );
  CHECK( x3.point_of( 5 ) == std::vector<Value>{ 2, 1 } );
}

TEST_CASE( "hex and digit formats" )
{
  const auto g = parse_expression( "x1*x2 + x1^0*x3", 2, 3 );
  // g(a1,a2,a3) = a1 ? a2 : a3, index a1 + 2a2 + 4a3
  std::vector<Value> expected( 8 );
  for ( std::size_t x = 0; x < 8; ++x )
    expected[x] = ( x & 1 ) ? ( x >> 1 ) & 1 : ( x >> 2 ) & 1;
  CHECK( g == KFunction( 2, 3, expected ) );
  CHECK( format_table( g ) == "d8" );
  CHECK( parse_table( "d8", 2, 3 ) == g );
  CHECK( parse_table( "0xD8", 2, 3 ) == g );

  const auto t = KFunction( 3, 1, { 2, 0, 1 } );
  CHECK( parse_table( format_table( t ), 3, 1 ) == t );
  CHECK_THROWS_AS( parse_table( "d8", 2, 2 ), std::invalid_argument );
  CHECK_THROWS_AS( parse_table( "3,0,1", 3, 1 ), std::invalid_argument );
  CHECK_THROWS_AS( parse_table( "zz", 2, 3 ), std::invalid_argument );
}

TEST_CASE( "numerals enumerate the space" )
{
  for ( auto [k, n] : { std::pair{ 2, 2 }, std::pair{ 3, 1 }, std::pair{ 2, 3 } } )
  {
    std::set<KFunction> seen;
    for ( std::uint64_t id = 0; id < space_size( k, n ); ++id )
    {
      const auto f = from_numeral( k, n, id );
      CHECK( numeral( f ) == id );
      seen.insert( f );
    }
    CHECK( seen.size() == space_size( k, n ) );
  }
  CHECK( space_size( 2, 5 ) == ( std::uint64_t{ 1 } << 32 ) );
}

TEST_CASE( "essential variables match the definition" )
{
  std::mt19937_64 rng( 7 );
  for ( int k = 2; k <= 4; ++k )
    for ( int n = 0; n <= 3; ++n )
      for ( int r = 0; r < 60; ++r )
      {
        const auto f = random_function( rng, k, n );
        CHECK( as_set( essential_set( f ) ) == oracle::essential_vars( f ) );
        for ( int i = 1; i <= n; ++i )
          for ( int c = 0; c < k; ++c )
            CHECK( cofactor( f, i, static_cast<Value>( c ) ) == oracle::fix( f, i, static_cast<Value>( c ) ) );
      }
}

TEST_CASE( "range and strongly essential variables" )
{
  const auto g = parse_expression( "x1*x2 + x1^0*x3", 2, 3 );
  CHECK( range_of( g ) == std::vector<Value>{ 0, 1 } );
  CHECK( range_of( KFunction::constant( 3, 2, 2 ) ) == std::vector<Value>{ 2 } );

  std::mt19937_64 rng( 11 );
  for ( int r = 0; r < 300; ++r )
  {
    const auto f = random_function( rng, 2 + r % 2, 3 );
    const auto e = oracle::essential_vars( f );
    std::set<int> strong;
    for ( int i : e )
      for ( int c = 0; c < f.k(); ++c )
      {
        auto rest = oracle::essential_vars( oracle::fix( f, i, static_cast<Value>( c ) ) );
        rest.insert( i );
        if ( rest == e )
          strong.insert( i );
      }
    const auto s = as_set( strongly_essential_set( f ) );
    CHECK( s == strong );
    if ( e.size() >= 1 )
      CHECK( s.size() >= 1 );
    if ( e.size() >= 2 )
      CHECK( s.size() >= 2 );
  }
}

TEST_CASE( "variable sets" )
{
  CHECK( parse_varset( "2,3" ) == VarSet{ 2, 3 } );
  CHECK( parse_varset( "{1, 4}" ) == VarSet{ 1, 4 } );
  CHECK( ( VarSet{ 1, 2 } | VarSet{ 3 } ).to_string() == "{1,2,3}" );
  CHECK_THROWS_AS( parse_varset( "0" ), std::out_of_range );
  CHECK_THROWS_AS( parse_varset( "a" ), std::invalid_argument );
}

TEST_CASE( "oversized tables are refused" )
{
  CHECK_THROWS_AS( KFunction::constant( 2, 40, 0 ), budget_exceeded );
  CHECK_THROWS_AS( KFunction( 2, 2, { 0, 1, 2, 0 } ), std::invalid_argument );
  CHECK_THROWS_AS( KFunction( 2, 2, { 0, 1 } ), std::invalid_argument );
}
