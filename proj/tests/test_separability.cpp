#include <doctest.h>

#include <random>

#include <fnclass/kfunction.hpp>
#include <fnclass/separability.hpp>
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

std::set<std::set<int>> as_sets( const std::vector<VarSet>& v )
{
  std::set<std::set<int>> r;
  for ( auto s : v )
    r.insert( as_set( s ) );
  return r;
}

std::set<KFunction> parse_all( std::initializer_list<const char*> exprs )
{
  std::set<KFunction> r;
  for ( auto e : exprs )
    r.insert( parse_expression( e, 2, 3 ) );
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

TEST_CASE( "subfunctions of the worked examples" )
{
  const auto sf = subfunctions( f );
  const auto sg = subfunctions( g );
  CHECK( std::set<KFunction>( sf.begin(), sf.end() ) ==
         parse_all( { "0", "1", "x1", "x2", "x3", "x2^0", "x3^0", "x2 + x3", "x1*x2", "x1*x2^0", "x1*x3", "x1*x3^0",
                      "x1*x2 + x1*x3" } ) );
  CHECK( std::set<KFunction>( sg.begin(), sg.end() ) ==
         parse_all( { "0", "1", "x1", "x2", "x3", "x1^0", "x1*x2", "x1^0*x3", "x1 + x1^0*x3", "x1*x2 + x1^0",
                      "x1*x2 + x1^0*x3" } ) );
  CHECK( sf.size() == 13 );
  CHECK( sg.size() == 11 );
}

TEST_CASE( "separable sets of the worked examples" )
{
  CHECK( separable_sets( f ).size() == 7 );
  CHECK( as_sets( separable_sets( g ) ) == std::set<std::set<int>>{ { 1 }, { 2 }, { 3 }, { 1, 2 }, { 1, 3 }, { 1, 2, 3 } } );
  CHECK( sep_vector( g ) == std::vector<std::uint64_t>{ 3, 2, 1 } );
  CHECK_FALSE( is_separable( g, { 2, 3 } ) );
  CHECK( is_separable( f, { 2, 3 } ) );

  const auto dis = distributive_sets( { 2, 3 }, g );
  CHECK( dis.sets() == std::vector<VarSet>{ VarSet{ 1 } } );
  CHECK( s_systems( dis ) == std::vector<VarSet>{ VarSet{ 1 } } );
  CHECK( distributive_sets( { 2, 3 }, f ).empty() );
}

TEST_CASE( "profiles agree with closure oracles" )
{
  std::mt19937_64 rng( 3 );
  for ( int r = 0; r < 200; ++r )
  {
    const int k = r % 3 == 0 ? 3 : 2;
    const int n = k == 3 ? 2 + r % 2 : 2 + r % 3;
    const auto h = random_function( rng, k, n );
    const auto subs = subfunctions( h );
    CHECK( std::set<KFunction>( subs.begin(), subs.end() ) == oracle::subfunctions( h ) );
    CHECK( sub_vector( h ) == oracle::sub_vector( h ) );
    CHECK( as_sets( separable_sets( h ) ) == oracle::separable( h ) );
    CHECK( sep_vector( h ) == oracle::sep_vector( h ) );
  }
}

TEST_CASE( "distributive sets and s-systems agree with the definitions" )
{
  std::mt19937_64 rng( 5 );
  int inseparable = 0;
  for ( int r = 0; r < 2000; ++r )
  {
    const auto h = random_function( rng, 2, 3 + r % 2 );
    const auto e = essential_set( h );
    const auto em = e.members();
    for ( std::uint32_t mask = 1; mask < ( 1u << em.size() ); ++mask )
    {
      VarSet M;
      for ( std::size_t b = 0; b < em.size(); ++b )
        if ( ( mask >> b ) & 1u )
          M.insert( em[b] );
      if ( M == e || is_separable( h, M ) )
        continue;
      ++inseparable;
      const auto Mset = as_set( M );
      const auto dis = distributive_sets( M, h );
      CHECK( as_sets( dis.sets() ) == oracle::distributive_sets( h, Mset ) );
      std::vector<std::set<int>> fam;
      for ( auto J : dis.sets() )
        fam.push_back( as_set( J ) );
      const auto systems = s_systems( dis );
      CHECK( as_sets( systems ) == oracle::s_systems( fam ) );
      CHECK( as_sets( minimal_transversals( dis ) ) == oracle::s_systems( fam ) );
      CHECK_FALSE( systems.empty() );
      for ( auto beta : systems )
      {
        // extending M by an s-system makes it separable, and no proper part does
        CHECK( is_separable( h, M | beta ) );
        for ( int x : beta.members() )
          CHECK_FALSE( is_separable( h, M | ( beta - VarSet{ x } ) ) );
      }
    }
  }
  CHECK( inseparable > 100 );
}

TEST_CASE( "the all-blocking reading contains the minimal one" )
{
  std::mt19937_64 rng( 9 );
  for ( int r = 0; r < 200; ++r )
  {
    const auto h = random_function( rng, 2, 4 );
    const auto e = essential_set( h );
    const auto em = e.members();
    for ( std::uint32_t mask = 1; mask < ( 1u << em.size() ); ++mask )
    {
      VarSet M;
      for ( std::size_t b = 0; b < em.size(); ++b )
        if ( ( mask >> b ) & 1u )
          M.insert( em[b] );
      if ( M == e || is_separable( h, M ) )
        continue;
      const auto minimal = distributive_sets( M, h );
      const auto all = distributive_sets( M, h, DisReading::all_blocking );
      for ( auto J : minimal.sets() )
        CHECK( std::find( all.sets().begin(), all.sets().end(), J ) != all.sets().end() );
      for ( auto J : all.sets() )
        CHECK( is_blocking( h, M, J ) );
      // both readings have the same minimal transversals
      CHECK( minimal_transversals( minimal ) == minimal_transversals( all ) );
    }
  }
}

TEST_CASE( "s-systems of plain set families" )
{
  const SetFamily F( { VarSet{ 1, 2 }, VarSet{ 2, 3 }, VarSet{ 3, 4 } } );
  const std::vector<std::set<int>> fam{ { 1, 2 }, { 2, 3 }, { 3, 4 } };
  CHECK( as_sets( s_systems( F ) ) == oracle::s_systems( fam ) );
  CHECK( as_sets( s_systems( F ) ) == std::set<std::set<int>>{ { 1, 3 }, { 2, 3 }, { 2, 4 } } );
  CHECK( s_systems( SetFamily{} ) == std::vector<VarSet>{ VarSet{} } );
}

TEST_CASE( "subfunction chains" )
{
  std::mt19937_64 rng( 13 );
  for ( int r = 0; r < 100; ++r )
  {
    const auto h = random_function( rng, 2, 4 );
    for ( const auto& s : subfunctions( h ) )
    {
      CHECK( is_subfunction( s, h ) );
      const auto chain = subfunction_chain( h, s );
      REQUIRE( !chain.empty() );
      CHECK( chain.front() == s );
      CHECK( chain.back() == h );
      for ( std::size_t i = 0; i < chain.size(); ++i )
        CHECK( ess( chain[i] ) == ess( s ) + static_cast<int>( i ) );
      for ( std::size_t i = 0; i + 1 < chain.size(); ++i )
      {
        // each link fixes one essential variable
        bool simple = false;
        for ( int x : oracle::essential_vars( chain[i + 1] ) )
          for ( int c = 0; c < 2; ++c )
            simple = simple || oracle::fix( chain[i + 1], x, static_cast<Value>( c ) ) == chain[i];
        CHECK( simple );
      }
    }
  }
}
