#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <fnclass/cli.hpp>

using namespace fnclass;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run( std::vector<std::string> args )
{
  args.insert( args.begin(), "fnclass" );
  std::vector<const char*> argv;
  for ( const auto& a : args )
    argv.push_back( a.c_str() );
  std::ostringstream out, err;
  const int code = run_cli( static_cast<int>( argv.size() ), argv.data(), out, err );
  return { code, out.str(), err.str() };
}

bool has( const std::string& text, const std::string& part ) { return text.find( part ) != std::string::npos; }

std::size_t lines( const std::string& text ) { return std::count( text.begin(), text.end(), '\n' ); }

} // namespace

TEST_CASE( "analyze" )
{
  const auto r = run( { "analyze", "--expr", "x1*x2 + x1^0*x3", "--set", "2,3" } );
  CHECK( r.code == exit_ok );
  CHECK( has( r.out, "sub: 11 " ) );
  CHECK( has( r.out, "sep: 6 " ) );
  CHECK( has( r.out, "imp: 28\n" ) );
  CHECK( has( r.out, "dis {2,3}: {1}" ) );
  CHECK( has( r.out, "s-systems: {1}" ) );

  const auto hex = run( { "analyze", "--table", "d8", "--k", "2", "--n", "3", "--set", "2,3" } );
  CHECK( hex.out == r.out );

  const auto zero = run( { "analyze", "--expr", "0", "--format", "json" } );
  const auto j = nlohmann::json::parse( zero.out );
  CHECK( j["imp"] == 1 );
  CHECK( j["essential"].empty() );

  const auto csv = run( { "analyze", "--expr", "x1*x2 + x1*x3", "--format", "csv" } );
  CHECK( lines( csv.out ) == 2 );
}

TEST_CASE( "diagram" )
{
  const auto g = run( { "diagram", "--expr", "x1*x2 + x1^0*x3", "--ordering", "1,2,3" } );
  CHECK( g.code == exit_ok );
  CHECK( has( g.out, "depth: 3\n" ) );
  CHECK( has( g.out, "imp: 4\n" ) );
  CHECK( has( g.out, "digraph" ) );
  const auto f = run( { "diagram", "--expr", "x1*x2 + x1*x3", "--ordering", "1,2,3" } );
  CHECK( has( f.out, "depth: 4\n" ) );
  CHECK( has( f.out, "imp: 5\n" ) );

  const auto dot = std::filesystem::temp_directory_path() / "fnclass-test.dot";
  const auto c = run( { "diagram", "--expr", "1", "--n", "2", "--out", dot.string() } );
  CHECK( c.code == exit_ok );
  std::ifstream is( dot );
  const std::string text( ( std::istreambuf_iterator<char>( is ) ), {} );
  CHECK( has( text, "shape=box" ) );
  CHECK_FALSE( has( text, "shape=circle" ) );
  std::filesystem::remove( dot );

  CHECK( run( { "diagram", "--expr", "x1*x2", "--ordering", "1,3" } ).code == exit_usage );
}

TEST_CASE( "classify" )
{
  const auto sep = run( { "classify", "--k", "2", "--n", "3", "--relation", "sep" } );
  CHECK( sep.code == exit_ok );
  CHECK( lines( sep.out ) == 6 );
  const auto imp = run( { "classify", "--n", "4", "--relation", "imp", "--format", "json" } );
  CHECK( nlohmann::json::parse( imp.out )["classes"].size() == 104 );
  const auto ge = run( { "classify", "--n", "3", "--group", "ge" } );
  CHECK( lines( ge.out ) == 15 );
  CHECK( has( ge.out, "canonical" ) );

  const auto dir = std::filesystem::temp_directory_path() / "fnclass-cli-cache";
  std::filesystem::remove_all( dir );
  const auto prefix = ( dir / "sep3" ).string();
  std::filesystem::create_directories( dir );
  const auto first = run( { "classify", "--n", "3", "--relation", "sub", "--cache-dir", dir.string(), "--resume",
                            "--out", prefix } );
  CHECK( first.code == exit_ok );
  CHECK( std::filesystem::exists( prefix + ".csv" ) );
  CHECK( std::filesystem::exists( prefix + ".json" ) );
  const auto warm = run( { "classify", "--n", "3", "--relation", "sub", "--cache-dir", dir.string(), "--resume" } );
  const auto cold = run( { "classify", "--n", "3", "--relation", "sub" } );
  CHECK( warm.out == cold.out );
  bool cached = false;
  for ( const auto& e : std::filesystem::directory_iterator( dir ) )
    cached = cached || e.path().extension() == ".bin";
  CHECK( cached );
  std::filesystem::remove_all( dir );

  CHECK( run( { "classify", "--n", "5", "--relation", "imp" } ).code == exit_budget );
  CHECK( run( { "classify", "--n", "3", "--relation", "nope" } ).code == exit_usage );
  CHECK( run( { "classify", "--n", "3", "--group", "lg", "--k", "4" } ).code == exit_usage );
}

TEST_CASE( "verify" )
{
  const auto ok = run( { "verify", "--k", "2", "--n", "3" } );
  CHECK( ok.code == exit_ok );
  CHECK_FALSE( has( ok.out, "FAIL" ) );
  CHECK( has( ok.out, "PASS separable-iff-implementation-suffix" ) );
  const auto mutant = run( { "verify", "--k", "2", "--n", "2", "--mutant" } );
  CHECK( mutant.code == exit_failure );
  CHECK( has( mutant.out, "FAIL labels-equal-essential" ) );
  const auto sampled = run( { "verify", "--n", "4", "--samples", "200", "--seed", "9", "--format", "json" } );
  CHECK( sampled.code == exit_ok );
  CHECK( nlohmann::json::parse( sampled.out )["samples"] == 200 );
  CHECK( run( { "verify", "--n", "4", "--samples", "200", "--seed", "9", "--format", "json" } ).out == sampled.out );
}

TEST_CASE( "tables" )
{
  const auto t1 = run( { "tables", "table1", "--diff" } );
  CHECK( t1.code == exit_ok );
  CHECK( has( t1.err, "table1: matches" ) );
  CHECK( run( { "tables", "table9" } ).code == exit_usage );
}

TEST_CASE( "parse" )
{
  const auto p = run( { "parse", "--expr", "x1x2 ⊕ x1^0x3" } );
  CHECK( p.code == exit_ok );
  CHECK( has( p.out, "table: d8" ) );
  const auto bad = run( { "parse", "--expr", "x1 + y" } );
  CHECK( bad.code == exit_usage );
  CHECK( has( bad.err, "position 5" ) );
}

TEST_CASE( "usage and environment" )
{
  CHECK( run( {} ).code == exit_usage );
  CHECK( run( { "frobnicate" } ).code == exit_usage );
  CHECK( run( { "analyze", "--expr", "x1", "--table", "2", "--n", "1" } ).code == exit_usage );
  CHECK( run( { "analyze", "--k", "1", "--expr", "x1" } ).code == exit_usage );
  const auto help = run( { "--help" } );
  CHECK( help.code == exit_ok );
  CHECK( has( help.out, "classify" ) );

  const auto dir = std::filesystem::temp_directory_path() / "fnclass-env-cache";
  std::filesystem::remove_all( dir );
  std::filesystem::create_directories( dir );
  ::setenv( "FNCLASS_CACHE", dir.string().c_str(), 1 );
  const auto r = run( { "classify", "--n", "2", "--relation", "imp", "--cache-dir", "/nonexistent/ignored" } );
  ::unsetenv( "FNCLASS_CACHE" );
  CHECK( r.code == exit_ok );
  CHECK_FALSE( std::filesystem::is_empty( dir ) );
  std::filesystem::remove_all( dir );
}
