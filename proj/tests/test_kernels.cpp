#include <doctest.h>

#include <filesystem>
#include <random>

#include <fnclass/bit_kernels.hpp>
#include <fnclass/reference_tables.hpp>
#include <fnclass/sep_scan.hpp>
#include <fnclass/separability.hpp>

#include "oracles.hpp"

using namespace fnclass;

TEST_CASE( "word kernels agree with the closure oracles" )
{
  std::mt19937_64 rng( 59 );
  for ( int r = 0; r < 400; ++r )
  {
    const int n = 1 + r % 5;
    const auto f = bits::from_word( static_cast<std::uint32_t>( rng() ), n );
    const auto w = bits::to_word( f );
    CHECK( bits::sep_vector_word( w, n ) == oracle::sep_vector( f ) );
    CHECK( bits::sub_vector_word( w, n ) == oracle::sub_vector( f ) );
    std::uint32_t ess_mask = 0;
    for ( int i : oracle::essential_vars( f ) )
      ess_mask |= 1u << ( i - 1 );
    CHECK( bits::essential_mask_word( w ) == ess_mask );
    for ( int i = 1; i <= n; ++i )
      for ( Value c : { Value{ 0 }, Value{ 1 } } )
        CHECK( bits::from_word( bits::cofactor_word( w, i, c ), n ) == oracle::fix( f, i, c ) );
  }
}

TEST_CASE( "vectorized key scan matches the scalar kernel" )
{
  std::vector<std::uint16_t> keys( 4096 );
  for ( std::uint32_t first : { 0u, 0x12345678u, 0xfffff000u } )
  {
    bits::sep_keys_range( first, keys.size(), keys.data() );
    for ( std::size_t i = 0; i < keys.size(); ++i )
      CHECK( keys[i] == bits::sep_key_word( static_cast<std::uint32_t>( first + i ) ) );
  }
  CHECK( sep_kernel_mismatches( 2000, 3 ) == 0 );
}

TEST_CASE( "sep keys pack the five-variable profile" )
{
  const auto key = bits::pack_sep_key( { 5, 10, 10, 5, 1 } );
  CHECK( bits::unpack_sep_key( key ) == std::array<int, 5>{ 5, 10, 10, 5, 1 } );
  CHECK( bits::pack_sep_key( { 0, 0, 0, 0, 0 } ) == 0 );
}

TEST_CASE( "sampled profiles are among the published ones" )
{
  std::set<std::array<int, 5>> published;
  for ( const auto& row : reference::table5() )
    published.insert( row.sep );
  CHECK( published.size() == 38 );
  std::uint64_t total = 0;
  for ( const auto& row : reference::table5() )
    total += row.size;
  CHECK( total == ( std::uint64_t{ 1 } << 32 ) );
  for ( const auto& [key, count] : sample_sep_profiles( 20000, 5 ) )
  {
    CHECK( count > 0 );
    CHECK( published.contains( bits::unpack_sep_key( key ) ) );
  }
}

TEST_CASE( "scan stops on budget and resumes from its checkpoint" )
{
  const auto dir = std::filesystem::temp_directory_path() / "fnclass-test-scan";
  std::filesystem::remove_all( dir );
  std::filesystem::create_directories( dir );
  SepScanOptions options;
  options.checkpoint = dir / "scan.ckpt";
  options.chunk = std::uint64_t{ 1 } << 18;
  options.budget_seconds = 0.05;
  CHECK_THROWS_AS( sep_scan_p2_5( options ), budget_exceeded );
  const auto first = sep_scan_progress( options.checkpoint );
  REQUIRE( first );
  CHECK( *first > 0 );
  CHECK( *first < 1 );
  CHECK_THROWS_AS( sep_scan_p2_5( options ), budget_exceeded );
  const auto second = sep_scan_progress( options.checkpoint );
  REQUIRE( second );
  CHECK( *second > *first );

  options.resume = false;
  options.chunk = 3;
  CHECK_THROWS_AS( sep_scan_p2_5( options ), std::invalid_argument );
  CHECK_FALSE( sep_scan_progress( dir / "missing.ckpt" ) );
  std::filesystem::remove_all( dir );
}
