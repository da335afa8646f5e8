#include "fnclass/sep_scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <random>
#include <thread>

#include "fnclass/separability.hpp"

namespace fnclass
{

namespace
{

constexpr char magic[8] = { 'F', 'N', 'C', 'L', 'S', 'E', 'P', '1' };
constexpr std::uint32_t format_version = 1;
constexpr std::uint64_t half_space = std::uint64_t{ 1 } << 31;
constexpr std::uint32_t no_rep = std::numeric_limits<std::uint32_t>::max();

std::atomic<bool> g_interrupted{ false };

extern "C" void on_sigint( int )
{
  g_interrupted.store( true );
}

struct ScanState
{
  std::uint64_t chunk = 0;
  std::uint64_t next_chunk = 0;
  std::array<std::uint64_t, bits::sep_key_space> counts{};
  std::array<std::uint32_t, bits::sep_key_space> reps;

  ScanState() { reps.fill( no_rep ); }
};

template<class T>
void put( std::ostream& os, T v )
{
  for ( std::size_t i = 0; i < sizeof( T ); ++i )
    os.put( static_cast<char>( ( static_cast<std::uint64_t>( v ) >> ( 8 * i ) ) & 0xffu ) );
}

template<class T>
T get( std::istream& is )
{
  std::uint64_t v = 0;
  for ( std::size_t i = 0; i < sizeof( T ); ++i )
  {
    const int c = is.get();
    if ( c == EOF )
      throw std::runtime_error( "truncated checkpoint" );
    v |= static_cast<std::uint64_t>( static_cast<unsigned char>( c ) ) << ( 8 * i );
  }
  return static_cast<T>( v );
}

void save( const ScanState& s, const std::filesystem::path& path )
{
  if ( path.empty() )
    return;
  if ( path.has_parent_path() )
    std::filesystem::create_directories( path.parent_path() );
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os( tmp, std::ios::binary | std::ios::trunc );
    if ( !os )
      throw std::runtime_error( "cannot write checkpoint " + tmp.string() );
    os.write( magic, sizeof( magic ) );
    put<std::uint32_t>( os, format_version );
    put<std::uint64_t>( os, s.chunk );
    put<std::uint64_t>( os, s.next_chunk );
    const auto used = std::count_if( s.counts.begin(), s.counts.end(), []( auto c ) { return c != 0; } );
    put<std::uint64_t>( os, static_cast<std::uint64_t>( used ) );
    for ( std::size_t key = 0; key < s.counts.size(); ++key )
      if ( s.counts[key] )
      {
        put<std::uint16_t>( os, static_cast<std::uint16_t>( key ) );
        put<std::uint64_t>( os, s.counts[key] );
        put<std::uint32_t>( os, s.reps[key] );
      }
    if ( !os )
      throw std::runtime_error( "failed writing checkpoint " + tmp.string() );
  }
  std::filesystem::rename( tmp, path );
}

std::optional<ScanState> load( const std::filesystem::path& path )
{
  std::ifstream is( path, std::ios::binary );
  if ( !is )
    return std::nullopt;
  char head[8];
  is.read( head, sizeof( head ) );
  if ( !is || !std::equal( head, head + 8, magic ) )
    throw std::runtime_error( path.string() + " is not a sep scan checkpoint" );
  if ( get<std::uint32_t>( is ) != format_version )
    throw std::runtime_error( path.string() + " has an unsupported checkpoint version" );
  ScanState s;
  s.chunk = get<std::uint64_t>( is );
  s.next_chunk = get<std::uint64_t>( is );
  const auto used = get<std::uint64_t>( is );
  if ( used > bits::sep_key_space )
    throw std::runtime_error( "corrupt checkpoint" );
  for ( std::uint64_t r = 0; r < used; ++r )
  {
    const auto key = get<std::uint16_t>( is );
    if ( key >= bits::sep_key_space )
      throw std::runtime_error( "corrupt checkpoint" );
    s.counts[key] = get<std::uint64_t>( is );
    s.reps[key] = get<std::uint32_t>( is );
  }
  return s;
}

void scan_range( std::uint32_t first, std::uint64_t count, std::array<std::uint64_t, bits::sep_key_space>& counts,
                 std::array<std::uint32_t, bits::sep_key_space>& reps )
{
  constexpr std::size_t block = 1 << 14;
  std::vector<bits::SepKey> keys( block );
  for ( std::uint64_t done = 0; done < count; done += block )
  {
    const auto n = static_cast<std::size_t>( std::min<std::uint64_t>( block, count - done ) );
    const auto base = static_cast<std::uint32_t>( first + done );
    bits::sep_keys_range( base, n, keys.data() );
    for ( std::size_t i = 0; i < n; ++i )
    {
      const auto key = keys[i];
      if ( counts[key]++ == 0 )
        reps[key] = std::min( reps[key], static_cast<std::uint32_t>( base + i ) );
    }
  }
}

struct SigintGuard
{
  using Handler = void ( * )( int );
  Handler previous;
  SigintGuard()
  {
    g_interrupted.store( false );
    previous = std::signal( SIGINT, on_sigint );
  }
  ~SigintGuard() { std::signal( SIGINT, previous ); }
};

} // namespace

ClassificationReport sep_scan_p2_5( const SepScanOptions& options )
{
  if ( options.chunk == 0 || half_space % options.chunk != 0 )
    throw std::invalid_argument( "chunk size must divide 2^31" );

  ScanState state;
  state.chunk = options.chunk;
  if ( options.resume && !options.checkpoint.empty() )
    if ( auto loaded = load( options.checkpoint ) )
    {
      if ( loaded->chunk != options.chunk )
        throw std::runtime_error( "checkpoint was written with a different chunk size" );
      state = *loaded;
    }

  const auto chunks = half_space / options.chunk;
  const auto start = std::chrono::steady_clock::now();
  const unsigned jobs = std::max( 1u, options.jobs );
  SigintGuard guard;

  while ( state.next_chunk < chunks )
  {
    const auto first = state.next_chunk * options.chunk;
    const auto per_job = ( options.chunk + jobs - 1 ) / jobs;
    std::vector<std::array<std::uint64_t, bits::sep_key_space>> counts( jobs );
    std::vector<std::array<std::uint32_t, bits::sep_key_space>> reps( jobs );
    {
      std::vector<std::jthread> pool;
      for ( unsigned j = 0; j < jobs; ++j )
      {
        counts[j].fill( 0 );
        reps[j].fill( no_rep );
        const auto lo = std::min( options.chunk, j * per_job );
        const auto hi = std::min( options.chunk, lo + per_job );
        if ( lo < hi )
          pool.emplace_back( [&, j, lo, hi] {
            scan_range( static_cast<std::uint32_t>( first + lo ), hi - lo, counts[j], reps[j] );
          } );
      }
    }
    for ( unsigned j = 0; j < jobs; ++j )
      for ( std::size_t key = 0; key < bits::sep_key_space; ++key )
      {
        state.counts[key] += counts[j][key];
        state.reps[key] = std::min( state.reps[key], reps[j][key] );
      }
    ++state.next_chunk;
    save( state, options.checkpoint );
    if ( options.progress )
      options.progress( state.next_chunk * options.chunk, half_space );

    if ( g_interrupted.load() )
      throw budget_exceeded( "sep scan interrupted after " + std::to_string( state.next_chunk ) + "/" +
                             std::to_string( chunks ) + " chunks; progress saved" );
    const double elapsed = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
    if ( options.budget_seconds > 0 && elapsed > options.budget_seconds && state.next_chunk < chunks )
      throw budget_exceeded( "sep scan budget exhausted after " + std::to_string( state.next_chunk ) + "/" +
                             std::to_string( chunks ) + " chunks; progress saved" );
  }

  ClassificationReport report;
  report.relation = "sep";
  report.k = 2;
  report.n = 5;
  for ( std::size_t key = 0; key < bits::sep_key_space; ++key )
  {
    if ( !state.counts[key] )
      continue;
    const auto sep = bits::unpack_sep_key( static_cast<bits::SepKey>( key ) );
    std::vector<std::uint64_t> v( sep.begin(), sep.end() );
    std::string k = "p:";
    for ( std::size_t i = 0; i < v.size(); ++i )
      k += ( i ? "," : "" ) + std::to_string( v[i] );
    const auto rep = from_numeral( 2, 5, state.reps[key] );
    report.classes.push_back( { k, 2 * state.counts[key], rep, complexity_profile( rep ) } );
    report.total += 2 * state.counts[key];
  }
  std::sort( report.classes.begin(), report.classes.end(), []( const auto& a, const auto& b ) {
    const auto& x = a.profile.sep;
    const auto& y = b.profile.sep;
    return std::lexicographical_compare( x.rbegin(), x.rend(), y.rbegin(), y.rend() );
  } );
  return report;
}

std::optional<double> sep_scan_progress( const std::filesystem::path& checkpoint )
{
  try
  {
    auto s = load( checkpoint );
    if ( !s || s->chunk == 0 )
      return std::nullopt;
    return static_cast<double>( s->next_chunk * s->chunk ) / static_cast<double>( half_space );
  }
  catch ( const std::exception& )
  {
    return std::nullopt;
  }
}

std::map<bits::SepKey, std::uint64_t> sample_sep_profiles( std::uint64_t samples, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::map<bits::SepKey, std::uint64_t> out;
  for ( std::uint64_t s = 0; s < samples; ++s )
    ++out[bits::sep_key_word( static_cast<std::uint32_t>( rng() ) )];
  return out;
}

std::uint64_t sep_kernel_mismatches( std::uint64_t samples, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  std::uint64_t bad = 0;
  for ( std::uint64_t s = 0; s < samples; ++s )
  {
    const auto t = static_cast<std::uint32_t>( rng() );
    const auto generic = sep_vector( bits::from_word( t, 5 ) );
    std::array<int, 5> sep{};
    for ( int i = 0; i < 5; ++i )
      sep[i] = static_cast<int>( generic[i] );
    if ( bits::pack_sep_key( sep ) != bits::sep_key_word( t ) )
      ++bad;
  }
  return bad;
}

} // namespace fnclass
