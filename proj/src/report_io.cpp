#include "fnclass/report_io.hpp"

#include <fstream>
#include <sstream>

namespace fnclass
{

namespace
{

constexpr char magic[8] = { 'F', 'N', 'C', 'L', 'R', 'P', 'T', '1' };

std::string join( const std::vector<std::uint64_t>& v, char sep )
{
  std::string s;
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    if ( i )
      s += sep;
    s += std::to_string( v[i] );
  }
  return s;
}

template<class T>
void put( std::ostream& os, T v )
{
  for ( std::size_t i = 0; i < sizeof( T ); ++i )
    os.put( static_cast<char>( ( static_cast<std::uint64_t>( v ) >> ( 8 * i ) ) & 0xffu ) );
}

void put_string( std::ostream& os, const std::string& s )
{
  put<std::uint32_t>( os, static_cast<std::uint32_t>( s.size() ) );
  os.write( s.data(), static_cast<std::streamsize>( s.size() ) );
}

void put_vector( std::ostream& os, const std::vector<std::uint64_t>& v )
{
  put<std::uint32_t>( os, static_cast<std::uint32_t>( v.size() ) );
  for ( auto x : v )
    put<std::uint64_t>( os, x );
}

template<class T>
T get( std::istream& is )
{
  std::uint64_t v = 0;
  for ( std::size_t i = 0; i < sizeof( T ); ++i )
  {
    const int c = is.get();
    if ( c == EOF )
      throw std::runtime_error( "truncated report file" );
    v |= static_cast<std::uint64_t>( static_cast<unsigned char>( c ) ) << ( 8 * i );
  }
  return static_cast<T>( v );
}

std::string get_string( std::istream& is )
{
  const auto len = get<std::uint32_t>( is );
  if ( len > ( 1u << 20 ) )
    throw std::runtime_error( "corrupt report file" );
  std::string s( len, '\0' );
  is.read( s.data(), len );
  if ( !is )
    throw std::runtime_error( "truncated report file" );
  return s;
}

std::vector<std::uint64_t> get_vector( std::istream& is )
{
  const auto len = get<std::uint32_t>( is );
  if ( len > 64 )
    throw std::runtime_error( "corrupt report file" );
  std::vector<std::uint64_t> v( len );
  for ( auto& x : v )
    x = get<std::uint64_t>( is );
  return v;
}

} // namespace

nlohmann::json profile_json( const KFunction& f, const ComplexityProfile& p )
{
  return { { "k", f.k() }, { "n", f.n() }, { "table", format_table( f ) },
           { "imp", p.imp }, { "sub", p.sub },  { "sep", p.sep } };
}

std::string profile_csv_header()
{
  return "k,n,table,imp,sub,sep,sub_vector,sep_vector";
}

std::string profile_csv_row( const KFunction& f, const ComplexityProfile& p )
{
  std::ostringstream os;
  os << f.k() << ',' << f.n() << ",\"" << format_table( f ) << "\"," << p.imp << ',' << p.sub_total() << ','
     << p.sep_total() << ',' << join( p.sub, ' ' ) << ',' << join( p.sep, ' ' );
  return os.str();
}

nlohmann::json implementations_json( const std::vector<Implementation>& imps )
{
  auto out = nlohmann::json::array();
  for ( const auto& i : imps )
    out.push_back( { { "vars", i.var_word() }, { "consts", i.const_word() } } );
  return out;
}

nlohmann::json report_json( const ClassificationReport& report )
{
  auto classes = nlohmann::json::array();
  for ( std::size_t i = 0; i < report.classes.size(); ++i )
  {
    const auto& c = report.classes[i];
    classes.push_back( { { "class", i + 1 },
                         { "key", c.key },
                         { "size", c.size },
                         { "representative", format_table( c.representative ) },
                         { "imp", c.profile.imp },
                         { "sub", c.profile.sub_total() },
                         { "sep", c.profile.sep_total() },
                         { "sub_vector", c.profile.sub },
                         { "sep_vector", c.profile.sep } } );
  }
  return { { "relation", report.relation }, { "k", report.k },     { "n", report.n },
           { "total", report.total },       { "classes", classes } };
}

std::string report_csv( const ClassificationReport& report )
{
  std::ostringstream os;
  os << "class,size,imp,sub,sep";
  for ( int m = 1; m <= report.n; ++m )
    os << ",sep_" << m;
  os << ",representative\n";
  for ( std::size_t i = 0; i < report.classes.size(); ++i )
  {
    const auto& c = report.classes[i];
    os << i + 1 << ',' << c.size << ',' << c.profile.imp << ',' << c.profile.sub_total() << ','
       << c.profile.sep_total();
    for ( auto s : c.profile.sep )
      os << ',' << s;
    os << ',' << format_table( c.representative ) << '\n';
  }
  return os.str();
}

std::string transversal_csv( const std::vector<OrbitRecord>& orbits )
{
  std::ostringstream os;
  os << "canonical_hex,orbit_size\n";
  for ( const auto& o : orbits )
    os << format_table( o.representative ) << ',' << o.size << '\n';
  return os.str();
}

void write_report( const ClassificationReport& report, const std::filesystem::path& path )
{
  if ( path.has_parent_path() )
    std::filesystem::create_directories( path.parent_path() );
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os( tmp, std::ios::binary | std::ios::trunc );
    if ( !os )
      throw std::runtime_error( "cannot write " + tmp.string() );
    os.write( magic, sizeof( magic ) );
    put<std::uint32_t>( os, code_version );
    put<std::uint32_t>( os, static_cast<std::uint32_t>( report.k ) );
    put<std::uint32_t>( os, static_cast<std::uint32_t>( report.n ) );
    put_string( os, report.relation );
    put<std::uint64_t>( os, report.total );
    put<std::uint64_t>( os, report.classes.size() );
    for ( const auto& c : report.classes )
    {
      put_string( os, c.key );
      put<std::uint64_t>( os, c.size );
      put<std::uint64_t>( os, numeral( c.representative ) );
      put<std::uint64_t>( os, c.profile.imp );
      put_vector( os, c.profile.sub );
      put_vector( os, c.profile.sep );
    }
    put<std::uint64_t>( os, report.membership.size() );
    for ( auto m : report.membership )
      put<std::uint32_t>( os, m );
    if ( !os )
      throw std::runtime_error( "failed writing " + tmp.string() );
  }
  std::filesystem::rename( tmp, path );
}

ClassificationReport read_report( const std::filesystem::path& path )
{
  std::ifstream is( path, std::ios::binary );
  if ( !is )
    throw std::runtime_error( "cannot open " + path.string() );
  char head[8];
  is.read( head, sizeof( head ) );
  if ( !is || !std::equal( head, head + 8, magic ) )
    throw std::runtime_error( path.string() + " is not a report file" );
  if ( get<std::uint32_t>( is ) != static_cast<std::uint32_t>( code_version ) )
    throw std::runtime_error( path.string() + " was written by another code version" );
  ClassificationReport r;
  r.k = static_cast<int>( get<std::uint32_t>( is ) );
  r.n = static_cast<int>( get<std::uint32_t>( is ) );
  r.relation = get_string( is );
  r.total = get<std::uint64_t>( is );
  const auto count = get<std::uint64_t>( is );
  if ( count > r.total )
    throw std::runtime_error( "corrupt report file" );
  for ( std::uint64_t i = 0; i < count; ++i )
  {
    ClassRecord c{ get_string( is ), 0, KFunction::constant( r.k, r.n, 0 ), {} };
    c.size = get<std::uint64_t>( is );
    c.representative = from_numeral( r.k, r.n, get<std::uint64_t>( is ) );
    c.profile.imp = get<std::uint64_t>( is );
    c.profile.sub = get_vector( is );
    c.profile.sep = get_vector( is );
    r.classes.push_back( std::move( c ) );
  }
  const auto members = get<std::uint64_t>( is );
  if ( members != 0 && members != r.total )
    throw std::runtime_error( "corrupt report file" );
  r.membership.resize( members );
  for ( auto& m : r.membership )
    m = get<std::uint32_t>( is );
  return r;
}

std::filesystem::path ReportCache::path_for( int k, int n, const std::string& relation ) const
{
  return dir_ / ( relation + "-k" + std::to_string( k ) + "-n" + std::to_string( n ) + "-v" +
                  std::to_string( code_version ) + ".bin" );
}

std::optional<ClassificationReport> ReportCache::load( int k, int n, const std::string& relation ) const
{
  const auto p = path_for( k, n, relation );
  if ( !std::filesystem::exists( p ) )
    return std::nullopt;
  try
  {
    return read_report( p );
  }
  catch ( const std::exception& )
  {
    return std::nullopt;
  }
}

void ReportCache::store( const ClassificationReport& report ) const
{
  write_report( report, path_for( report.k, report.n, report.relation ) );
}

} // namespace fnclass
