#include "fnclass/kfunction.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace fnclass
{

namespace
{

std::atomic<std::uint64_t> g_cell_limit{ std::uint64_t{ 1 } << 32 };

int hex_digit( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

void check_var( const KFunction& f, int var )
{
  if ( var < 1 || var > f.n() )
    throw std::out_of_range( "variable index " + std::to_string( var ) + " outside 1.." + std::to_string( f.n() ) );
}

void check_value( const KFunction& f, Value c )
{
  if ( c >= f.k() )
    throw std::out_of_range( "constant " + std::to_string( c ) + " is not in Z_" + std::to_string( f.k() ) );
}

} // namespace

/* VarSet */

VarSet::VarSet( std::initializer_list<int> vars )
{
  for ( int v : vars )
    insert( v );
}

VarSet VarSet::from_members( std::span<const int> vars )
{
  VarSet s;
  for ( int v : vars )
    s.insert( v );
  return s;
}

void VarSet::insert( int i )
{
  if ( i < 1 || i > 32 )
    throw std::out_of_range( "variable index " + std::to_string( i ) + " outside 1..32" );
  bits_ |= 1u << ( i - 1 );
}

void VarSet::erase( int i )
{
  if ( i >= 1 && i <= 32 )
    bits_ &= ~( 1u << ( i - 1 ) );
}

std::vector<int> VarSet::members() const
{
  std::vector<int> out;
  for ( auto b = bits_; b; b &= b - 1 )
    out.push_back( std::countr_zero( b ) + 1 );
  return out;
}

std::string VarSet::to_string() const
{
  std::string s = "{";
  bool first = true;
  for ( int v : members() )
  {
    if ( !first )
      s += ',';
    s += std::to_string( v );
    first = false;
  }
  return s + "}";
}

VarSet parse_varset( std::string_view text )
{
  text = trim( text );
  if ( !text.empty() && text.front() == '{' && text.back() == '}' )
    text = text.substr( 1, text.size() - 2 );
  VarSet s;
  while ( !trim( text ).empty() )
  {
    auto comma = text.find( ',' );
    auto item = trim( text.substr( 0, comma ) );
    if ( !item.empty() && ( item.front() == 'x' || item.front() == 'X' ) )
      item.remove_prefix( 1 );
    int v = 0;
    auto [ptr, ec] = std::from_chars( item.data(), item.data() + item.size(), v );
    if ( ec != std::errc{} || ptr != item.data() + item.size() )
      throw std::invalid_argument( "bad variable set '" + std::string( text ) + "'" );
    s.insert( v );
    if ( comma == std::string_view::npos )
      break;
    text.remove_prefix( comma + 1 );
  }
  return s;
}

/* PartialAssignment */

PartialAssignment::PartialAssignment( std::initializer_list<std::pair<int, Value>> bindings )
{
  for ( auto [v, c] : bindings )
    bind( v, c );
}

void PartialAssignment::bind( int var, Value c )
{
  if ( var < 1 )
    throw std::out_of_range( "variable index must be >= 1" );
  auto it = std::lower_bound( bindings_.begin(), bindings_.end(), var,
                              []( const auto& b, int v ) { return b.first < v; } );
  if ( it != bindings_.end() && it->first == var )
    throw std::invalid_argument( "variable x" + std::to_string( var ) + " bound twice" );
  bindings_.insert( it, { var, c } );
}

VarSet PartialAssignment::domain() const
{
  VarSet s;
  for ( auto [v, c] : bindings_ )
    s.insert( v );
  return s;
}

/* KFunction */

std::uint64_t cell_limit()
{
  return g_cell_limit.load();
}

void set_cell_limit( std::uint64_t cells )
{
  g_cell_limit.store( cells );
}

std::uint64_t checked_power( std::uint64_t k, std::uint64_t n, std::uint64_t limit )
{
  std::uint64_t r = 1;
  for ( std::uint64_t i = 0; i < n; ++i )
  {
    if ( r > limit / k )
      throw budget_exceeded( std::to_string( k ) + "^" + std::to_string( n ) + " exceeds the limit of " +
                             std::to_string( limit ) );
    r *= k;
  }
  return r;
}

KFunction::KFunction( int k, int n, std::vector<Value> values )
    : k_( k ), n_( n ), values_( std::move( values ) )
{
  if ( k < 2 || k > 255 )
    throw std::invalid_argument( "radix k must be in 2..255" );
  if ( n < 0 || n > 31 )
    throw std::invalid_argument( "arity n must be in 0..31" );
  const auto cells = checked_power( k, n, cell_limit() );
  if ( values_.size() != cells )
    throw std::invalid_argument( "table has " + std::to_string( values_.size() ) + " entries, expected k^n = " +
                                 std::to_string( cells ) );
  for ( auto v : values_ )
    if ( v >= k )
      throw std::invalid_argument( "table entry " + std::to_string( v ) + " is not in Z_" + std::to_string( k ) );
}

KFunction KFunction::constant( int k, int n, Value c )
{
  return KFunction( k, n, std::vector<Value>( checked_power( k, n, cell_limit() ), c ) );
}

KFunction KFunction::projection( int k, int n, int var )
{
  if ( var < 1 || var > n )
    throw std::out_of_range( "projection variable outside 1..n" );
  std::vector<Value> v( checked_power( k, n, cell_limit() ) );
  std::size_t stride = 1;
  for ( int i = 1; i < var; ++i )
    stride *= k;
  for ( std::size_t idx = 0; idx < v.size(); ++idx )
    v[idx] = static_cast<Value>( ( idx / stride ) % k );
  return KFunction( k, n, std::move( v ) );
}

std::size_t KFunction::stride( int var ) const
{
  std::size_t s = 1;
  for ( int i = 1; i < var; ++i )
    s *= k_;
  return s;
}

std::size_t KFunction::index_of( std::span<const Value> point ) const
{
  if ( point.size() != static_cast<std::size_t>( n_ ) )
    throw std::invalid_argument( "point has " + std::to_string( point.size() ) + " coordinates, expected " +
                                 std::to_string( n_ ) );
  std::size_t idx = 0;
  for ( int i = n_ - 1; i >= 0; --i )
  {
    if ( point[i] >= k_ )
      throw std::out_of_range( "point coordinate " + std::to_string( point[i] ) + " is not in Z_" +
                               std::to_string( k_ ) );
    idx = idx * k_ + point[i];
  }
  return idx;
}

std::vector<Value> KFunction::point_of( std::size_t index ) const
{
  std::vector<Value> p( n_ );
  for ( int i = 0; i < n_; ++i )
  {
    p[i] = static_cast<Value>( index % k_ );
    index /= k_;
  }
  return p;
}

std::strong_ordering KFunction::operator<=>( const KFunction& other ) const
{
  if ( auto c = k_ <=> other.k_; c != 0 )
    return c;
  if ( auto c = n_ <=> other.n_; c != 0 )
    return c;
  return std::lexicographical_compare_three_way( values_.begin(), values_.end(), other.values_.begin(),
                                                 other.values_.end() );
}

std::size_t KFunction::hash() const
{
  // FNV-1a over (k, n, table)
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h]( std::uint64_t b ) {
    h ^= b;
    h *= 1099511628211ull;
  };
  mix( static_cast<std::uint64_t>( k_ ) );
  mix( static_cast<std::uint64_t>( n_ ) );
  for ( auto v : values_ )
    mix( v );
  return static_cast<std::size_t>( h );
}

KFunction from_values( int k, int n, std::vector<Value> values )
{
  return KFunction( k, n, std::move( values ) );
}

Value eval( const KFunction& f, std::span<const Value> point )
{
  return f[f.index_of( point )];
}

KFunction cofactor( const KFunction& f, int var, Value c )
{
  check_var( f, var );
  check_value( f, c );
  const auto stride = f.stride( var );
  const auto k = static_cast<std::size_t>( f.k() );
  std::vector<Value> out( f.size() );
  for ( std::size_t idx = 0; idx < f.size(); ++idx )
  {
    const auto digit = ( idx / stride ) % k;
    out[idx] = f[idx + ( c - digit ) * stride];
  }
  return KFunction( f.k(), f.n(), std::move( out ) );
}

KFunction restrict( const KFunction& f, const PartialAssignment& assignment )
{
  std::vector<std::size_t> strides;
  std::vector<Value> consts;
  for ( auto [v, c] : assignment.bindings() )
  {
    check_var( f, v );
    check_value( f, c );
    strides.push_back( f.stride( v ) );
    consts.push_back( c );
  }
  const auto k = static_cast<std::size_t>( f.k() );
  std::vector<Value> out( f.size() );
  for ( std::size_t idx = 0; idx < f.size(); ++idx )
  {
    std::size_t src = idx;
    for ( std::size_t j = 0; j < strides.size(); ++j )
    {
      const auto digit = ( idx / strides[j] ) % k;
      src = src - digit * strides[j] + consts[j] * strides[j];
    }
    out[idx] = f[src];
  }
  return KFunction( f.k(), f.n(), std::move( out ) );
}

KFunction restrict_set( const KFunction& f, VarSet vars, std::uint64_t code )
{
  PartialAssignment a;
  for ( int v : vars.members() )
  {
    a.bind( v, static_cast<Value>( code % f.k() ) );
    code /= f.k();
  }
  return restrict( f, a );
}

bool is_essential( const KFunction& f, int var )
{
  check_var( f, var );
  const auto stride = f.stride( var );
  const auto k = static_cast<std::size_t>( f.k() );
  for ( std::size_t idx = 0; idx < f.size(); ++idx )
  {
    if ( ( idx / stride ) % k != 0 )
      continue;
    for ( std::size_t c = 1; c < k; ++c )
      if ( f[idx + c * stride] != f[idx] )
        return true;
  }
  return false;
}

VarSet essential_set( const KFunction& f )
{
  VarSet s;
  for ( int i = 1; i <= f.n(); ++i )
    if ( is_essential( f, i ) )
      s.insert( i );
  return s;
}

std::vector<Value> range_of( const KFunction& f )
{
  std::vector<bool> seen( f.k(), false );
  for ( auto v : f.values() )
    seen[v] = true;
  std::vector<Value> out;
  for ( int c = 0; c < f.k(); ++c )
    if ( seen[c] )
      out.push_back( static_cast<Value>( c ) );
  return out;
}

VarSet strongly_essential_set( const KFunction& f )
{
  const auto e = essential_set( f );
  VarSet out;
  for ( int i : e.members() )
  {
    auto rest = e;
    rest.erase( i );
    for ( int c = 0; c < f.k(); ++c )
    {
      if ( essential_set( cofactor( f, i, static_cast<Value>( c ) ) ) == rest )
      {
        out.insert( i );
        break;
      }
    }
  }
  return out;
}

std::uint64_t assignment_count( int k, VarSet vars )
{
  return checked_power( k, vars.size(), std::numeric_limits<std::uint64_t>::max() );
}

/* Text formats */

std::string to_hex( const KFunction& f )
{
  if ( f.k() != 2 )
    throw std::invalid_argument( "hex format requires k = 2" );
  const auto bits = f.size();
  const auto digits = std::max<std::size_t>( 1, bits / 4 );
  std::string s( digits, '0' );
  for ( std::size_t d = 0; d < digits; ++d )
  {
    unsigned nibble = 0;
    for ( std::size_t b = 0; b < 4 && d * 4 + b < bits; ++b )
      nibble |= static_cast<unsigned>( f[d * 4 + b] ) << b;
    s[digits - 1 - d] = "0123456789abcdef"[nibble];
  }
  return s;
}

KFunction from_hex( std::string_view text, int n )
{
  text = trim( text );
  if ( text.starts_with( "0x" ) || text.starts_with( "0X" ) )
    text.remove_prefix( 2 );
  if ( text.empty() )
    throw std::invalid_argument( "empty hex table" );
  const auto bits = checked_power( 2, n, cell_limit() );
  std::vector<Value> v( bits, 0 );
  for ( std::size_t d = 0; d < text.size(); ++d )
  {
    const int nibble = hex_digit( text[text.size() - 1 - d] );
    if ( nibble < 0 )
      throw std::invalid_argument( "bad hex digit in '" + std::string( text ) + "'" );
    for ( std::size_t b = 0; b < 4; ++b )
    {
      if ( !( ( nibble >> b ) & 1 ) )
        continue;
      if ( d * 4 + b >= bits )
        throw std::invalid_argument( "hex table '" + std::string( text ) + "' has more than 2^" +
                                     std::to_string( n ) + " bits" );
      v[d * 4 + b] = 1;
    }
  }
  return KFunction( 2, n, std::move( v ) );
}

std::string to_digits( const KFunction& f )
{
  std::string s;
  for ( std::size_t i = 0; i < f.size(); ++i )
  {
    if ( i )
      s += ',';
    s += std::to_string( f[i] );
  }
  return s;
}

KFunction from_digits( std::string_view text, int k, int n )
{
  std::vector<Value> v;
  text = trim( text );
  while ( !text.empty() )
  {
    auto comma = text.find( ',' );
    auto item = trim( text.substr( 0, comma ) );
    unsigned x = 0;
    auto [ptr, ec] = std::from_chars( item.data(), item.data() + item.size(), x );
    if ( ec != std::errc{} || ptr != item.data() + item.size() || x > 255 )
      throw std::invalid_argument( "bad table entry '" + std::string( item ) + "'" );
    v.push_back( static_cast<Value>( x ) );
    if ( comma == std::string_view::npos )
      break;
    text.remove_prefix( comma + 1 );
  }
  return KFunction( k, n, std::move( v ) );
}

std::string format_table( const KFunction& f )
{
  return f.k() == 2 ? to_hex( f ) : to_digits( f );
}

KFunction parse_table( std::string_view text, int k, int n )
{
  if ( k == 2 && text.find( ',' ) == std::string_view::npos )
    return from_hex( text, n );
  return from_digits( text, k, n );
}

std::uint64_t space_size( int k, int n )
{
  const auto cells = checked_power( k, n, 64 );
  return checked_power( k, cells, std::numeric_limits<std::uint64_t>::max() );
}

std::uint64_t numeral( const KFunction& f )
{
  if ( f.size() > 64 )
    throw budget_exceeded( "table too large for a 64-bit numeral" );
  std::uint64_t id = 0;
  for ( std::size_t i = f.size(); i-- > 0; )
  {
    if ( id > ( std::numeric_limits<std::uint64_t>::max() - f[i] ) / f.k() )
      throw budget_exceeded( "table numeral overflows 64 bits" );
    id = id * f.k() + f[i];
  }
  return id;
}

KFunction from_numeral( int k, int n, std::uint64_t id )
{
  std::vector<Value> v( checked_power( k, n, 64 ) );
  for ( auto& x : v )
  {
    x = static_cast<Value>( id % k );
    id /= k;
  }
  if ( id != 0 )
    throw std::out_of_range( "numeral outside the function space" );
  return KFunction( k, n, std::move( v ) );
}

} // namespace fnclass
