#include "fnclass/groups.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_set>

namespace fnclass
{

namespace
{

std::atomic<std::uint64_t> g_orbit_space_limit{ std::uint64_t{ 1 } << 24 };

template<class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};

bool is_permutation_of_range( std::span<const int> p, int first )
{
  std::vector<int> s( p.begin(), p.end() );
  std::sort( s.begin(), s.end() );
  for ( std::size_t i = 0; i < s.size(); ++i )
    if ( s[i] != first + static_cast<int>( i ) )
      return false;
  return true;
}

bool is_value_permutation( std::span<const Value> sigma, int k )
{
  if ( sigma.size() != static_cast<std::size_t>( k ) )
    return false;
  std::vector<bool> seen( k, false );
  for ( auto v : sigma )
  {
    if ( v >= k || seen[v] )
      return false;
    seen[v] = true;
  }
  return true;
}

void require( bool ok, const char* what )
{
  if ( !ok )
    throw std::invalid_argument( what );
}

void require_vector( std::span<const Value> v, int k, int n, const char* what )
{
  require( v.size() == static_cast<std::size_t>( n ), what );
  for ( auto x : v )
    require( x < k, what );
}

int gcd( int a, int b )
{
  return b == 0 ? a : gcd( b, a % b );
}

/// Compiled form of a single transformation: result[x] = out[f[dom[x]]] + add[x].
struct CompiledAction
{
  std::vector<std::uint64_t> dom;
  std::vector<Value> out;
  std::vector<Value> add; // empty when zero
};

std::vector<Value> identity_map( int k )
{
  std::vector<Value> m( k );
  std::iota( m.begin(), m.end(), Value{ 0 } );
  return m;
}

/// Decodes the digits of index into point (x_1 first).
void decode( std::uint64_t index, int k, std::vector<Value>& point )
{
  for ( auto& p : point )
  {
    p = static_cast<Value>( index % k );
    index /= k;
  }
}

std::uint64_t encode( const std::vector<Value>& point, int k )
{
  std::uint64_t idx = 0;
  for ( std::size_t i = point.size(); i-- > 0; )
    idx = idx * k + point[i];
  return idx;
}

void validate_transformation( const Transformation& t, int k, int n );

CompiledAction compile( const Transformation& t, int k, int n )
{
  validate_transformation( t, k, n );
  const auto cells = checked_power( k, n, cell_limit() );
  CompiledAction c;
  c.dom.resize( cells );
  c.out = identity_map( k );
  std::vector<Value> x( n ), y( n );

  auto fill_domain = [&]( auto&& source_of ) {
    for ( std::uint64_t idx = 0; idx < cells; ++idx )
    {
      decode( idx, k, x );
      source_of();
      c.dom[idx] = encode( y, k );
    }
  };
  auto identity_domain = [&] { std::iota( c.dom.begin(), c.dom.end(), std::uint64_t{ 0 } ); };

  std::visit( overloaded{
                  [&]( const VarPerm& p ) {
                    fill_domain( [&] {
                      for ( int i = 0; i < n; ++i )
                        y[i] = x[p.perm[i] - 1];
                    } );
                  },
                  [&]( const ArgTranslate& p ) {
                    fill_domain( [&] {
                      for ( int i = 0; i < n; ++i )
                        y[i] = static_cast<Value>( ( x[i] + p.shift[i] ) % k );
                    } );
                  },
                  [&]( const VarPermValueMaps& p ) {
                    fill_domain( [&] {
                      for ( int i = 0; i < n; ++i )
                        y[i] = p.value_maps[i][x[p.perm[i] - 1]];
                    } );
                    if ( !p.output_map.empty() )
                      c.out = p.output_map;
                  },
                  [&]( const OutputMap& p ) {
                    identity_domain();
                    c.out = p.sigma;
                  },
                  [&]( const OutputTranslate& p ) {
                    identity_domain();
                    for ( int v = 0; v < k; ++v )
                      c.out[v] = static_cast<Value>( ( v + p.shift ) % k );
                  },
                  [&]( const AddLinear& p ) {
                    identity_domain();
                    c.add.resize( cells );
                    for ( std::uint64_t idx = 0; idx < cells; ++idx )
                    {
                      decode( idx, k, x );
                      int s = 0;
                      for ( int i = 0; i < n; ++i )
                        s += p.coeffs[i] * x[i];
                      c.add[idx] = static_cast<Value>( s % k );
                    }
                  },
                  [&]( const Affine& p ) {
                    fill_domain( [&] {
                      for ( int j = 0; j < n; ++j )
                      {
                        int s = p.shift[j];
                        for ( int i = 0; i < n; ++i )
                          s += x[i] * p.matrix[i][j];
                        y[j] = static_cast<Value>( s % k );
                      }
                    } );
                    for ( int v = 0; v < k; ++v )
                      c.out[v] = static_cast<Value>( ( v * p.output_scale + p.constant ) % k );
                    c.add.resize( cells );
                    for ( std::uint64_t idx = 0; idx < cells; ++idx )
                    {
                      decode( idx, k, x );
                      int s = 0;
                      for ( int i = 0; i < n; ++i )
                        s += p.linear[i] * x[i];
                      c.add[idx] = static_cast<Value>( s % k );
                    }
                  },
              },
              t );
  return c;
}

void apply_compiled( const CompiledAction& c, int k, std::span<const Value> in, std::span<Value> out )
{
  if ( c.add.empty() )
    for ( std::size_t x = 0; x < out.size(); ++x )
      out[x] = c.out[in[c.dom[x]]];
  else
    for ( std::size_t x = 0; x < out.size(); ++x )
      out[x] = static_cast<Value>( ( c.out[in[c.dom[x]]] + c.add[x] ) % k );
}

/// Bijectivity of x -> xA over Z_k^n.
bool matrix_is_invertible( const std::vector<std::vector<Value>>& A, int k, int n )
{
  if ( is_prime( k ) )
  {
    auto m = A;
    for ( int col = 0, row = 0; col < n; ++col, ++row )
    {
      int pivot = -1;
      for ( int r = row; r < n; ++r )
        if ( m[r][col] % k )
        {
          pivot = r;
          break;
        }
      if ( pivot < 0 )
        return false;
      std::swap( m[row], m[pivot] );
      int inv = 1;
      while ( ( inv * m[row][col] ) % k != 1 )
        ++inv;
      for ( int r = 0; r < n; ++r )
      {
        if ( r == row || m[r][col] == 0 )
          continue;
        const int factor = ( m[r][col] * inv ) % k;
        for ( int cc = 0; cc < n; ++cc )
          m[r][cc] = static_cast<Value>( ( m[r][cc] + ( k - factor ) * m[row][cc] ) % k );
      }
    }
    return true;
  }
  const auto cells = checked_power( k, n, cell_limit() );
  std::vector<bool> hit( cells, false );
  std::vector<Value> x( n ), y( n );
  for ( std::uint64_t idx = 0; idx < cells; ++idx )
  {
    decode( idx, k, x );
    for ( int j = 0; j < n; ++j )
    {
      int s = 0;
      for ( int i = 0; i < n; ++i )
        s += x[i] * A[i][j];
      y[j] = static_cast<Value>( s % k );
    }
    const auto img = encode( y, k );
    if ( hit[img] )
      return false;
    hit[img] = true;
  }
  return true;
}

void validate_transformation( const Transformation& t, int k, int n )
{
  std::visit( overloaded{
                  [&]( const VarPerm& p ) {
                    require( p.perm.size() == static_cast<std::size_t>( n ) && is_permutation_of_range( p.perm, 1 ),
                             "variable permutation must be a permutation of 1..n" );
                  },
                  [&]( const ArgTranslate& p ) { require_vector( p.shift, k, n, "translation must be a vector in Z_k^n" ); },
                  [&]( const VarPermValueMaps& p ) {
                    require( p.perm.size() == static_cast<std::size_t>( n ) && is_permutation_of_range( p.perm, 1 ),
                             "variable permutation must be a permutation of 1..n" );
                    require( p.value_maps.size() == static_cast<std::size_t>( n ), "need one value map per variable" );
                    for ( const auto& s : p.value_maps )
                      require( is_value_permutation( s, k ), "value maps must be permutations of Z_k" );
                    require( p.output_map.empty() || is_value_permutation( p.output_map, k ),
                             "output map must be a permutation of Z_k" );
                  },
                  [&]( const OutputMap& p ) {
                    require( is_value_permutation( p.sigma, k ), "output map must be a permutation of Z_k" );
                  },
                  [&]( const OutputTranslate& p ) { require( p.shift < k, "output shift must be in Z_k" ); },
                  [&]( const AddLinear& p ) { require_vector( p.coeffs, k, n, "linear coefficients must be in Z_k^n" ); },
                  [&]( const Affine& p ) {
                    require( p.matrix.size() == static_cast<std::size_t>( n ), "matrix must be n x n" );
                    for ( const auto& row : p.matrix )
                      require_vector( row, k, n, "matrix must be n x n over Z_k" );
                    require_vector( p.shift, k, n, "translation must be a vector in Z_k^n" );
                    require_vector( p.linear, k, n, "linear coefficients must be in Z_k^n" );
                    require( p.constant < k, "constant must be in Z_k" );
                    require( p.output_scale < k && gcd( p.output_scale, k ) == 1, "output scale must be a unit" );
                    require( matrix_is_invertible( p.matrix, k, n ), "matrix is singular" );
                  },
              },
              t );
}

/* Conversions used by compose */

std::optional<VarPermValueMaps> as_value_maps( const Transformation& t, int k, int n )
{
  VarPermValueMaps r;
  r.perm.resize( n );
  std::iota( r.perm.begin(), r.perm.end(), 1 );
  r.value_maps.assign( n, identity_map( k ) );
  r.output_map = identity_map( k );
  return std::visit( overloaded{
                         [&]( const VarPerm& p ) -> std::optional<VarPermValueMaps> {
                           r.perm = p.perm;
                           return r;
                         },
                         [&]( const ArgTranslate& p ) -> std::optional<VarPermValueMaps> {
                           for ( int i = 0; i < n; ++i )
                             for ( int v = 0; v < k; ++v )
                               r.value_maps[i][v] = static_cast<Value>( ( v + p.shift[i] ) % k );
                           return r;
                         },
                         [&]( const VarPermValueMaps& p ) -> std::optional<VarPermValueMaps> {
                           r.perm = p.perm;
                           r.value_maps = p.value_maps;
                           if ( !p.output_map.empty() )
                             r.output_map = p.output_map;
                           return r;
                         },
                         [&]( const OutputMap& p ) -> std::optional<VarPermValueMaps> {
                           r.output_map = p.sigma;
                           return r;
                         },
                         [&]( const OutputTranslate& p ) -> std::optional<VarPermValueMaps> {
                           for ( int v = 0; v < k; ++v )
                             r.output_map[v] = static_cast<Value>( ( v + p.shift ) % k );
                           return r;
                         },
                         []( const AddLinear& ) -> std::optional<VarPermValueMaps> { return std::nullopt; },
                         []( const Affine& ) -> std::optional<VarPermValueMaps> { return std::nullopt; },
                     },
                     t );
}

std::optional<Affine> as_affine( const Transformation& t, int /*k*/, int n )
{
  Affine r;
  r.matrix.assign( n, std::vector<Value>( n, 0 ) );
  for ( int i = 0; i < n; ++i )
    r.matrix[i][i] = 1;
  r.shift.assign( n, 0 );
  r.linear.assign( n, 0 );
  return std::visit( overloaded{
                         [&]( const VarPerm& p ) -> std::optional<Affine> {
                           // y_i = x_pi(i)
                           r.matrix.assign( n, std::vector<Value>( n, 0 ) );
                           for ( int i = 0; i < n; ++i )
                             r.matrix[p.perm[i] - 1][i] = 1;
                           return r;
                         },
                         [&]( const ArgTranslate& p ) -> std::optional<Affine> {
                           r.shift = p.shift;
                           return r;
                         },
                         []( const VarPermValueMaps& ) -> std::optional<Affine> { return std::nullopt; },
                         []( const OutputMap& ) -> std::optional<Affine> { return std::nullopt; },
                         [&]( const OutputTranslate& p ) -> std::optional<Affine> {
                           r.constant = p.shift;
                           return r;
                         },
                         [&]( const AddLinear& p ) -> std::optional<Affine> {
                           r.linear = p.coeffs;
                           return r;
                         },
                         [&]( const Affine& p ) -> std::optional<Affine> { return p; },
                     },
                     t );
}

int dimension_of( const Transformation& t )
{
  return std::visit( overloaded{
                         []( const VarPerm& p ) { return static_cast<int>( p.perm.size() ); },
                         []( const ArgTranslate& p ) { return static_cast<int>( p.shift.size() ); },
                         []( const VarPermValueMaps& p ) { return static_cast<int>( p.perm.size() ); },
                         []( const OutputMap& ) { return -1; },
                         []( const OutputTranslate& ) { return -1; },
                         []( const AddLinear& p ) { return static_cast<int>( p.coeffs.size() ); },
                         []( const Affine& p ) { return static_cast<int>( p.matrix.size() ); },
                     },
                     t );
}

std::uint64_t factorial( int n )
{
  std::uint64_t r = 1;
  for ( int i = 2; i <= n; ++i )
    r *= i;
  return r;
}

int primitive_root( int k )
{
  for ( int g = 1; g < k; ++g )
  {
    int x = 1, order = 0;
    do
    {
      x = ( x * g ) % k;
      ++order;
    } while ( x != 1 );
    if ( order == k - 1 )
      return g;
  }
  return 1;
}

std::vector<std::vector<Value>> all_value_permutations( int k )
{
  std::vector<std::vector<Value>> out;
  auto p = identity_map( k );
  do
    out.push_back( p );
  while ( std::next_permutation( p.begin(), p.end() ) );
  return out;
}

/// Calls visit(m) for every vector in Z_k^len; stops when visit returns false.
bool for_each_vector( int k, int len, const std::function<bool( const std::vector<Value>& )>& visit )
{
  std::vector<Value> v( len, 0 );
  while ( true )
  {
    if ( !visit( v ) )
      return false;
    int i = 0;
    while ( i < len && ++v[i] == k )
      v[i++] = 0;
    if ( i == len )
      return true;
  }
}

bool for_each_invertible_matrix( int k, int n, const std::function<bool( const std::vector<std::vector<Value>>& )>& visit )
{
  std::vector<std::vector<Value>> m( n, std::vector<Value>( n ) );
  return for_each_vector( k, n * n, [&]( const std::vector<Value>& flat ) {
    for ( int i = 0; i < n; ++i )
      for ( int j = 0; j < n; ++j )
        m[i][j] = flat[i * n + j];
    if ( !matrix_is_invertible( m, k, n ) )
      return true;
    return visit( m );
  } );
}

std::vector<std::vector<Value>> identity_matrix( int n )
{
  std::vector<std::vector<Value>> m( n, std::vector<Value>( n, 0 ) );
  for ( int i = 0; i < n; ++i )
    m[i][i] = 1;
  return m;
}

Affine affine_from_matrix( std::vector<std::vector<Value>> m, int n )
{
  Affine a;
  a.matrix = std::move( m );
  a.shift.assign( n, 0 );
  a.linear.assign( n, 0 );
  return a;
}

/// numeral order: compare from the most significant (highest index) cell
bool numeral_less( std::span<const Value> a, std::span<const Value> b )
{
  for ( std::size_t i = a.size(); i-- > 0; )
    if ( a[i] != b[i] )
      return a[i] < b[i];
  return false;
}

} // namespace

KFunction apply( const Transformation& t, const KFunction& f )
{
  const int dim = dimension_of( t );
  if ( dim >= 0 && dim != f.n() )
    throw std::invalid_argument( "transformation acts on " + std::to_string( dim ) + " variables, function has " +
                                 std::to_string( f.n() ) );
  const auto c = compile( t, f.k(), f.n() );
  std::vector<Value> out( f.size() );
  apply_compiled( c, f.k(), f.values(), out );
  return KFunction( f.k(), f.n(), std::move( out ) );
}

Transformation compose( const Transformation& outer, const Transformation& inner, int k )
{
  const int d1 = dimension_of( outer ), d2 = dimension_of( inner );
  if ( d1 >= 0 && d2 >= 0 && d1 != d2 )
    throw std::invalid_argument( "cannot compose transformations of different arity" );
  const int n = std::max( { d1, d2, 0 } );
  validate_transformation( outer, k, n );
  validate_transformation( inner, k, n );

  auto m1 = as_value_maps( outer, k, n );
  auto m2 = as_value_maps( inner, k, n );
  if ( m1 && m2 )
  {
    VarPermValueMaps r;
    r.perm.resize( n );
    r.value_maps.resize( n );
    for ( int i = 0; i < n; ++i )
    {
      const int mid = m2->perm[i];
      r.perm[i] = m1->perm[mid - 1];
      r.value_maps[i].resize( k );
      for ( int v = 0; v < k; ++v )
        r.value_maps[i][v] = m2->value_maps[i][m1->value_maps[mid - 1][v]];
    }
    r.output_map.resize( k );
    for ( int v = 0; v < k; ++v )
      r.output_map[v] = m1->output_map[m2->output_map[v]];
    return r;
  }

  auto a1 = as_affine( outer, k, n );
  auto a2 = as_affine( inner, k, n );
  if ( a1 && a2 )
  {
    Affine r;
    r.matrix.assign( n, std::vector<Value>( n, 0 ) );
    for ( int i = 0; i < n; ++i )
      for ( int j = 0; j < n; ++j )
      {
        int s = 0;
        for ( int l = 0; l < n; ++l )
          s += a1->matrix[i][l] * a2->matrix[l][j];
        r.matrix[i][j] = static_cast<Value>( s % k );
      }
    r.shift.resize( n );
    for ( int j = 0; j < n; ++j )
    {
      int s = a2->shift[j];
      for ( int l = 0; l < n; ++l )
        s += a1->shift[l] * a2->matrix[l][j];
      r.shift[j] = static_cast<Value>( s % k );
    }
    const int u1 = a1->output_scale;
    r.linear.resize( n );
    for ( int i = 0; i < n; ++i )
    {
      int s = 0;
      for ( int j = 0; j < n; ++j )
        s += a1->matrix[i][j] * a2->linear[j];
      r.linear[i] = static_cast<Value>( ( u1 * s + a1->linear[i] ) % k );
    }
    int dot = 0;
    for ( int j = 0; j < n; ++j )
      dot += a2->linear[j] * a1->shift[j];
    r.constant = static_cast<Value>( ( u1 * ( dot + a2->constant ) + a1->constant ) % k );
    r.output_scale = static_cast<Value>( ( u1 * a2->output_scale ) % k );
    return r;
  }
  throw std::invalid_argument( "composition of these transformation kinds has no closed form" );
}

Transformation identity_transformation( int, int n )
{
  VarPerm p;
  p.perm.resize( n );
  std::iota( p.perm.begin(), p.perm.end(), 1 );
  return p;
}

std::optional<std::vector<std::uint64_t>> domain_map( const Transformation& t, int k, int n )
{
  const bool domain_only = std::visit(
      overloaded{
          []( const VarPerm& ) { return true; },
          []( const ArgTranslate& ) { return true; },
          [k]( const VarPermValueMaps& p ) { return p.output_map.empty() || p.output_map == identity_map( k ); },
          []( const OutputMap& ) { return false; },
          []( const OutputTranslate& ) { return false; },
          []( const AddLinear& ) { return false; },
          [n]( const Affine& p ) {
            return p.constant == 0 && p.output_scale == 1 &&
                   std::all_of( p.linear.begin(), p.linear.end(), []( Value v ) { return v == 0; } ) &&
                   static_cast<int>( p.linear.size() ) == n;
          },
      },
      t );
  if ( !domain_only )
    return std::nullopt;
  return compile( t, k, n ).dom;
}

KFunction map_outputs( const KFunction& f, std::span<const Value> sigma )
{
  if ( sigma.size() != static_cast<std::size_t>( f.k() ) )
    throw std::invalid_argument( "output map needs k entries" );
  std::vector<Value> out( f.size() );
  for ( std::size_t i = 0; i < f.size(); ++i )
    out[i] = sigma[f[i]];
  return KFunction( f.k(), f.n(), std::move( out ) );
}

/* Groups */

std::string_view group_name( GroupName g )
{
  switch ( g )
  {
  case GroupName::S:
    return "s";
  case GroupName::CA:
    return "ca";
  case GroupName::G:
    return "g";
  case GroupName::GE:
    return "ge";
  case GroupName::CF:
    return "cf";
  case GroupName::LF:
    return "lf";
  case GroupName::LG:
    return "lg";
  case GroupName::A:
    return "a";
  case GroupName::AxA1:
    return "axa1";
  case GroupName::RAG:
    return "rag";
  case GroupName::FullSym:
    return "fullsym";
  }
  return "?";
}

const std::vector<GroupName>& all_groups()
{
  static const std::vector<GroupName> groups{ GroupName::S,  GroupName::CA, GroupName::G,    GroupName::GE,
                                              GroupName::CF, GroupName::LF, GroupName::LG,   GroupName::A,
                                              GroupName::AxA1, GroupName::RAG, GroupName::FullSym };
  return groups;
}

GroupName parse_group_name( std::string_view text )
{
  std::string lower( text );
  std::transform( lower.begin(), lower.end(), lower.begin(), []( unsigned char c ) { return std::tolower( c ); } );
  for ( auto g : all_groups() )
    if ( group_name( g ) == lower )
      return g;
  throw std::invalid_argument( "unknown group '" + std::string( text ) + "'" );
}

bool is_prime( int k )
{
  if ( k < 2 )
    return false;
  for ( int d = 2; d * d <= k; ++d )
    if ( k % d == 0 )
      return false;
  return true;
}

void GroupDescriptor::validate() const
{
  if ( k < 2 || n < 0 )
    throw std::invalid_argument( "group descriptor needs k >= 2 and n >= 0" );
  const bool linear = name == GroupName::LG || name == GroupName::A || name == GroupName::AxA1 || name == GroupName::RAG;
  if ( linear && !is_prime( k ) )
    throw std::invalid_argument( "group " + std::string( group_name( name ) ) + " requires a prime k" );
}

std::uint64_t general_linear_order( int k, int n )
{
  const auto q = checked_power( k, n, std::numeric_limits<std::uint64_t>::max() );
  std::uint64_t order = 1;
  std::uint64_t ki = 1;
  for ( int i = 0; i < n; ++i )
  {
    order *= q - ki;
    ki *= k;
  }
  return order;
}

std::uint64_t group_order( const GroupDescriptor& gd )
{
  gd.validate();
  const auto k = static_cast<std::uint64_t>( gd.k );
  const auto kn = checked_power( k, gd.n, std::numeric_limits<std::uint64_t>::max() );
  const auto nf = factorial( gd.n );
  switch ( gd.name )
  {
  case GroupName::S:
    return nf;
  case GroupName::CA:
    return kn;
  case GroupName::G:
    return nf * kn;
  case GroupName::GE:
    return nf * kn * k;
  case GroupName::CF:
    return k;
  case GroupName::LF:
    return kn;
  case GroupName::LG:
    return general_linear_order( gd.k, gd.n );
  case GroupName::A:
    return general_linear_order( gd.k, gd.n ) * kn;
  case GroupName::AxA1:
    return general_linear_order( gd.k, gd.n ) * kn * k * ( k - 1 );
  case GroupName::RAG:
    return general_linear_order( gd.k, gd.n ) * kn * kn * k;
  case GroupName::FullSym:
  {
    const auto kf = factorial( gd.k );
    std::uint64_t r = nf * kf;
    for ( int i = 0; i < gd.n; ++i )
      r *= kf;
    return r;
  }
  }
  return 0;
}

void for_each_element( const GroupDescriptor& gd, const std::function<bool( const Transformation& )>& visit )
{
  gd.validate();
  const int k = gd.k, n = gd.n;
  std::vector<int> id_perm( n );
  std::iota( id_perm.begin(), id_perm.end(), 1 );

  auto for_each_perm = [&]( const std::function<bool( const std::vector<int>& )>& f ) {
    auto p = id_perm;
    do
      if ( !f( p ) )
        return false;
    while ( std::next_permutation( p.begin(), p.end() ) );
    return true;
  };

  auto translation_maps = [&]( const std::vector<Value>& shift ) {
    std::vector<std::vector<Value>> maps( n, std::vector<Value>( k ) );
    for ( int i = 0; i < n; ++i )
      for ( int v = 0; v < k; ++v )
        maps[i][v] = static_cast<Value>( ( v + shift[i] ) % k );
    return maps;
  };

  std::vector<Value> units;
  for ( int u = 1; u < k; ++u )
    if ( gcd( u, k ) == 1 )
      units.push_back( static_cast<Value>( u ) );

  switch ( gd.name )
  {
  case GroupName::S:
    for_each_perm( [&]( const auto& p ) { return visit( VarPerm{ p } ); } );
    return;
  case GroupName::CA:
    for_each_vector( k, n, [&]( const auto& c ) { return visit( ArgTranslate{ c } ); } );
    return;
  case GroupName::G:
  case GroupName::GE:
  {
    const int outs = gd.name == GroupName::GE ? k : 1;
    for_each_perm( [&]( const auto& p ) {
      return for_each_vector( k, n, [&]( const auto& c ) {
        for ( int d = 0; d < outs; ++d )
        {
          VarPermValueMaps t{ p, translation_maps( c ), {} };
          if ( gd.name == GroupName::GE )
          {
            t.output_map.resize( k );
            for ( int v = 0; v < k; ++v )
              t.output_map[v] = static_cast<Value>( ( v + d ) % k );
          }
          if ( !visit( t ) )
            return false;
        }
        return true;
      } );
    } );
    return;
  }
  case GroupName::CF:
    for ( int d = 0; d < k; ++d )
      if ( !visit( OutputTranslate{ static_cast<Value>( d ) } ) )
        return;
    return;
  case GroupName::LF:
    for_each_vector( k, n, [&]( const auto& a ) { return visit( AddLinear{ a } ); } );
    return;
  case GroupName::LG:
    for_each_invertible_matrix( k, n, [&]( const auto& m ) { return visit( affine_from_matrix( m, n ) ); } );
    return;
  case GroupName::A:
  case GroupName::AxA1:
    for_each_invertible_matrix( k, n, [&]( const auto& m ) {
      return for_each_vector( k, n, [&]( const auto& c ) {
        auto base = affine_from_matrix( m, n );
        base.shift = c;
        if ( gd.name == GroupName::A )
          return visit( base );
        for ( auto u : units )
          for ( int d = 0; d < k; ++d )
          {
            base.output_scale = u;
            base.constant = static_cast<Value>( d );
            if ( !visit( base ) )
              return false;
          }
        return true;
      } );
    } );
    return;
  case GroupName::RAG:
    for_each_invertible_matrix( k, n, [&]( const auto& m ) {
      return for_each_vector( k, n, [&]( const auto& c ) {
        return for_each_vector( k, n, [&]( const auto& a ) {
          for ( int d = 0; d < k; ++d )
          {
            auto t = affine_from_matrix( m, n );
            t.shift = c;
            t.linear = a;
            t.constant = static_cast<Value>( d );
            if ( !visit( t ) )
              return false;
          }
          return true;
        } );
      } );
    } );
    return;
  case GroupName::FullSym:
  {
    const auto perms = all_value_permutations( k );
    const auto count = checked_power( perms.size(), n + 1, std::numeric_limits<std::uint64_t>::max() );
    for_each_perm( [&]( const auto& p ) {
      for ( std::uint64_t code = 0; code < count; ++code )
      {
        VarPermValueMaps t;
        t.perm = p;
        auto rest = code;
        for ( int i = 0; i < n; ++i )
        {
          t.value_maps.push_back( perms[rest % perms.size()] );
          rest /= perms.size();
        }
        t.output_map = perms[rest % perms.size()];
        if ( !visit( t ) )
          return false;
      }
      return true;
    } );
    return;
  }
  }
}

std::vector<Transformation> group_elements( const GroupDescriptor& gd, std::uint64_t max_elements )
{
  const auto order = group_order( gd );
  if ( order > max_elements )
    throw budget_exceeded( "group " + std::string( group_name( gd.name ) ) + " has " + std::to_string( order ) +
                           " elements, more than the budget of " + std::to_string( max_elements ) );
  std::vector<Transformation> out;
  out.reserve( order );
  for_each_element( gd, [&]( const Transformation& t ) {
    out.push_back( t );
    return true;
  } );
  return out;
}

std::vector<Transformation> group_generators( const GroupDescriptor& gd )
{
  gd.validate();
  const int k = gd.k, n = gd.n;
  std::vector<Transformation> gens;

  auto add_swaps = [&] {
    for ( int i = 1; i < n; ++i )
    {
      std::vector<int> p( n );
      std::iota( p.begin(), p.end(), 1 );
      std::swap( p[i - 1], p[i] );
      gens.push_back( VarPerm{ p } );
    }
  };
  auto add_translations = [&] {
    for ( int i = 0; i < n; ++i )
    {
      std::vector<Value> c( n, 0 );
      c[i] = 1;
      gens.push_back( ArgTranslate{ c } );
    }
  };
  auto add_output_shift = [&] { gens.push_back( OutputTranslate{ 1 } ); };
  auto add_linear_terms = [&] {
    for ( int i = 0; i < n; ++i )
    {
      std::vector<Value> a( n, 0 );
      a[i] = 1;
      gens.push_back( AddLinear{ a } );
    }
  };
  auto add_matrices = [&] {
    for ( int i = 0; i < n; ++i )
      for ( int j = 0; j < n; ++j )
      {
        if ( i == j )
          continue;
        auto m = identity_matrix( n );
        m[i][j] = 1;
        gens.push_back( affine_from_matrix( m, n ) );
      }
    if ( k > 2 )
    {
      const auto g = static_cast<Value>( primitive_root( k ) );
      for ( int i = 0; i < n; ++i )
      {
        auto m = identity_matrix( n );
        m[i][i] = g;
        gens.push_back( affine_from_matrix( m, n ) );
      }
    }
  };

  switch ( gd.name )
  {
  case GroupName::S:
    add_swaps();
    break;
  case GroupName::CA:
    add_translations();
    break;
  case GroupName::G:
    add_swaps();
    add_translations();
    break;
  case GroupName::GE:
    add_swaps();
    add_translations();
    add_output_shift();
    break;
  case GroupName::CF:
    add_output_shift();
    break;
  case GroupName::LF:
    add_linear_terms();
    break;
  case GroupName::LG:
    add_matrices();
    break;
  case GroupName::A:
    add_matrices();
    add_translations();
    break;
  case GroupName::AxA1:
    add_matrices();
    add_translations();
    add_output_shift();
    if ( k > 2 )
    {
      auto t = affine_from_matrix( identity_matrix( n ), n );
      t.output_scale = static_cast<Value>( primitive_root( k ) );
      gens.push_back( t );
    }
    break;
  case GroupName::RAG:
    add_matrices();
    add_translations();
    add_linear_terms();
    add_output_shift();
    break;
  case GroupName::FullSym:
  {
    add_swaps();
    std::vector<Value> swap01 = identity_map( k ), cycle( k );
    std::swap( swap01[0], swap01[1] );
    for ( int v = 0; v < k; ++v )
      cycle[v] = static_cast<Value>( ( v + 1 ) % k );
    std::vector<int> id_perm( n );
    std::iota( id_perm.begin(), id_perm.end(), 1 );
    for ( int i = 0; i < n; ++i )
      for ( const auto& s : { swap01, cycle } )
      {
        VarPermValueMaps t{ id_perm, std::vector<std::vector<Value>>( n, identity_map( k ) ), {} };
        t.value_maps[i] = s;
        gens.push_back( t );
      }
    gens.push_back( OutputMap{ swap01 } );
    gens.push_back( OutputMap{ cycle } );
    break;
  }
  }
  return gens;
}

KFunction canonical_form( const KFunction& f, const GroupDescriptor& gd, std::uint64_t max_orbit )
{
  if ( gd.k != f.k() || gd.n != f.n() )
    throw std::invalid_argument( "group and function dimensions differ" );
  std::vector<CompiledAction> actions;
  for ( const auto& g : group_generators( gd ) )
    actions.push_back( compile( g, f.k(), f.n() ) );

  std::unordered_set<KFunction, KFunctionHash> orbit{ f };
  std::vector<KFunction> stack{ f };
  KFunction best = f;
  std::vector<Value> buffer( f.size() );
  while ( !stack.empty() )
  {
    const auto h = std::move( stack.back() );
    stack.pop_back();
    for ( const auto& a : actions )
    {
      apply_compiled( a, f.k(), h.values(), buffer );
      KFunction g( f.k(), f.n(), buffer );
      if ( orbit.contains( g ) )
        continue;
      if ( orbit.size() >= max_orbit )
        throw budget_exceeded( "orbit exceeds " + std::to_string( max_orbit ) + " functions" );
      if ( numeral_less( g.values(), best.values() ) )
        best = g;
      orbit.insert( g );
      stack.push_back( std::move( g ) );
    }
  }
  return best;
}

KFunction canonical_form_by_elements( const KFunction& f, const GroupDescriptor& gd )
{
  KFunction best = f;
  for_each_element( gd, [&]( const Transformation& t ) {
    auto g = apply( t, f );
    if ( numeral_less( g.values(), best.values() ) )
      best = std::move( g );
    return true;
  } );
  return best;
}

std::uint64_t orbit_space_limit()
{
  return g_orbit_space_limit.load();
}

void set_orbit_space_limit( std::uint64_t functions )
{
  g_orbit_space_limit.store( functions );
}

OrbitPartition orbit_partition( const GroupDescriptor& gd )
{
  gd.validate();
  const int k = gd.k, n = gd.n;
  const auto cells = checked_power( k, n, 64 );
  const auto space = checked_power( k, cells, orbit_space_limit() );

  std::vector<CompiledAction> actions;
  for ( const auto& g : group_generators( gd ) )
    actions.push_back( compile( g, k, n ) );

  constexpr auto unassigned = std::numeric_limits<std::uint32_t>::max();
  OrbitPartition result;
  result.orbit_of.assign( space, unassigned );
  std::vector<Value> in( cells ), out( cells );
  std::vector<std::uint64_t> stack;

  auto to_digits = [&]( std::uint64_t id, std::vector<Value>& t ) {
    for ( auto& v : t )
    {
      v = static_cast<Value>( id % k );
      id /= k;
    }
  };
  auto to_id = [&]( const std::vector<Value>& t ) {
    std::uint64_t id = 0;
    for ( std::size_t i = t.size(); i-- > 0; )
      id = id * k + t[i];
    return id;
  };

  for ( std::uint64_t id = 0; id < space; ++id )
  {
    if ( result.orbit_of[id] != unassigned )
      continue;
    const auto orbit = static_cast<std::uint32_t>( result.orbits.size() );
    std::uint64_t size = 1;
    result.orbit_of[id] = orbit;
    stack.push_back( id );
    while ( !stack.empty() )
    {
      const auto cur = stack.back();
      stack.pop_back();
      to_digits( cur, in );
      for ( const auto& a : actions )
      {
        apply_compiled( a, k, in, out );
        const auto next = to_id( out );
        if ( result.orbit_of[next] == unassigned )
        {
          result.orbit_of[next] = orbit;
          ++size;
          stack.push_back( next );
        }
      }
    }
    result.orbits.push_back( { from_numeral( k, n, id ), size } );
  }
  return result;
}

std::vector<OrbitRecord> orbit_transversal( const GroupDescriptor& gd )
{
  return orbit_partition( gd ).orbits;
}

std::uint64_t count_orbits( const GroupDescriptor& gd )
{
  return orbit_partition( gd ).orbits.size();
}

} // namespace fnclass
