#include "fnclass/bit_kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fnclass::bits
{

std::uint32_t pad_table( std::uint32_t table, int n )
{
  if ( n < 0 || n > max_vars )
    throw std::invalid_argument( "word tables hold at most five variables" );
  for ( int width = 1 << n; width < 32; width <<= 1 )
  {
    table &= ( std::uint32_t{ 1 } << width ) - 1u;
    table |= table << width;
  }
  return table;
}

std::uint32_t to_word( const KFunction& f )
{
  if ( f.k() != 2 || f.n() > max_vars )
    throw std::invalid_argument( "word tables need k = 2 and n <= 5" );
  std::uint32_t t = 0;
  for ( std::size_t i = 0; i < f.size(); ++i )
    t |= std::uint32_t{ f[i] } << i;
  return pad_table( t, f.n() );
}

KFunction from_word( std::uint32_t word, int n )
{
  if ( n < 0 || n > max_vars )
    throw std::invalid_argument( "word tables hold at most five variables" );
  std::vector<Value> v( std::size_t{ 1 } << n );
  for ( std::size_t i = 0; i < v.size(); ++i )
    v[i] = static_cast<Value>( ( word >> i ) & 1u );
  return KFunction( 2, n, std::move( v ) );
}

std::uint32_t essential_mask_word( std::uint32_t t )
{
  std::uint32_t mask = 0;
  for ( int var = 1; var <= max_vars; ++var )
    if ( ( ( t ^ ( t >> var_shift( var ) ) ) & low_mask( var ) ) != 0u )
      mask |= 1u << ( var - 1 );
  return mask;
}

namespace
{

/// Existential quantification of x_var: the result is constant along x_var.
template<class W>
inline W smear( W w, int var )
{
  const int s = var_shift( var );
  const W t = ( w | ( w >> s ) ) & low_mask( var );
  return t | ( t << s );
}

/*! For each M, AND over i in M of "x_i is essential somewhere in the
  sub-cube", quantified over M. Nonzero iff some assignment to the other
  variables leaves all of M essential. */
template<class W>
inline void separable_words( W t, W* out /* 32 entries, index M */ )
{
  W diff[max_vars];
  for ( int i = 0; i < max_vars; ++i )
    diff[i] = ( t ^ ( t >> var_shift( i + 1 ) ) ) & low_mask( i + 1 );

  W smeared[max_vars][32];
  for ( unsigned S = 1; S < 32; ++S )
  {
    for ( int i = 0; i < max_vars; ++i )
    {
      if ( !( ( S >> i ) & 1u ) )
        continue;
      const unsigned rest = S & ~( 1u << i );
      if ( rest == 0 )
        smeared[i][S] = smear( diff[i], i + 1 );
      else
      {
        const int j = std::countr_zero( rest );
        smeared[i][S] = smear( smeared[i][S & ~( 1u << j )], j + 1 );
      }
    }
    W acc = ~W{};
    for ( int i = 0; i < max_vars; ++i )
      if ( ( S >> i ) & 1u )
        acc &= smeared[i][S];
    out[S] = acc;
  }
}

} // namespace

std::uint32_t sep_mask_word( std::uint32_t t )
{
  std::uint32_t w[32];
  separable_words( t, w );
  std::uint32_t mask = 0;
  for ( unsigned M = 1; M < 32; ++M )
    if ( w[M] != 0u )
      mask |= 1u << M;
  return mask;
}

std::vector<std::uint32_t> subfunctions_word( std::uint32_t t )
{
  std::vector<std::uint32_t> out;
  out.reserve( 243 );
  // each variable is free, 0 or 1: 3^5 restrictions
  for ( int code = 0; code < 243; ++code )
  {
    auto g = t;
    int rest = code;
    for ( int var = 1; var <= max_vars; ++var, rest /= 3 )
      if ( rest % 3 != 2 )
        g = cofactor_word( g, var, rest % 3 );
    out.push_back( g );
  }
  std::sort( out.begin(), out.end() );
  out.erase( std::unique( out.begin(), out.end() ), out.end() );
  return out;
}

std::vector<std::uint64_t> sep_vector_word( std::uint32_t t, int n )
{
  std::vector<std::uint64_t> counts( n, 0 );
  const auto mask = sep_mask_word( t );
  for ( unsigned M = 1; M < 32; ++M )
    if ( ( mask >> M ) & 1u )
    {
      const auto size = std::popcount( M );
      if ( size > n )
        throw std::logic_error( "separable set exceeds the arity" );
      ++counts[size - 1];
    }
  return counts;
}

std::vector<std::uint64_t> sub_vector_word( std::uint32_t t, int n )
{
  std::vector<std::uint64_t> counts( n + 1, 0 );
  for ( auto g : subfunctions_word( t ) )
    ++counts[std::popcount( essential_mask_word( g ) )];
  return counts;
}

SepKey pack_sep_key( const std::array<int, 5>& sep )
{
  return static_cast<SepKey>( sep[0] | ( sep[1] << 3 ) | ( sep[2] << 7 ) | ( sep[3] << 11 ) | ( sep[4] << 14 ) );
}

std::array<int, 5> unpack_sep_key( SepKey key )
{
  return { key & 7, ( key >> 3 ) & 15, ( key >> 7 ) & 15, ( key >> 11 ) & 7, ( key >> 14 ) & 1 };
}

SepKey sep_key_word( std::uint32_t t )
{
  const auto mask = sep_mask_word( t );
  std::array<int, 5> sep{};
  for ( unsigned M = 1; M < 32; ++M )
    if ( ( mask >> M ) & 1u )
      ++sep[std::popcount( M ) - 1];
  return pack_sep_key( sep );
}

namespace
{

constexpr int lanes = 8;
using Vec = std::uint32_t __attribute__( ( vector_size( lanes * sizeof( std::uint32_t ) ) ) );
using SVec = std::int32_t __attribute__( ( vector_size( lanes * sizeof( std::int32_t ) ) ) );

} // namespace

void sep_keys_range( std::uint32_t first, std::size_t count, SepKey* keys )
{
  std::size_t done = 0;
  Vec offsets;
  for ( int l = 0; l < lanes; ++l )
    offsets[l] = static_cast<std::uint32_t>( l );

  Vec w[32];
  for ( ; done + lanes <= count; done += lanes )
  {
    const Vec t = ( Vec{} + static_cast<std::uint32_t>( first + done ) ) + offsets;
    separable_words( t, w );
    SVec cnt[5] = {};
    for ( unsigned M = 1; M < 32; ++M )
      cnt[std::popcount( M ) - 1] -= reinterpret_cast<SVec>( w[M] != 0u );
    const SVec key = cnt[0] | ( cnt[1] << 3 ) | ( cnt[2] << 7 ) | ( cnt[3] << 11 ) | ( cnt[4] << 14 );
    for ( int l = 0; l < lanes; ++l )
      keys[done + l] = static_cast<SepKey>( key[l] );
  }
  for ( ; done < count; ++done )
    keys[done] = sep_key_word( static_cast<std::uint32_t>( first + done ) );
}

} // namespace fnclass::bits
