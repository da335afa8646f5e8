#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kfunction.hpp"

/*! \brief Word-level kernels for Boolean functions of at most five variables.

  A table is a 32-bit word whose bit x is f(x). Tables with n < 5 are
  replicated over the unused variables, so every kernel can treat the word
  as a 5-variable function in which the padding variables are inessential.
*/
namespace fnclass::bits
{

constexpr int max_vars = 5;

/// Bits whose point has x_var = 0 (var in 1..5).
constexpr std::uint32_t low_mask( int var )
{
  constexpr std::array<std::uint32_t, 5> masks{ 0x55555555u, 0x33333333u, 0x0f0f0f0fu, 0x00ff00ffu, 0x0000ffffu };
  return masks[var - 1];
}

constexpr int var_shift( int var ) { return 1 << ( var - 1 ); }

/// Replicates the low 2^n bits of a table over the whole word.
std::uint32_t pad_table( std::uint32_t table, int n );

/// Throws unless f is Boolean with n <= 5.
std::uint32_t to_word( const KFunction& f );
KFunction from_word( std::uint32_t word, int n );

/// Arity-preserving restriction x_var = c.
inline std::uint32_t cofactor_word( std::uint32_t t, int var, int c )
{
  const int s = var_shift( var );
  if ( c == 0 )
  {
    const auto lo = t & low_mask( var );
    return lo | ( lo << s );
  }
  const auto hi = t & ~low_mask( var );
  return hi | ( hi >> s );
}

/// Bit var-1 set when x_var is essential.
std::uint32_t essential_mask_word( std::uint32_t t );

/// Bit M set (M a variable bitmask, 1..31) when M is separable in the padded table.
std::uint32_t sep_mask_word( std::uint32_t t );

/// Every distinct restriction of t (arity preserved), i.e. Sub(f).
std::vector<std::uint32_t> subfunctions_word( std::uint32_t t );

std::vector<std::uint64_t> sep_vector_word( std::uint32_t t, int n );
std::vector<std::uint64_t> sub_vector_word( std::uint32_t t, int n );

/* Packed sep profiles for five variables: sep_1 (3 bits), sep_2 (4 bits),
   sep_3 (4 bits), sep_4 (3 bits) and sep_5 (1 bit). */

using SepKey = std::uint16_t;
constexpr std::size_t sep_key_space = 1u << 15;

SepKey pack_sep_key( const std::array<int, 5>& sep );
std::array<int, 5> unpack_sep_key( SepKey key );

/// Packed sep profile of one padded table.
SepKey sep_key_word( std::uint32_t t );

/*! \brief Packed sep profiles for consecutive tables first, first+1, ...

  Vectorized; results are identical to sep_key_word.
*/
void sep_keys_range( std::uint32_t first, std::size_t count, SepKey* keys );

} // namespace fnclass::bits
