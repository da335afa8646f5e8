#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fnclass
{

using Value = std::uint8_t;

/*! \brief Thrown when a requested computation exceeds a configured size or time budget. */
class budget_exceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Set of variable indices 1..31 stored as a bitmask (bit i-1 is x_i). */
class VarSet
{
public:
  constexpr VarSet() = default;
  constexpr explicit VarSet( std::uint32_t bits ) : bits_( bits ) {}
  VarSet( std::initializer_list<int> vars );

  static VarSet from_members( std::span<const int> vars );
  static constexpr VarSet full( int n ) { return VarSet( n >= 32 ? ~0u : ( ( 1u << n ) - 1u ) ); }

  bool contains( int i ) const { return i >= 1 && i <= 32 && ( ( bits_ >> ( i - 1 ) ) & 1u ); }
  void insert( int i );
  void erase( int i );

  int size() const { return std::popcount( bits_ ); }
  bool empty() const { return bits_ == 0u; }
  std::uint32_t bits() const { return bits_; }
  int max_member() const { return 32 - std::countl_zero( bits_ ); }

  std::vector<int> members() const;
  bool is_subset_of( VarSet other ) const { return ( bits_ & ~other.bits_ ) == 0u; }
  bool intersects( VarSet other ) const { return ( bits_ & other.bits_ ) != 0u; }

  friend VarSet operator|( VarSet a, VarSet b ) { return VarSet( a.bits_ | b.bits_ ); }
  friend VarSet operator&( VarSet a, VarSet b ) { return VarSet( a.bits_ & b.bits_ ); }
  friend VarSet operator-( VarSet a, VarSet b ) { return VarSet( a.bits_ & ~b.bits_ ); }

  auto operator<=>( const VarSet& ) const = default;

  /// "{1,2,3}"
  std::string to_string() const;

private:
  std::uint32_t bits_ = 0u;
};

/// Parses "2,3" or "{2,3}".
VarSet parse_varset( std::string_view text );

/*! \brief Finite map from variable index to a constant. */
class PartialAssignment
{
public:
  PartialAssignment() = default;
  PartialAssignment( std::initializer_list<std::pair<int, Value>> bindings );

  void bind( int var, Value c );
  const std::vector<std::pair<int, Value>>& bindings() const { return bindings_; }
  VarSet domain() const;

private:
  std::vector<std::pair<int, Value>> bindings_; // sorted by variable
};

/*! \brief Truth table of a function Z_k^n -> Z_k.

  Point (a_1,...,a_n) is stored at index a_1 + a_2 k + ... + a_n k^(n-1), so
  x_1 is the least significant digit. Instances are immutable.
*/
class KFunction
{
public:
  KFunction( int k, int n, std::vector<Value> values );

  static KFunction constant( int k, int n, Value c );
  static KFunction projection( int k, int n, int var );

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Value> values() const { return values_; }
  Value operator[]( std::size_t index ) const { return values_[index]; }

  /// k^(var-1)
  std::size_t stride( int var ) const;
  std::size_t index_of( std::span<const Value> point ) const;
  std::vector<Value> point_of( std::size_t index ) const;

  bool operator==( const KFunction& ) const = default;
  std::strong_ordering operator<=>( const KFunction& other ) const;

  std::size_t hash() const;

private:
  int k_;
  int n_;
  std::vector<Value> values_;
};

struct KFunctionHash
{
  std::size_t operator()( const KFunction& f ) const { return f.hash(); }
};

/// Upper bound on k^n for any table; defaults to 2^32 cells.
std::uint64_t cell_limit();
void set_cell_limit( std::uint64_t cells );

/// k^n, or throws budget_exceeded when it passes `limit`.
std::uint64_t checked_power( std::uint64_t k, std::uint64_t n, std::uint64_t limit );

KFunction from_values( int k, int n, std::vector<Value> values );

Value eval( const KFunction& f, std::span<const Value> point );
inline Value eval( const KFunction& f, std::initializer_list<Value> point )
{
  return eval( f, std::span<const Value>( point.begin(), point.size() ) );
}

/*! \brief Restriction x_var = c, keeping arity n.

  The result no longer depends on x_var. Fixing an inessential variable
  returns an equal table.
*/
KFunction cofactor( const KFunction& f, int var, Value c );
KFunction restrict( const KFunction& f, const PartialAssignment& assignment );

/// Restriction of every variable in `vars` to the digits of `code` (base k, lowest member first).
KFunction restrict_set( const KFunction& f, VarSet vars, std::uint64_t code );

bool is_essential( const KFunction& f, int var );
VarSet essential_set( const KFunction& f );
inline int ess( const KFunction& f ) { return essential_set( f ).size(); }

/// Distinct values taken by f, ascending.
std::vector<Value> range_of( const KFunction& f );

/// Essential x_i for which some c leaves exactly Ess(f) \ {x_i} essential.
VarSet strongly_essential_set( const KFunction& f );

/// Number of assignments of a variable set: k^|vars|.
std::uint64_t assignment_count( int k, VarSet vars );

/* Text formats */

/// k = 2 only: hex of the table, bit i = value at index i, most significant nibble first ("d8").
std::string to_hex( const KFunction& f );
KFunction from_hex( std::string_view text, int n );

/// Comma-separated values in index order ("2,0,1").
std::string to_digits( const KFunction& f );
KFunction from_digits( std::string_view text, int k, int n );

/// Hex for k = 2, digit list otherwise.
std::string format_table( const KFunction& f );
KFunction parse_table( std::string_view text, int k, int n );

/* Function-space indexing: the table read as a base-k numeral, index 0 least significant. */

std::uint64_t space_size( int k, int n );
std::uint64_t numeral( const KFunction& f );
KFunction from_numeral( int k, int n, std::uint64_t id );

} // namespace fnclass

template<>
struct std::hash<fnclass::KFunction>
{
  std::size_t operator()( const fnclass::KFunction& f ) const { return f.hash(); }
};
