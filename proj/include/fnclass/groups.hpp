#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kfunction.hpp"

namespace fnclass
{

/* Transformations. Each acts on a function table; `apply` documents the formula. */

/// f(x_pi(1), ..., x_pi(n)); perm[i-1] = pi(i)
struct VarPerm
{
  std::vector<int> perm;
};

/// f(x + c)
struct ArgTranslate
{
  std::vector<Value> shift;
};

/// out( f(sigma_1(x_pi(1)), ..., sigma_n(x_pi(n))) ); an empty output map is the identity
struct VarPermValueMaps
{
  std::vector<int> perm;
  std::vector<std::vector<Value>> value_maps;
  std::vector<Value> output_map;
};

/// sigma(f(x)), sigma a permutation of Z_k
struct OutputMap
{
  std::vector<Value> sigma;
};

/// f(x) + j
struct OutputTranslate
{
  Value shift = 0;
};

/// f(x) + a_1 x_1 + ... + a_n x_n
struct AddLinear
{
  std::vector<Value> coeffs;
};

/// u * f(xA + c) + a.x + d, with x a row vector, A non-singular and u a unit
struct Affine
{
  std::vector<std::vector<Value>> matrix;
  std::vector<Value> shift;
  std::vector<Value> linear;
  Value constant = 0;
  Value output_scale = 1;
};

using Transformation = std::variant<VarPerm, ArgTranslate, VarPermValueMaps, OutputMap, OutputTranslate, AddLinear, Affine>;

/*! \brief Applies t to f.

  Throws std::invalid_argument on dimension mismatch, non-bijective maps, or
  a singular matrix.
*/
KFunction apply( const Transformation& t, const KFunction& f );

/// Transformation acting as apply(outer, apply(inner, f)).
Transformation compose( const Transformation& outer, const Transformation& inner, int k );

Transformation identity_transformation( int k, int n );

/// The point x is read from point domain_map(x) for domain-only transformations; nullopt otherwise.
std::optional<std::vector<std::uint64_t>> domain_map( const Transformation& t, int k, int n );

/// sigma(f(x)) for an arbitrary, possibly non-bijective, sigma. Not a group action.
KFunction map_outputs( const KFunction& f, std::span<const Value> sigma );

/* Groups */

enum class GroupName
{
  S,
  CA,
  G,
  GE,
  CF,
  LF,
  LG,
  A,
  AxA1,
  RAG,
  FullSym
};

std::string_view group_name( GroupName g );
/// Accepts the CLI spellings s, ca, g, ge, cf, lf, lg, a, axa1, rag, fullsym.
GroupName parse_group_name( std::string_view text );
const std::vector<GroupName>& all_groups();

struct GroupDescriptor
{
  GroupName name;
  int k;
  int n;

  /// Throws std::invalid_argument for non-prime k on linear groups or bad sizes.
  void validate() const;
};

bool is_prime( int k );

/// |GL(n, k)| for prime k.
std::uint64_t general_linear_order( int k, int n );
std::uint64_t group_order( const GroupDescriptor& gd );

/// Calls visit on every element; stops early when visit returns false.
void for_each_element( const GroupDescriptor& gd, const std::function<bool( const Transformation& )>& visit );

/// All elements; throws budget_exceeded past `max_elements`.
std::vector<Transformation> group_elements( const GroupDescriptor& gd, std::uint64_t max_elements = 1u << 20 );

/// A generating set for the group.
std::vector<Transformation> group_generators( const GroupDescriptor& gd );

/*! \brief Smallest table (as a base-k numeral) in the orbit of f.

  The orbit is closed under the generators; throws budget_exceeded when it
  grows past `max_orbit`.
*/
KFunction canonical_form( const KFunction& f, const GroupDescriptor& gd, std::uint64_t max_orbit = 1u << 24 );

/// Canonical form from a full scan over group elements; an independent route for small groups.
KFunction canonical_form_by_elements( const KFunction& f, const GroupDescriptor& gd );

struct OrbitRecord
{
  KFunction representative; ///< smallest member
  std::uint64_t size;
};

/// Largest function space (k^(k^n)) accepted by orbit scans.
std::uint64_t orbit_space_limit();
void set_orbit_space_limit( std::uint64_t functions );

/// One record per orbit, ordered by representative; sizes sum to k^(k^n).
std::vector<OrbitRecord> orbit_transversal( const GroupDescriptor& gd );

/// Orbit index for every function numeral, plus the transversal.
struct OrbitPartition
{
  std::vector<OrbitRecord> orbits;
  std::vector<std::uint32_t> orbit_of;
};
OrbitPartition orbit_partition( const GroupDescriptor& gd );

std::uint64_t count_orbits( const GroupDescriptor& gd );

} // namespace fnclass
