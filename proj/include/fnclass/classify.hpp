#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "groups.hpp"
#include "kfunction.hpp"

namespace fnclass
{

/*! \brief Canonical form of the recursive implementation equivalence.

  For ess(f) <= 1 the signature is the essential count. Otherwise it is the
  sorted multiset, over essential x_i, of the sorted multiset over j of the
  signatures of f(x_i = j). Two functions are implementation-equivalent
  exactly when their signatures are equal.
*/
struct ImpSignature
{
  std::string canonical;

  auto operator<=>( const ImpSignature& ) const = default;
};

ImpSignature imp_signature( const KFunction& f );

/// Memoizing signature computation; interns signatures as small integers.
class ImpSignatureInterner
{
public:
  std::uint32_t id( const KFunction& f );
  std::size_t distinct() const { return by_key_.size(); }

private:
  std::unordered_map<KFunction, std::uint32_t, KFunctionHash> memo_;
  std::unordered_map<std::string, std::uint32_t> by_key_;
};

struct ComplexityProfile
{
  std::uint64_t imp = 0;
  std::vector<std::uint64_t> sub; ///< sub_0..sub_n
  std::vector<std::uint64_t> sep; ///< sep_1..sep_n

  std::uint64_t sub_total() const;
  std::uint64_t sep_total() const;
  bool operator==( const ComplexityProfile& ) const = default;
};

/// Word kernels are used for k = 2, n <= 5.
ComplexityProfile complexity_profile( const KFunction& f );

/*! \brief Relations a space can be classified by.

  `imp` groups functions by their number of implementations; this is the
  grouping behind the published class counts (4, 13, 104 for n = 2, 3, 4).
  `imp_signature` is the finer structural recursion on cofactors; the two
  coincide for n <= 3 and differ from n = 4 on (214 classes).
*/
enum class RelationKind
{
  imp,
  imp_signature,
  sub,
  sep,
  group
};

struct Relation
{
  RelationKind kind = RelationKind::imp;
  GroupName group = GroupName::G; ///< used when kind == group

  /// "imp", "imp-sig", "sub", "sep", or a group name
  std::string name() const;
  static Relation parse( std::string_view text );
  static Relation of_group( GroupName g ) { return { RelationKind::group, g }; }
};

/// Class key of f under a profile relation (imp, imp-sig, sub or sep).
std::string class_key( const KFunction& f, RelationKind kind );

struct ClassRecord
{
  std::string key;
  std::uint64_t size = 0;
  KFunction representative; ///< smallest member as a numeral
  ComplexityProfile profile; ///< of the representative
};

struct ClassificationReport
{
  std::string relation;
  int k = 2;
  int n = 0;
  std::vector<ClassRecord> classes;
  std::uint64_t total = 0;
  /// class index per function numeral; empty for spaces too large to store
  std::vector<std::uint32_t> membership;

  std::optional<std::size_t> class_of( const KFunction& f ) const;
};

struct ClassifyOptions
{
  unsigned jobs = 1;
  bool keep_membership = true;
};

/*! \brief Partition of P_k^n under a relation.

  Classes appear in order of their smallest member, except for sep which is
  ordered by the reversed profile (sep_n, ..., sep_1). Throws budget_exceeded
  when the space exceeds orbit_space_limit().
*/
ClassificationReport classify_space( int k, int n, const Relation& relation, const ClassifyOptions& options = {} );

struct ClassCounts
{
  std::uint64_t imp = 0;
  std::uint64_t sub = 0;
  std::uint64_t sep = 0;
};

ClassCounts class_counts( int k, int n, unsigned jobs = 1 );

/// Two functions in one class of a that lie in different classes of b.
std::optional<std::pair<KFunction, KFunction>> refinement_witness( const ClassificationReport& a,
                                                                   const ClassificationReport& b );

/// Every class of a lies inside a class of b. Needs membership vectors of the same space.
bool refinement_check( const ClassificationReport& a, const ClassificationReport& b );

} // namespace fnclass
