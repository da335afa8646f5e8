#pragma once

#include <cstdint>
#include <vector>

#include "kfunction.hpp"

namespace fnclass
{

/*! \brief A family of non-empty variable sets, deduplicated and sorted. */
class SetFamily
{
public:
  SetFamily() = default;
  explicit SetFamily( std::vector<VarSet> sets );

  const std::vector<VarSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  /// Union of all members.
  VarSet support() const;

  bool operator==( const SetFamily& ) const = default;

private:
  std::vector<VarSet> sets_;
};

/*! \brief Sub(f): f together with every table reachable by repeatedly fixing
  a currently essential variable. Sorted, duplicates removed. */
std::vector<KFunction> subfunctions( const KFunction& f );

/// (sub_0, ..., sub_n): subfunction counts grouped by number of essential variables.
std::vector<std::uint64_t> sub_vector( const KFunction& f );

/*! \brief Sep(f): Ess(g) for every subfunction g with at least one essential variable. */
std::vector<VarSet> separable_sets( const KFunction& f );

/// (sep_1, ..., sep_n) stored at indices 0..n-1.
std::vector<std::uint64_t> sep_vector( const KFunction& f );

/*! \brief Whether M is the essential set of some subfunction.

  Scans every assignment to Ess(f) \ M. Throws std::invalid_argument unless
  M is non-empty and inside Ess(f).
*/
bool is_separable( const KFunction& f, VarSet M );

/// True when every assignment to J leaves some variable of M inessential.
bool is_blocking( const KFunction& f, VarSet M, VarSet J );

enum class DisReading
{
  minimal,     ///< only inclusion-minimal blocking sets
  all_blocking ///< every blocking set
};

/*! \brief Dis(M, f): sets J inside Ess(f) \ M that block M.

  Candidates are tried by increasing size; supersets of an accepted minimal
  set are skipped under DisReading::minimal, since blocking is upward closed.
*/
SetFamily distributive_sets( VarSet M, const KFunction& f, DisReading reading = DisReading::minimal );

/*! \brief Every beta inside the support of F that hits each member and where
  each element of beta is the only hit of some member. Exhaustive over subsets. */
std::vector<VarSet> s_systems( const SetFamily& F );

/// Minimal hitting sets computed incrementally (Berge); independent of s_systems.
std::vector<VarSet> minimal_transversals( const SetFamily& F );

/// g is f or arises from f by fixing variables.
bool is_subfunction( const KFunction& g, const KFunction& f );

/*! \brief Chain g = g_0, g_1, ..., g_r = f where each link fixes one variable
  of the next and the essential count grows by exactly one per link.

  Throws std::invalid_argument if g is not a subfunction of f.
*/
std::vector<KFunction> subfunction_chain( const KFunction& f, const KFunction& g );

} // namespace fnclass
