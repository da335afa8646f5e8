#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fnclass
{

struct VerifyOptions
{
  int k = 2;
  int n = 3;
  /// 0 runs over the whole space; otherwise this many uniformly random tables.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Negative control: diagrams are reduced without removing redundant nodes.
  bool mutant = false;
};

struct CheckResult
{
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// first failing table (hex or digits) with a short explanation
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

struct VerifyReport
{
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find( const std::string& name ) const;
};

/*! \brief Runs the structural invariants over a function space or a sample.

  Per-function checks cover separable-set extensions, s-systems, diagram
  labels, implementation suffixes, depth orderings, strongly essential
  variables, subfunction chains, invariance under value maps, and the
  implementation-count recursion. When the space is small enough to classify
  (at most 2^16 functions) the class-refinement checks run as well.
*/
VerifyReport run_verify( const VerifyOptions& options );

} // namespace fnclass
