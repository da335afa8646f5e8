#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>

#include "bit_kernels.hpp"
#include "classify.hpp"

namespace fnclass
{

struct SepScanOptions
{
  /// Checkpoint file; empty disables checkpointing.
  std::filesystem::path checkpoint;
  /// Continue from an existing checkpoint instead of starting over.
  bool resume = true;
  /// Wall-clock budget in seconds for this call; 0 means unlimited.
  double budget_seconds = 0;
  unsigned jobs = 1;
  /// Functions per checkpointed chunk; must divide 2^31.
  std::uint64_t chunk = std::uint64_t{ 1 } << 24;
  std::function<void( std::uint64_t done, std::uint64_t total )> progress;
};

/*! \brief Partition of all 2^32 five-variable Boolean functions by sep profile.

  Scans the 2^31 tables with f(1,1,1,1,1) = 0 using the word kernel and
  doubles every count, since complementing the output preserves the
  profile. Classes are ordered by (sep_5, ..., sep_1). Progress is saved
  after every chunk; when the budget runs out or SIGINT arrives the
  checkpoint is flushed and budget_exceeded is thrown.
*/
ClassificationReport sep_scan_p2_5( const SepScanOptions& options = {} );

/// Fraction of the scan stored in a checkpoint, or nullopt when none is readable.
std::optional<double> sep_scan_progress( const std::filesystem::path& checkpoint );

/// Packed sep profile -> number of sampled functions, over uniformly random five-variable tables.
std::map<bits::SepKey, std::uint64_t> sample_sep_profiles( std::uint64_t samples, std::uint64_t seed );

/// Random tables on which the word kernel disagrees with the generic sep_vector.
std::uint64_t sep_kernel_mismatches( std::uint64_t samples, std::uint64_t seed );

} // namespace fnclass
