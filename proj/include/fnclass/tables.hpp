#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fnclass
{

/*! \brief A reproduced table with its diff against the published values. */
struct TableArtifact
{
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// one line per differing cell
  std::vector<std::string> mismatches;
  /// cells that were not computed (e.g. over budget)
  std::vector<std::string> skipped;

  bool matches() const { return mismatches.empty(); }
  std::string csv() const;
  nlohmann::json json() const;
};

struct TableOptions
{
  unsigned jobs = 1;
  /// Where the five-variable scan keeps its checkpoint; empty disables it.
  std::filesystem::path cache_dir;
  bool resume = true;
  double budget_seconds = 0;
  /// Run the five-variable sep scan for table4 when no finished checkpoint exists.
  bool run_long_scans = false;
  std::function<void( std::uint64_t, std::uint64_t )> progress;
};

/// Names accepted by reproduce_table.
const std::vector<std::string>& table_names();

/*! \brief Recomputes a published table: table1, table3, table4, table5 or figure4.

  Throws std::invalid_argument for unknown names and budget_exceeded when the
  five-variable scan runs out of budget.
*/
TableArtifact reproduce_table( const std::string& name, const TableOptions& options = {} );

/// Checkpoint path used for the five-variable sep scan inside a cache directory.
std::filesystem::path sep_scan_checkpoint( const std::filesystem::path& cache_dir );

} // namespace fnclass
