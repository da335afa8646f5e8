#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "diagram.hpp"
#include "groups.hpp"

namespace fnclass
{

/// Bumped whenever classification results could change; part of every cache key.
constexpr int code_version = 2;

/// {k, n, table, imp, sub:[...], sep:[...]}
nlohmann::json profile_json( const KFunction& f, const ComplexityProfile& p );
std::string profile_csv_header();
std::string profile_csv_row( const KFunction& f, const ComplexityProfile& p );

/// [{vars:"213", consts:"0100"}, ...]
nlohmann::json implementations_json( const std::vector<Implementation>& imps );

nlohmann::json report_json( const ClassificationReport& report );
/// class,size,imp,sub,sep,sep_1..sep_n,representative
std::string report_csv( const ClassificationReport& report );

/// canonical_hex,orbit_size
std::string transversal_csv( const std::vector<OrbitRecord>& orbits );

/*! \brief Binary report file.

  Layout (little-endian): magic "FNCLRPT1", u32 code version, u32 k, u32 n,
  string relation, u64 total, u64 class count, then per class: string key,
  u64 size, u64 representative numeral, u64 imp, u32 + u64[] sub,
  u32 + u64[] sep; finally u64 membership length and u32 entries. Strings are
  u32 length followed by bytes.
*/
void write_report( const ClassificationReport& report, const std::filesystem::path& path );
ClassificationReport read_report( const std::filesystem::path& path );

/*! \brief Directory of reports keyed by (k, n, relation, code version).

  Files are named `<relation>-k<k>-n<n>-v<version>.bin`.
*/
class ReportCache
{
public:
  explicit ReportCache( std::filesystem::path dir ) : dir_( std::move( dir ) ) {}

  std::filesystem::path path_for( int k, int n, const std::string& relation ) const;
  std::optional<ClassificationReport> load( int k, int n, const std::string& relation ) const;
  void store( const ClassificationReport& report ) const;
  const std::filesystem::path& dir() const { return dir_; }

private:
  std::filesystem::path dir_;
};

} // namespace fnclass
