#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groups.hpp"

/*! \brief Published classification values, shipped as fixture data so that
  table reproduction can diff against them without external files. */
namespace fnclass::reference
{

/// Implementation classes of two-variable Boolean functions.
struct Table1Row
{
  std::vector<std::string> members; ///< SP expressions
  std::uint64_t imp;
  std::uint64_t size;
};
const std::vector<Table1Row>& table1();

/// Three-variable Boolean functions: one row per genus class.
struct Table3Row
{
  int sep_class;
  std::uint64_t sep;
  std::uint64_t sep_size;
  int sub_class;
  std::uint64_t sub;
  std::uint64_t sub_size;
  int imp_class;
  std::uint64_t imp;
  std::uint64_t imp_size;
  int genus_class;
  std::uint64_t genus_size;
  std::string representative; ///< SP expression
};
const std::vector<Table3Row>& table3();

/// Printed averages row, one decimal.
struct Table3Averages
{
  double sep, functions_per_sep_class, sub, functions_per_sub_class, imp, functions_per_imp_class,
      functions_per_genus_class;
};
const Table3Averages& table3_averages();

/// Class counts per arity; unset cells are not given exactly.
struct Table4Row
{
  int n;
  std::uint64_t symmetry_types;
  std::optional<std::uint64_t> imp;
  std::optional<std::uint64_t> sub;
  std::optional<std::uint64_t> sep;
};
const std::vector<Table4Row>& table4();

/// sep classes of five-variable functions; profile is (sep_1, ..., sep_5).
struct Table5Row
{
  std::array<int, 5> sep;
  std::uint64_t size;
};
const std::vector<Table5Row>& table5();

/// Orbit/class counts over three and four variables.
struct Figure4Entry
{
  std::string node;
  std::optional<GroupName> group; ///< nullopt for identity and the three relations
  std::uint64_t n3;
  std::uint64_t n4;
};
const std::vector<Figure4Entry>& figure4();

/// Worked examples: f = x1x2 + x1x3 and g = x1x2 + x1^0x3.
struct ExampleValues
{
  std::string f = "x1*x2 + x1*x3";
  std::string g = "x1*x2 + x1^0*x3";
  std::uint64_t imp_f = 33, imp_g = 28, sub_f = 13, sub_g = 11, sep_f = 7, sep_g = 6;
  std::uint64_t imp_diagram_f = 5, imp_diagram_g = 4;
  int depth_f = 4, depth_g = 3;
  std::vector<std::string> sub_f_members;
  std::vector<std::string> sub_g_members;
  std::vector<std::string> sep_g_sets;
  /// (ordering, implementation pairs) for f and g
  std::vector<std::pair<std::string, std::vector<std::string>>> implementations_f;
  std::vector<std::pair<std::string, std::vector<std::string>>> implementations_g;
};
const ExampleValues& example_values();

} // namespace fnclass::reference
