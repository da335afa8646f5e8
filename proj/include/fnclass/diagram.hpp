#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kfunction.hpp"

namespace fnclass
{

struct DiagramNode
{
  int var = 0;     ///< 0 marks a terminal
  Value value = 0; ///< terminal label
  std::vector<std::uint32_t> children; ///< one per value 0..k-1 for internal nodes

  bool is_terminal() const { return var == 0; }
  bool operator==( const DiagramNode& ) const = default;
};

/*! \brief Ordered decomposition tree or reduced ordered decision diagram.

  Nodes are stored in depth-first preorder from the root (children visited in
  value order), which makes the node list of a reduced diagram a canonical
  serialization for a fixed function and ordering.
*/
class OrderedDiagram
{
public:
  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<int>& ordering() const { return ordering_; }
  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  std::uint32_t root() const { return 0; }
  bool reduced() const { return reduced_; }

  std::size_t internal_count() const;
  std::size_t terminal_count() const;

  bool operator==( const OrderedDiagram& ) const = default;

private:
  friend OrderedDiagram build_odt( const KFunction& f, std::vector<int> ordering );
  friend struct DiagramBuilder;

  int k_ = 2;
  int n_ = 0;
  std::vector<int> ordering_;
  std::vector<DiagramNode> nodes_;
  bool reduced_ = false;
};

/*! \brief One root-to-terminal path: variables met, edge values taken, terminal value. */
struct Implementation
{
  std::vector<int> vars;
  std::vector<Value> consts;
  Value output = 0;

  auto operator<=>( const Implementation& ) const = default;

  /// "213" (comma separated when an index exceeds 9)
  std::string var_word() const;
  /// edge values followed by the output, "0100"
  std::string const_word() const;
  /// "(213,0100)"
  std::string to_string() const;
};

struct ReduceOptions
{
  bool merge_isomorphic = true;
  bool remove_redundant = true;
};

/// Complete k-ary tree over `ordering` (a permutation of 1..n); leaves carry f's values.
OrderedDiagram build_odt( const KFunction& f, std::vector<int> ordering );

/// Applies the merge and redundant-node rules until neither applies.
OrderedDiagram reduce( const OrderedDiagram& d, const ReduceOptions& options = {} );

/// reduce( build_odt( f, ordering ) )
OrderedDiagram build_odd( const KFunction& f, std::vector<int> ordering );

/// Value reached by following the point's coordinates from the root.
Value evaluate( const OrderedDiagram& d, std::span<const Value> point );

VarSet diagram_labels( const OrderedDiagram& d );

/// Label paths; parallel edges into one child are distinct implementations.
std::vector<Implementation> implementations_of( const OrderedDiagram& d );

/// Number of label paths, counted without materializing them.
std::uint64_t path_count( const OrderedDiagram& d );

/// Edges on the longest path from the function node, including the edge into the root.
int depth( const OrderedDiagram& d );

/// Maximum ess(f) for which implementations() enumerates all orderings.
int ordering_limit();
void set_ordering_limit( int max_ess );

/*! \brief Imp(f): union of the implementations of the diagrams over every
  ordering of Ess(f), duplicates removed. */
std::vector<Implementation> implementations( const KFunction& f );

/*! \brief imp(f).

  For k = 2 this is the memoized recursion over cofactors of essential
  variables (bases 1 and 2); for k > 2 it counts implementations().
*/
std::uint64_t imp_count( const KFunction& f );

/// Recursion sum over essential x and values j of imp(f(x=j)), base k at ess 1. Experimental for k > 2.
std::uint64_t imp_recursive( const KFunction& f );

/// Ordering whose diagram reaches depth ess(f)+1. Requires ess(f) >= 1.
std::vector<int> find_full_depth_ordering( const KFunction& f );

/*! \brief Ordering whose diagram has depth below ess(f)+1.

  Starts with a distributive set J of M, led by a member of an s-system of
  Dis(M, f), followed by the remaining essential variables. Throws
  std::invalid_argument unless M is a non-empty, proper, inseparable subset
  of Ess(f).
*/
std::vector<int> find_shallow_ordering( const KFunction& f, VarSet M );

/// Graphviz text; value-0 edges dashed and value-1 edges solid for k = 2, labelled edges otherwise.
std::string to_dot( const OrderedDiagram& d, const std::string& name = "f" );

} // namespace fnclass
