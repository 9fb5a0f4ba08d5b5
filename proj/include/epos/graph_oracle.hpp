#pragma once

#include <istream>
#include <span>
#include <utility>
#include <vector>

#include "epos/efunction.hpp"

namespace epos {

/// A simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  /// Throws DomainError on self-loops, duplicate edges or out-of-range
  /// endpoints, and when vertex_count < 1.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<int> degrees() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
};

Graph path_graph(int n);
Graph complete_graph(int n);

/// Paths of the given lengths glued at a common end vertex (vertex 0).
Graph spider_graph(std::span<const int> legs);

/// Reads the text format: the vertex count on the first line, then one
/// "u v" edge per line. Blank lines are ignored.
Graph parse_graph(std::istream& in);

inline constexpr int kDefaultEdgeBudget = 30;

/// Chromatic symmetric function by brute force over edge subsets:
/// X_G = sum over S of (-1)^|S| p_{lambda(S)}, where lambda(S) lists the
/// component sizes of the spanning subgraph (V, S). Throws BudgetError when
/// the graph has more than `edge_budget` edges.
EFunction csf_subset_expansion(const Graph& g, int edge_budget = kDefaultEdgeBudget);

}  // namespace epos
