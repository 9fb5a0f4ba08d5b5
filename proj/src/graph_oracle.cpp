#include "epos/graph_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "epos/errors.hpp"
#include "epos/parallel.hpp"

namespace epos {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw DomainError("graph needs at least one vertex");
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
  for (const auto& [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs at least one vertex");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw DomainError("complete graph needs at least one vertex");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph spider_graph(std::span<const int> legs) {
  if (legs.empty()) throw DomainError("spider needs at least one leg");
  std::vector<Graph::Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw DomainError("spider legs must have positive length");
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, std::move(edges));
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw DomainError("graph file is empty");
  auto read_ints = [](const std::string& text, std::size_t expected) {
    std::istringstream ss(text);
    std::vector<int> values;
    int v = 0;
    while (ss >> v) values.push_back(v);
    std::string junk;
    ss.clear();
    if (values.size() != expected || (ss >> junk)) throw DomainError("malformed graph line: '" + text + "'");
    return values;
  };
  const int n = read_ints(lines[0], 1)[0];
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = read_ints(lines[i], 2);
    edges.emplace_back(uv[0], uv[1]);
  }
  return Graph(n, std::move(edges));
}

namespace {

// Signed multiplicity of each component-size partition over a range of
// edge subsets.
using SignedCounts = std::map<std::vector<int>, std::int64_t>;

SignedCounts count_subsets(const Graph& g, std::uint64_t begin, std::uint64_t end) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto& edges = g.edges();
  std::vector<int> parent(n);
  std::vector<int> size(n);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  SignedCounts counts;
  std::vector<int> sizes;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(size.begin(), size.end(), 1);
    int chosen = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (((mask >> e) & 1U) == 0) continue;
      ++chosen;
      int a = find(edges[e].first);
      int b = find(edges[e].second);
      if (a == b) continue;
      if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
      parent[static_cast<std::size_t>(b)] = a;
      size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    }
    sizes.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (parent[v] == static_cast<int>(v)) sizes.push_back(size[v]);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    counts[sizes] += chosen % 2 == 0 ? 1 : -1;
  }
  return counts;
}

}  // namespace

EFunction csf_subset_expansion(const Graph& g, int edge_budget) {
  const auto edge_count = static_cast<int>(g.edges().size());
  if (edge_count > edge_budget) {
    throw BudgetError("graph has " + std::to_string(edge_count) + " edges, budget is " +
                      std::to_string(edge_budget));
  }
  if (edge_count > 62) throw BudgetError("edge subsets beyond 2^62 are not enumerable");
  const std::uint64_t subsets = std::uint64_t{1} << edge_count;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, subsets / 64);
  const std::size_t tasks = static_cast<std::size_t>((subsets + chunk - 1) / chunk);
  const SignedCounts counts = map_reduce(
      tasks, SignedCounts{},
      [&](std::size_t t) {
        const std::uint64_t begin = t * chunk;
        return count_subsets(g, begin, std::min(subsets, begin + chunk));
      },
      [](SignedCounts& acc, SignedCounts part) {
        for (auto& [lambda, c] : part) acc[lambda] += c;
      });
  EFunction out;
  for (const auto& [sizes, c] : counts) {
    if (c == 0) continue;
    out += p_partition_to_e(Partition(sizes)) * Coeff(c);
  }
  return out;
}

}  // namespace epos
