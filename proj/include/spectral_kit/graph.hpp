#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace spectral_kit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

/// Undirected simple graph stored as adjacency bitrows.
///
/// Rows are packed into 64-bit words; graphs with n <= 64 use a single
/// word per row, which is the layout the enumeration code relies on
/// (see row64()). Larger graphs are supported by the same interface.
/// Values are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Graph on n vertices with the given edges; duplicates are collapsed.
  /// Throws std::invalid_argument on out-of-range indices or self-loops.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  int min_degree() const;
  VertexSet neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Bitrow of v; requires order() <= 64.
  std::uint64_t row64(Vertex v) const;

  /// Copy of this graph with uv added. Requires u != v.
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  friend Graph complement(const Graph& g);

  void set(Vertex u, Vertex v);
  std::uint64_t* row_ptr(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row_ptr(Vertex v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline Graph new_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Minimal set of vertices whose removal disconnects a graph.
struct VertexCut {
  VertexSet vertices;
  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
};

struct Connectivity {
  int kappa = 0;
  VertexCut cut;
};

Graph complement(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components of g with the vertices in `removed` deleted.
/// Each component is sorted; components are ordered by smallest vertex.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed = {});

/// Exact vertex connectivity with a witnessing minimum cut.
///
/// Local connectivities come from unit-capacity max-flow on the
/// vertex-split digraph; source/sink pairs follow Even's scheme (sources
/// v_0..v_kappa, sinks of larger index). Conventions: K_n gives n-1 with an
/// empty cut; a disconnected graph (or K_1) gives 0 with an empty cut.
Connectivity vertex_connectivity(const Graph& g);

/// Number of internally vertex-disjoint s-t paths; s, t non-adjacent.
/// Stops early once `limit` paths are found (limit < 0 means no limit).
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit = -1,
                              VertexSet* cut = nullptr);

/// Subgraph induced by s, relabelled 0..|s|-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

bool is_clique(const Graph& g, std::span<const Vertex> s);

}  // namespace spectral_kit
