#include "spectral_kit/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace spectral_kit {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n = " +
                                std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!has_edge(u, v)) {
      set(u, v);
      ++edges_;
    }
  }
}

void Graph::set(Vertex u, Vertex v) {
  row_ptr(u)[v / 64] |= std::uint64_t{1} << (v % 64);
  row_ptr(v)[u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return (row_ptr(u)[v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  const auto* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  const auto* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::row64(Vertex v) const {
  if (n_ > 64) throw std::logic_error("row64 requires n <= 64");
  return bits_[static_cast<std::size_t>(v)];
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph out = *this;
  if (!out.has_edge(u, v)) {
    out.set(u, v);
    ++out.edges_;
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out = g;
  const int n = g.n_;
  for (Vertex v = 0; v < n; ++v) {
    auto* r = out.row_ptr(v);
    for (int w = 0; w < g.words_; ++w) r[w] = ~r[w];
    // clear padding bits and the diagonal
    if (n % 64 != 0) r[g.words_ - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    r[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  out.edges_ = pairs - g.edges_;
  return out;
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) {
    check_vertex(n, v);
    seen[v] = 1;
  }
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return components_without(g).size() == 1;
}

namespace {

// Unit vertex-capacity max-flow on the vertex-split digraph of g.
// Node 2v is v_in, 2v+1 is v_out. Arc v_in -> v_out has capacity 1
// except at s and t; arc u_out -> w_in is uncapacitated for each edge uw,
// so every minimum cut consists of vertex arcs only.
class VertexSplitFlow {
 public:
  explicit VertexSplitFlow(const Graph& g)
      : n_(g.order()), nbr_(g.order()), through_(g.order()),
        flow_(static_cast<std::size_t>(g.order()) * g.order()), parent_(2 * g.order()) {
    for (Vertex v = 0; v < n_; ++v) nbr_[v] = g.neighbors(v);
    queue_.reserve(2 * n_);
  }

  int run(Vertex s, Vertex t, int limit, VertexSet* cut) {
    s_ = s;
    t_ = t;
    std::fill(through_.begin(), through_.end(), 0);
    std::fill(flow_.begin(), flow_.end(), 0);
    int paths = 0;
    while ((limit < 0 || paths < limit) && bfs()) {
      augment();
      ++paths;
    }
    if (cut != nullptr) {
      // Meaningful only when the flow is maximum (no limit hit).
      bfs();
      cut->clear();
      for (Vertex v = 0; v < n_; ++v) {
        if (v != s && v != t && parent_[2 * v] >= 0 && parent_[2 * v + 1] < 0) cut->push_back(v);
      }
    }
    return paths;
  }

 private:
  int& fl(Vertex u, Vertex w) { return flow_[static_cast<std::size_t>(u) * n_ + w]; }

  bool bfs() {
    std::fill(parent_.begin(), parent_.end(), -1);
    queue_.clear();
    const int src = 2 * s_ + 1;
    const int dst = 2 * t_;
    parent_[src] = src;
    queue_.push_back(src);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int node = queue_[head];
      const Vertex v = node / 2;
      auto visit = [&](int next) {
        if (parent_[next] < 0) {
          parent_[next] = node;
          queue_.push_back(next);
        }
      };
      if (node % 2 == 0) {
        // v_in: internal arc forward, or undo flow arriving at v_in.
        if (v == s_ || v == t_ || !through_[v]) visit(2 * v + 1);
        for (Vertex u : nbr_[v]) {
          if (fl(u, v) > 0) visit(2 * u + 1);
        }
      } else {
        for (Vertex w : nbr_[v]) visit(2 * w);
        if (v != s_ && v != t_ && through_[v]) visit(2 * v);
      }
      if (parent_[dst] >= 0) return true;
    }
    return false;
  }

  void augment() {
    for (int node = 2 * t_; node != 2 * s_ + 1;) {
      const int prev = parent_[node];
      const Vertex a = prev / 2;
      const Vertex b = node / 2;
      if (a == b) {
        through_[a] = (prev % 2 == 0) ? 1 : 0;
      } else if (prev % 2 == 1) {
        ++fl(a, b);  // a_out -> b_in
      } else {
        --fl(b, a);  // cancel b_out -> a_in
      }
      node = prev;
    }
  }

  int n_;
  Vertex s_ = 0;
  Vertex t_ = 0;
  std::vector<VertexSet> nbr_;
  std::vector<char> through_;
  std::vector<int> flow_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int limit, VertexSet* cut) {
  check_vertex(g.order(), s);
  check_vertex(g.order(), t);
  if (s == t || g.has_edge(s, t)) {
    throw std::invalid_argument("local connectivity needs distinct non-adjacent vertices");
  }
  VertexSplitFlow flow(g);
  return flow.run(s, t, limit, cut);
}

Connectivity vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return {};
  const std::size_t all_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (g.edge_count() == all_pairs) return {n - 1, {}};

  // The neighbourhood of a minimum-degree vertex is a valid starting cut.
  Vertex low = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(low)) low = v;
  }
  int best = g.degree(low);
  VertexSplitFlow flow(g);
  Vertex best_s = -1;
  Vertex best_t = -1;
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      const int k = flow.run(i, j, best, nullptr);
      if (k < best) {
        best = k;
        best_s = i;
        best_t = j;
      }
    }
  }
  Connectivity out;
  out.kappa = best;
  if (best_s < 0) {
    out.cut.vertices = g.neighbors(low);
  } else {
    flow.run(best_s, best_t, -1, &out.cut.vertices);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  std::vector<char> used(g.order(), 0);
  for (Vertex v : s) {
    check_vertex(g.order(), v);
    if (used[v]) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    used[v] = 1;
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (g.has_edge(s[a], s[b])) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return Graph(static_cast<int>(s.size()), edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    check_vertex(g.order(), s[a]);
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b] || !g.has_edge(s[a], s[b])) return false;
    }
  }
  return true;
}

}  // namespace spectral_kit
