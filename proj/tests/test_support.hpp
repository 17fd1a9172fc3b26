#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// flow, matching or eigen code it is used to check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "spectral_kit/graph.hpp"

namespace spectral_kit::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, edges);
}

// Connectedness of g restricted to the vertices not in `removed` (bitmask).
inline bool connected_after_removal(const Graph& g, std::uint64_t removed) {
  const int n = g.order();
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (!((removed >> v) & 1U)) {
      start = v;
      break;
    }
  }
  if (start < 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && !((removed >> v) & 1U) && g.has_edge(u, v)) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return reached == n - std::popcount(removed);
}

// Vertex connectivity by deleting every subset in order of size.
inline int brute_connectivity(const Graph& g) {
  const int n = g.order();
  if (!connected_after_removal(g, 0)) return 0;
  for (int k = 0; k < n - 1; ++k) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (std::popcount(s) == k && n - k >= 2 && !connected_after_removal(g, s)) return k;
    }
  }
  return n - 1;
}

inline std::vector<double> random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> x(n);
  double norm = 0.0;
  for (double& v : x) {
    v = normal(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (double& v : x) v /= norm;
  return x;
}

// Random connected graph on n vertices: a random spanning tree plus extra edges.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[pick(rng)], order[i]);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline std::vector<Vertex> range(int from, int to) {
  std::vector<Vertex> r;
  for (int v = from; v < to; ++v) r.push_back(v);
  return r;
}

// Maximum matching size by trying every assignment of left vertices.
inline int brute_max_matching(const Graph& g, const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                              std::size_t i = 0, std::uint32_t used = 0) {
  if (i == left.size()) return 0;
  int best = brute_max_matching(g, left, right, i + 1, used);
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (!((used >> j) & 1U) && g.has_edge(left[i], right[j])) {
      best = std::max(best, 1 + brute_max_matching(g, left, right, i + 1, used | (1U << j)));
    }
  }
  return best;
}

// True iff |N(S) ∩ right| >= |S| for every subset S of left.
inline bool brute_hall(const Graph& g, const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
  for (std::uint32_t s = 1; s < (1U << left.size()); ++s) {
    int neighbours = 0;
    for (Vertex w : right) {
      for (std::size_t i = 0; i < left.size(); ++i) {
        if (((s >> i) & 1U) && g.has_edge(left[i], w)) {
          ++neighbours;
          break;
        }
      }
    }
    if (neighbours < std::popcount(s)) return false;
  }
  return true;
}

}  // namespace spectral_kit::testing
