#include "spectral_kit/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spectral_kit {

namespace {

enum class Side : char { None, Left, Right };

std::vector<Side> label_sides(const Graph& g, std::span<const Vertex> left,
                              std::span<const Vertex> right) {
  std::vector<Side> side(g.order(), Side::None);
  auto mark = [&](std::span<const Vertex> vs, Side s) {
    for (Vertex v : vs) {
      if (v < 0 || v >= g.order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      }
      if (side[v] != Side::None) throw std::invalid_argument("left and right sets overlap");
      side[v] = s;
    }
  };
  mark(left, Side::Left);
  mark(right, Side::Right);
  return side;
}

// mate[v] is the partner of v or -1.
struct Kuhn {
  const Graph& g;
  const std::vector<Side>& side;
  std::vector<Vertex> mate;
  std::vector<int> stamp;
  int round = 0;

  Kuhn(const Graph& graph, const std::vector<Side>& sides)
      : g(graph), side(sides), mate(graph.order(), -1), stamp(graph.order(), -1) {}

  bool augment(Vertex l) {
    for (Vertex r : g.neighbors(l)) {
      if (side[r] != Side::Right || stamp[r] == round) continue;
      stamp[r] = round;
      if (mate[r] < 0 || augment(mate[r])) {
        mate[r] = l;
        mate[l] = r;
        return true;
      }
    }
    return false;
  }

  void run(std::span<const Vertex> left) {
    for (Vertex l : left) {
      ++round;
      augment(l);
    }
  }
};

Matching collect(std::span<const Vertex> left, const std::vector<Vertex>& mate) {
  Matching m;
  for (Vertex l : left) {
    if (mate[l] >= 0) {
      m.pairs.emplace_back(l, mate[l]);
      m.covered.push_back(l);
      m.covered.push_back(mate[l]);
    }
  }
  std::sort(m.covered.begin(), m.covered.end());
  return m;
}

}  // namespace

Matching max_bipartite_matching(const Graph& g, std::span<const Vertex> left,
                                std::span<const Vertex> right) {
  const auto side = label_sides(g, left, right);
  Kuhn k(g, side);
  k.run(left);
  return collect(left, k.mate);
}

std::optional<VertexSet> hall_violator(const Graph& g, std::span<const Vertex> left,
                                       std::span<const Vertex> right) {
  const auto side = label_sides(g, left, right);
  Kuhn k(g, side);
  k.run(left);
  const auto free_left = std::find_if(left.begin(), left.end(), [&](Vertex l) { return k.mate[l] < 0; });
  if (free_left == left.end()) return std::nullopt;

  // Alternating reachability: left -> any right neighbour, right -> its mate.
  // Every reached right vertex is matched (otherwise the matching would not
  // be maximum), so the reached left set S has |N(S)| = |S| - 1.
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{*free_left};
  seen[*free_left] = 1;
  VertexSet s;
  while (!stack.empty()) {
    const Vertex l = stack.back();
    stack.pop_back();
    s.push_back(l);
    for (Vertex r : g.neighbors(l)) {
      if (side[r] != Side::Right || seen[r]) continue;
      seen[r] = 1;
      const Vertex next = k.mate[r];
      if (next >= 0 && !seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool is_maximum(const Graph& g, const Matching& m, std::span<const Vertex> left,
                std::span<const Vertex> right) {
  const auto side = label_sides(g, left, right);
  std::vector<Vertex> mate(g.order(), -1);
  for (const auto& [a, b] : m.pairs) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.has_edge(a, b)) {
      throw std::invalid_argument("matching pair is not an edge of the graph");
    }
    const bool oriented = side[a] == Side::Left && side[b] == Side::Right;
    const bool reversed = side[a] == Side::Right && side[b] == Side::Left;
    if (!oriented && !reversed) throw std::invalid_argument("matching pair does not cross the sides");
    if (mate[a] >= 0 || mate[b] >= 0) throw std::invalid_argument("matching pairs share a vertex");
    mate[a] = b;
    mate[b] = a;
  }

  // Alternating BFS from all uncovered left vertices; reaching an
  // uncovered right vertex exhibits an augmenting path.
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue;
  for (Vertex l : left) {
    if (mate[l] < 0) {
      seen[l] = 1;
      queue.push_back(l);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex l = queue[head];
    for (Vertex r : g.neighbors(l)) {
      if (side[r] != Side::Right || seen[r]) continue;
      if (mate[r] < 0) return false;
      seen[r] = 1;
      if (!seen[mate[r]]) {
        seen[mate[r]] = 1;
        queue.push_back(mate[r]);
      }
    }
  }
  return true;
}

std::optional<Matching> sign_crossing_matching(const Graph& g, const SignPartition& sp, int k) {
  Matching m = max_bipartite_matching(g, sp.v_plus, sp.v_minus);
  if (static_cast<int>(m.size()) < k) return std::nullopt;
  return m;
}

}  // namespace spectral_kit
