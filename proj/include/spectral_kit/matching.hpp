#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectral_kit/graph.hpp"
#include "spectral_kit/spectra.hpp"

namespace spectral_kit {

/// Set of pairwise vertex-disjoint edges. Each pair is (left, right).
struct Matching {
  std::vector<Edge> pairs;
  VertexSet covered;  // sorted

  std::size_t size() const { return pairs.size(); }
};

/// Maximum matching using only edges between `left` and `right`
/// (augmenting-path search, left vertices tried in the given order).
/// Throws std::invalid_argument if the sets overlap.
Matching max_bipartite_matching(const Graph& g, std::span<const Vertex> left,
                                std::span<const Vertex> right);

/// Some S of `left` with |N(S) & right| < |S|, or nullopt when a
/// left-saturating matching exists. S is the alternating-reachable part of
/// `left` from the first unmatched left vertex after a maximum matching.
std::optional<VertexSet> hall_violator(const Graph& g, std::span<const Vertex> left,
                                       std::span<const Vertex> right);

/// True iff m admits no augmenting path between `left` and `right`.
/// Throws std::invalid_argument if m is not a matching of g between the sets.
bool is_maximum(const Graph& g, const Matching& m, std::span<const Vertex> left,
                std::span<const Vertex> right);

/// A matching of size >= k between V+ and V- using cross edges of g, if any.
std::optional<Matching> sign_crossing_matching(const Graph& g, const SignPartition& sp, int k);

}  // namespace spectral_kit
