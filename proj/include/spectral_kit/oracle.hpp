#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectral_kit/graph.hpp"
#include "spectral_kit/matching.hpp"
#include "spectral_kit/spectra.hpp"

namespace spectral_kit {

/// Upper-triangle adjacency bits; pair (i, j), i < j, is bit j(j-1)/2 + i
/// (the graph6 column order).
using EdgeMask = std::uint64_t;

inline constexpr int kMaxLabeledOrder = 7;
inline constexpr int kMaxExtendedOrder = 8;
inline constexpr double kVerdictTolerance = 1e-8;
/// Least-eigenvalue gap below which an eigenvector is considered non-unique.
inline constexpr double kDegeneracyGap = 1e-7;

int pair_count(int n);
int pair_bit(int i, int j);
Graph graph_from_mask(int n, EdgeMask mask);
/// Requires order() <= 11.
EdgeMask mask_of(const Graph& g);
/// Smallest mask over all n! relabellings. Requires n <= 8.
EdgeMask canonical_mask(int n, EdgeMask mask);

struct SearchOptions {
  int jobs = 1;
  double tolerance = kVerdictTolerance;
  bool extended = false;  // permits n = 8
};

/// Throws std::invalid_argument unless 1 <= kappa <= n-2 and n is within
/// the enumeration limit for `extended`.
void check_search_params(int n, int kappa, bool extended);

/// Calls visit(mask) for every labelled graph on n vertices that is
/// connected with vertex connectivity exactly kappa, in increasing mask order.
void for_each_in_class(int n, int kappa, const std::function<void(EdgeMask)>& visit,
                       bool extended = false);

/// The class as masks; with dedup, one canonical mask per isomorphism
/// class (sorted), otherwise every labelled graph (sorted).
std::vector<EdgeMask> enumerate_class(int n, int kappa, bool dedup, bool extended = false);

/// Number of connected labelled graphs on n vertices for each connectivity;
/// index k holds the count with kappa = k (index 0 unused).
std::vector<std::uint64_t> connectivity_histogram(int n, bool extended = false);

enum class Verdict { BoundHolds, BoundTight, Violation };
std::string to_string(Verdict v);

struct SearchResult {
  int n = 0;
  int kappa = 0;
  double min_value = 0.0;
  std::vector<EdgeMask> witness_masks;    // labelled, ascending
  std::vector<EdgeMask> canonical_masks;  // one per isomorphism class, ascending
  std::uint64_t class_size = 0;
  double predicted = 0.0;
  Verdict verdict = Verdict::BoundHolds;

  std::vector<Graph> witnesses() const;
};

/// Exhaustive minimum of lambda_n(G^c) over the class, with every labelled
/// graph within `tolerance` of the minimum kept as a witness.
SearchResult find_minimizer(int n, int kappa, const SearchOptions& opts = {});

/// find_minimizer for every n in [n_min, n_max] and every kappa in
/// 1..n-2 (or only `kappa` when given and in range). One enumeration pass
/// per n serves all kappa values.
std::vector<SearchResult> verify_theorems(int n_min, int n_max, std::optional<int> kappa,
                                          const SearchOptions& opts = {});

enum class ClaimStatus { Holds, Fails, NotApplicable, FlaggedDegenerate };
std::string to_string(ClaimStatus s);

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string detail;
};

/// Structure of a minimizer G relative to a least eigenvector x of G^c and
/// a minimum vertex cut of G:
///   two_components  G minus the cut has exactly two components
///   sign_cliques    V_i^+ with cut^+, and V_i^- with cut^-, induce cliques
///   kappa_matching  n2 >= kappa: a kappa-matching between V+ and V-
///   join_structure  n1 >= kappa > n2: some R of U, |R| = kappa - n2, is
///                   joined to all of V-, and U \ R matches V- completely
/// When lambda_n(G^c) is (numerically) repeated, failures are reported as
/// FlaggedDegenerate because they depend on the chosen vector.
struct ClaimReport {
  int kappa = 0;
  VertexCut cut;
  double least_value = 0.0;
  double least_gap = 0.0;
  bool degenerate = false;
  SignPartition partition;
  std::vector<VertexSet> components;
  std::optional<Matching> matching;
  ClaimOutcome two_components;
  ClaimOutcome sign_cliques;
  ClaimOutcome kappa_matching;
  ClaimOutcome join_structure;

  bool any_failure() const;
};

/// Throws std::invalid_argument if g is disconnected or complete.
ClaimReport check_structural_claims(const Graph& g);

}  // namespace spectral_kit
