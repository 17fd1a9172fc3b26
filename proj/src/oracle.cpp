#include "spectral_kit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "spectral_kit/extremal.hpp"

namespace spectral_kit {

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

Graph graph_from_mask(int n, EdgeMask mask) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> pair_bit(i, j)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

EdgeMask mask_of(const Graph& g) {
  if (pair_count(g.order()) > 64) throw std::invalid_argument("graph too large for an edge mask");
  EdgeMask m = 0;
  for (const auto& [u, v] : g.edges()) m |= EdgeMask{1} << pair_bit(u, v);
  return m;
}

namespace {

// For each permutation of 0..n-1, the image of every pair bit.
class PermutationTable {
 public:
  explicit PermutationTable(int n) : n_(n), pairs_(pair_count(n)) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) images_.push_back(static_cast<std::uint8_t>(pair_bit(perm[i], perm[j])));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t count() const { return pairs_ == 0 ? 1 : images_.size() / pairs_; }

  EdgeMask apply(std::size_t p, EdgeMask m) const {
    const std::uint8_t* img = images_.data() + p * pairs_;
    EdgeMask out = 0;
    for (; m != 0; m &= m - 1) out |= EdgeMask{1} << img[std::countr_zero(m)];
    return out;
  }

 private:
  int n_;
  int pairs_;
  std::vector<std::uint8_t> images_;
};

const PermutationTable& permutation_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PermutationTable>> tables;
  std::lock_guard lock(mu);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<PermutationTable>(n);
  return *slot;
}

// Masks of all labelled copies of the graph.
std::vector<EdgeMask> orbit(int n, EdgeMask mask) {
  const auto& table = permutation_table(n);
  std::vector<EdgeMask> out;
  out.reserve(table.count());
  for (std::size_t p = 0; p < table.count(); ++p) out.push_back(table.apply(p, mask));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeMask> dedup_masks(int n, const std::vector<EdgeMask>& masks) {
  std::unordered_set<EdgeMask> seen;
  std::vector<EdgeMask> reps;
  for (EdgeMask m : masks) {
    if (seen.contains(m)) continue;
    const auto copies = orbit(n, m);
    reps.push_back(copies.front());
    seen.insert(copies.begin(), copies.end());
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

int limit_for(bool extended) { return extended ? kMaxExtendedOrder : kMaxLabeledOrder; }

// Cheap bit-parallel connectedness test on mask rows.
bool mask_connected(int n, const std::uint64_t* rows) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t reach = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~reach;
    reach |= next;
  }
  return reach == all;
}

struct Candidate {
  EdgeMask mask;
  double value;
};

// Per-kappa partial minimum over a contiguous mask range.
struct Partial {
  double min = std::numeric_limits<double>::infinity();
  std::vector<Candidate> candidates;  // within tol of the running min
  std::uint64_t count = 0;

  void offer(EdgeMask m, double value, double tol) {
    ++count;
    if (value > min + tol) return;
    if (value < min) {
      min = value;
      std::erase_if(candidates, [&](const Candidate& c) { return c.value > min + tol; });
    }
    candidates.push_back({m, value});
  }
};

struct ScanSpec {
  int n;
  int kappa_lo;  // only graphs with kappa in [kappa_lo, kappa_hi] are evaluated
  int kappa_hi;
  bool evaluate;  // compute lambda_n(G^c); otherwise only count
  double tol;
};

void scan_range(const ScanSpec& spec, EdgeMask lo, EdgeMask hi, std::vector<Partial>& out,
                const std::function<void(EdgeMask, int)>* visit) {
  const int n = spec.n;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::uint64_t rows[64];
  for (EdgeMask m = lo; m < hi; ++m) {
    std::fill(rows, rows + n, 0);
    for (EdgeMask b = m; b != 0; b &= b - 1) {
      const auto& [i, j] = pairs[std::countr_zero(b)];
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
    if (!mask_connected(n, rows)) continue;
    int min_deg = n;
    for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, std::popcount(rows[v]));
    if (min_deg < spec.kappa_lo) continue;  // kappa <= min degree

    const Graph g = graph_from_mask(n, m);
    const int kappa = vertex_connectivity(g).kappa;
    if (kappa < spec.kappa_lo || kappa > spec.kappa_hi) continue;
    if (visit != nullptr) (*visit)(m, kappa);
    if (!spec.evaluate) {
      ++out[kappa].count;
      continue;
    }
    const double value = least_eigenvalue(complement(g));
    out[kappa].offer(m, value, spec.tol);
  }
}

// Runs scan_range over the whole mask space, split into chunks handed to
// `jobs` workers. Chunk results are merged in chunk order, so the outcome
// does not depend on the number of workers.
std::vector<Partial> scan_all(const ScanSpec& spec, int jobs) {
  const EdgeMask total = EdgeMask{1} << pair_count(spec.n);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<EdgeMask>(total, 256));
  const EdgeMask chunk_len = (total + chunks - 1) / chunks;
  std::vector<std::vector<Partial>> parts(chunks, std::vector<Partial>(spec.n));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      const EdgeMask lo = c * chunk_len;
      const EdgeMask hi = std::min(total, lo + chunk_len);
      if (lo < hi) scan_range(spec, lo, hi, parts[c], nullptr);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<Partial> merged(spec.n);
  for (int k = 0; k < spec.n; ++k) {
    Partial& dst = merged[k];
    for (const auto& part : parts) {
      dst.count += part[k].count;
      dst.min = std::min(dst.min, part[k].min);
    }
    for (const auto& part : parts) {
      for (const auto& c : part[k].candidates) {
        if (c.value <= dst.min + spec.tol) dst.candidates.push_back(c);
      }
    }
    std::sort(dst.candidates.begin(), dst.candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.mask < b.mask; });
  }
  return merged;
}

SearchResult make_result(int n, int kappa, const Partial& p, double tol) {
  SearchResult r;
  r.n = n;
  r.kappa = kappa;
  r.class_size = p.count;
  if (p.candidates.empty()) throw std::logic_error("empty connectivity class");
  r.min_value = p.min;
  for (const auto& c : p.candidates) r.witness_masks.push_back(c.mask);
  r.canonical_masks = dedup_masks(n, r.witness_masks);
  r.predicted = predicted_min(n, kappa);
  if (std::abs(r.min_value - r.predicted) <= tol) {
    r.verdict = Verdict::BoundTight;
  } else if (r.min_value > r.predicted) {
    r.verdict = Verdict::BoundHolds;
  } else {
    r.verdict = Verdict::Violation;
  }
  return r;
}

}  // namespace

EdgeMask canonical_mask(int n, EdgeMask mask) {
  if (n > kMaxExtendedOrder) throw std::invalid_argument("canonical form limited to n <= 8");
  const auto& table = permutation_table(n);
  EdgeMask best = mask;
  for (std::size_t p = 0; p < table.count(); ++p) best = std::min(best, table.apply(p, mask));
  return best;
}

void check_search_params(int n, int kappa, bool extended) {
  if (n < 3) throw std::invalid_argument("enumeration requires n >= 3");
  if (n > limit_for(extended)) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                                std::to_string(limit_for(extended)) +
                                (extended ? "" : " (use extended mode for n = 8)"));
  }
  if (kappa < 1 || kappa > n - 2) throw std::invalid_argument("requires 1 <= kappa <= n - 2");
}

void for_each_in_class(int n, int kappa, const std::function<void(EdgeMask)>& visit, bool extended) {
  check_search_params(n, kappa, extended);
  ScanSpec spec{n, kappa, kappa, false, 0.0};
  std::vector<Partial> parts(n);
  const std::function<void(EdgeMask, int)> fwd = [&](EdgeMask m, int) { visit(m); };
  scan_range(spec, 0, EdgeMask{1} << pair_count(n), parts, &fwd);
}

std::vector<EdgeMask> enumerate_class(int n, int kappa, bool dedup, bool extended) {
  std::vector<EdgeMask> out;
  for_each_in_class(n, kappa, [&](EdgeMask m) { out.push_back(m); }, extended);
  return dedup ? dedup_masks(n, out) : out;
}

std::vector<std::uint64_t> connectivity_histogram(int n, bool extended) {
  if (n < 2 || n > limit_for(extended)) throw std::invalid_argument("n outside enumeration limit");
  ScanSpec spec{n, 1, n - 1, false, 0.0};
  std::vector<Partial> parts(n);
  scan_range(spec, 0, EdgeMask{1} << pair_count(n), parts, nullptr);
  std::vector<std::uint64_t> hist(n, 0);
  for (int k = 1; k < n; ++k) hist[k] = parts[k].count;
  return hist;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::BoundHolds: return "bound-holds";
    case Verdict::BoundTight: return "bound-tight";
    case Verdict::Violation: return "violation";
  }
  return "?";
}

std::vector<Graph> SearchResult::witnesses() const {
  std::vector<Graph> out;
  out.reserve(witness_masks.size());
  for (EdgeMask m : witness_masks) out.push_back(graph_from_mask(n, m));
  return out;
}

SearchResult find_minimizer(int n, int kappa, const SearchOptions& opts) {
  check_search_params(n, kappa, opts.extended);
  const ScanSpec spec{n, kappa, kappa, true, opts.tolerance};
  const auto merged = scan_all(spec, opts.jobs);
  return make_result(n, kappa, merged[kappa], opts.tolerance);
}

std::vector<SearchResult> verify_theorems(int n_min, int n_max, std::optional<int> kappa,
                                          const SearchOptions& opts) {
  if (n_min > n_max) throw std::invalid_argument("empty n range");
  std::vector<SearchResult> out;
  for (int n = n_min; n <= n_max; ++n) {
    int lo = 1, hi = n - 2;
    if (kappa) {
      if (*kappa < 1 || *kappa > n - 2) continue;
      lo = hi = *kappa;
    }
    check_search_params(n, lo, opts.extended);
    const ScanSpec spec{n, lo, hi, true, opts.tolerance};
    const auto merged = scan_all(spec, opts.jobs);
    for (int k = lo; k <= hi; ++k) out.push_back(make_result(n, k, merged[k], opts.tolerance));
  }
  return out;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "holds";
    case ClaimStatus::Fails: return "fails";
    case ClaimStatus::NotApplicable: return "not-applicable";
    case ClaimStatus::FlaggedDegenerate: return "flagged-degenerate";
  }
  return "?";
}

bool ClaimReport::any_failure() const {
  for (const auto* c : {&two_components, &sign_cliques, &kappa_matching, &join_structure}) {
    if (c->status == ClaimStatus::Fails) return true;
  }
  return false;
}

namespace {

bool subset_exists(const VertexSet& pool, int size, const std::function<bool(const VertexSet&)>& pred) {
  if (size < 0 || size > static_cast<int>(pool.size())) return false;
  std::vector<char> pick(pool.size(), 0);
  std::fill(pick.begin(), pick.begin() + size, 1);
  do {
    VertexSet chosen;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) chosen.push_back(pool[i]);
    }
    if (pred(chosen)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

ClaimReport check_structural_claims(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw std::invalid_argument("claims require a connected graph");
  if (g.edge_count() == static_cast<std::size_t>(pair_count(n))) {
    throw std::invalid_argument("claims require a non-complete graph");
  }
  ClaimReport r;
  const Connectivity conn = vertex_connectivity(g);
  r.kappa = conn.kappa;
  r.cut = conn.cut;
  const SpectralResult sr = least_eigenpair(complement(g));
  r.least_value = sr.least_value;
  r.least_gap = sr.least_gap();
  r.degenerate = r.least_gap < kDegeneracyGap;
  r.partition = sign_partition(g, sr);
  const auto& sp = r.partition;
  const auto& x = sp.oriented_vector;
  auto nonneg = [&](Vertex v) { return x[v] >= 0.0 || std::abs(x[v]) < kSignTolerance; };
  auto settle = [&](ClaimOutcome& c, bool ok, std::string detail) {
    c.detail = std::move(detail);
    if (ok) {
      c.status = ClaimStatus::Holds;
    } else {
      c.status = r.degenerate ? ClaimStatus::FlaggedDegenerate : ClaimStatus::Fails;
    }
  };

  r.components = components_without(g, r.cut.vertices);
  settle(r.two_components, r.components.size() == 2,
         std::to_string(r.components.size()) + " components after removing the cut");

  VertexSet cut_plus, cut_minus;
  for (Vertex v : r.cut.vertices) (nonneg(v) ? cut_plus : cut_minus).push_back(v);
  bool cliques = true;
  std::string bad;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    VertexSet plus = cut_plus, minus = cut_minus;
    for (Vertex v : r.components[i]) (nonneg(v) ? plus : minus).push_back(v);
    if (!is_clique(g, plus)) {
      cliques = false;
      bad += " V" + std::to_string(i + 1) + "+";
    }
    if (!is_clique(g, minus)) {
      cliques = false;
      bad += " V" + std::to_string(i + 1) + "-";
    }
  }
  settle(r.sign_cliques, cliques, cliques ? "all sign classes induce cliques" : "not cliques:" + bad);

  const int k = r.kappa;
  if (sp.n2 >= k) {
    r.matching = sign_crossing_matching(g, sp, k);
    const int size = r.matching ? static_cast<int>(r.matching->size())
                                : static_cast<int>(max_bipartite_matching(g, sp.v_plus, sp.v_minus).size());
    settle(r.kappa_matching, r.matching.has_value(),
           "maximum V+/V- matching has size " + std::to_string(size));
  } else {
    r.kappa_matching = {ClaimStatus::NotApplicable, "n2 < kappa"};
  }

  if (sp.n1 >= k && k > sp.n2) {
    VertexSet joined;  // vertices of U adjacent to every vertex of V-
    for (Vertex u : sp.u_boundary) {
      if (std::all_of(sp.v_minus.begin(), sp.v_minus.end(), [&](Vertex w) { return g.has_edge(u, w); })) {
        joined.push_back(u);
      }
    }
    const bool ok = subset_exists(joined, k - sp.n2, [&](const VertexSet& reserved) {
      VertexSet rest;
      std::set_difference(sp.u_boundary.begin(), sp.u_boundary.end(), reserved.begin(), reserved.end(),
                          std::back_inserter(rest));
      return static_cast<int>(max_bipartite_matching(g, sp.v_minus, rest).size()) == sp.n2;
    });
    settle(r.join_structure, ok,
           ok ? "matching plus complete join found" : "no reserved set of size kappa - n2 works");
  } else {
    r.join_structure = {ClaimStatus::NotApplicable, "requires n1 >= kappa > n2"};
  }
  return r;
}

}  // namespace spectral_kit
