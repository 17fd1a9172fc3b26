#include "spectral_kit/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "spectral_kit/extremal.hpp"
#include "spectral_kit/graph_io.hpp"

namespace spectral_kit {

using nlohmann::ordered_json;

double round12(double x) {
  if (std::abs(x) < 1e-12) return 0.0;  // solver noise around exact zeros
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["params"] = params;
  j["results"] = results;
  j["timings"] = timings;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::results_text() const { return results.dump(2); }

namespace {

ordered_json rounded(const std::vector<double>& xs) {
  ordered_json a = ordered_json::array();
  for (double x : xs) a.push_back(round12(x));
  return a;
}

ordered_json vertex_list(const VertexSet& vs) { return ordered_json(vs); }

}  // namespace

ordered_json spectrum_json(const Graph& g, const SpectralResult& sr) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["eigenvalues"] = rounded(sr.eigenvalues);
  j["spectral_radius"] = round12(sr.spectral_radius());
  j["least_value"] = round12(sr.least_value);
  j["least_vector"] = rounded(sr.least_vector);
  j["residual"] = eigen_residual(g, sr.least_value, sr.least_vector);
  return j;
}

ordered_json search_json(const SearchResult& r, bool dedup) {
  ordered_json j;
  j["n"] = r.n;
  j["kappa"] = r.kappa;
  j["class_size"] = r.class_size;
  j["min_value"] = round12(r.min_value);
  const Graph first = graph_from_mask(r.n, r.canonical_masks.front());
  const Graph first_c = complement(first);
  const SpectralResult sr = least_eigenpair(first_c);
  j["residual"] = eigen_residual(first_c, sr.least_value, sr.least_vector);
  j["predicted"] = round12(r.predicted);
  j["predicted_branch"] = r.n < 2 * r.kappa ? "kappa+1-n" : "balanced-b1";
  j["verdict"] = to_string(r.verdict);
  j["witness_count"] = r.witness_masks.size();
  j["isomorphism_classes"] = r.canonical_masks.size();
  if (r.n >= 2 * r.kappa) {
    const ExtremalParams p{(r.n + 1) / 2, r.n / 2, r.kappa, Family::B1};
    const EdgeMask b1 = canonical_mask(r.n, mask_of(build_b1(p)));
    j["balanced_b1_witness"] =
        std::binary_search(r.canonical_masks.begin(), r.canonical_masks.end(), b1);
  }
  ordered_json w = ordered_json::array();
  for (EdgeMask m : dedup ? r.canonical_masks : r.witness_masks) w.push_back(to_graph6(graph_from_mask(r.n, m)));
  j["witnesses"] = std::move(w);
  return j;
}

ordered_json claims_json(const Graph& g, const ClaimReport& c) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["kappa"] = c.kappa;
  j["cut"] = vertex_list(c.cut.vertices);
  j["least_value"] = round12(c.least_value);
  const Graph gc = complement(g);
  j["residual"] = eigen_residual(gc, c.least_value, c.partition.oriented_vector);
  j["least_gap"] = round12(c.least_gap);
  j["degenerate"] = c.degenerate;
  const auto& sp = c.partition;
  j["partition"] = {{"v_plus", vertex_list(sp.v_plus)},   {"v_minus", vertex_list(sp.v_minus)},
                    {"u_boundary", vertex_list(sp.u_boundary)}, {"w_boundary", vertex_list(sp.w_boundary)},
                    {"n1", sp.n1},
                    {"n2", sp.n2},
                    {"vector", rounded(sp.oriented_vector)}};
  ordered_json comps = ordered_json::array();
  for (const auto& comp : c.components) comps.push_back(vertex_list(comp));
  j["components"] = std::move(comps);
  auto outcome = [](const ClaimOutcome& o) {
    return ordered_json{{"status", to_string(o.status)}, {"detail", o.detail}};
  };
  j["claims"] = {{"two_components", outcome(c.two_components)},
                 {"sign_cliques", outcome(c.sign_cliques)},
                 {"kappa_matching", outcome(c.kappa_matching)},
                 {"join_structure", outcome(c.join_structure)}};
  if (c.matching) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : c.matching->pairs) pairs.push_back({a, b});
    j["matching"] = std::move(pairs);
  }
  return j;
}

}  // namespace spectral_kit
