#include "spectral_kit/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace spectral_kit {

std::string to_string(Family f) {
  switch (f) {
    case Family::B1: return "b1";
    case Family::B2: return "b2";
    case Family::B3: return "b3";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "b1" || s == "B1") return Family::B1;
  if (s == "b2" || s == "B2") return Family::B2;
  if (s == "b3" || s == "B3") return Family::B3;
  throw std::invalid_argument("unknown family '" + s + "' (expected b1, b2 or b3)");
}

std::optional<std::string> validate(const ExtremalParams& p) {
  const int n1 = p.n1, n2 = p.n2, k = p.kappa;
  if (n2 < 1) return "requires n2 >= 1";
  if (n1 < n2) return "requires n1 >= n2";
  switch (p.family) {
    case Family::B1:
      if (k < 1) return "B1 requires kappa >= 1";
      if (n2 < k) return "B1 requires n2 >= kappa";
      break;
    case Family::B2:
      if (n1 < k) return "B2 requires n1 >= kappa";
      if (k <= n2) return "B2 requires kappa > n2";
      break;
    case Family::B3:
      if (k <= n1) return "B3 requires kappa > n1";
      if (k > n1 + n2 - 2) return "B3 requires kappa <= n1 + n2 - 2";
      break;
  }
  return std::nullopt;
}

namespace {

void require_valid(const ExtremalParams& p, Family expected) {
  if (p.family != expected) throw std::invalid_argument("parameter family mismatch");
  if (auto err = validate(p)) throw std::invalid_argument(*err);
}

void add_cliques(int n1, int n2, std::vector<Edge>& edges) {
  for (int a = 0; a < n1; ++a) {
    for (int b = a + 1; b < n1; ++b) edges.emplace_back(a, b);
  }
  for (int a = 0; a < n2; ++a) {
    for (int b = a + 1; b < n2; ++b) edges.emplace_back(n1 + a, n1 + b);
  }
}

}  // namespace

Graph build_b1(const ExtremalParams& p) {
  require_valid(p, Family::B1);
  std::vector<Edge> edges;
  add_cliques(p.n1, p.n2, edges);
  for (int i = 0; i < p.kappa; ++i) edges.emplace_back(i, p.n1 + i);
  return Graph(p.order(), edges);
}

Graph build_b2(const ExtremalParams& p) {
  require_valid(p, Family::B2);
  std::vector<Edge> edges;
  add_cliques(p.n1, p.n2, edges);
  for (int i = 0; i < p.n2; ++i) edges.emplace_back(i, p.n1 + i);
  for (int r = p.n2; r < p.kappa; ++r) {
    for (int j = 0; j < p.n2; ++j) edges.emplace_back(r, p.n1 + j);
  }
  return Graph(p.order(), edges);
}

Graph build_b3(const ExtremalParams& p) {
  require_valid(p, Family::B3);
  const int n1 = p.n1, n2 = p.n2, n = p.order();
  const int s_count = n1 - n2;
  const int missing = n - p.kappa - 1;  // complement degree of non-S vertices
  std::vector<Edge> edges;
  add_cliques(n1, n2, edges);
  for (int s = 0; s < s_count; ++s) {
    for (int j = 0; j < n2; ++j) edges.emplace_back(s, n1 + j);
  }
  std::vector<std::vector<char>> joined(n2, std::vector<char>(n2, 1));  // [side-1 offset][side-2 offset]
  for (int i = 0; i < n2; ++i) {
    for (int d = 0; d < missing; ++d) joined[i][(i + d) % n2] = 0;
  }
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (joined[i][j]) edges.emplace_back(s_count + i, n1 + j);
    }
  }

  // Cross neighbourhoods outside S must be pairwise distinct on both sides
  // and have exactly kappa - n1 + 1 members.
  std::set<std::vector<char>> rows, cols;
  for (int i = 0; i < n2; ++i) {
    std::vector<char> col(n2);
    for (int j = 0; j < n2; ++j) col[j] = joined[j][i];
    const auto row_deg = std::count(joined[i].begin(), joined[i].end(), 1);
    const auto col_deg = std::count(col.begin(), col.end(), 1);
    if (row_deg != p.kappa - n1 + 1 || col_deg != p.kappa - n1 + 1) {
      throw std::logic_error("B3 circulant pattern has the wrong cross degree");
    }
    rows.insert(joined[i]);
    cols.insert(std::move(col));
  }
  if (static_cast<int>(rows.size()) != n2 || static_cast<int>(cols.size()) != n2) {
    throw std::logic_error("B3 circulant pattern gives repeated cross neighbourhoods");
  }
  return Graph(n, edges);
}

Graph build_extremal(const ExtremalParams& p) {
  switch (p.family) {
    case Family::B1: return build_b1(p);
    case Family::B2: return build_b2(p);
    case Family::B3: return build_b3(p);
  }
  throw std::invalid_argument("unknown family");
}

double QuotientPoly::operator()(double x) const {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

QuotientPoly QuotientPoly::derivative() const {
  QuotientPoly d;
  for (int i = 0; i < 4; ++i) d.coeffs[i + 1] = coeffs[i] * (4 - i);
  return d;
}

QuotientPoly operator-(const QuotientPoly& a, const QuotientPoly& b) {
  QuotientPoly out;
  for (int i = 0; i < 5; ++i) out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
  return out;
}

QuotientPoly quotient_poly_b1(int n1, int n2, int kappa) {
  const double a = n1, b = n2, k = kappa;
  return {{1.0, 0.0, 2.0 * k - a * b - 1.0, 0.0, k * k - (a + b) * k + a * b}};
}

QuotientPoly quotient_poly_b2(int n1, int n2, int kappa) {
  const double a = n1, b = n2, k = kappa;
  return {{1.0, 0.0, -((b - 1.0) * (b - 1.0) + (a - k) * b), 0.0, 0.0}};
}

QuotientPoly comparison_poly(int n, int kappa) {
  return quotient_poly_b1((n + 1) / 2, n / 2, kappa) - quotient_poly_b2(n - kappa + 1, kappa - 1, kappa);
}

std::optional<double> biquadratic_least_root(const QuotientPoly& q) {
  if (!q.is_even()) return std::nullopt;
  // a mu^2 + b mu + c with mu = lambda^2.
  const double a = q.coeffs[0], b = q.coeffs[2], c = q.coeffs[4];
  std::vector<double> mus;
  if (a == 0.0) {
    if (b == 0.0) return std::nullopt;
    mus.push_back(-c / b);
  } else {
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return std::nullopt;
    const double r = std::sqrt(disc);
    mus.push_back((-b + r) / (2.0 * a));
    mus.push_back((-b - r) / (2.0 * a));
  }
  std::optional<double> best;
  for (double mu : mus) {
    if (mu < 0.0) continue;
    if (!best || mu > *best) best = mu;
  }
  if (!best) return std::nullopt;
  return -std::sqrt(*best);
}

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr double kScanStep = 1.0 / 64.0;
constexpr double kTouchTolerance = 1e-9;

template <typename F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  while (hi - lo > kRootTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double least_root(const QuotientPoly& q, std::optional<double> lower) {
  int lead = 0;
  while (lead < 5 && q.coeffs[lead] == 0.0) ++lead;
  if (lead >= 4) throw std::domain_error("polynomial has no isolated real root");
  double bound = 0.0;
  for (int i = lead + 1; i < 5; ++i) bound = std::max(bound, std::abs(q.coeffs[i] / q.coeffs[lead]));
  bound += 1.0;
  const double lo = std::floor(lower.value_or(-bound));
  const double hi = std::ceil(bound);
  const QuotientPoly dq = q.derivative();

  std::optional<double> found;
  const auto steps = static_cast<long>((hi - lo) / kScanStep);
  for (long s = 0; s < steps && !found; ++s) {
    const double a = lo + s * kScanStep;
    const double b = a + kScanStep;
    const double pa = q(a), pb = q(b);
    std::optional<double> candidate;
    if (pa == 0.0) {
      candidate = a;
    } else if ((pa < 0.0) != (pb < 0.0) && pb != 0.0) {
      candidate = bisect(q, a, b);
    }
    // Roots of even multiplicity show up as critical points with p = 0.
    const double da = dq(a), db = dq(b);
    if (da != 0.0 && db != 0.0 && (da < 0.0) != (db < 0.0)) {
      const double c = bisect(dq, a, b);
      if (std::abs(q(c)) < kTouchTolerance && (!candidate || c < *candidate)) candidate = c;
    }
    found = candidate;
  }
  if (!found) throw std::domain_error("no real root in scan range");

  if (auto closed = biquadratic_least_root(q)) {
    if (std::abs(*closed - *found) > 1e-9) {
      throw std::logic_error("root scan disagrees with the biquadratic closed form");
    }
  }
  return *found;
}

double b2_least_closed_form(int n1, int n2, int kappa) {
  const double b = n2;
  return -std::sqrt((b - 1.0) * (b - 1.0) + static_cast<double>(n1 - kappa) * b);
}

double predicted_min(int n, int kappa) {
  if (kappa < 1 || kappa > n - 2) {
    throw std::invalid_argument("predicted_min requires 1 <= kappa <= n - 2");
  }
  if (n < 2 * kappa) return kappa + 1.0 - n;
  return least_root(quotient_poly_b1((n + 1) / 2, n / 2, kappa), static_cast<double>(-n));
}

B1B2Comparison compare_b1_b2(int n, int kappa) {
  if (kappa < 2 || n < 2 * kappa) {
    throw std::invalid_argument("B1/B2 comparison requires n >= 2 kappa and kappa >= 2");
  }
  B1B2Comparison c;
  c.b1_value = least_root(quotient_poly_b1((n + 1) / 2, n / 2, kappa), static_cast<double>(-n));
  c.b2_value = least_root(quotient_poly_b2(n - kappa + 1, kappa - 1, kappa), static_cast<double>(-n));
  c.phi_at_b2 = comparison_poly(n, kappa)(c.b2_value);
  c.strict = c.b1_value < c.b2_value;
  c.phi_negative = c.phi_at_b2 < 0.0;
  return c;
}

}  // namespace spectral_kit
