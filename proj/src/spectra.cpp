#include "spectral_kit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spectral_kit {

namespace {

constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const SymMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) s += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

void check_symmetric(const SymMatrix& a) {
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12) {
        throw std::invalid_argument("matrix is not symmetric");
      }
    }
  }
}

// Cyclic Jacobi. On return a is (numerically) diagonal; v, if given,
// accumulates the rotations so its columns are the eigenvectors.
void jacobi(SymMatrix& a, SymMatrix* v) {
  const int n = a.size();
  for (int sweep = 0;; ++sweep) {
    if (off_diagonal_norm(a) < kOffDiagonalTolerance) return;
    if (sweep == kMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (v != nullptr) {
          for (int r = 0; r < n; ++r) {
            const double vrp = (*v)(r, p);
            const double vrq = (*v)(r, q);
            (*v)(r, p) = c * vrp - s * vrq;
            (*v)(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
}

}  // namespace

double SpectralResult::least_gap() const {
  if (eigenvalues.size() < 2) return std::numeric_limits<double>::infinity();
  return eigenvalues[eigenvalues.size() - 2] - eigenvalues.back();
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

SpectralResult eigen_sym(const SymMatrix& input) {
  const int n = input.size();
  if (n < 1) throw std::invalid_argument("empty matrix");
  check_symmetric(input);
  SymMatrix a = input;
  SymMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  jacobi(a, &v);

  SpectralResult out;
  out.eigenvalues.resize(n);
  int least = 0;
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(i, i);
    if (a(i, i) < a(least, least)) least = i;
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  out.least_value = out.eigenvalues.back();

  out.least_vector.resize(n);
  double norm = 0.0;
  for (int r = 0; r < n; ++r) {
    out.least_vector[r] = v(r, least);
    norm += v(r, least) * v(r, least);
  }
  norm = std::sqrt(norm);
  double sign = 1.0;
  for (double x : out.least_vector) {
    if (std::abs(x) > kSignTolerance) {
      sign = x > 0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& x : out.least_vector) x *= sign / norm;
  return out;
}

std::vector<double> eigenvalues_sym(SymMatrix a) {
  if (a.size() < 1) throw std::invalid_argument("empty matrix");
  check_symmetric(a);
  jacobi(a, nullptr);
  std::vector<double> ev(a.size());
  for (int i = 0; i < a.size(); ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

SpectralResult least_eigenpair(const Graph& g) { return eigen_sym(adjacency_matrix(g)); }

double least_eigenvalue(const Graph& g) { return eigenvalues_sym(adjacency_matrix(g)).back(); }

double rayleigh(const Graph& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("vector length does not match vertex count");
  }
  double s = 0.0;
  for (const auto& [u, v] : g.edges()) s += 2.0 * x[u] * x[v];
  return s;
}

double eigen_residual(const Graph& g, double lambda, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("vector length does not match vertex count");
  }
  double worst = 0.0;
  for (Vertex i = 0; i < g.order(); ++i) {
    double s = 0.0;
    for (Vertex j : g.neighbors(i)) s += x[j];
    worst = std::max(worst, std::abs(lambda * x[i] - s));
  }
  return worst;
}

bool degree_bounds_check(const Graph& g) {
  const int delta = g.max_degree();
  const double lambda1 = g.order() == 0 ? 0.0 : eigenvalues_sym(adjacency_matrix(g)).front();
  if (delta == 0) return std::abs(lambda1) <= 1e-9;
  return delta + 1e-9 >= lambda1 && lambda1 + 1e-9 >= std::sqrt(static_cast<double>(delta));
}

SignCounts sign_counts(std::span<const double> x, double tol) {
  SignCounts c;
  for (double v : x) {
    if (v > tol) {
      ++c.positive;
    } else if (v < -tol) {
      ++c.negative;
    } else {
      ++c.zero;
    }
  }
  return c;
}

SignPartition sign_partition(const Graph& g, const SpectralResult& sr) {
  const auto& x = sr.least_vector;
  if (x.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("eigenvector length does not match vertex count");
  }
  auto split = [&](double sign, VertexSet& plus, VertexSet& minus) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const double xv = sign * x[v];
      if (xv >= 0.0 || std::abs(xv) < kSignTolerance) {
        plus.push_back(v);
      } else {
        minus.push_back(v);
      }
    }
  };
  VertexSet plus_a, minus_a, plus_b, minus_b;
  split(1.0, plus_a, minus_a);
  split(-1.0, plus_b, minus_b);
  const bool a_ok = plus_a.size() >= minus_a.size();
  const bool b_ok = plus_b.size() >= minus_b.size();
  const bool use_a = a_ok && (!b_ok || plus_a <= plus_b);
  const double sign = use_a ? 1.0 : -1.0;

  SignPartition sp;
  sp.v_plus = use_a ? std::move(plus_a) : std::move(plus_b);
  sp.v_minus = use_a ? std::move(minus_a) : std::move(minus_b);
  sp.n1 = static_cast<int>(sp.v_plus.size());
  sp.n2 = static_cast<int>(sp.v_minus.size());
  sp.oriented_vector.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sp.oriented_vector[i] = sign * x[i];

  std::vector<char> in_minus(g.order(), 0);
  for (Vertex v : sp.v_minus) in_minus[v] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool crosses = false;
    for (Vertex w : g.neighbors(v)) {
      if (in_minus[w] != in_minus[v]) {
        crosses = true;
        break;
      }
    }
    if (crosses) (in_minus[v] ? sp.w_boundary : sp.u_boundary).push_back(v);
  }
  return sp;
}

PerturbationCertificate perturbation_compare(const Graph& g_star, Vertex u, Vertex v) {
  if (u == v || g_star.has_edge(u, v)) {
    throw std::invalid_argument("perturbation needs two distinct non-adjacent vertices");
  }
  if (!is_connected(g_star)) throw std::invalid_argument("perturbation needs a connected graph");
  const Graph g = g_star.with_edge(u, v);
  const SpectralResult star = least_eigenpair(g_star);
  const SpectralResult plus = least_eigenpair(g);

  PerturbationCertificate c;
  c.lambda_star = star.least_value;
  c.lambda_plus = plus.least_value;
  c.x_u = plus.least_vector[u];
  c.x_v = plus.least_vector[v];
  c.y_u = star.least_vector[u];
  c.y_v = star.least_vector[v];
  auto zero = [](double t) { return std::abs(t) < kSignTolerance; };
  c.hypothesis_i = zero(c.x_u) || zero(c.x_v);
  c.hypothesis_ii = zero(c.y_u) || zero(c.y_v);
  c.hypothesis_iii = !c.hypothesis_ii && c.y_u * c.y_v < 0.0;

  constexpr double slack = 1e-9;
  if (c.hypothesis_i && !(c.lambda_star <= c.lambda_plus + slack)) c.holds = false;
  if (c.hypothesis_ii && !(c.lambda_plus <= c.lambda_star + slack)) c.holds = false;
  if (c.hypothesis_iii && !(c.lambda_plus < c.lambda_star)) c.holds = false;
  return c;
}

}  // namespace spectral_kit
