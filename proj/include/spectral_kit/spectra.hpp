#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectral_kit/graph.hpp"

namespace spectral_kit {

/// Entries with |x_i| below this are treated as zero in sign tests.
inline constexpr double kSignTolerance = 1e-9;

/// Dense square matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

struct SpectralResult {
  std::vector<double> eigenvalues;   // descending
  std::vector<double> least_vector;  // unit, first non-negligible entry positive
  double least_value = 0.0;

  double spectral_radius() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  /// lambda_{n-1} - lambda_n; +inf for n = 1.
  double least_gap() const;
};

/// V+/V- split by the sign of a least eigenvector, oriented so n1 >= n2.
struct SignPartition {
  VertexSet v_plus;      // x(v) >= 0 (|x(v)| < kSignTolerance counts as 0)
  VertexSet v_minus;     // x(v) < 0
  VertexSet u_boundary;  // vertices of v_plus with a neighbour in v_minus
  VertexSet w_boundary;  // vertices of v_minus with a neighbour in v_plus
  std::vector<double> oriented_vector;  // the eigenvector after orientation
  int n1 = 0;
  int n2 = 0;
};

SymMatrix adjacency_matrix(const Graph& g);

/// All eigenvalues and the least eigenpair of a symmetric matrix.
///
/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below 1e-12 (at most 100 sweeps). Throws std::invalid_argument for
/// non-symmetric input and std::runtime_error if the sweep cap is hit.
SpectralResult eigen_sym(const SymMatrix& a);

/// Eigenvalues only (descending); same iteration as eigen_sym.
std::vector<double> eigenvalues_sym(SymMatrix a);

SpectralResult least_eigenpair(const Graph& g);
double least_eigenvalue(const Graph& g);

/// x^T A(g) x as a sum over edges of 2 x_i x_j.
double rayleigh(const Graph& g, std::span<const double> x);

/// max_i |lambda x_i - sum_{j in N(i)} x_j|.
double eigen_residual(const Graph& g, double lambda, std::span<const double> x);

/// Delta >= lambda_1 >= sqrt(Delta), with 1e-9 slack.
bool degree_bounds_check(const Graph& g);

SignPartition sign_partition(const Graph& g, const SpectralResult& sr);

struct SignCounts {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
SignCounts sign_counts(std::span<const double> x, double tol = kSignTolerance);

/// Outcome of adding edge uv to a connected graph G* (giving G) and
/// comparing least eigenvalues under the edge-addition hypotheses:
///   (i)   x_u = 0 or x_v = 0  =>  lambda_n(G*) <= lambda_n(G)
///   (ii)  y_u = 0 or y_v = 0  =>  lambda_n(G)  <= lambda_n(G*)
///   (iii) y_u y_v < 0         =>  lambda_n(G)  <  lambda_n(G*)
/// where x, y are the computed unit least vectors of G and G*.
struct PerturbationCertificate {
  double lambda_star = 0.0;  // lambda_n(G*)
  double lambda_plus = 0.0;  // lambda_n(G), G = G* + uv
  double x_u = 0.0, x_v = 0.0;
  double y_u = 0.0, y_v = 0.0;
  bool hypothesis_i = false;
  bool hypothesis_ii = false;
  bool hypothesis_iii = false;
  bool holds = true;  // every triggered inequality is satisfied
};

/// Throws std::invalid_argument if u, v are adjacent or equal.
PerturbationCertificate perturbation_compare(const Graph& g_star, Vertex u, Vertex v);

}  // namespace spectral_kit
