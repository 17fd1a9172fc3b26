#pragma once

#include <array>
#include <optional>
#include <string>

#include "spectral_kit/graph.hpp"

namespace spectral_kit {

enum class Family { B1, B2, B3 };

std::string to_string(Family f);
/// Accepts "b1"/"B1" etc. Throws std::invalid_argument otherwise.
Family parse_family(const std::string& s);

/// Parameters of one of the two-clique extremal families.
///
/// Vertex layout is fixed: side 1 is {0..n1-1}, side 2 is {n1..n1+n2-1},
/// matchings pair equal offsets.
///   B1: n1 >= n2 >= kappa >= 1
///   B2: n1 >= kappa > n2 >= 1
///   B3: kappa > n1 >= n2 >= 1 and kappa <= n1 + n2 - 2
struct ExtremalParams {
  int n1 = 0;
  int n2 = 0;
  int kappa = 0;
  Family family = Family::B1;

  int order() const { return n1 + n2; }
};

/// Description of the first violated precondition, or nullopt if valid.
std::optional<std::string> validate(const ExtremalParams& p);

/// Two cliques joined by the matching (i, n1+i), i < kappa.
Graph build_b1(const ExtremalParams& p);

/// Two cliques joined by the matching (i, n1+i), i < n2, plus every side-2
/// vertex joined to side-1 vertices n2..kappa-1.
Graph build_b2(const ExtremalParams& p);

/// Two cliques; the first n1-n2 side-1 vertices are joined to all of side 2.
/// The remaining side-1 vertex at offset i misses (is complement-adjacent
/// to) side-2 offsets i, i+1, ..., i+(n-kappa-2) mod n2. Throws
/// std::logic_error if this circulant fails the distinct-neighbourhood rule.
Graph build_b3(const ExtremalParams& p);

/// Dispatch on p.family. Throws std::invalid_argument for invalid params.
Graph build_extremal(const ExtremalParams& p);

/// Degree-4 polynomial in lambda, coefficients in descending order.
struct QuotientPoly {
  std::array<double, 5> coeffs{};

  double operator()(double x) const;
  QuotientPoly derivative() const;
  bool is_even() const { return coeffs[1] == 0.0 && coeffs[3] == 0.0; }
  friend QuotientPoly operator-(const QuotientPoly& a, const QuotientPoly& b);
};

/// Characteristic polynomial of the 4x4 quotient of the B1 complement:
/// lambda^4 + (2k - n1 n2 - 1) lambda^2 + k^2 - (n1 + n2) k + n1 n2.
QuotientPoly quotient_poly_b1(int n1, int n2, int kappa);

/// lambda^2 (lambda^2 - (n2-1)^2 - (n1-k) n2), the B2 complement quotient.
QuotientPoly quotient_poly_b2(int n1, int n2, int kappa);

/// Difference g_{ceil(n/2),floor(n/2)} - f_{n-k+1,k-1} used to compare the
/// balanced B1 complement with the extreme B2 complement.
QuotientPoly comparison_poly(int n, int kappa);

/// Least real root. Scans upward from `lower` (default: Cauchy bound) in
/// steps of 1/64 for the leftmost sign change or touching root, then
/// bisects to 1e-12. Even quartics are cross-checked against the
/// biquadratic closed form. Throws std::domain_error if there is no real root.
double least_root(const QuotientPoly& q, std::optional<double> lower = std::nullopt);

/// -sqrt(largest non-negative root in lambda^2) for an even quartic.
std::optional<double> biquadratic_least_root(const QuotientPoly& q);

/// -sqrt((n2-1)^2 + (n1-k) n2).
double b2_least_closed_form(int n1, int n2, int kappa);

/// Conjectured minimum of lambda_n(G^c) over connected G with n vertices
/// and connectivity kappa: kappa+1-n if n < 2 kappa, else the least root of
/// the balanced B1 polynomial. Requires 1 <= kappa <= n-2.
double predicted_min(int n, int kappa);

struct B1B2Comparison {
  double b1_value = 0.0;   // lambda_n of B1^c(ceil(n/2), floor(n/2), k)
  double b2_value = 0.0;   // lambda_n of B2^c(n-k+1, k-1, k)
  double phi_at_b2 = 0.0;  // comparison_poly evaluated at b2_value
  bool strict = false;     // b1_value < b2_value
  bool phi_negative = false;
};

/// Requires n >= 2k and k >= 2; throws std::invalid_argument otherwise.
B1B2Comparison compare_b1_b2(int n, int kappa);

}  // namespace spectral_kit
