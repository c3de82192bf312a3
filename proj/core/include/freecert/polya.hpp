#ifndef FREECERT_POLYA_HPP
#define FREECERT_POLYA_HPP

#include <complex>
#include <string>
#include <vector>

#include "freecert/field.hpp"
#include "freecert/outcome.hpp"

namespace freecert {

// Monic polynomial with exact rational coefficients (imaginary parts only
// over C). coeffs[k] multiplies X^k; coeffs[d] = 1.
struct MonicPolynomial {
  FieldDescriptor field;
  std::vector<Rational> coeffs;
  std::vector<Rational> imag;  // empty unless field is complex

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  void validate() const;
  std::complex<double> eval(const std::complex<double>& x) const;
  Rational eval_exact(const Rational& x) const;
};

struct MeasureEstimate {
  double value = 0;
  double lo = 0;  // certified bracket / 95% confidence interval
  double hi = 0;
  bool exact = false;
  std::string method;
};

struct MeasureBudget {
  long mc_samples = 1'000'000;
  int residue_depth = 12;
  double root_width = 1e-12;
  std::uint64_t seed = 2024;
};

// mu{x : |P(x)| <= 1}: exact interval decomposition over R (Sturm
// isolation), Monte Carlo with a Fujiwara bounding disc over C, exact
// residue-branch enumeration over Q_p.
Outcome<MeasureEstimate> measure_AP(const MonicPolynomial& P, const MeasureBudget& budget = {});

struct BoundReport {
  MeasureEstimate estimate;
  double bound = 0;       // c(k)
  double best_bound = 0;  // 4 over R (reported for comparison), else = bound
  bool pass = false;
};

// mu(A_P) <= c(k) with c(R) = 2e, c(C) = pi e, c(Q_p) = 1 + 1/(p-1)
Outcome<BoundReport> check_bound(const MonicPolynomial& P, const MeasureBudget& budget = {});

double polya_constant(const FieldDescriptor& field);

// minimal measure c1 with  integral of log|x| over the centered ball of
// measure c1  >= 1, computed per field from the defining property
double c1_constant(const FieldDescriptor& field);

// --- log integrals -----------------------------------------------------------

struct RealSetDescriptor {
  std::vector<std::pair<double, double>> intervals;
};
struct ComplexSetDescriptor {
  std::vector<std::pair<std::complex<double>, double>> discs;  // (center, radius)
};
struct PadicSetDescriptor {
  // residue branches c + p^j Z_p given as (c, j)
  std::vector<std::pair<Rational, int>> branches;
};

struct LogIntegral {
  double value = 0;
  double error = 0;  // quadrature / confidence / bracket half-width
  bool singular_budget_hit = false;
};

LogIntegral log_integral(const MonicPolynomial& P, const RealSetDescriptor& B);
LogIntegral log_integral(const MonicPolynomial& P, const ComplexSetDescriptor& B,
                         long samples = 400'000, std::uint64_t seed = 11);
LogIntegral log_integral(const MonicPolynomial& P, const PadicSetDescriptor& B,
                         int depth = 24);

// complex roots of the (real-coefficient) polynomial, companion matrix +
// Newton polish; used by the closed-form real log integral
std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coeffs);

// the monic degree-d polynomial s^d T~_d(x/s), s = 2^{-1/d} (dyadic
// approximation), whose sublevel measure approaches the extremal real value 4
MonicPolynomial chebyshev_extremal_fixture(int degree);

}  // namespace freecert

#endif  // FREECERT_POLYA_HPP
