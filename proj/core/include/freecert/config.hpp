#ifndef FREECERT_CONFIG_HPP
#define FREECERT_CONFIG_HPP

#include <algorithm>
#include <cmath>

namespace freecert {

// Constants used by the proximality machinery. The underlying inequalities
// only assert that suitable constants >= 1 exist for each local field; these
// defaults are validated by the acceptance suite and are recorded inside
// every certificate so a certificate is checkable on its own.
struct CertConstants {
  double c1 = 2.0;   // proximality regime: r >= c1 * eps
  double c2 = 3.0;   // power certificates: eps_n = (c2 * eps)^(n/3)
  double C = 10.0;   // very-contracting search target: C * eps

  static CertConstants archimedean_defaults() { return {2.0, 3.0, 10.0}; }
  static CertConstants padic_defaults(long p) {
    double p2 = static_cast<double>(p) * static_cast<double>(p);
    return {p2, p2, p2};
  }
};

struct Tolerances {
  double eta = 1e-9;            // float margin for Real/Complex certificates
  double fixed_point_tol = 0.0;  // 0 -> derived: max(1e3*eta, 1e-12)
  int fixed_point_budget = 10000;

  double fp_tol() const {
    return fixed_point_tol > 0 ? fixed_point_tol : std::max(1e3 * eta, 1e-12);
  }
};

// Pessimistic rounding helpers: certified quantities are always nudged in
// the unfavorable direction before a comparison.
inline double widen_up(double x, double eta) { return x + eta * std::max(1.0, std::abs(x)); }
inline double widen_down(double x, double eta) {
  return std::max(0.0, x - eta * std::max(1.0, std::abs(x)));
}

}  // namespace freecert

#endif  // FREECERT_CONFIG_HPP
