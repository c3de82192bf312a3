#ifndef FREECERT_AFFINE_HPP
#define FREECERT_AFFINE_HPP

#include <map>
#include <sstream>
#include <vector>

#include "freecert/config.hpp"
#include "freecert/field.hpp"
#include "freecert/outcome.hpp"

namespace freecert {

// x -> a x + b with a != 0
template <typename K>
struct AffineElement {
  K a;
  K b;
  K apply(const K& x) const { return a * x + b; }
};

template <typename K>
AffineElement<K> compose(const AffineElement<K>& g, const AffineElement<K>& h) {
  return {g.a * h.a, g.a * h.b + g.b};
}

template <typename K>
AffineElement<K> affine_inverse(const AffineElement<K>& g) {
  if constexpr (std::is_same_v<K, PadicScalar>) {
    K ai = g.a.inv();
    return {ai, -(ai * g.b)};
  } else {
    if (g.a == K(0)) throw DivisionByZero();
    K ai = K(1) / g.a;
    return {ai, -(ai * g.b)};
  }
}

// --- field-specific magnitude bookkeeping -----------------------------------

// Magnitudes are kept exact per field: rationals stay rational, p-adic
// magnitudes are valuation exponents (|x| = p^{-e}).
template <typename K>
struct AffineTraits;

template <>
struct AffineTraits<Rational> {
  using Mag = Rational;
  static Mag abs(const Rational& x) { return abs_rat(x); }
  static bool is_parabolic(const Rational& a, double) { return a == 1; }
  static bool distinct(const Rational& x, const Rational& y, double) { return x != y; }
  static double mag_to_double(const Mag& m) { return to_double(m); }
};

template <>
struct AffineTraits<double> {
  using Mag = double;
  static Mag abs(double x) { return std::abs(x); }
  static bool is_parabolic(double a, double eta) { return std::abs(a - 1.0) <= eta; }
  static bool distinct(double x, double y, double eta) {
    return std::abs(x - y) > eta * std::max({1.0, std::abs(x), std::abs(y)});
  }
  static double mag_to_double(const Mag& m) { return m; }
};

template <typename K>
Outcome<K> fixed_point(const AffineElement<K>& g, double eta = 1e-9) {
  if constexpr (std::is_same_v<K, PadicScalar>) {
    K one = PadicScalar::from_rational(Rational(1), g.a.p(), g.a.precision());
    K denom = one - g.a;
    if (!denom.is_regular())
      return Refusal{Why::ParabolicElement, "a = 1 within the tracked precision"};
    return denom.inv() * g.b;
  } else {
    if (AffineTraits<K>::is_parabolic(g.a, eta))
      return Refusal{Why::ParabolicElement, "dilation coefficient is 1 within margin"};
    return g.b / (K(1) - g.a);
  }
}

// image of disc(center, R) under g: disc(a*center + b, |a|*R); exact for
// Euclidean discs over R and for ultrametric balls over Q_p
template <typename K>
std::pair<K, typename AffineTraits<K>::Mag> contract_disc(const AffineElement<K>& g,
                                                          const K& center,
                                                          typename AffineTraits<K>::Mag R) {
  return {g.apply(center), AffineTraits<K>::abs(g.a) * R};
}

// --- free-semigroup certificate ----------------------------------------------

template <typename K>
struct SemigroupCertificate {
  std::vector<AffineElement<K>> elements;
  K center;                            // x_c
  typename AffineTraits<K>::Mag R;     // disc radius
  std::vector<K> fixed_points;
  std::vector<K> image_centers;
  std::vector<typename AffineTraits<K>::Mag> image_radii;
};

// Archimedean version (K = Rational exact, K = double within margin).
// Canonical witness: x_c = centroid of the fixed points, R twice the minimal
// containment radius; refusals name the binding pair.
template <typename K>
Outcome<SemigroupCertificate<K>> certify_free_semigroup(
    const std::vector<AffineElement<K>>& elements, double eta = 1e-9) {
  using T = AffineTraits<K>;
  using Mag = typename T::Mag;
  const std::size_t t = elements.size();
  if (t == 0) return Refusal{Why::InputError, "empty element list"};

  SemigroupCertificate<K> cert;
  cert.elements = elements;
  for (std::size_t i = 0; i < t; ++i) {
    if (!(T::abs(elements[i].a) < Mag(1)))
      return Refusal{Why::NotContractive, "element " + std::to_string(i) + " has |a| >= 1"};
    auto fp = fixed_point(elements[i], eta);
    if (!fp) return fp.refusal();
    cert.fixed_points.push_back(std::move(fp).take());
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (!T::distinct(cert.fixed_points[i], cert.fixed_points[j], eta)) {
        std::ostringstream os;
        os << "fixed points of elements " << i << " and " << j << " coincide";
        return Refusal{Why::FixedPointCollision, os.str()};
      }

  K xc = K(0);
  for (const auto& x : cert.fixed_points) xc = xc + x;
  xc = xc / K(static_cast<int>(t));
  cert.center = xc;

  Mag R(1);
  if (t > 1) {
    Mag best(0);
    for (std::size_t i = 0; i < t; ++i) {
      Mag d = T::abs(cert.fixed_points[i] - xc);
      Mag need = d * T::abs(K(1) - elements[i].a) / (Mag(1) - T::abs(elements[i].a));
      if (best < need) best = need;
    }
    R = Mag(2) * best;
    if (!(R > Mag(0))) R = Mag(1);
  }
  cert.R = R;

  for (std::size_t i = 0; i < t; ++i) {
    auto [c, rho] = contract_disc(elements[i], xc, R);
    cert.image_centers.push_back(c);
    cert.image_radii.push_back(rho);
    if (!(T::abs(c - xc) + rho <= R))
      return Refusal{Why::DiscOverlap,
                     "image disc " + std::to_string(i) + " escapes the common disc"};
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      Mag sep = T::abs(cert.image_centers[i] - cert.image_centers[j]);
      if (!(sep > cert.image_radii[i] + cert.image_radii[j])) {
        std::ostringstream os;
        os << "image discs " << i << " and " << j << " overlap: separation "
           << T::mag_to_double(sep) << " vs radii "
           << T::mag_to_double(cert.image_radii[i]) << " + "
           << T::mag_to_double(cert.image_radii[j]);
        return Refusal{Why::DiscOverlap, os.str()};
      }
    }
  return cert;
}

// Ultrametric version: balls are disjoint-or-nested, all comparisons are
// exact valuation comparisons. Radii are p-powers, R = p^{-e_R}.
struct PadicDisc {
  PadicScalar center;
  long radius_exp;  // radius p^{-radius_exp}
};

struct PadicSemigroupCertificate {
  std::vector<AffineElement<PadicScalar>> elements;
  PadicScalar center;
  long R_exp = 0;
  std::vector<PadicScalar> fixed_points;
  std::vector<PadicDisc> images;
};

Outcome<PadicSemigroupCertificate> certify_free_semigroup_padic(
    const std::vector<AffineElement<PadicScalar>>& elements);

// --- exact word oracle --------------------------------------------------------

struct SemigroupOracleResult {
  bool free = true;
  std::string collision;  // "w1 = w2" when not free
  long words = 0;
};

// All positive words of length <= max_len pairwise distinct as affine maps
// (exact comparison of (a, b) pairs).
Outcome<SemigroupOracleResult> semigroup_oracle(
    const std::vector<AffineElement<Rational>>& elements, int max_len,
    long budget = 5'000'000);

// Distinct values of w(x) over positive words w of length exactly n.
std::size_t distinct_word_images(const std::vector<AffineElement<Rational>>& elements,
                                 const Rational& x, int n);

}  // namespace freecert

#endif  // FREECERT_AFFINE_HPP
