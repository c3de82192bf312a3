#ifndef FREECERT_PROJECTIVE_HPP
#define FREECERT_PROJECTIVE_HPP

#include "freecert/matrix.hpp"
#include "freecert/rng.hpp"

namespace freecert {

namespace detail {

// Canonical representative of a projective class: norm one, and a
// deterministic phase/leading normalization so equal classes get equal
// representatives (within margin for floats, exactly over Q_p).
template <typename K>
Vec<K> canonicalize(Vec<K> v, const FieldDescriptor& field) {
  if constexpr (std::is_same_v<K, double>) {
    double n = vec_norm(v);
    if (n == 0) throw std::invalid_argument("zero vector has no projective class");
    for (auto& x : v) x /= n;
    int lead = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > 1e-6) {
        lead = static_cast<int>(i);
        break;
      }
    if (lead < 0) lead = 0;
    if (v[static_cast<std::size_t>(lead)] < 0)
      for (auto& x : v) x = -x;
    return v;
  } else if constexpr (std::is_same_v<K, std::complex<double>>) {
    double n = vec_norm(v);
    if (n == 0) throw std::invalid_argument("zero vector has no projective class");
    for (auto& x : v) x /= n;
    int lead = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i]) > 1e-6) {
        lead = static_cast<int>(i);
        break;
      }
    if (lead < 0) lead = 0;
    std::complex<double> z = v[static_cast<std::size_t>(lead)];
    std::complex<double> phase = std::conj(z) / std::abs(z);
    for (auto& x : v) x *= phase;
    return v;
  } else {
    static_assert(std::is_same_v<K, PadicScalar>, "projective layer: real/complex/padic only");
    double n = 0;
    for (const auto& x : v) n = std::max(n, ScalarTraits<K>::abs_lower(x));
    if (n == 0) throw std::invalid_argument("zero vector has no projective class");
    int lead = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i].is_regular() && v[i].abs() == n) {
        lead = static_cast<int>(i);
        break;
      }
    if (lead < 0) throw PrecisionExhausted("leading coordinate uncertain");
    PadicScalar inv = v[static_cast<std::size_t>(lead)].inv();
    for (auto& x : v) x = x * inv;
    (void)field;
    return v;
  }
}

template <typename K>
K inner_conj(const Vec<K>& a, const Vec<K>& b) {
  if constexpr (std::is_same_v<K, std::complex<double>>) {
    K s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
  } else {
    K s{};
    if constexpr (std::is_same_v<K, PadicScalar>) s = PadicScalar::zero(a[0].p(), a[0].precision());
    for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
  }
}

// plain bilinear pairing: how a functional is applied to a vector
template <typename K>
K dot_bilinear(const Vec<K>& a, const Vec<K>& b) {
  K s{};
  if constexpr (std::is_same_v<K, PadicScalar>) s = PadicScalar::zero(a[0].p(), a[0].precision());
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

}  // namespace detail

template <typename K>
struct ProjectivePoint {
  FieldDescriptor field;
  Vec<K> v;

  ProjectivePoint() = default;
  ProjectivePoint(const FieldDescriptor& f, Vec<K> rep)
      : field(f), v(detail::canonicalize<K>(std::move(rep), f)) {}

  int dim() const { return static_cast<int>(v.size()); }
};

template <typename K>
struct ProjectiveHyperplane {
  FieldDescriptor field;
  Vec<K> f;  // defining functional, canonically normalized

  ProjectiveHyperplane() = default;
  ProjectiveHyperplane(const FieldDescriptor& fd, Vec<K> functional)
      : field(fd), f(detail::canonicalize<K>(std::move(functional), fd)) {}

  int dim() const { return static_cast<int>(f.size()); }
};

// d([v],[w]) = ||v /\ w|| / (||v|| ||w||); representatives are unit, so this
// is the wedge norm, clamped into [0,1].
template <typename K>
double distance(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("projective distance");
  return std::min(1.0, wedge_norm(p.v, q.v, true));
}

// Lower bound companion, for certified ">= r" claims.
template <typename K>
double distance_lower(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("projective distance");
  if constexpr (ScalarTraits<K>::archimedean)
    return widen_down(std::min(1.0, wedge_norm(p.v, q.v, true)), 4 * p.field.eta);
  else
    return std::min(1.0, wedge_norm(p.v, q.v, false));
}

template <typename K>
double distance_to_hyperplane(const ProjectivePoint<K>& p, const ProjectiveHyperplane<K>& H) {
  if (p.dim() != H.dim()) throw DimensionMismatch("point-hyperplane distance");
  K s = detail::dot_bilinear(H.f, p.v);
  return std::min(1.0, ScalarTraits<K>::abs_upper(s));
}

template <typename K>
double distance_to_hyperplane_lower(const ProjectivePoint<K>& p,
                                    const ProjectiveHyperplane<K>& H) {
  if (p.dim() != H.dim()) throw DimensionMismatch("point-hyperplane distance");
  K s = detail::dot_bilinear(H.f, p.v);
  if constexpr (ScalarTraits<K>::archimedean)
    return widen_down(std::min(1.0, ScalarTraits<K>::abs_upper(s)), 4 * p.field.eta);
  else
    return std::min(1.0, ScalarTraits<K>::abs_lower(s));
}

// Hausdorff distance between hyperplanes: the operator norm of f2 restricted
// to ker f1.
template <typename K>
double hausdorff_distance(const ProjectiveHyperplane<K>& H1, const ProjectiveHyperplane<K>& H2) {
  if (H1.dim() != H2.dim()) throw DimensionMismatch("hausdorff distance");
  if constexpr (ScalarTraits<K>::archimedean) {
    K ip = detail::inner_conj(H2.f, H1.f);
    double c = ScalarTraits<K>::abs_upper(ip);
    return std::sqrt(std::max(0.0, 1.0 - c * c));
  } else {
    // canonical f1 has a leading coordinate exactly 1 at index i0; the unit
    // ball of ker f1 is spanned over Z_p by e_j - f1_j e_{i0}
    int i0 = -1;
    for (std::size_t i = 0; i < H1.f.size(); ++i)
      if (H1.f[i].is_regular() && H1.f[i].valuation() == 0) {
        i0 = static_cast<int>(i);
        break;
      }
    if (i0 < 0) throw PrecisionExhausted("hyperplane functional has no certain unit entry");
    double m = 0;
    for (std::size_t j = 0; j < H1.f.size(); ++j) {
      if (static_cast<int>(j) == i0) continue;
      K val = H2.f[j] - H1.f[j] * H2.f[static_cast<std::size_t>(i0)];
      m = std::max(m, ScalarTraits<K>::abs_upper(val));
    }
    return std::min(1.0, m);
  }
}

template <typename K>
ProjectivePoint<K> act(const Matrix<K>& g, const ProjectivePoint<K>& p) {
  if (g.n != p.dim()) throw DimensionMismatch("projective action");
  return ProjectivePoint<K>(p.field, g.apply(p.v));
}

// image hyperplane g.H = ker(f o g^{-1}); callers supply the inverse
template <typename K>
ProjectiveHyperplane<K> act_hyperplane(const Matrix<K>& g_inverse,
                                       const ProjectiveHyperplane<K>& H) {
  if (g_inverse.n != H.dim()) throw DimensionMismatch("hyperplane action");
  return ProjectiveHyperplane<K>(H.field, g_inverse.apply_left(H.f));
}

// --- sampling ---------------------------------------------------------------

// Uniform on P(k^n): rotation-invariant Gaussian over R/C; uniform digit
// strings on Z_p^n \ p Z_p^n over Q_p.
template <typename K>
ProjectivePoint<K> sample_point(const FieldDescriptor& field, int n, SplitMix64& rng) {
  Vec<K> v;
  v.reserve(static_cast<std::size_t>(n));
  if constexpr (std::is_same_v<K, double>) {
    for (int i = 0; i < n; ++i) v.push_back(rng.gauss());
  } else if constexpr (std::is_same_v<K, std::complex<double>>) {
    for (int i = 0; i < n; ++i) v.push_back({rng.gauss(), rng.gauss()});
  } else {
    BigInt pN = pow_int(BigInt(field.p), static_cast<unsigned long>(field.precision));
    while (true) {
      v.clear();
      bool some_unit = false;
      for (int i = 0; i < n; ++i) {
        BigInt u = 0;
        for (int d = 0; d < field.precision; ++d)
          u = u * field.p + static_cast<long>(rng.below(static_cast<std::uint64_t>(field.p)));
        u %= pN;
        if (u % field.p != 0) some_unit = true;
        v.push_back(PadicScalar::from_rational(Rational(u), field.p, field.precision));
      }
      if (some_unit) break;
    }
  }
  return ProjectivePoint<K>(field, std::move(v));
}

template <typename K>
ProjectiveHyperplane<K> sample_hyperplane(const FieldDescriptor& field, int n, SplitMix64& rng) {
  return ProjectiveHyperplane<K>(field, sample_point<K>(field, n, rng).v);
}

}  // namespace freecert

#endif  // FREECERT_PROJECTIVE_HPP
