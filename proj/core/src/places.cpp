#include "freecert/places.hpp"

#include <algorithm>
#include <cmath>

#include "freecert/field.hpp"
#include "freecert/polya.hpp"

namespace freecert {

const char* place_kind_name(PlaceKind k) {
  switch (k) {
    case PlaceKind::RealEmbedding: return "real-embedding";
    case PlaceKind::ComplexEmbedding: return "complex-embedding";
    case PlaceKind::PadicPlace: return "padic-place";
    case PlaceKind::RootOfUnity: return "root-of-unity";
  }
  return "?";
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// remainder of a*b modulo the monic minpoly
std::vector<Rational> mulmod_poly(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                  const std::vector<Rational>& mod) {
  const int dm = static_cast<int>(mod.size()) - 1;
  std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  for (int k = static_cast<int>(prod.size()) - 1; k >= dm; --k) {
    Rational f = prod[static_cast<std::size_t>(k)];
    if (f == 0) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < dm; ++i)
      prod[static_cast<std::size_t>(k - dm + i)] -= f * mod[static_cast<std::size_t>(i)];
  }
  prod.resize(static_cast<std::size_t>(dm));
  return prod;
}

bool is_one(const std::vector<Rational>& a) {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

}  // namespace

int root_of_unity_order(const std::vector<Rational>& minpoly, int bound) {
  const int d = static_cast<int>(minpoly.size()) - 1;
  std::vector<Rational> x(static_cast<std::size_t>(std::max(2, d)), Rational(0));
  if (d == 1) {
    // alpha is rational: alpha = -minpoly[0]
    Rational alpha = -minpoly[0];
    if (alpha == 1) return 1;
    if (alpha == -1) return 2;
    return 0;
  }
  x[1] = 1;
  std::vector<Rational> acc = x;
  for (int m = 1; m <= bound; ++m) {
    if (is_one(acc)) return m;
    acc = mulmod_poly(acc, x, minpoly);
  }
  return 0;
}

Outcome<PlaceReport> expanding_place(const AlgebraicNumber& alpha) {
  const int d = alpha.degree();
  if (d < 1 || alpha.minpoly.back() != 1)
    return Refusal{Why::InputError, "minimal polynomial must be monic of degree >= 1"};
  if (d > 16) return Refusal{Why::InputError, "degree capped at 16"};

  auto roots = polynomial_roots(alpha.minpoly);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const double margin = 1e-8;
  int best = -1;
  double best_mod = 1.0 + margin;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (std::abs(roots[i]) > best_mod) {
      best_mod = std::abs(roots[i]);
      best = static_cast<int>(i);
    }
  if (best >= 0) {
    PlaceReport rep;
    bool real_root = std::abs(roots[static_cast<std::size_t>(best)].imag()) <=
                     1e-8 * (1.0 + best_mod);
    rep.kind = real_root ? PlaceKind::RealEmbedding : PlaceKind::ComplexEmbedding;
    rep.root_index = best;
    rep.abs_value = best_mod * (1.0 - 1e-9);
    return rep;
  }

  // not integral -> some prime divides a denominator; the Newton polygon at
  // that prime has a positive slope, i.e. a conjugate with |alpha|_p > 1
  BigInt den_lcm = 1;
  for (const auto& c : alpha.minpoly) den_lcm = boost::multiprecision::lcm(den_lcm, den(c));
  if (den_lcm != 1) {
    long p = 0;
    for (long q = 2;; q += (q == 2 ? 1 : 2)) {
      if (den_lcm % q == 0) {
        p = q;
        break;
      }
      if (BigInt(q) * q > den_lcm) {
        p = den_lcm.convert_to<long>();
        break;
      }
    }
    // lower Newton polygon of (i, v_p(c_i)); the final ascent to (d, 0)
    // has the maximal slope, positive because some v < 0
    BigInt P(p);
    long best_num = 0, best_den = 1;
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i <= d; ++i) {
      const Rational& c = alpha.minpoly[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      pts.emplace_back(i, padic_valuation(c, P));
    }
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
      while (hull.size() >= 2) {
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull[hull.size() - 1];
        // keep lower-convex: slope(a,b) <= slope(b,pt)
        if ((b.second - a.second) * (pt.first - b.first) <=
            (pt.second - b.second) * (b.first - a.first))
          break;
        hull.pop_back();
      }
      hull.push_back(pt);
    }
    for (std::size_t k = 1; k < hull.size(); ++k) {
      long num = hull[k].second - hull[k - 1].second;
      long dn = hull[k].first - hull[k - 1].first;
      if (num * best_den > best_num * dn) {
        best_num = num;
        best_den = dn;
      }
    }
    PlaceReport rep;
    rep.kind = PlaceKind::PadicPlace;
    rep.p = p;
    rep.slope_num = best_num;
    rep.slope_den = best_den;
    rep.abs_value =
        std::pow(static_cast<double>(p), static_cast<double>(best_num) / best_den);
    return rep;
  }

  // integral with every conjugate of modulus <= 1: root of unity, verified
  int order = root_of_unity_order(alpha.minpoly, 4 * d * d + 16);
  if (order == 0)
    return Refusal{Why::PrecisionEscalationNeeded,
                   "conjugate moduli within margin of 1 but no exact power reaches 1"};
  PlaceReport rep;
  rep.kind = PlaceKind::RootOfUnity;
  rep.order = order;
  rep.abs_value = 1.0;
  return rep;
}

Outcome<UnboundedReport> unbounded_embedding(const std::vector<Rational>& I, long l) {
  if (I.empty()) return Refusal{Why::InputError, "empty set"};
  std::vector<long> primes = prime_factors(l);

  UnboundedReport best;
  best.place.kind = PlaceKind::RealEmbedding;
  best.witness = I.front();
  best.witness_abs = std::abs(to_double(I.front()));
  for (const auto& q : I) {
    double a = std::abs(to_double(q));
    if (a > best.witness_abs) {
      best.witness = q;
      best.witness_abs = a;
    }
  }
  for (long p : primes) {
    BigInt P(p);
    for (const auto& q : I) {
      if (q == 0) continue;
      double a = padic_abs(q, P);
      if (a > best.witness_abs) {
        best.witness = q;
        best.witness_abs = a;
        best.place.kind = PlaceKind::PadicPlace;
        best.place.p = p;
      }
    }
  }
  best.place.abs_value = best.witness_abs;
  return best;
}

}  // namespace freecert
