#ifndef FREECERT_GROWTH_HPP
#define FREECERT_GROWTH_HPP

#include <set>
#include <string>
#include <vector>

#include "freecert/affine.hpp"
#include "freecert/matrix.hpp"
#include "freecert/outcome.hpp"

namespace freecert {

// f_{R,S}(n) = number of elements writable as words of length <= n whose
// every prefix stays in the open ball B_R of the declared left-invariant
// gauge. Deduplication is exact for the rational backends.
struct GrowthTable {
  double R = 0;
  int N = 0;
  std::vector<std::size_t> values;  // f(0..N)
  std::string metric_descriptor;
  double dedup_tolerance = 0;
  std::size_t generator_count = 0;
};

enum class GrowthVerdict { Bounded, Polynomial, Exponential, Inconclusive };

const char* verdict_name(GrowthVerdict v);

struct FitDiagnostics {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

struct GrowthClassification {
  GrowthVerdict verdict = GrowthVerdict::Inconclusive;
  double degree_estimate = 0;  // Polynomial
  double rate_estimate = 1;    // Exponential: fitted rho
  FitDiagnostics loglog;
  FitDiagnostics linear;
  bool stabilized = false;
};

struct ClassifyOptions {
  double r2_threshold = 0.98;
  double slope_threshold = 0.05;
};

Outcome<GrowthClassification> classify(const GrowthTable& table,
                                       const ClassifyOptions& opts = {});

// --- ambients ----------------------------------------------------------------

// translations of the line over exact rationals; d(x, y) = |x - y|
struct RationalTranslationAmbient {
  using Elem = Rational;
  Elem identity() const { return Rational(0); }
  Elem compose(const Elem& x, const Elem& y) const { return x + y; }
  double gauge(const Elem& x) const { return std::abs(to_double(x)); }
  std::string descriptor(double R) const;
  using Seen = std::set<Rational>;
  bool insert(Seen& s, const Elem& x) const { return s.insert(x).second; }
  static constexpr double dedup_tol = 0;
};

// translations with float entries; tolerance-ball dedup on a sorted set
struct FloatTranslationAmbient {
  double tol = 1e-9;
  using Elem = double;
  Elem identity() const { return 0.0; }
  Elem compose(const Elem& x, const Elem& y) const { return x + y; }
  double gauge(const Elem& x) const { return std::abs(x); }
  std::string descriptor(double R) const;
  using Seen = std::set<double>;
  bool insert(Seen& s, const Elem& x) const {
    auto it = s.lower_bound(x - tol);
    if (it != s.end() && *it <= x + tol) return false;
    s.insert(x);
    return true;
  }
  double dedup_tolerance() const { return tol; }
};

enum class AffineGauge { Max, Hyperbolic };

// left-invariant distance between affine maps; Hyperbolic is the genuine
// hyperbolic-plane metric on a > 0, Max is the coarser
// max(|ln|a||, |b|/max(1,|a|)) surrogate
double affine_gauge_distance(AffineGauge kind, const Rational& a1, const Rational& b1,
                             const Rational& a2, const Rational& b2);

struct RationalAffineAmbient {
  AffineGauge gauge_kind = AffineGauge::Max;
  using Elem = std::pair<Rational, Rational>;  // (a, b)
  Elem identity() const { return {Rational(1), Rational(0)}; }
  Elem compose(const Elem& x, const Elem& y) const {
    return {x.first * y.first, x.first * y.second + x.second};
  }
  double gauge(const Elem& x) const {
    return affine_gauge_distance(gauge_kind, Rational(1), Rational(0), x.first, x.second);
  }
  std::string descriptor(double R) const;
  using Seen = std::set<Elem>;
  bool insert(Seen& s, const Elem& x) const { return s.insert(x).second; }
  static constexpr double dedup_tol = 0;
};

// matrix group with d(g, h) = ||log(g^{-1} h)||_F when ||g^{-1}h - I|| < 1
// (else treated as outside every ball); dedup on a 1e-9 rounding grid
struct MatrixLogAmbient {
  FieldDescriptor field = FieldDescriptor::real();
  int n = 2;
  double tol = 1e-9;
  using Elem = RealMatrix;
  Elem identity() const { return RealMatrix::identity(field, n); }
  Elem compose(const Elem& x, const Elem& y) const { return x * y; }
  double gauge(const Elem& x) const;
  std::string descriptor(double R) const;
  using Seen = std::set<std::vector<long long>>;
  bool insert(Seen& s, const Elem& x) const {
    std::vector<long long> key;
    key.reserve(x.a.size());
    for (double v : x.a) key.push_back(llround(v / tol));
    return s.insert(std::move(key)).second;
  }
  double dedup_tolerance() const { return tol; }
};

// --- BFS ------------------------------------------------------------------

template <typename Ambient>
Outcome<GrowthTable> growth_table(const Ambient& amb,
                                  const std::vector<typename Ambient::Elem>& S, double R,
                                  int N, std::size_t cap = 5'000'000) {
  GrowthTable t;
  t.R = R;
  t.N = N;
  t.metric_descriptor = amb.descriptor(R);
  t.generator_count = S.size();
  if constexpr (requires { amb.dedup_tolerance(); })
    t.dedup_tolerance = amb.dedup_tolerance();

  typename Ambient::Seen seen;
  std::vector<typename Ambient::Elem> frontier;
  auto e = amb.identity();
  amb.insert(seen, e);
  frontier.push_back(e);
  std::size_t total = 1;
  t.values.push_back(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<typename Ambient::Elem> next;
    for (const auto& x : frontier)
      for (const auto& s : S) {
        auto y = amb.compose(x, s);
        if (!(amb.gauge(y) < R)) continue;
        if (!amb.insert(seen, y)) continue;
        next.push_back(std::move(y));
        if (++total > cap)
          return Refusal{Why::StateExplosion,
                         "confined ball exceeded " + std::to_string(cap) + " elements"};
      }
    t.values.push_back(total);
    frontier = std::move(next);
  }
  return t;
}

// Elements of B_R(n) itself (small n; used by tests).
template <typename Ambient>
std::vector<typename Ambient::Elem> local_ball(const Ambient& amb,
                                               const std::vector<typename Ambient::Elem>& S,
                                               double R, int n) {
  typename Ambient::Seen seen;
  std::vector<typename Ambient::Elem> all;
  std::vector<typename Ambient::Elem> frontier;
  auto e = amb.identity();
  amb.insert(seen, e);
  all.push_back(e);
  frontier.push_back(e);
  for (int k = 1; k <= n; ++k) {
    std::vector<typename Ambient::Elem> next;
    for (const auto& x : frontier)
      for (const auto& s : S) {
        auto y = amb.compose(x, s);
        if (!(amb.gauge(y) < R)) continue;
        if (!amb.insert(seen, y)) continue;
        all.push_back(y);
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return all;
}

// --- nets -------------------------------------------------------------------

struct IntervalNet {
  std::vector<double> points;
  double spacing;
  bool capped = false;  // requested spacing fell below the grid resolution
};

// greedy maximal spacing-discrete subset of [-R, R], from a sorted reference
// grid
IntervalNet interval_net(double R, double spacing, double resolution = 1e-4);

// --- the covering certificate -------------------------------------------------

struct AmmelCertificate {
  double R = 0;
  double net_delta = 0;
  std::size_t net_points = 0;
  int min_cover = 0;       // smallest number of covering indices over the net
  std::string evidence;    // freeness evidence used
  int n_max = 0;           // levels certified (0 = all n, disc-certificate route)
  std::vector<std::size_t> doubling_sizes;
};

// Checks closure(B_R) subset union_{i<j} (s_i^{-1} B_{R/2} cap s_j^{-1} B_{R/2})
// over a delta-net of B_R, with the net spacing as margin (left translations
// are isometries, so the margin is exact). Freeness evidence is either a
// disc certificate for Sigma (claim for all n) or the explicit
// confined-doubling construction up to n_max.
Outcome<AmmelCertificate> ammel_certificate(
    const std::vector<AffineElement<Rational>>& sigma, double R, double net_delta,
    int n_max, const SemigroupCertificate<Rational>* disc_evidence = nullptr);

// same check over the translation group of the line (B_R = interval)
Outcome<AmmelCertificate> ammel_certificate_translations(const std::vector<Rational>& sigma,
                                                         double R, double net_delta,
                                                         int n_max);

// Sigma = Y^{-1} u Z^{-1} for two interleaved maximal (R/2 - 3 delta)-discrete
// subsets Y, Z of the closed hyperbolic R-ball, over a dyadic candidate grid.
// This is the configuration the covering condition asks for.
std::vector<AffineElement<Rational>> ammel_sigma_from_nets(double R, double net_delta);

}  // namespace freecert

#endif  // FREECERT_GROWTH_HPP
