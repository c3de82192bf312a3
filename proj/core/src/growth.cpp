#include "freecert/growth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace freecert {

const char* verdict_name(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::Bounded: return "Bounded";
    case GrowthVerdict::Polynomial: return "Polynomial";
    case GrowthVerdict::Exponential: return "Exponential";
    case GrowthVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string RationalTranslationAmbient::descriptor(double R) const {
  std::ostringstream os;
  os << "translations(Q), d(x,y)=|x-y|, exact dedup, R=" << R;
  return os.str();
}

std::string FloatTranslationAmbient::descriptor(double R) const {
  std::ostringstream os;
  os << "translations(R), d(x,y)=|x-y|, tolerance dedup " << tol << ", R=" << R;
  return os.str();
}

std::string RationalAffineAmbient::descriptor(double R) const {
  std::ostringstream os;
  os << "affine(Q), gauge=" << (gauge_kind == AffineGauge::Max ? "max" : "hyperbolic")
     << ", exact dedup, R=" << R;
  return os.str();
}

double affine_gauge_distance(AffineGauge kind, const Rational& a1, const Rational& b1,
                             const Rational& a2, const Rational& b2) {
  double A1 = to_double(a1), B1 = to_double(b1), A2 = to_double(a2), B2 = to_double(b2);
  if (kind == AffineGauge::Hyperbolic) {
    if (A1 <= 0 || A2 <= 0) return std::numeric_limits<double>::infinity();
    double num = (A1 - A2) * (A1 - A2) + (B1 - B2) * (B1 - B2);
    return std::acosh(1.0 + num / (2.0 * A1 * A2));
  }
  // Max gauge of g^{-1} h = (a2/a1, (b2-b1)/a1), symmetrized as
  // max(|ln|a||, |b| / max(1, |a|)).
  double a = A2 / A1;
  double b = (B2 - B1) / A1;
  if (a == 0) return std::numeric_limits<double>::infinity();
  return std::max(std::abs(std::log(std::abs(a))), std::abs(b) / std::max(1.0, std::abs(a)));
}

double MatrixLogAmbient::gauge(const Elem& x) const {
  // principal log via the series at I; valid for ||x - I|| < 1
  RealMatrix d = x;
  for (int i = 0; i < n; ++i) d.at(i, i) -= 1.0;
  if (frobenius_norm(d) >= 1.0) return std::numeric_limits<double>::infinity();
  RealMatrix term = d;
  RealMatrix acc = d;
  for (int k = 2; k <= 48; ++k) {
    term = term * d;
    double sign = (k % 2 == 0) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += sign * term.a[i] / k;
    if (max_entry_abs(term) < 1e-17) break;
  }
  return frobenius_norm(acc);
}

std::string MatrixLogAmbient::descriptor(double R) const {
  std::ostringstream os;
  os << "GL(" << n << ",R), d(g,h)=||log(g^-1 h)||_F (||.||<1 chart), rounding dedup " << tol
     << ", R=" << R;
  return os.str();
}

namespace {

FitDiagnostics least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  FitDiagnostics f;
  const std::size_t n = xs.size();
  if (n < 2) return f;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) return f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_tot = 0, ss_res = 0, mean = sy / n;
  for (std::size_t i = 0; i < n; ++i) {
    double pred = f.slope * xs[i] + f.intercept;
    ss_tot += (ys[i] - mean) * (ys[i] - mean);
    ss_res += (ys[i] - pred) * (ys[i] - pred);
  }
  f.r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return f;
}

}  // namespace

Outcome<GrowthClassification> classify(const GrowthTable& table, const ClassifyOptions& opts) {
  const int N = table.N;
  if (N < 12) return Refusal{Why::InsufficientData, "classification needs N >= 12"};
  GrowthClassification c;

  // Bounded: the last third of the table is constant.
  int third = N / 3;
  c.stabilized = true;
  for (int n = N - third; n < N; ++n)
    if (table.values[static_cast<std::size_t>(n)] !=
        table.values[static_cast<std::size_t>(n + 1)]) {
      c.stabilized = false;
      break;
    }
  if (c.stabilized) {
    c.verdict = GrowthVerdict::Bounded;
    return c;
  }

  std::vector<double> ns, lnf, lnn;
  for (int n = N / 2; n <= N; ++n) {
    double f = static_cast<double>(table.values[static_cast<std::size_t>(n)]);
    ns.push_back(static_cast<double>(n));
    lnn.push_back(std::log(static_cast<double>(n)));
    lnf.push_back(std::log(f));
  }
  c.linear = least_squares(ns, lnf);
  c.loglog = least_squares(lnn, lnf);
  c.rate_estimate = std::exp(c.linear.slope);
  c.degree_estimate = c.loglog.slope;

  if (c.linear.r2 >= opts.r2_threshold && c.linear.slope > opts.slope_threshold &&
      c.linear.r2 >= c.loglog.r2) {
    c.verdict = GrowthVerdict::Exponential;
  } else if (c.loglog.r2 >= opts.r2_threshold && c.loglog.r2 > c.linear.r2) {
    c.verdict = GrowthVerdict::Polynomial;
  } else {
    c.verdict = GrowthVerdict::Inconclusive;
  }
  return c;
}

IntervalNet interval_net(double R, double spacing, double resolution) {
  IntervalNet net;
  net.capped = spacing < resolution;
  net.spacing = std::max(spacing, resolution);
  double x = -R;
  while (x <= R + 1e-12) {
    if (net.points.empty() || x - net.points.back() >= net.spacing - 1e-12)
      net.points.push_back(x);
    x += resolution;
  }
  return net;
}

namespace {

double hyperbolic_dist(double a1, double b1, double a2, double b2) {
  if (a1 <= 0 || a2 <= 0) return std::numeric_limits<double>::infinity();
  double num = (a1 - a2) * (a1 - a2) + (b1 - b2) * (b1 - b2);
  return std::acosh(1.0 + num / (2.0 * a1 * a2));
}

struct GroupPt {
  double a, b;
};

// delta-net of the closed hyperbolic R-ball around (1, 0): rows in u = ln a
// with step delta/2, within-row b-steps scaled by a
std::vector<GroupPt> hyperbolic_ball_net(double R, double delta) {
  std::vector<GroupPt> net;
  for (double u = -R; u <= R + 1e-12; u += delta / 2) {
    double a = std::exp(u);
    double reach = 2.0 * a * (std::cosh(R) - 1.0) - (a - 1.0) * (a - 1.0);
    if (reach < 0) continue;
    double bmax = std::sqrt(reach);
    for (double b = -bmax; b <= bmax + 1e-12; b += a * delta / 2) {
      if (hyperbolic_dist(1, 0, a, b) <= R) net.push_back({a, b});
    }
  }
  return net;
}

}  // namespace

// Shared covering/doubling core over any ambient whose compose is the group
// law and whose gauge is D(.) = d(e, .) for a left-invariant metric.
template <typename Amb>
Outcome<AmmelCertificate> ammel_core(const Amb& amb,
                                     const std::vector<typename Amb::Elem>& sigma,
                                     const std::vector<typename Amb::Elem>& net, double R,
                                     double net_delta, int n_max, bool full_claim) {
  if (sigma.size() < 3)
    return Refusal{Why::InputError, "covering by pairwise intersections needs >= 3 elements"};
  {
    typename Amb::Seen distinct;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (!amb.insert(distinct, sigma[i]))
        return Refusal{Why::InputError, "Sigma elements must be pairwise distinct"};
      if (!(amb.gauge(sigma[i]) < R))
        return Refusal{Why::InputError, "Sigma element " + std::to_string(i) + " outside B_R"};
    }
  }

  AmmelCertificate cert;
  cert.R = R;
  cert.net_delta = net_delta;
  cert.n_max = n_max;
  cert.net_points = net.size();
  int min_cover = static_cast<int>(sigma.size());
  for (std::size_t gi = 0; gi < net.size(); ++gi) {
    int covered = 0;
    for (const auto& s : sigma)
      if (amb.gauge(amb.compose(s, net[gi])) < R / 2 - net_delta) ++covered;
    min_cover = std::min(min_cover, covered);
    if (covered < 2) {
      std::ostringstream os;
      os << "net point " << gi << " covered by " << covered << " translates";
      return Refusal{Why::CoverGap, os.str()};
    }
  }
  cert.min_cover = min_cover;

  if (full_claim) {
    cert.evidence = "semigroup-certificate";
    cert.n_max = 0;  // the disc certificate carries the claim for every n
    return cert;
  }

  // Confined-doubling evidence: run the covering induction explicitly.
  // C(0) = {e}; C(n+1) = two cover-witness children per element; children
  // verified inside B_{R/2}, level sets verified 2^n distinct.
  std::vector<typename Amb::Elem> level{amb.identity()};
  cert.doubling_sizes.push_back(1);
  for (int n = 1; n <= n_max; ++n) {
    typename Amb::Seen next_keys;
    std::vector<typename Amb::Elem> next;
    for (const auto& w : level) {
      int found = 0, candidates = 0;
      for (const auto& s : sigma) {
        auto child = amb.compose(s, w);
        if (!(amb.gauge(child) < R / 2)) continue;
        ++candidates;
        if (!amb.insert(next_keys, child)) continue;  // collided, try another witness
        next.push_back(std::move(child));
        if (++found == 2) break;
      }
      if (found < 2) {
        std::ostringstream os;
        if (candidates < 2)
          os << "constructed word at level " << n - 1
             << " has fewer than two confined children (cover margin too thin)";
        else
          os << "confined words collide at level " << n
             << " beyond repair (free-semigroup evidence fails)";
        return Refusal{candidates < 2 ? Why::CoverGap : Why::MissingFreenessPrerequisite,
                       os.str()};
      }
    }
    cert.doubling_sizes.push_back(next.size());
    level = std::move(next);
  }
  cert.evidence = "confined-doubling";
  return cert;
}

Outcome<AmmelCertificate> ammel_certificate(const std::vector<AffineElement<Rational>>& sigma,
                                            double R, double net_delta, int n_max,
                                            const SemigroupCertificate<Rational>* disc_evidence) {
  RationalAffineAmbient amb{AffineGauge::Hyperbolic};
  std::vector<RationalAffineAmbient::Elem> s2;
  for (const auto& g : sigma) s2.emplace_back(g.a, g.b);
  std::vector<RationalAffineAmbient::Elem> net;
  for (const auto& g : hyperbolic_ball_net(R, net_delta)) {
    // net points need only sit delta-close to every group element; dyadic
    // rounding keeps them exact without hurting the margin
    const long long den = 1LL << 30;
    net.emplace_back(Rational(std::llround(g.a * den), den),
                     Rational(std::llround(g.b * den), den));
  }
  if (disc_evidence && disc_evidence->elements.size() != sigma.size())
    return Refusal{Why::MissingFreenessPrerequisite, "disc certificate does not match Sigma"};
  return ammel_core(amb, s2, net, R, net_delta, n_max, disc_evidence != nullptr);
}

Outcome<AmmelCertificate> ammel_certificate_translations(const std::vector<Rational>& sigma,
                                                         double R, double net_delta,
                                                         int n_max) {
  RationalTranslationAmbient amb;
  std::vector<Rational> net;
  const long long den = 1LL << 30;
  for (double x = -R; x <= R + 1e-12; x += net_delta / 2)
    net.emplace_back(std::llround(x * den), den);
  return ammel_core(amb, sigma, net, R, net_delta, n_max, false);
}

std::vector<AffineElement<Rational>> ammel_sigma_from_nets(double R, double net_delta) {
  // The dyadic rows a = 2^k reach only |ln a| <= kmax ln 2, so the greedy
  // spacing has to absorb the vertical gap to the ball boundary:
  //   d(g, Y) <= (R - kmax ln 2) + row quantization + spacing  <  R/2 - delta.
  struct Cand {
    Rational a, b;
    double da, db;
  };
  const int kmax = static_cast<int>(std::floor(R / std::log(2.0)));
  const double gap_v = std::max(R - kmax * std::log(2.0), std::log(2.0) / 2);
  const double spacing = (R / 2 - 2 * net_delta - gap_v - 0.05) / 1.3;

  auto make_candidates = [&](long denom, long parity) {
    std::vector<Cand> cands;
    for (int k = -kmax; k <= kmax; ++k) {
      Rational a = k >= 0 ? Rational(pow_int(BigInt(2), static_cast<unsigned long>(k)))
                          : Rational(1, pow_int(BigInt(2), static_cast<unsigned long>(-k)));
      double da = to_double(a);
      double reach = 2.0 * da * (std::cosh(R - net_delta) - 1.0) - (da - 1.0) * (da - 1.0);
      if (reach < 0) continue;
      double bmax = std::sqrt(reach);
      double step = da * spacing / 4.0;
      long lstep = std::max(2L, 2 * static_cast<long>(std::floor(step * denom / 2)));
      for (long m = static_cast<long>(std::ceil(-bmax * denom)) / lstep * lstep - lstep;
           m <= static_cast<long>(std::floor(bmax * denom)); m += lstep) {
        Rational b(m + parity, denom);
        Cand c{a, b, da, to_double(b)};
        if (hyperbolic_dist(1, 0, c.da, c.db) <= R - net_delta) cands.push_back(std::move(c));
      }
    }
    return cands;
  };

  auto greedy = [&](const std::vector<Cand>& cands) {
    std::vector<Cand> picked;
    for (const Cand& c : cands) {
      bool ok = true;
      for (const auto& q : picked)
        if (hyperbolic_dist(q.da, q.db, c.da, c.db) < spacing) {
          ok = false;
          break;
        }
      if (ok) picked.push_back(c);
    }
    return picked;
  };

  // disjoint candidate grids (even vs odd numerators) keep Y and Z disjoint
  auto Y = greedy(make_candidates(64, 0));
  auto Z = greedy(make_candidates(64, 1));
  std::vector<AffineElement<Rational>> sigma;
  auto add_inverse = [&](const Cand& c) {
    sigma.push_back({1 / c.a, -c.b / c.a});
  };
  for (const auto& c : Y) add_inverse(c);
  for (const auto& c : Z) add_inverse(c);
  return sigma;
}

}  // namespace freecert
