#include "freecert/polya.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "freecert/rng.hpp"

namespace freecert {

void MonicPolynomial::validate() const {
  if (coeffs.size() < 2) throw std::invalid_argument("monic polynomial needs degree >= 1");
  if (coeffs.back() != 1) throw std::invalid_argument("leading coefficient must be 1");
  if (!imag.empty() && imag.size() != coeffs.size())
    throw std::invalid_argument("imaginary coefficient list length mismatch");
  if (!imag.empty() && imag.back() != 0)
    throw std::invalid_argument("leading coefficient must be exactly 1");
}

std::complex<double> MonicPolynomial::eval(const std::complex<double>& x) const {
  std::complex<double> acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    std::complex<double> c(to_double(coeffs[k]), imag.empty() ? 0.0 : to_double(imag[k]));
    acc = acc * x + c;
  }
  return acc;
}

Rational MonicPolynomial::eval_exact(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

// --- rational polynomial helpers ---------------------------------------------

namespace {

using RPoly = std::vector<Rational>;  // coeffs[k] * X^k, normalized: back() != 0

void rp_trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int rp_deg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational rp_eval(const RPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

RPoly rp_derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<int>(k)));
  rp_trim(d);
  return d;
}

// remainder of a by b; b nonzero
RPoly rp_rem(RPoly a, const RPoly& b) {
  rp_trim(a);
  while (rp_deg(a) >= rp_deg(b) && !a.empty()) {
    Rational f = a.back() / b.back();
    int shift = rp_deg(a) - rp_deg(b);
    for (std::size_t k = 0; k < b.size(); ++k)
      a[static_cast<std::size_t>(shift) + k] -= f * b[k];
    rp_trim(a);
  }
  return a;
}

// rescale so the largest |coefficient| is 1 (positive factor: sign pattern
// preserved; keeps Sturm chains from blowing up)
void rp_normalize(RPoly& p) {
  Rational m = 0;
  for (const auto& c : p) m = std::max(m, abs_rat(c));
  if (m == 0) return;
  for (auto& c : p) c /= m;
}

RPoly rp_gcd(RPoly a, RPoly b) {
  rp_trim(a);
  rp_trim(b);
  while (!b.empty()) {
    RPoly r = rp_rem(a, b);
    rp_normalize(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RPoly rp_divide_exact(const RPoly& a, const RPoly& b) {
  RPoly q(a.size(), Rational(0));
  RPoly rem = a;
  rp_trim(rem);
  while (rp_deg(rem) >= rp_deg(b) && !rem.empty()) {
    Rational f = rem.back() / b.back();
    int shift = rp_deg(rem) - rp_deg(b);
    q[static_cast<std::size_t>(shift)] = f;
    for (std::size_t k = 0; k < b.size(); ++k)
      rem[static_cast<std::size_t>(shift) + k] -= f * b[k];
    rp_trim(rem);
  }
  rp_trim(q);
  return q;
}

struct SturmChain {
  std::vector<RPoly> seq;

  explicit SturmChain(const RPoly& p) {
    RPoly a = p;
    rp_normalize(a);
    RPoly b = rp_derivative(a);
    rp_normalize(b);
    seq.push_back(a);
    if (!b.empty()) seq.push_back(b);
    while (seq.back().size() > 1) {
      RPoly r = rp_rem(seq[seq.size() - 2], seq.back());
      for (auto& c : r) c = -c;
      rp_normalize(r);
      rp_trim(r);
      if (r.empty()) break;
      seq.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq) {
      Rational val = rp_eval(p, x);
      int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // number of roots in (a, b]
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

// isolating intervals (a, b] for every real root of p, refined to width
struct RootIsolation {
  std::vector<std::pair<Rational, Rational>> roots;
};

Outcome<RootIsolation> isolate_real_roots(const RPoly& poly, const Rational& width) {
  RPoly p = poly;
  rp_trim(p);
  if (p.size() <= 1) return RootIsolation{};
  // square-free part
  RPoly g = rp_gcd(p, rp_derivative(p));
  RPoly sf = rp_deg(g) > 0 ? rp_divide_exact(p, g) : p;
  rp_normalize(sf);
  SturmChain chain(sf);

  // Cauchy bound
  Rational m = 0;
  for (std::size_t k = 0; k + 1 < sf.size(); ++k) m = std::max(m, abs_rat(sf[k]));
  Rational B = 1 + m / abs_rat(sf.back());

  RootIsolation iso;
  struct Node {
    Rational a, b;
    int count;
  };
  std::vector<Node> stack{{-B, B, chain.count(-B, B)}};
  long steps = 0;
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    if (++steps > 200000)
      return Refusal{Why::RootIsolationFailure, "root isolation exceeded its bisection budget"};
    if (nd.count == 0) continue;
    if (nd.count == 1 && nd.b - nd.a <= width) {
      iso.roots.emplace_back(nd.a, nd.b);
      continue;
    }
    Rational mid = (nd.a + nd.b) / 2;
    if (nd.count == 1) {
      // refine by sign bisection on the square-free polynomial
      Rational lo = nd.a, hi = nd.b;
      Rational flo = rp_eval(sf, lo);
      while (hi - lo > width) {
        Rational c = (lo + hi) / 2;
        Rational fc = rp_eval(sf, c);
        if (fc == 0) {
          lo = c - width / 4;
          hi = c + width / 4;
          break;
        }
        if ((flo > 0) == (fc > 0)) {
          lo = c;
          flo = fc;
        } else {
          hi = c;
        }
      }
      iso.roots.emplace_back(lo, hi);
      continue;
    }
    int left = chain.count(nd.a, mid);
    stack.push_back({nd.a, mid, left});
    stack.push_back({mid, nd.b, nd.count - left});
  }
  std::sort(iso.roots.begin(), iso.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return iso;
}

// --- real measure: exact interval decomposition -------------------------------

Outcome<MeasureEstimate> measure_real(const MonicPolynomial& P, const MeasureBudget& budget) {
  RPoly pm1 = P.coeffs, pp1 = P.coeffs;
  pm1[0] -= 1;  // P - 1
  pp1[0] += 1;  // P + 1
  Rational width(1, 1);
  width /= BigInt(static_cast<long long>(1.0 / budget.root_width));
  auto r1 = isolate_real_roots(pm1, width);
  if (!r1) return r1.refusal();
  auto r2 = isolate_real_roots(pp1, width);
  if (!r2) return r2.refusal();

  // boundary points of {P in [-1, 1]}, then midpoint membership, exactly
  std::vector<std::pair<Rational, Rational>> bounds = r1.value().roots;
  bounds.insert(bounds.end(), r2.value().roots.begin(), r2.value().roots.end());
  std::sort(bounds.begin(), bounds.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  MeasureEstimate est;
  est.method = "RootIntervals";
  if (bounds.empty()) {
    // monic polynomials exceed 1 eventually; no boundary points means the
    // sign of |P| - 1 is constant, so test one point
    Rational v = P.eval_exact(Rational(0));
    bool inside = abs_rat(v) <= 1;
    est.value = est.lo = est.hi = 0;
    est.exact = true;
    if (inside)
      return Refusal{Why::RootIsolationFailure,
                     "no boundary roots but a point satisfies |P| <= 1 (unbounded set?)"};
    return est;
  }

  Rational measure = 0;
  Rational slack = 0;
  Rational prev_hi = bounds.front().second;
  Rational run_start = 0;
  bool in_run = false;
  // before the first boundary point |P| > 1 (monic at -infinity)
  for (std::size_t i = 0; i + 1 <= bounds.size(); ++i) {
    slack += bounds[i].second - bounds[i].first;
  }
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Rational mid = (bounds[i].second + bounds[i + 1].first) / 2;
    Rational v = P.eval_exact(mid);
    bool inside = abs_rat(v) <= 1;
    if (inside && !in_run) {
      run_start = bounds[i].second;
      in_run = true;
    } else if (!inside && in_run) {
      measure += bounds[i].first - run_start;
      in_run = false;
    }
  }
  if (in_run) measure += bounds.back().first - run_start;

  est.value = to_double(measure + slack / 2);
  est.lo = to_double(measure);
  est.hi = to_double(measure + slack);
  est.exact = to_double(slack) < 1e-9;
  return est;
}

// --- complex measure: Monte Carlo over a certified bounding disc ---------------

double fujiwara_radius(const MonicPolynomial& P) {
  const int d = P.degree();
  double r = 0;
  for (int k = 1; k <= d; ++k) {
    double c = std::abs(to_double(P.coeffs[static_cast<std::size_t>(d - k)]));
    if (!P.imag.empty()) {
      double ci = std::abs(to_double(P.imag[static_cast<std::size_t>(d - k)]));
      c = std::hypot(c, ci);
    }
    if (k == d) c /= 2;
    r = std::max(r, 2.0 * std::pow(c, 1.0 / k));
  }
  return r;
}

MeasureEstimate measure_complex(const MonicPolynomial& P, const MeasureBudget& budget) {
  double R0 = 1.0 + std::max(1.0, 2.0 * fujiwara_radius(P));
  double area = M_PI * R0 * R0;
  SplitMix64 rng = substream(budget.seed, 0xc0);
  long hits = 0;
  for (long i = 0; i < budget.mc_samples; ++i) {
    double x, y;
    do {
      x = rng.uniform(-1.0, 1.0);
      y = rng.uniform(-1.0, 1.0);
    } while (x * x + y * y > 1.0);
    std::complex<double> z(R0 * x, R0 * y);
    if (std::abs(P.eval(z)) <= 1.0) ++hits;
  }
  double f = static_cast<double>(hits) / static_cast<double>(budget.mc_samples);
  double half = 1.96 * std::sqrt(std::max(f * (1 - f), 1e-12) /
                                 static_cast<double>(budget.mc_samples));
  MeasureEstimate est;
  est.method = "MonteCarlo(" + std::to_string(budget.mc_samples) + ", 95%)";
  est.value = f * area;
  est.lo = std::max(0.0, (f - half) * area);
  est.hi = (f + half) * area;
  return est;
}

// --- p-adic measure: exact residue tree ---------------------------------------

struct PadicTreeStats {
  Rational included = 0;
  Rational unresolved = 0;
  long nodes = 0;
};

// Taylor coefficients of p at c, by repeated synthetic division
RPoly taylor_shift(const RPoly& p, const Rational& c) {
  const int d = rp_deg(p);
  RPoly work = p;
  RPoly out(static_cast<std::size_t>(d) + 1, Rational(0));
  for (int m = 0; m <= d; ++m) {
    int wd = d - m;
    if (wd == 0) {
      out[static_cast<std::size_t>(m)] = work[0];
      break;
    }
    RPoly quot(static_cast<std::size_t>(wd), Rational(0));
    quot[static_cast<std::size_t>(wd - 1)] = work[static_cast<std::size_t>(wd)];
    for (int k = wd - 1; k >= 1; --k)
      quot[static_cast<std::size_t>(k - 1)] =
          work[static_cast<std::size_t>(k)] + c * quot[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(m)] = work[0] + c * quot[0];
    work = std::move(quot);
  }
  return out;
}

// restriction of P to the ball c + p^j Z_p as a polynomial in t
RPoly restrict_to_ball(const RPoly& p, const Rational& c, const BigInt& prime, int j) {
  RPoly shifted = taylor_shift(p, c);
  Rational pj = 1;
  Rational pr(prime);
  for (int i = 0; i < j; ++i) pj *= pr;
  for (int i = 0; i < -j; ++i) pj /= pr;
  Rational f = 1;
  for (std::size_t m = 0; m < shifted.size(); ++m) {
    shifted[m] *= f;
    f *= pj;
  }
  return shifted;
}

void padic_tree(const RPoly& p, const Rational& center, int level, const BigInt& prime,
                int depth_left, PadicTreeStats& stats, const Rational& ball_measure) {
  ++stats.nodes;
  RPoly q = restrict_to_ball(p, center, prime, level);
  long v0 = q[0] == 0 ? std::numeric_limits<long>::max() : padic_valuation(q[0], prime);
  long vmin_all = v0;
  long vmin_rest = std::numeric_limits<long>::max();
  for (std::size_t m = 1; m < q.size(); ++m) {
    if (q[m] == 0) continue;
    long v = padic_valuation(q[m], prime);
    vmin_rest = std::min(vmin_rest, v);
    vmin_all = std::min(vmin_all, v);
  }
  if (vmin_all >= 0) {  // |P| <= 1 on the whole ball
    stats.included += ball_measure;
    return;
  }
  if (v0 < vmin_rest) {  // |P| = p^{-v0} > 1 constant on the ball
    return;
  }
  if (depth_left == 0) {
    stats.unresolved += ball_measure;
    return;
  }
  Rational child_measure = ball_measure / Rational(prime);
  for (long r = 0; r < prime; ++r) {
    Rational child_center = center;
    Rational pj = 1;
    Rational pr(prime);
    if (level >= 0)
      for (int i = 0; i < level; ++i) pj *= pr;
    else
      for (int i = 0; i < -level; ++i) pj /= pr;
    child_center += Rational(r) * pj;
    padic_tree(p, child_center, level + 1, prime, depth_left - 1, stats, child_measure);
  }
}

MeasureEstimate measure_padic(const MonicPolynomial& P, const MeasureBudget& budget) {
  const BigInt prime(P.field.p);
  const int d = P.degree();
  // A_P lies inside |x| <= p^K
  long K = 0;
  for (int i = 0; i < d; ++i) {
    const Rational& c = P.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    long v = padic_valuation(c, prime);
    if (v < 0) K = std::max(K, (-v + (d - i) - 1) / (d - i));
  }
  K += 1;
  Rational top_measure = Rational(pow_int(prime, static_cast<unsigned long>(K)));
  PadicTreeStats stats;
  padic_tree(P.coeffs, Rational(0), static_cast<int>(-K), prime,
             budget.residue_depth + static_cast<int>(K), stats, top_measure);

  MeasureEstimate est;
  est.method = "ResidueTree(" + std::to_string(budget.residue_depth) + ")";
  est.lo = to_double(stats.included);
  est.hi = to_double(stats.included + stats.unresolved);
  est.value = to_double(stats.included + stats.unresolved / 2);
  est.exact = stats.unresolved == 0;
  return est;
}

}  // namespace

Outcome<MeasureEstimate> measure_AP(const MonicPolynomial& P, const MeasureBudget& budget) {
  P.validate();
  switch (P.field.kind) {
    case FieldKind::Real: return measure_real(P, budget);
    case FieldKind::Complex: return measure_complex(P, budget);
    case FieldKind::Padic: return measure_padic(P, budget);
  }
  return Refusal{Why::InputError, "unknown field"};
}

double polya_constant(const FieldDescriptor& field) {
  switch (field.kind) {
    case FieldKind::Real: return 2.0 * std::exp(1.0);
    case FieldKind::Complex: return M_PI * std::exp(1.0);
    case FieldKind::Padic: return 1.0 + 1.0 / (static_cast<double>(field.p) - 1.0);
  }
  return 0;
}

Outcome<BoundReport> check_bound(const MonicPolynomial& P, const MeasureBudget& budget) {
  auto est = measure_AP(P, budget);
  if (!est) return est.refusal();
  BoundReport rep;
  rep.estimate = std::move(est).take();
  rep.bound = polya_constant(P.field);
  rep.best_bound = P.field.kind == FieldKind::Real ? 4.0 : rep.bound;
  rep.pass = rep.estimate.hi <= rep.bound;
  return rep;
}

double c1_constant(const FieldDescriptor& field) {
  switch (field.kind) {
    case FieldKind::Real: {
      // solve c (ln(c/2) - 1) = 1
      double lo = 2 * std::exp(1.0), hi = 16;
      for (int i = 0; i < 200; ++i) {
        double c = (lo + hi) / 2;
        (c * (std::log(c / 2) - 1) < 1 ? lo : hi) = c;
      }
      return hi;
    }
    case FieldKind::Complex: {
      // mu = pi t^2; solve pi t^2 (ln t - 1/2) = 1
      double lo = std::exp(0.5), hi = 8;
      for (int i = 0; i < 200; ++i) {
        double t = (lo + hi) / 2;
        (M_PI * t * t * (std::log(t) - 0.5) < 1 ? lo : hi) = t;
      }
      return M_PI * hi * hi;
    }
    case FieldKind::Padic: {
      double p = static_cast<double>(field.p);
      for (long j = 1;; ++j) {
        double integral = std::pow(p, j) * std::log(p) * (j - 1.0 / (p - 1.0));
        if (integral >= 1.0) return std::pow(p, j);
      }
    }
  }
  return 0;
}

// --- log integrals -------------------------------------------------------------

std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coeffs) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i)
    companion(i, d - 1) = -to_double(coeffs[static_cast<std::size_t>(i)]) /
                          to_double(coeffs.back());
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
  // one Newton polish pass
  for (auto& z : roots) {
    for (int it = 0; it < 3; ++it) {
      std::complex<double> f = 0, fp = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        fp = fp * z + f;
        f = f * z + to_double(coeffs[k]);
      }
      if (std::abs(fp) < 1e-300) break;
      z -= f / fp;
    }
  }
  return roots;
}

namespace {

// antiderivative of (1/2) ln((x-a)^2 + b^2)
double log_abs_antiderivative(double x, double a, double b) {
  double u = x - a;
  double q = u * u + b * b;
  double val = 0;
  if (q > 0) val += 0.5 * u * std::log(q);
  val -= u;
  if (std::abs(b) > 1e-300) val += b * std::atan(u / b);
  return val;
}

}  // namespace

LogIntegral log_integral(const MonicPolynomial& P, const RealSetDescriptor& B) {
  auto roots = polynomial_roots(P.coeffs);
  LogIntegral out;
  for (const auto& [lo, hi] : B.intervals) {
    for (const auto& z : roots) {
      out.value += log_abs_antiderivative(hi, z.real(), z.imag()) -
                   log_abs_antiderivative(lo, z.real(), z.imag());
    }
  }
  // root perturbation sensitivity estimate
  double len = 0;
  for (const auto& [lo, hi] : B.intervals) len += hi - lo;
  out.error = 1e-9 * (1.0 + std::abs(out.value)) * P.degree() + 1e-12 * len;
  return out;
}

LogIntegral log_integral(const MonicPolynomial& P, const ComplexSetDescriptor& B, long samples,
                         std::uint64_t seed) {
  LogIntegral out;
  double total_area = 0;
  for (const auto& [c, r] : B.discs) total_area += M_PI * r * r;
  SplitMix64 rng = substream(seed, 0x10);
  double sum = 0, sumsq = 0;
  long used = 0;
  for (long i = 0; i < samples; ++i) {
    // pick a disc proportionally to area, then a uniform point in it
    double pick = rng.uniform(0, total_area);
    std::complex<double> center = B.discs.front().first;
    double radius = B.discs.front().second;
    for (const auto& [c, r] : B.discs) {
      double a = M_PI * r * r;
      if (pick <= a) {
        center = c;
        radius = r;
        break;
      }
      pick -= a;
    }
    double x, y;
    do {
      x = rng.uniform(-1, 1);
      y = rng.uniform(-1, 1);
    } while (x * x + y * y > 1);
    std::complex<double> z = center + std::complex<double>(radius * x, radius * y);
    double v = std::log(std::abs(P.eval(z)));
    if (!std::isfinite(v)) continue;  // measure-zero root hits
    sum += v;
    sumsq += v * v;
    ++used;
  }
  double mean = sum / static_cast<double>(used);
  double var = sumsq / static_cast<double>(used) - mean * mean;
  out.value = mean * total_area;
  out.error = 1.96 * std::sqrt(std::max(var, 0.0) / static_cast<double>(used)) * total_area;
  return out;
}

namespace {

struct PadicLogStats {
  double value = 0;
  double error = 0;
  bool budget_hit = false;
};

void padic_log_tree(const RPoly& p, const Rational& center, int level, const BigInt& prime,
                    int depth_left, PadicLogStats& stats, const Rational& ball_measure) {
  RPoly q = restrict_to_ball(p, center, prime, level);
  const double logp = std::log(prime.convert_to<double>());
  long v0 = q[0] == 0 ? std::numeric_limits<long>::max() : padic_valuation(q[0], prime);
  long vmin_rest = std::numeric_limits<long>::max();
  for (std::size_t m = 1; m < q.size(); ++m) {
    if (q[m] == 0) continue;
    vmin_rest = std::min(vmin_rest, padic_valuation(q[m], prime));
  }
  if (v0 < vmin_rest) {  // |P| constant p^{-v0} on the ball
    stats.value += to_double(ball_measure) * (-static_cast<double>(v0)) * logp;
    return;
  }
  if (depth_left == 0) {
    // bracket: |P| <= p^{-vmin}; and |Q(t)| >= |lead| prod |t - z| gives the
    // lower tail bound deg * (-log p/(p-1)) + log|lead|
    long vmin_all = std::min(v0, vmin_rest);
    double upper = to_double(ball_measure) * (-static_cast<double>(vmin_all)) * logp;
    long vlead = padic_valuation(q.back(), prime);
    double lower = to_double(ball_measure) *
                   (-static_cast<double>(vlead) * logp -
                    static_cast<double>(rp_deg(q)) * logp /
                        (prime.convert_to<double>() - 1.0));
    lower = std::min(lower, upper);
    stats.value += (upper + lower) / 2;
    stats.error += (upper - lower) / 2;
    stats.budget_hit = true;
    return;
  }
  Rational child_measure = ball_measure / Rational(prime);
  Rational pj = 1;
  Rational pr(prime);
  if (level >= 0)
    for (int i = 0; i < level; ++i) pj *= pr;
  else
    for (int i = 0; i < -level; ++i) pj /= pr;
  for (long r = 0; r < prime; ++r)
    padic_log_tree(p, center + Rational(r) * pj, level + 1, prime, depth_left - 1, stats,
                   child_measure);
}

}  // namespace

LogIntegral log_integral(const MonicPolynomial& P, const PadicSetDescriptor& B, int depth) {
  const BigInt prime(P.field.p);
  PadicLogStats stats;
  for (const auto& [c, j] : B.branches) {
    Rational measure = 1;
    Rational pr(prime);
    if (j >= 0)
      for (int i = 0; i < j; ++i) measure /= pr;
    else
      for (int i = 0; i < -j; ++i) measure *= pr;
    padic_log_tree(P.coeffs, c, j, prime, depth, stats, measure);
  }
  LogIntegral out;
  out.value = stats.value;
  out.error = stats.error;
  out.singular_budget_hit = stats.budget_hit;
  return out;
}

MonicPolynomial chebyshev_extremal_fixture(int degree) {
  // monic Chebyshev on [-2, 2]: T~_{n+1} = x T~_n - T~_{n-1}
  std::vector<std::vector<Rational>> T(static_cast<std::size_t>(degree) + 1);
  T[0] = {Rational(2)};
  T[1] = {Rational(0), Rational(1)};
  for (int n = 2; n <= degree; ++n) {
    std::vector<Rational> next(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::size_t k = 0; k < T[static_cast<std::size_t>(n - 1)].size(); ++k)
      next[k + 1] += T[static_cast<std::size_t>(n - 1)][k];
    for (std::size_t k = 0; k < T[static_cast<std::size_t>(n - 2)].size(); ++k)
      next[k] -= T[static_cast<std::size_t>(n - 2)][k];
    T[static_cast<std::size_t>(n)] = std::move(next);
  }
  // dyadic approximation of s = 2^{-1/d}
  double s = std::pow(2.0, -1.0 / degree);
  const long long den = 1LL << 40;
  Rational sq(static_cast<long long>(std::llround(s * static_cast<double>(den))), den);

  MonicPolynomial P;
  P.field = FieldDescriptor::real();
  P.coeffs.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  Rational power = 1;  // s^{d-k}; fill from k = d downward
  for (int k = degree; k >= 0; --k) {
    P.coeffs[static_cast<std::size_t>(k)] = T[static_cast<std::size_t>(degree)][static_cast<std::size_t>(k)] * power;
    power *= sq;
  }
  P.coeffs.back() = 1;  // exact monic
  return P;
}

}  // namespace freecert
