#ifndef FREECERT_DYNAMICS_HPP
#define FREECERT_DYNAMICS_HPP

#include <optional>
#include <sstream>
#include <vector>

#include "freecert/cartan.hpp"
#include "freecert/config.hpp"
#include "freecert/projective.hpp"

namespace freecert {

inline CertConstants default_constants(const FieldDescriptor& f) {
  return f.archimedean() ? CertConstants::archimedean_defaults()
                         : CertConstants::padic_defaults(f.p);
}

inline double field_fp_tolerance(const FieldDescriptor& f, const Tolerances& tol) {
  if (f.archimedean()) return tol.fp_tol();
  return std::pow(static_cast<double>(f.p), -(f.precision - 2));
}

// eps-contraction data from the Cartan decomposition: eps = sqrt(|a2/a1|)
// (widened), attracting point [k1 e1], repelling hyperplane ker(e1^T k2).
template <typename K>
struct ContractionData {
  double epsilon = 1.0;
  double ratio_lower = 1.0;
  ProjectivePoint<K> v_g;
  ProjectiveHyperplane<K> H_g;

  double lipschitz_outside(double r) const { return (epsilon * epsilon) / (r * r); }
};

// (r, eps)-proximality with the fixed attracting point / repelling
// hyperplane of Lemma-"fix" type, plus the residuals and constants needed to
// recheck the certificate from its serialized form alone.
template <typename K>
struct ProximalityCertificate {
  double r = 0;
  double epsilon = 1;
  ProjectivePoint<K> v_bar;
  ProjectiveHyperplane<K> H_bar;
  double fixed_point_residual = 0;
  double hyperplane_residual = 0;
  double attractor_drift = 0;  // d(v_g, v_bar), paper bound: <= eps
  CertConstants constants;
  int power = 1;
};

template <typename K>
struct VeryProximalPair {
  ProximalityCertificate<K> fwd;
  ProximalityCertificate<K> bwd;
  double r = 0;        // min of the two
  double epsilon = 1;  // max of the two
};

template <typename K>
Outcome<ContractionData<K>> contraction_data(const Matrix<K>& g) {
  if (g.n < 2) throw DimensionMismatch("contraction needs n >= 2");
  auto kak = cartan(g);
  double ratio = kak.abs_a(0) / kak.abs_a(1);
  if constexpr (ScalarTraits<K>::archimedean) ratio *= (1.0 - 16.0 * g.field.eta);
  if (ratio <= 1.0)
    return Refusal{Why::NotContracting, "singular ratio is 1 within margin"};
  double eps = std::sqrt(1.0 / ratio);
  if constexpr (ScalarTraits<K>::archimedean) eps = widen_up(eps, 16.0 * g.field.eta);
  if (eps >= 1.0) return Refusal{Why::NotContracting, "contraction coefficient >= 1"};

  ContractionData<K> d;
  d.epsilon = eps;
  d.ratio_lower = ratio;
  Vec<K> col(static_cast<std::size_t>(g.n), ScalarTraits<K>::zero(g.field));
  for (int i = 0; i < g.n; ++i) col[static_cast<std::size_t>(i)] = kak.k1.at(i, 0);
  d.v_g = ProjectivePoint<K>(g.field, std::move(col));
  Vec<K> row(static_cast<std::size_t>(g.n), ScalarTraits<K>::zero(g.field));
  for (int j = 0; j < g.n; ++j) row[static_cast<std::size_t>(j)] = kak.k2.at(0, j);
  d.H_g = ProjectiveHyperplane<K>(g.field, std::move(row));
  return d;
}

struct VerificationReport {
  int samples = 0;
  double epsilon = 0;
  double max_image_distance = 0;
  // (r, max observed Lipschitz quotient outside the r-neighborhood of H_g)
  std::vector<std::pair<double, double>> lipschitz;
};

// Samples points outside the eps-neighborhood of H and asserts every image
// lands inside the eps-ball around v. Also measures Lipschitz quotients
// outside the r-neighborhood for each requested r.
template <typename K>
Outcome<VerificationReport> verify_contraction_at(
    const Matrix<K>& g, const ProjectivePoint<K>& v, const ProjectiveHyperplane<K>& H,
    double eps, int samples, std::uint64_t seed,
    const std::vector<double>& lipschitz_grid = {0.1, 0.3, 0.5}) {
  VerificationReport rep;
  rep.samples = samples;
  rep.epsilon = eps;
  double tol = g.field.archimedean()
                   ? widen_up(eps, 64.0 * g.field.eta)
                   : eps;  // p-adic distances are exact p-powers
  std::vector<double> lip_max(lipschitz_grid.size(), 0.0);

  std::optional<ProjectivePoint<K>> prev;
  std::optional<ProjectivePoint<K>> prev_img;
  SplitMix64 rng = substream(seed, 0xd1e5);
  int accepted = 0;
  long attempts = 0;
  const long max_attempts = 400L * samples + 1000;
  while (accepted < samples && ++attempts < max_attempts) {
    auto p = sample_point<K>(g.field, g.n, rng);
    if (distance_to_hyperplane(p, H) <= eps) continue;
    ++accepted;
    auto img = act(g, p);
    double di = distance(img, v);
    rep.max_image_distance = std::max(rep.max_image_distance, di);
    if (di > tol) {
      std::ostringstream os;
      os << "witness point at hyperplane distance " << distance_to_hyperplane(p, H)
         << " maps to distance " << di << " > " << tol;
      return Refusal{Why::VerificationFailed, os.str()};
    }
    if (prev) {
      double dxy = distance(*prev, p);
      if (dxy > 1e-9) {
        double q = distance(*prev_img, img) / dxy;
        for (std::size_t k = 0; k < lipschitz_grid.size(); ++k) {
          double r = lipschitz_grid[k];
          if (distance_to_hyperplane(p, H) > r && distance_to_hyperplane(*prev, H) > r)
            lip_max[k] = std::max(lip_max[k], q);
        }
      }
    }
    prev = p;
    prev_img = img;
  }
  if (accepted < samples)
    return Refusal{Why::VerificationFailed,
                   "sampling outside the eps-neighborhood kept rejecting (eps too large?)"};
  for (std::size_t k = 0; k < lipschitz_grid.size(); ++k)
    rep.lipschitz.emplace_back(lipschitz_grid[k], lip_max[k]);
  return rep;
}

template <typename K>
Outcome<VerificationReport> verify_contraction(const Matrix<K>& g, const ContractionData<K>& d,
                                               int samples, std::uint64_t seed = 2024) {
  return verify_contraction_at(g, d.v_g, d.H_g, d.epsilon, samples, seed);
}

namespace detail {

// fixed point of the projective action by iteration; geometric convergence
// in the proximal regime
template <typename K>
Outcome<ProjectivePoint<K>> iterate_fixed_point(const Matrix<K>& g, ProjectivePoint<K> p,
                                                double tol, int budget) {
  for (int it = 0; it < budget; ++it) {
    auto next = act(g, p);
    double moved = distance(next, p);
    p = next;
    if (moved <= tol) return p;
  }
  return Refusal{Why::NoConvergence, "fixed-point iteration budget exhausted"};
}

}  // namespace detail

template <typename K>
Outcome<ProximalityCertificate<K>> proximality(const Matrix<K>& g,
                                               const CertConstants* constants = nullptr,
                                               const Tolerances& tols = {}) {
  auto cd = contraction_data(g);
  if (!cd)
    return Refusal{Why::NotProximal, std::string("not contracting: ") + cd.refusal().detail};
  const ContractionData<K>& d = cd.value();
  CertConstants cc = constants ? *constants : default_constants(g.field);

  double r0 = distance_to_hyperplane_lower(d.v_g, d.H_g);
  if (r0 < cc.c1 * d.epsilon) {
    std::ostringstream os;
    os << "r0 = " << r0 << " < c1*eps = " << cc.c1 * d.epsilon;
    return Refusal{Why::NotProximal, os.str()};
  }

  double tol = field_fp_tolerance(g.field, tols);
  auto vb = detail::iterate_fixed_point(g, d.v_g, tol, tols.fixed_point_budget);
  if (!vb) return vb.refusal();
  auto gt = g.transpose();
  auto fb = detail::iterate_fixed_point(gt, ProjectivePoint<K>(g.field, d.H_g.f), tol,
                                        tols.fixed_point_budget);
  if (!fb) return Refusal{Why::NoConvergence, "repelling hyperplane iteration did not settle"};

  ProximalityCertificate<K> cert;
  cert.r = r0;
  cert.epsilon = d.epsilon;
  cert.v_bar = std::move(vb).take();
  cert.H_bar = ProjectiveHyperplane<K>(g.field, std::move(fb).take().v);
  cert.constants = cc;
  cert.fixed_point_residual = distance(act(g, cert.v_bar), cert.v_bar);
  cert.hyperplane_residual =
      hausdorff_distance(act_hyperplane(inverse(g), cert.H_bar), cert.H_bar);
  cert.attractor_drift = distance(cert.v_bar, d.v_g);

  double slack = g.field.archimedean() ? 64.0 * g.field.eta : 0.0;
  if (cert.attractor_drift > d.epsilon + slack)
    return Refusal{Why::NoConvergence, "fixed point drifted outside the attracting ball"};
  if (distance_to_hyperplane_lower(cert.v_bar, cert.H_bar) < cert.r - 2 * cert.epsilon - slack)
    return Refusal{Why::NoConvergence, "fixed data violates d(v_bar, H_bar) >= r - 2 eps"};
  return cert;
}

// Certificate for g^n: same fixed data, parameters (r - 2 eps, (c2 eps)^{n/3}).
template <typename K>
Outcome<ProximalityCertificate<K>> power_proximality(const ProximalityCertificate<K>& cert,
                                                     int n) {
  if (n < 1) throw std::invalid_argument("power_proximality: n >= 1");
  const double eps = cert.epsilon;
  const double c1 = cert.constants.c1, c2 = cert.constants.c2;
  if (cert.r < c1 * std::pow(eps, 2.0 / 3.0)) {
    std::ostringstream os;
    os << "r = " << cert.r << " below the c1*eps^(2/3) = " << c1 * std::pow(eps, 2.0 / 3.0)
       << " power regime";
    return Refusal{Why::RegimeViolation, os.str()};
  }
  double r_n = cert.r - 2 * eps;
  double eps_n = std::pow(c2 * eps, n / 3.0);
  if (!(r_n > 2 * eps_n)) {
    std::ostringstream os;
    os << "claimed parameters (" << r_n << ", " << eps_n << ") are not proximal at power " << n;
    return Refusal{Why::RegimeViolation, os.str()};
  }
  ProximalityCertificate<K> out = cert;
  out.r = r_n;
  out.epsilon = eps_n;
  out.power = n;
  return out;
}

template <typename K>
Outcome<VeryProximalPair<K>> very_proximal(const Matrix<K>& g,
                                           const CertConstants* constants = nullptr,
                                           const Tolerances& tols = {}) {
  auto fwd = proximality(g, constants, tols);
  if (!fwd)
    return Refusal{fwd.why(), std::string("forward: ") + fwd.refusal().detail};
  auto bwd = proximality(inverse(g), constants, tols);
  if (!bwd)
    return Refusal{bwd.why(), std::string("inverse: ") + bwd.refusal().detail};
  VeryProximalPair<K> pair{std::move(fwd).take(), std::move(bwd).take(), 0, 0};
  pair.r = std::min(pair.fwd.r, pair.bwd.r);
  pair.epsilon = std::max(pair.fwd.epsilon, pair.bwd.epsilon);
  if (!(pair.r > 2 * pair.epsilon))
    return Refusal{Why::NotProximal, "combined parameters fail r > 2 eps"};
  return pair;
}

}  // namespace freecert

#endif  // FREECERT_DYNAMICS_HPP
