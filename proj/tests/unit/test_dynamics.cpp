#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecert/dynamics.hpp"

using namespace freecert;

namespace {

const FieldDescriptor kReal = FieldDescriptor::real();

RealMatrix real_mat(int n, std::initializer_list<double> entries) {
  RealMatrix m(kReal, n);
  std::copy(entries.begin(), entries.end(), m.a.begin());
  return m;
}

RealMatrix rotation2(double theta) {
  return real_mat(2, {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)});
}

RealMatrix diag2(double a, double b) { return real_mat(2, {a, 0, 0, b}); }

PadicMatrix padic_diag(long p, int N, std::initializer_list<Rational> diag) {
  PadicMatrix m(FieldDescriptor::padic(p, N), static_cast<int>(diag.size()));
  int i = 0;
  for (const auto& q : diag) {
    m.at(i, i) = PadicScalar::from_rational(q, p, N);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("contraction data of a strong diagonal") {
  auto cd = contraction_data(real_mat(2, {1e4, 0, 0, 1}));
  REQUIRE(cd.ok());
  CHECK(cd.value().epsilon == doctest::Approx(1e-2).epsilon(1e-6));
  CHECK(distance(cd.value().v_g, ProjectivePoint<double>(kReal, {1, 0})) < 1e-9);
  CHECK(distance_to_hyperplane(ProjectivePoint<double>(kReal, {1, 0}), cd.value().H_g) ==
        doctest::Approx(1.0));
}

TEST_CASE("rotations are not contracting") {
  auto cd = contraction_data(rotation2(0.9));
  REQUIRE_FALSE(cd.ok());
  CHECK(cd.why() == Why::NotContracting);
}

TEST_CASE("padic contraction coefficient is a half-power of p") {
  auto g = padic_diag(5, 14, {Rational(1, 125), Rational(1)});
  auto cd = contraction_data(g);
  REQUIRE(cd.ok());
  CHECK(cd.value().epsilon == doctest::Approx(std::pow(5.0, -1.5)));
}

TEST_CASE("verify_contraction passes for honest data and rejects forged epsilon") {
  auto g = real_mat(2, {1e4, 0, 0, 1});
  auto cd = contraction_data(g);
  REQUIRE(cd.ok());
  auto rep = verify_contraction(g, cd.value(), 10000);
  REQUIRE(rep.ok());
  CHECK(rep.value().max_image_distance <= 1e-2);

  auto weak = contraction_data(diag2(2, 1));
  REQUIRE(weak.ok());
  ContractionData<double> forged = weak.value();
  forged.epsilon = 1e-3;
  auto bad = verify_contraction(diag2(2, 1), forged, 10000);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.why() == Why::VerificationFailed);
}

TEST_CASE("proximality of a diagonal fixes the axis") {
  auto out = proximality(real_mat(3, {100, 0, 0, 0, 1, 0, 0, 0, 1}));
  REQUIRE(out.ok());
  const auto& cert = out.value();
  CHECK(cert.r == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(distance(cert.v_bar, ProjectivePoint<double>(kReal, {1, 0, 0})) < 1e-9);
  CHECK(distance_to_hyperplane(cert.v_bar, cert.H_bar) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cert.fixed_point_residual < 1e-9);
}

TEST_CASE("conjugation transports the fixed data") {
  auto u = rotation2(M_PI / 6);
  auto g = u * diag2(100, 1) * inverse(u);
  auto out = proximality(g);
  REQUIRE(out.ok());
  auto expected = act(u, ProjectivePoint<double>(kReal, {1, 0}));
  CHECK(distance(out.value().v_bar, expected) < 1e-8);
}

TEST_CASE("near-identity ratio is refused") {
  auto out = proximality(diag2(1 + 1e-12, 1));
  REQUIRE_FALSE(out.ok());
  CHECK(out.why() == Why::NotProximal);
}

TEST_CASE("power certificates carry the stated parameters") {
  auto base = proximality(diag2(1e4, 1));
  REQUIRE(base.ok());
  const auto& cert = base.value();
  const double c2 = cert.constants.c2;

  auto p1 = power_proximality(cert, 1);
  REQUIRE(p1.ok());
  CHECK(p1.value().r == doctest::Approx(cert.r - 2 * cert.epsilon));
  CHECK(p1.value().epsilon == doctest::Approx(std::pow(c2 * cert.epsilon, 1.0 / 3.0)));

  auto base100 = proximality(diag2(100, 1));
  REQUIRE(base100.ok());
  auto p3 = power_proximality(base100.value(), 3);
  REQUIRE(p3.ok());
  CHECK(p3.value().epsilon == doctest::Approx(c2 * base100.value().epsilon));
  CHECK(distance(p3.value().v_bar, ProjectivePoint<double>(kReal, {1, 0})) < 1e-9);

  // powers share the fixed data: verify g^n against the claimed parameters
  auto u = rotation2(0.4);
  auto g = u * diag2(25, 1) * inverse(u);
  auto cert_g = proximality(g);
  REQUIRE(cert_g.ok());
  RealMatrix gn = g;
  for (int n = 2; n <= 10; ++n) gn = gn * g;
  auto p10 = power_proximality(cert_g.value(), 10);
  REQUIRE(p10.ok());
  auto measured = contraction_data(gn);
  REQUIRE(measured.ok());
  CHECK(measured.value().epsilon <= p10.value().epsilon);
  auto rep = verify_contraction_at(gn, p10.value().v_bar, p10.value().H_bar,
                                   p10.value().epsilon, 2000, 99);
  CHECK(rep.ok());
}

TEST_CASE("power regime refusals") {
  auto base = proximality(diag2(100, 1));
  REQUIRE(base.ok());
  // eps = 0.1: at n = 1 the claimed parameters are not proximal
  auto p1 = power_proximality(base.value(), 1);
  REQUIRE_FALSE(p1.ok());
  CHECK(p1.why() == Why::RegimeViolation);
}

TEST_CASE("very proximal pairs") {
  auto vp = very_proximal(diag2(100, 0.01));
  REQUIRE(vp.ok());
  CHECK(vp.value().r == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(vp.value().epsilon == doctest::Approx(0.01).epsilon(1e-6));

  auto shear = very_proximal(real_mat(2, {1, 1, 0, 1}));
  REQUIRE_FALSE(shear.ok());
  CHECK(shear.why() == Why::NotProximal);

  auto pd = very_proximal(padic_diag(3, 14, {Rational(1, 81), Rational(81)}));
  REQUIRE(pd.ok());
  CHECK(pd.value().epsilon == doctest::Approx(std::pow(3.0, -4)));
  CHECK(pd.value().r == doctest::Approx(1.0));
}

TEST_CASE("lipschitz quotients respect eps^2/r^2 outside the r-neighborhood") {
  SplitMix64 rng(77);
  auto u = rotation2(1.1);
  auto g = u * diag2(2000, 1) * rotation2(-0.3);
  auto cd = contraction_data(g);
  REQUIRE(cd.ok());
  auto rep = verify_contraction(g, cd.value(), 20000);
  REQUIRE(rep.ok());
  for (const auto& [r, q] : rep.value().lipschitz) {
    double bound = cd.value().lipschitz_outside(r) * (1 + 1e-6);
    CHECK(q <= bound);
  }
}

TEST_CASE("archimedean converse: verified eps forces a large ratio") {
  SplitMix64 rng(78);
  for (int trial = 0; trial < 50; ++trial) {
    auto u = rotation2(rng.uniform(0, 6.28));
    auto v = rotation2(rng.uniform(0, 6.28));
    double ratio = rng.uniform(1e3, 1e6);
    auto g = u * diag2(ratio, 1) * v;
    auto cd = contraction_data(g);
    REQUIRE(cd.ok());
    auto rep = verify_contraction(g, cd.value(), 500, trial);
    REQUIRE(rep.ok());
    double eps = cd.value().epsilon;
    CHECK(singular_ratio(g) >= 1.0 / (4 * eps * eps));
  }
}

TEST_CASE("padic proximality produces exact fixed data") {
  auto g = padic_diag(5, 16, {Rational(1, 625), Rational(1), Rational(625)});
  auto out = proximality(g);
  REQUIRE(out.ok());
  // attracting point of the action is the largest-|.| axis: 1/625 has |.| = 625
  CHECK(out.value().v_bar.v[0].unit() == 1);
  CHECK(out.value().fixed_point_residual == 0.0);
  CHECK(out.value().r == doctest::Approx(1.0));
}
