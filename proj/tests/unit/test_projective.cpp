#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecert/projective.hpp"

using namespace freecert;

namespace {

const FieldDescriptor kReal = FieldDescriptor::real();

ProjectivePoint<double> pt(std::initializer_list<double> v) {
  return {kReal, Vec<double>(v)};
}

ProjectiveHyperplane<double> hp(std::initializer_list<double> f) {
  return {kReal, Vec<double>(f)};
}

RealMatrix real_mat(int n, std::initializer_list<double> entries) {
  RealMatrix m(kReal, n);
  std::copy(entries.begin(), entries.end(), m.a.begin());
  return m;
}

}  // namespace

TEST_CASE("standard metric on points") {
  CHECK(distance(pt({1, 0}), pt({0, 1})) == doctest::Approx(1.0));
  auto p = pt({0.3, -1.2, 0.5});
  CHECK(distance(p, p) == doctest::Approx(0.0));
  CHECK(distance(pt({1, 1}), pt({1, 0})) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("canonical representatives agree across constructions") {
  auto a = pt({2, 3, -1});
  auto b = pt({-4, -6, 2});
  for (int i = 0; i < 3; ++i)
    CHECK(a.v[static_cast<std::size_t>(i)] ==
          doctest::Approx(b.v[static_cast<std::size_t>(i)]).epsilon(2e-9));
}

TEST_CASE("point to hyperplane distance") {
  CHECK(distance_to_hyperplane(pt({1, 0}), hp({1, 0})) == doctest::Approx(1.0));
  CHECK(distance_to_hyperplane(pt({0, 1}), hp({1, 0})) == doctest::Approx(0.0));
  CHECK(distance_to_hyperplane(pt({1, 1}), hp({1, 0})) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("hausdorff distance between hyperplanes") {
  auto H1 = hp({1, 0, 0});
  CHECK(hausdorff_distance(H1, H1) == doctest::Approx(0.0));
  CHECK(hausdorff_distance(H1, hp({0, 1, 0})) == doctest::Approx(1.0));
  double delta = 0.1;
  auto H2 = hp({1, delta, 0});
  CHECK(hausdorff_distance(H1, H2) ==
        doctest::Approx(delta / std::sqrt(1 + delta * delta)).epsilon(1e-9));
  CHECK(hausdorff_distance(H2, H1) == doctest::Approx(hausdorff_distance(H1, H2)));
}

TEST_CASE("projective action") {
  auto p = pt({0.3, -0.8});
  CHECK(distance(act(RealMatrix::identity(kReal, 2), p), p) == doctest::Approx(0.0));
  auto d21 = real_mat(2, {2, 0, 0, 1});
  CHECK(distance(act(d21, pt({1, 0})), pt({1, 0})) == doctest::Approx(0.0));
  auto d100 = real_mat(2, {100, 0, 0, 1});
  auto img = act(d100, pt({1, 1}));
  CHECK(distance(img, pt({1, 0})) == doctest::Approx(1.0 / std::sqrt(10001.0)));
  // action is a homomorphism
  auto g = real_mat(2, {2, 1, 1, 1});
  auto h = real_mat(2, {1, 3, 0, 1});
  CHECK(distance(act(g, act(h, p)), act(g * h, p)) < 1e-12);
}

TEST_CASE("hyperplane action by the inverse functional") {
  auto g = real_mat(2, {2, 0, 0, 1});
  auto H = hp({1, 0});       // the line spanned by e2
  auto img = act_hyperplane(inverse(g), H);
  CHECK(hausdorff_distance(img, H) == doctest::Approx(0.0));  // invariant line
}

TEST_CASE("triangle inequality over random triples") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    auto a = sample_point<double>(kReal, 3, rng);
    auto b = sample_point<double>(kReal, 3, rng);
    auto c = sample_point<double>(kReal, 3, rng);
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 4e-9);
  }
}

TEST_CASE("point-hyperplane compatibility on samples") {
  SplitMix64 rng(2025);
  for (int i = 0; i < 2000; ++i) {
    auto p = sample_point<double>(kReal, 3, rng);
    auto q = sample_point<double>(kReal, 3, rng);
    auto H = sample_hyperplane<double>(kReal, 3, rng);
    CHECK(distance_to_hyperplane(p, H) <=
          distance(p, q) + distance_to_hyperplane(q, H) + 4e-9);
  }
}

TEST_CASE("bi-Lipschitz action bound from the singular ratio") {
  SplitMix64 rng(2026);
  auto g = real_mat(2, {3, 1, 0, 0.5});
  // Lipschitz constant of [g] is at most the square of the singular ratio
  double L = 9.0;  // (sigma1/sigma2)^2 upper estimate for this g is < 9
  for (int i = 0; i < 2000; ++i) {
    auto x = sample_point<double>(kReal, 2, rng);
    auto y = sample_point<double>(kReal, 2, rng);
    double dxy = distance(x, y);
    if (dxy < 1e-9) continue;
    CHECK(distance(act(g, x), act(g, y)) <= L * dxy * (1 + 1e-9));
  }
}

TEST_CASE("padic points and distances are exact") {
  const FieldDescriptor f = FieldDescriptor::padic(5, 12);
  auto mk = [&](std::initializer_list<Rational> raw) {
    Vec<PadicScalar> v;
    for (const auto& q : raw) v.push_back(PadicScalar::from_rational(q, f.p, f.precision));
    return ProjectivePoint<PadicScalar>(f, std::move(v));
  };
  auto e1 = mk({Rational(1), Rational(0)});
  auto e2 = mk({Rational(0), Rational(1)});
  CHECK(distance(e1, e2) == doctest::Approx(1.0));
  CHECK(distance(e1, e1) == doctest::Approx(0.0));
  // canonical representative has a unit leading coordinate, exactly 1
  auto p = mk({Rational(10), Rational(3)});  // |10|_5 = 1/5 < |3|_5 = 1
  CHECK(p.v[1].unit() == 1);
  CHECK(p.v[1].valuation() == 0);
  // proportional vectors canonicalize identically
  auto q = mk({Rational(20), Rational(6)});
  CHECK(distance(p, q) == doctest::Approx(0.0));
  CHECK(p.v[0].eq(q.v[0]));
  // d([1,0],[1,5]) = |5|_5 = 1/5
  auto x = mk({Rational(1), Rational(0)});
  auto y = mk({Rational(1), Rational(5)});
  CHECK(distance(x, y) == doctest::Approx(0.2));
}

TEST_CASE("padic sampling stays on the unit sphere") {
  const FieldDescriptor f = FieldDescriptor::padic(3, 10);
  SplitMix64 rng(2027);
  for (int i = 0; i < 200; ++i) {
    auto p = sample_point<PadicScalar>(f, 3, rng);
    double n = 0;
    for (const auto& x : p.v) n = std::max(n, x.abs_upper());
    CHECK(n == doctest::Approx(1.0));
  }
}
