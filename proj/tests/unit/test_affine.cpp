#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecert/affine.hpp"
#include "freecert/rng.hpp"

using namespace freecert;

namespace {

AffineElement<Rational> aff(const Rational& a, const Rational& b) { return {a, b}; }

}  // namespace

TEST_CASE("fixed points") {
  auto x0 = fixed_point(aff(Rational(1, 2), Rational(0)));
  REQUIRE(x0.ok());
  CHECK(x0.value() == Rational(0));
  auto x1 = fixed_point(aff(Rational(1, 3), Rational(2)));
  REQUIRE(x1.ok());
  CHECK(x1.value() == Rational(3));
  auto par = fixed_point(aff(Rational(1), Rational(5)));
  REQUIRE_FALSE(par.ok());
  CHECK(par.why() == Why::ParabolicElement);
}

TEST_CASE("composition law and inverse") {
  auto g = aff(Rational(2), Rational(3));
  auto h = aff(Rational(5), Rational(-1));
  auto gh = compose(g, h);
  CHECK(gh.a == Rational(10));
  CHECK(gh.b == Rational(1));  // 2*(-1) + 3
  auto gi = affine_inverse(g);
  auto id = compose(g, gi);
  CHECK(id.a == Rational(1));
  CHECK(id.b == Rational(0));
}

TEST_CASE("disc contraction") {
  auto [c, r] = contract_disc(aff(Rational(1, 2), Rational(0)), Rational(0), Rational(1));
  CHECK(c == Rational(0));
  CHECK(r == Rational(1, 2));
  auto [c2, r2] = contract_disc(aff(Rational(1), Rational(7)), Rational(0), Rational(2));
  CHECK(c2 == Rational(7));
  CHECK(r2 == Rational(2));
}

TEST_CASE("padic disc contraction is an exact ultrametric statement") {
  const long p = 5;
  const int N = 12;
  AffineElement<PadicScalar> g{PadicScalar::from_int(p, p, N), PadicScalar::zero(p, N)};
  auto fp = fixed_point(g);
  REQUIRE(fp.ok());
  CHECK(fp.value().is_zero());
  // |a|_p = 1/p: certificate radius bookkeeping happens in exponents
  CHECK(g.a.abs() == doctest::Approx(1.0 / p));
}

TEST_CASE("free semigroup certificate for the standard pair") {
  std::vector<AffineElement<Rational>> elems{aff(Rational(1, 10), Rational(0)),
                                             aff(Rational(1, 10), Rational(1))};
  auto cert = certify_free_semigroup(elems);
  REQUIRE(cert.ok());
  CHECK(cert.value().fixed_points[0] == Rational(0));
  CHECK(cert.value().fixed_points[1] == Rational(10, 9));
  CHECK(cert.value().center == Rational(5, 9));
  // both image discs inside, disjoint; radii |a| R
  CHECK(cert.value().image_radii[0] == cert.value().R / 10);

  auto oracle = semigroup_oracle(elems, 10);
  REQUIRE(oracle.ok());
  CHECK(oracle.value().free);
}

TEST_CASE("refusals name the binding constraint") {
  auto dup = certify_free_semigroup(std::vector<AffineElement<Rational>>{
      aff(Rational(1, 2), Rational(0)), aff(Rational(1, 2), Rational(0))});
  REQUIRE_FALSE(dup.ok());
  CHECK(dup.why() == Why::FixedPointCollision);

  auto exp = certify_free_semigroup(std::vector<AffineElement<Rational>>{
      aff(Rational(2), Rational(0)), aff(Rational(1, 2), Rational(1))});
  REQUIRE_FALSE(exp.ok());
  CHECK(exp.why() == Why::NotContractive);
}

TEST_CASE("oracle finds the power collision") {
  std::vector<AffineElement<Rational>> elems{aff(Rational(1, 2), Rational(0)),
                                             aff(Rational(1, 4), Rational(0))};
  auto out = semigroup_oracle(elems, 4);
  REQUIRE(out.ok());
  CHECK_FALSE(out.value().free);
  CHECK(out.value().collision == "aa = b");

  auto single = semigroup_oracle({aff(Rational(1, 2), Rational(3))}, 5);
  REQUIRE(single.ok());
  CHECK(single.value().free);
}

TEST_CASE("certified triples have exactly t^n word images") {
  std::vector<AffineElement<Rational>> elems{aff(Rational(1, 10), Rational(0)),
                                             aff(Rational(1, 12), Rational(1)),
                                             aff(Rational(1, 9), Rational(-2))};
  auto cert = certify_free_semigroup(elems);
  REQUIRE(cert.ok());
  for (int n = 1; n <= 8; ++n) {
    std::size_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= 3;
    CHECK(distinct_word_images(elems, cert.value().center, n) == expect);
  }
}

TEST_CASE("certification is conjugation invariant") {
  SplitMix64 rng(55);
  std::vector<AffineElement<Rational>> elems{aff(Rational(1, 10), Rational(0)),
                                             aff(Rational(1, 10), Rational(1))};
  auto conj = [](const AffineElement<Rational>& h, const AffineElement<Rational>& g) {
    return compose(compose(h, g), affine_inverse(h));
  };
  for (int trial = 0; trial < 20; ++trial) {
    long a_num = 1 + static_cast<long>(rng.below(10));
    long b_num = static_cast<long>(rng.below(21)) - 10;
    AffineElement<Rational> h{Rational(a_num, 3), Rational(b_num, 7)};
    std::vector<AffineElement<Rational>> moved{conj(h, elems[0]), conj(h, elems[1])};
    auto cert = certify_free_semigroup(moved);
    CHECK(cert.ok());
    if (cert.ok()) {
      // transported fixed points
      CHECK(cert.value().fixed_points[0] == h.apply(Rational(0)));
      CHECK(cert.value().fixed_points[1] == h.apply(Rational(10, 9)));
    }
  }
}

TEST_CASE("padic free semigroup certificate") {
  const long p = 5;
  const int N = 12;
  auto mk = [&](const Rational& a, const Rational& b) {
    return AffineElement<PadicScalar>{PadicScalar::from_rational(a, p, N),
                                      PadicScalar::from_rational(b, p, N)};
  };
  // contractions with distinct fixed points 0 and 1
  std::vector<AffineElement<PadicScalar>> elems{mk(Rational(5), Rational(0)),
                                                mk(Rational(5), Rational(-4))};
  auto cert = certify_free_semigroup_padic(elems);
  REQUIRE(cert.ok());
  CHECK(cert.value().R_exp == 0);  // fixed points 0,1 differ by a unit
  CHECK(cert.value().images[0].radius_exp == 1);

  // |a| = 1 is refused
  auto iso = certify_free_semigroup_padic(
      std::vector<AffineElement<PadicScalar>>{mk(Rational(2), Rational(0)),
                                              mk(Rational(3), Rational(1))});
  REQUIRE_FALSE(iso.ok());
  CHECK(iso.why() == Why::NotContractive);
}
