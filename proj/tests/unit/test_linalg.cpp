#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecert/cartan.hpp"
#include "freecert/rng.hpp"

using namespace freecert;

namespace {

RealMatrix real_mat(int n, std::initializer_list<double> entries) {
  RealMatrix m(FieldDescriptor::real(), n);
  std::copy(entries.begin(), entries.end(), m.a.begin());
  return m;
}

RealMatrix rotation2(double theta) {
  return real_mat(2, {std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)});
}

PadicMatrix padic_mat(long p, int N, int n, std::initializer_list<Rational> entries) {
  PadicMatrix m(FieldDescriptor::padic(p, N), n);
  std::size_t i = 0;
  for (const auto& q : entries) m.a[i++] = PadicScalar::from_rational(q, p, N);
  return m;
}

RealMatrix random_invertible(int n, SplitMix64& rng) {
  while (true) {
    RealMatrix m(FieldDescriptor::real(), n);
    for (auto& x : m.a) x = rng.uniform(-2, 2);
    try {
      (void)inverse(m);
      return m;
    } catch (const SingularMatrix&) {
    }
  }
}

}  // namespace

TEST_CASE("wedge norms") {
  Vec<double> e1{1, 0, 0}, e2{0, 1, 0};
  CHECK(wedge_norm(e1, e2) == doctest::Approx(1.0));
  Vec<double> v{1, 1}, w{2, 2};
  CHECK(wedge_norm(v, w) == doctest::Approx(0.0));
  Vec<double> x{1, 1}, y{1, 0};
  CHECK(wedge_norm(x, y) == doctest::Approx(1.0));
  CHECK_THROWS_AS(wedge_norm(e1, v), DimensionMismatch);
}

TEST_CASE("real cartan of a diagonal") {
  auto d = cartan(real_mat(2, {4, 0, 0, 1}));
  CHECK(d.abs_a(0) == doctest::Approx(4.0));
  CHECK(d.abs_a(1) == doctest::Approx(1.0));
  CHECK(d.residual <= 4e-9);
}

TEST_CASE("real cartan of the standard shear") {
  // singular values of [[1,1],[0,1]]: square roots of (3 +- sqrt 5)/2
  auto g = real_mat(2, {1, 1, 0, 1});
  auto d = cartan(g);
  double phi_plus = (std::sqrt(5.0) + 1) / 2;
  double phi_minus = (std::sqrt(5.0) - 1) / 2;
  CHECK(d.abs_a(0) == doctest::Approx(phi_plus).epsilon(1e-9));
  CHECK(d.abs_a(1) == doctest::Approx(phi_minus).epsilon(1e-9));
  CHECK(singular_ratio(g) == doctest::Approx(phi_plus / phi_minus).epsilon(1e-6));
}

TEST_CASE("singular ratio basics") {
  CHECK(singular_ratio(real_mat(3, {100, 0, 0, 0, 1, 0, 0, 0, 1})) ==
        doctest::Approx(100.0).epsilon(1e-7));
  CHECK(singular_ratio(rotation2(0.7)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cartan(real_mat(2, {1, 0, 0, 0})), SingularMatrix);
}

TEST_CASE("padic cartan of a diagonal p-power") {
  auto g = padic_mat(5, 12, 2, {Rational(1, 5), Rational(0), Rational(0), Rational(1)});
  auto d = cartan(g);
  CHECK(d.abs_a(0) == doctest::Approx(5.0));
  CHECK(d.abs_a(1) == doctest::Approx(1.0));
  CHECK(d.a[0].valuation() == -1);
  CHECK(d.a[0].unit() == 1);
  CHECK(singular_ratio(g) == doctest::Approx(5.0));
  // compact factors: entries in Z_p, |det| = 1
  for (const auto& k : {d.k1, d.k2}) {
    for (const auto& x : k.a)
      if (x.is_regular()) CHECK(x.valuation() >= 0);
    CHECK(determinant(k).valuation() == 0);
  }
}

TEST_CASE("padic cartan reconstruction on random matrices") {
  const long p = 5;
  const int N = 16;
  SplitMix64 rng(1005);
  for (int trial = 0; trial < 50; ++trial) {
    PadicMatrix g(FieldDescriptor::padic(p, N), 3);
    for (auto& x : g.a) {
      long numer = static_cast<long>(rng.below(5000)) + 1;
      long vshift = static_cast<long>(rng.below(4)) - 1;
      Rational q(numer);
      if (vshift >= 0)
        q *= Rational(pow_int(BigInt(p), static_cast<unsigned long>(vshift)));
      else
        q /= Rational(pow_int(BigInt(p), static_cast<unsigned long>(-vshift)));
      x = PadicScalar::from_rational(q, p, N);
    }
    auto d = cartan(g);
    CHECK(d.residual <= std::pow(static_cast<double>(p), -(N - 2)));
    for (int i = 0; i < 3; ++i) CHECK(d.a[static_cast<std::size_t>(i)].unit() == 1);
    CHECK(d.abs_a(0) >= d.abs_a(1));
    CHECK(d.abs_a(1) >= d.abs_a(2));
    double prod = d.abs_a(0) * d.abs_a(1) * d.abs_a(2);
    CHECK(prod == doctest::Approx(determinant(g).abs()).epsilon(1e-12));
  }
}

TEST_CASE("real reconstruction and isometry invariance on random matrices") {
  SplitMix64 rng(1006);
  const double eta = 1e-9;
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = random_invertible(3, rng);
    auto d = cartan(g);
    RealMatrix D(g.field, 3);
    for (int i = 0; i < 3; ++i) D.at(i, i) = d.a[static_cast<std::size_t>(i)];
    auto rec = d.k1 * D * d.k2;
    double err = 0;
    for (std::size_t i = 0; i < rec.a.size(); ++i)
      err = std::max(err, std::abs(rec.a[i] - g.a[i]));
    CHECK(err <= 9 * eta);
    CHECK(err <= d.residual + 1e-14);
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_invertible(2, rng);
    auto u = rotation2(rng.uniform(0, 6.28));
    auto v = rotation2(rng.uniform(0, 6.28));
    double r1 = singular_ratio(g);
    double r2 = singular_ratio(u * g * v);
    CHECK(std::abs(r1 - r2) <= 10 * eta * std::max(1.0, r1) * r1);
  }
}

TEST_CASE("complex cartan is unitary with real descending diagonal") {
  ComplexMatrix g(FieldDescriptor::complex_field(), 2);
  g.at(0, 0) = {3, 1};
  g.at(0, 1) = {0, -2};
  g.at(1, 0) = {1, 0};
  g.at(1, 1) = {0.5, 0.5};
  auto d = cartan(g);
  CHECK(d.abs_a(0) >= d.abs_a(1));
  CHECK(d.residual <= 1e-8);
  // unitarity of k1
  auto kt = d.k1.transpose();
  for (auto& x : kt.a) x = std::conj(x);
  auto prod = kt * d.k1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(prod.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("inverse and determinant over rationals are exact") {
  RationalMatrix m(FieldDescriptor::real(), 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(3);
  m.at(1, 1) = Rational(4);
  CHECK(determinant(m) == Rational(-2));
  auto inv = freecert::inverse(m);
  auto prod = m * inv;
  CHECK(prod.equals(rational_identity(2)));
}
