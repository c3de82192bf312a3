#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecert/field.hpp"
#include "freecert/rng.hpp"

using namespace freecert;

TEST_CASE("descriptor validation") {
  CHECK_NOTHROW(FieldDescriptor::padic(5, 16).validate());
  CHECK_NOTHROW(FieldDescriptor::real().validate());
  CHECK_THROWS_AS(FieldDescriptor::padic(6, 16).validate(), std::invalid_argument);
  CHECK_THROWS_AS(FieldDescriptor::padic(7, 0).validate(), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK(is_prime(104729));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(104729L * 104729L));
}

TEST_CASE("absolute values") {
  CHECK(abs_value(-3.0) == 3.0);
  // v_3(2/3) = -1, |2/3|_3 = 3
  auto x = PadicScalar::from_rational(Rational(2, 3), 3, 12);
  CHECK(x.abs() == doctest::Approx(3.0));
  CHECK(x.valuation() == -1);
  CHECK(PadicScalar::zero(5, 8).abs() == 0.0);
}

TEST_CASE("padic add carries valuation") {
  // 2 + 3 = 5 over Q_5: valuation 1, unit 1
  auto a = PadicScalar::from_int(2, 5, 4);
  auto b = PadicScalar::from_int(3, 5, 4);
  auto s = field_arithmetic(a, b, RingOp::Add);
  CHECK(s.valuation() == 1);
  CHECK(s.unit() == 1);
  CHECK(s.digits() == 3);  // one digit lost to the carry

  int lost = -1;
  field_arithmetic(a, b, RingOp::Add, &lost);
  CHECK(lost == 1);
}

TEST_CASE("real and padic inverses") {
  CHECK(field_arithmetic(4.0, 0.0, RingOp::Inv) == 0.25);
  CHECK_THROWS_AS(field_arithmetic(0.0, 0.0, RingOp::Inv), DivisionByZero);

  auto third = PadicScalar::from_rational(Rational(1, 3), 3, 10);
  auto three = PadicScalar::from_int(3, 3, 10);
  auto prod = field_arithmetic(third, three, RingOp::Mul);
  CHECK(prod.valuation() == 0);
  CHECK(prod.unit() == 1);
  CHECK_THROWS_AS(PadicScalar::zero(3, 10).inv(), DivisionByZero);
}

TEST_CASE("cancellation exhausts precision") {
  auto a = PadicScalar::from_int(7, 5, 4);
  auto b = -a;
  CHECK((a + b).is_below());
  CHECK_THROWS_AS(field_arithmetic(a, b, RingOp::Add), PrecisionExhausted);
  // partial cancellation: 1 + (5^3 - 1) = 5^3
  auto one = PadicScalar::from_int(1, 5, 4);
  auto c = PadicScalar::from_int(124, 5, 4);
  auto s = one + c;
  CHECK(s.valuation() == 3);
  CHECK(s.digits() == 1);
}

TEST_CASE("rational embeddings") {
  CHECK(rational_embed_real(Rational(1, 2)) == 0.5);
  auto h = rational_embed_padic(Rational(1, 2), FieldDescriptor::padic(2, 8));
  CHECK(h.valuation() == -1);
  CHECK(h.unit() == 1);
  CHECK(h.abs() == doctest::Approx(2.0));
  auto f = rational_embed_padic(Rational(14), FieldDescriptor::padic(7, 8));
  CHECK(f.valuation() == 1);
  CHECK(f.unit() == 2);
}

namespace {

Rational random_rational(SplitMix64& rng) {
  long n = static_cast<long>(rng.below(2001)) - 1000;
  long d = 1 + static_cast<long>(rng.below(50));
  if (n == 0) n = 1;
  return Rational(n, d);
}

}  // namespace

TEST_CASE("ultrametric inequality and multiplicativity over 1e4 pairs") {
  const long p = 3;
  const int N = 12;
  SplitMix64 rng(91);
  for (int i = 0; i < 10000; ++i) {
    Rational qa = random_rational(rng), qb = random_rational(rng);
    auto a = PadicScalar::from_rational(qa, p, N);
    auto b = PadicScalar::from_rational(qb, p, N);
    auto s = a + b;
    double lhs = s.abs_upper();
    double rhs = std::max(a.abs(), b.abs());
    CHECK(lhs <= rhs * (1 + 1e-12));
    if (a.abs() != b.abs()) CHECK(lhs == doctest::Approx(rhs));
    CHECK((a * b).abs() == doctest::Approx(a.abs() * b.abs()));
  }
}

TEST_CASE("float multiplicativity within margin") {
  SplitMix64 rng(92);
  const double eta = 1e-9;
  for (int i = 0; i < 10000; ++i) {
    double a = rng.uniform(-100, 100), b = rng.uniform(-100, 100);
    CHECK(std::abs(std::abs(a * b) - std::abs(a) * std::abs(b)) <=
          4 * eta * std::max(1.0, std::abs(a * b)));
  }
}

TEST_CASE("rational embedding is a ring homomorphism into Q_p") {
  const long p = 5;
  const int N = 14;
  SplitMix64 rng(93);
  for (int i = 0; i < 300; ++i) {
    Rational qa = random_rational(rng), qb = random_rational(rng);
    auto a = PadicScalar::from_rational(qa, p, N);
    auto b = PadicScalar::from_rational(qb, p, N);
    CHECK((a * b).eq(PadicScalar::from_rational(qa * qb, p, N)));
    CHECK((a + b).eq(PadicScalar::from_rational(qa + qb, p, N)));
  }
}
