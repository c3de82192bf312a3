#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecert/pingpong.hpp"

using namespace freecert;

namespace {

const FieldDescriptor kReal = FieldDescriptor::real();

RationalMatrix rmat(int n, std::initializer_list<Rational> entries) {
  RationalMatrix m(kReal, n);
  std::copy(entries.begin(), entries.end(), m.a.begin());
  return m;
}

RealMatrix real_mat(int n, std::initializer_list<double> entries) {
  RealMatrix m(kReal, n);
  std::copy(entries.begin(), entries.end(), m.a.begin());
  return m;
}

RealMatrix rotation3(int axis, double theta) {
  RealMatrix m = RealMatrix::identity(kReal, 3);
  int i = (axis + 1) % 3, j = (axis + 2) % 3;
  m.at(i, i) = std::cos(theta);
  m.at(j, j) = std::cos(theta);
  m.at(i, j) = -std::sin(theta);
  m.at(j, i) = std::sin(theta);
  return m;
}

// diag(L, 1/L) conjugated by the rotation by pi/4 has rational entries:
// [[ (L + 1/L)/2, (L - 1/L)/2 ], [ (L - 1/L)/2, (L + 1/L)/2 ]]
RationalMatrix conjugated_diag(const Rational& L) {
  Rational s = (L + 1 / L) / 2, d = (L - 1 / L) / 2;
  return rmat(2, {s, d, d, s});
}

}  // namespace

TEST_CASE("rotated diagonal pair is certified and oracle-free") {
  Rational L(100);
  std::vector<RationalMatrix> exact{
      rmat(2, {Rational(100), Rational(0), Rational(0), Rational(1, 100)}),
      conjugated_diag(L)};
  std::vector<RealMatrix> elems;
  for (const auto& e : exact) elems.push_back(project_to_real(e));

  auto cert = check_pingpong(elems);
  REQUIRE(cert.ok());
  CHECK(cert.value().r == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-3));
  CHECK(cert.value().epsilon <= 0.011);

  auto oracle = freeness_oracle(exact, 8);
  REQUIRE(oracle.ok());
  CHECK(oracle.value().free);
}

TEST_CASE("duplicated element is refused") {
  auto g = real_mat(2, {100, 0, 0, 0.01});
  auto out = check_pingpong(std::vector<RealMatrix>{g, g});
  REQUIRE_FALSE(out.ok());
  CHECK((out.why() == Why::GapViolation || out.why() == Why::AttractorCollision));
}

TEST_CASE("commuting diagonals are refused") {
  std::vector<RealMatrix> elems{real_mat(2, {100, 0, 0, 0.01}),
                                real_mat(2, {200, 0, 0, 0.005})};
  auto out = check_pingpong(elems);
  REQUIRE_FALSE(out.ok());
  CHECK((out.why() == Why::GapViolation || out.why() == Why::AttractorCollision));
  // and the oracle finds the commutator relation at length 4
  std::vector<RationalMatrix> exact{
      rmat(2, {Rational(100), Rational(0), Rational(0), Rational(1, 100)}),
      rmat(2, {Rational(200), Rational(0), Rational(0), Rational(1, 200)})};
  auto oracle = freeness_oracle(exact, 4);
  REQUIRE(oracle.ok());
  CHECK_FALSE(oracle.value().free);
  CHECK(oracle.value().relation_word == "abAB");
}

TEST_CASE("oracle on the classical free pair") {
  std::vector<RationalMatrix> sanov{rmat(2, {Rational(1), Rational(2), Rational(0), Rational(1)}),
                                    rmat(2, {Rational(1), Rational(0), Rational(2), Rational(1)})};
  auto out = freeness_oracle(sanov, 8);
  REQUIRE(out.ok());
  CHECK(out.value().free);
  CHECK(out.value().words_checked > 8000);
}

TEST_CASE("oracle flags the identity immediately") {
  auto out = freeness_oracle({rational_identity(2)}, 1);
  REQUIRE(out.ok());
  CHECK_FALSE(out.value().free);
  CHECK(out.value().relation_word == "a");
}

TEST_CASE("separating set for a dense rotation pair") {
  std::vector<RealMatrix> gens{rotation3(2, 1.2), rotation3(0, 2.3)};
  auto out = find_separating(gens, 1, 160, 7, 24, 160);
  REQUIRE(out.ok());
  CHECK(out.value().r > 0.05);
  CHECK(out.value().trace.restarts >= 24);
}

TEST_CASE("separating search fails on reducible or trivial input") {
  std::vector<RealMatrix> diag{real_mat(3, {2, 0, 0, 0, 1, 0, 0, 0, 0.5})};
  auto out = find_separating(diag, 1, 10, 7, 16, 100);
  REQUIRE_FALSE(out.ok());
  CHECK(out.why() == Why::SearchFailed);

  std::vector<RealMatrix> idonly{RealMatrix::identity(kReal, 3)};
  auto out2 = find_separating(idonly, 1, 4, 7, 8, 60);
  REQUIRE_FALSE(out2.ok());
  CHECK(out2.why() == Why::SearchFailed);
}

TEST_CASE("very contracting conjugate from a separating set") {
  std::vector<RealMatrix> gens{rotation3(2, 1.2), rotation3(0, 2.3)};
  auto F = find_separating(gens, 2, 52, 7, 24, 120);
  REQUIRE(F.ok());

  auto g = real_mat(3, {1e6, 0, 0, 0, 1, 0, 0, 0, 1});
  auto wit = make_very_contracting(g, F.value());
  REQUIRE(wit.ok());
  CHECK(wit.value().epsilon <= 10 * 1e-3);
  auto fwd = contraction_data(wit.value().element);
  auto bwd = contraction_data(inverse(wit.value().element));
  CHECK(fwd.ok());
  CHECK(bwd.ok());

  auto weak = real_mat(3, {2, 0, 0, 0, 1, 0, 0, 0, 1});
  auto rej = make_very_contracting(weak, F.value());
  REQUIRE_FALSE(rej.ok());

  SeparatingSet empty;
  empty.m = 2;
  auto nw = make_very_contracting(g, empty);
  REQUIRE_FALSE(nw.ok());
}

TEST_CASE("build a ping-pong pair from targets, gamma, and F") {
  std::vector<RealMatrix> gens{rotation3(2, 1.2), rotation3(0, 2.3)};
  auto F = find_separating(gens, 2, 52, 7, 24, 120);
  REQUIRE(F.ok());
  auto g = real_mat(3, {1e6, 0, 0, 0, 1, 0, 0, 0, 1});
  auto wit = make_very_contracting(g, F.value());
  REQUIRE(wit.ok());

  std::vector<RealMatrix> targets{
      real_mat(3, {0, 1, 0, 0, 0, 1, 1, 0, 0}),
      real_mat(3, {1, 1, 0, 0, 1, 1, 0, 0, 1})};
  auto built = build_pingpong(targets, wit.value().element, F.value());
  REQUIRE(built.ok());
  CHECK(built.value().certificate.m() == 2);
  CHECK(built.value().certificate.r > 2 * built.value().certificate.epsilon);

  // degenerate m = 1 is allowed
  auto single = build_pingpong({targets[0]}, wit.value().element, F.value());
  REQUIRE(single.ok());
  CHECK(single.value().certificate.m() == 1);

  // a non-contracting gamma is rejected up front
  auto rej = build_pingpong(targets, rotation3(1, 0.3), F.value());
  REQUIRE_FALSE(rej.ok());
}

TEST_CASE("perturbation search near coincident-attractor targets") {
  // generators of SL_2(Z[1/5])
  std::vector<RationalMatrix> gens{
      rmat(2, {Rational(1), Rational(1), Rational(0), Rational(1)}),
      rmat(2, {Rational(1), Rational(0), Rational(1), Rational(1)}),
      rmat(2, {Rational(5), Rational(0), Rational(0), Rational(1, 5)})};
  // targets share the attracting line [e1]; bare tuple must be refused
  RationalMatrix t1 = rmat(2, {Rational(125), Rational(0), Rational(0), Rational(1, 125)});
  RationalMatrix A = gens[0];
  RationalMatrix t2 = A * t1 * inverse(A);
  {
    auto bare = check_pingpong(
        std::vector<RealMatrix>{project_to_real(t1), project_to_real(t2)});
    REQUIRE_FALSE(bare.ok());
  }
  auto found = find_pingpong_near(gens, {t1, t2}, 0.3, 40000);
  REQUIRE(found.ok());
  CHECK(found.value().certificate.m() == 2);
  // the words used stay within the operator-norm ball
  for (const auto& [w, w2] : found.value().words) {
    CHECK(w.size() <= 6);
    CHECK(w2.size() <= 6);
  }
  auto oracle = freeness_oracle(found.value().exact_elements, 6);
  REQUIRE(oracle.ok());
  CHECK(oracle.value().free);

  // delta = 0 leaves only the bare targets: refused tuple, search fails
  auto bare_only = find_pingpong_near(gens, {t1, t2}, 0.0, 2000);
  REQUIRE_FALSE(bare_only.ok());
  CHECK(bare_only.why() == Why::SearchFailed);

  auto empty = find_pingpong_near({}, {t1, t2}, 0.3, 100);
  REQUIRE_FALSE(empty.ok());
}
