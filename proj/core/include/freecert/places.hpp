#ifndef FREECERT_PLACES_HPP
#define FREECERT_PLACES_HPP

#include <complex>
#include <string>
#include <vector>

#include "freecert/outcome.hpp"
#include "freecert/rational.hpp"

namespace freecert {

// An algebraic number: monic minimal polynomial over Q (irreducibility
// asserted by the caller) plus the index of one complex root in the sorted
// root list.
struct AlgebraicNumber {
  std::vector<Rational> minpoly;  // coeffs[k] * X^k, monic
  int root_index = 0;

  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

enum class PlaceKind { RealEmbedding, ComplexEmbedding, PadicPlace, RootOfUnity };

const char* place_kind_name(PlaceKind k);

struct PlaceReport {
  PlaceKind kind = PlaceKind::RealEmbedding;
  int root_index = -1;        // embeddings: which conjugate expands
  double abs_value = 0;       // certified |alpha| > 1 at the place (embeddings / p-adic)
  long p = 0;                 // PadicPlace
  long slope_num = 0;         // Newton polygon slope = slope_num / slope_den
  long slope_den = 1;
  int order = 0;              // RootOfUnity: verified exact order
};

// Finds a place where alpha expands, or certifies alpha is a root of unity:
//   1. a conjugate of modulus > 1  -> archimedean embedding
//   2. alpha not an algebraic integer -> p-adic place via the Newton polygon
//   3. otherwise Kronecker applies  -> RootOfUnity with exact verified order
Outcome<PlaceReport> expanding_place(const AlgebraicNumber& alpha);

struct UnboundedReport {
  PlaceReport place;
  Rational witness;       // element of I achieving the maximum
  double witness_abs = 0;
};

// Diagonal-embedding base case: over Z[1/l], picks the place (real or p | l)
// where the finite set I reaches its largest absolute value.
Outcome<UnboundedReport> unbounded_embedding(const std::vector<Rational>& I, long l);

// exact power test: alpha^m == 1 in Q[X]/(minpoly) for some m <= bound
int root_of_unity_order(const std::vector<Rational>& minpoly, int bound);

std::vector<long> prime_factors(long n);

}  // namespace freecert

#endif  // FREECERT_PLACES_HPP
