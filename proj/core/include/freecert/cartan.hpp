#ifndef FREECERT_CARTAN_HPP
#define FREECERT_CARTAN_HPP

#include "freecert/matrix.hpp"

namespace freecert {

// g = k1 . diag(a) . k2 with k1, k2 in the maximal compact (orthogonal /
// unitary over R/C, GL_n(Z_p) over Q_p) and |a_1| >= ... >= |a_n|. Over Q_p
// every a_i is a power of p. `residual` bounds the entrywise reconstruction
// error.
template <typename K>
struct CartanDecomposition {
  Matrix<K> k1;
  Vec<K> a;
  Matrix<K> k2;
  double residual = 0.0;

  double abs_a(int i) const { return ScalarTraits<K>::abs_upper(a[static_cast<std::size_t>(i)]); }
};

CartanDecomposition<double> cartan(const RealMatrix& g);
CartanDecomposition<std::complex<double>> cartan(const ComplexMatrix& g);
CartanDecomposition<PadicScalar> cartan(const PadicMatrix& g);

// Certified lower bound on |a_1(g)| / |a_2(g)|; >= 1, exact over Q_p.
template <typename K>
double singular_ratio(const Matrix<K>& g) {
  if (g.n < 2) throw DimensionMismatch("singular_ratio needs n >= 2");
  auto kak = cartan(g);
  double r = kak.abs_a(0) / kak.abs_a(1);
  if constexpr (ScalarTraits<K>::archimedean) r = r * (1.0 - 16.0 * g.field.eta);
  return std::max(1.0, r);
}

}  // namespace freecert

#endif  // FREECERT_CARTAN_HPP
