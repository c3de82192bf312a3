#ifndef FREECERT_MATRIX_HPP
#define FREECERT_MATRIX_HPP

#include <complex>
#include <memory>
#include <vector>

#include "freecert/field.hpp"
#include "freecert/outcome.hpp"
#include "freecert/rational.hpp"

namespace freecert {

// --- per-scalar glue -------------------------------------------------------

template <typename K>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool archimedean = true;
  static double zero(const FieldDescriptor&) { return 0.0; }
  static double one(const FieldDescriptor&) { return 1.0; }
  static double inv(double x) {
    if (x == 0.0) throw DivisionByZero();
    return 1.0 / x;
  }
  static bool is_zero(double x) { return x == 0.0; }
  static double abs_upper(double x) { return std::abs(x); }
  static double abs_lower(double x) { return std::abs(x); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using C = std::complex<double>;
  static constexpr bool archimedean = true;
  static C zero(const FieldDescriptor&) { return {0.0, 0.0}; }
  static C one(const FieldDescriptor&) { return {1.0, 0.0}; }
  static C inv(const C& x) {
    if (x == C(0, 0)) throw DivisionByZero();
    return 1.0 / x;
  }
  static bool is_zero(const C& x) { return x == C(0, 0); }
  static double abs_upper(const C& x) { return std::abs(x); }
  static double abs_lower(const C& x) { return std::abs(x); }
};

template <>
struct ScalarTraits<PadicScalar> {
  static constexpr bool archimedean = false;
  static PadicScalar zero(const FieldDescriptor& f) { return PadicScalar::zero(f.p, f.precision); }
  static PadicScalar one(const FieldDescriptor& f) {
    return PadicScalar::from_rational(Rational(1), f.p, f.precision);
  }
  static PadicScalar inv(const PadicScalar& x) { return x.inv(); }
  static bool is_zero(const PadicScalar& x) { return x.is_zero(); }
  static double abs_upper(const PadicScalar& x) { return x.abs_upper(); }
  static double abs_lower(const PadicScalar& x) { return x.abs_lower(); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool archimedean = true;
  static Rational zero(const FieldDescriptor&) { return Rational(0); }
  static Rational one(const FieldDescriptor&) { return Rational(1); }
  static Rational inv(const Rational& x) {
    if (x == 0) throw DivisionByZero();
    return 1 / x;
  }
  static bool is_zero(const Rational& x) { return x == 0; }
  static double abs_upper(const Rational& x) { return std::abs(to_double(x)); }
  static double abs_lower(const Rational& x) { return std::abs(to_double(x)); }
};

// --- vectors ---------------------------------------------------------------

template <typename K>
using Vec = std::vector<K>;

// Standard norm: Euclidean over R/C, max over Q_p (upper bound if entries
// carry uncertainty).
template <typename K>
double vec_norm(const Vec<K>& v) {
  if constexpr (ScalarTraits<K>::archimedean) {
    double s = 0;
    for (const auto& x : v) {
      double a = ScalarTraits<K>::abs_upper(x);
      s += a * a;
    }
    return std::sqrt(s);
  } else {
    double m = 0;
    for (const auto& x : v) m = std::max(m, ScalarTraits<K>::abs_upper(x));
    return m;
  }
}

// ||v /\ w||: Euclidean norm of the minor sequence over R/C, max absolute
// minor over Q_p. `upper` selects the pessimistic direction for uncertain
// p-adic minors.
template <typename K>
double wedge_norm(const Vec<K>& v, const Vec<K>& w, bool upper = true) {
  if (v.size() != w.size()) throw DimensionMismatch("wedge_norm");
  const std::size_t n = v.size();
  if constexpr (ScalarTraits<K>::archimedean) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double m = ScalarTraits<K>::abs_upper(v[i] * w[j] - v[j] * w[i]);
        s += m * m;
      }
    return std::sqrt(s);
  } else {
    double m = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        K minor = v[i] * w[j] - v[j] * w[i];
        m = std::max(m, upper ? ScalarTraits<K>::abs_upper(minor)
                              : ScalarTraits<K>::abs_lower(minor));
      }
    return m;
  }
}

// --- matrices ---------------------------------------------------------------

template <typename K>
struct Matrix {
  FieldDescriptor field;
  int n = 0;
  std::vector<K> a;  // row-major, n*n
  std::shared_ptr<Matrix<Rational>> shadow;  // optional exact-rational shadow

  Matrix() = default;
  Matrix(FieldDescriptor f, int dim)
      : field(f), n(dim), a(static_cast<std::size_t>(dim) * dim, ScalarTraits<K>::zero(f)) {}

  K& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const K& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static Matrix identity(const FieldDescriptor& f, int dim) {
    Matrix m(f, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = ScalarTraits<K>::one(f);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (n != o.n) throw DimensionMismatch("matrix product");
    Matrix r(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        K s = ScalarTraits<K>::zero(field);
        for (int k = 0; k < n; ++k) s = s + at(i, k) * o.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (static_cast<int>(v.size()) != n) throw DimensionMismatch("matrix apply");
    Vec<K> r(v.size(), ScalarTraits<K>::zero(field));
    for (int i = 0; i < n; ++i) {
      K s = ScalarTraits<K>::zero(field);
      for (int j = 0; j < n; ++j) s = s + at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  // f . g for a functional (row vector) f
  Vec<K> apply_left(const Vec<K>& f) const {
    if (static_cast<int>(f.size()) != n) throw DimensionMismatch("matrix apply_left");
    Vec<K> r(f.size(), ScalarTraits<K>::zero(field));
    for (int j = 0; j < n; ++j) {
      K s = ScalarTraits<K>::zero(field);
      for (int i = 0; i < n; ++i) s = s + f[i] * at(i, j);
      r[j] = s;
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  bool equals(const Matrix& o) const {
    if (n != o.n) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if constexpr (std::is_same_v<K, PadicScalar>) {
        if (!a[i].eq(o.a[i])) return false;
      } else {
        if (!(a[i] == o.a[i])) return false;
      }
    }
    return true;
  }
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;
using PadicMatrix = Matrix<PadicScalar>;
using RationalMatrix = Matrix<Rational>;

// Gaussian elimination; pivots on the entry of largest absolute value
// (equivalently minimal valuation over Q_p), ties broken row-major.
template <typename K>
Matrix<K> inverse(const Matrix<K>& g) {
  const int n = g.n;
  Matrix<K> A = g;
  Matrix<K> B = Matrix<K>::identity(g.field, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = -1;
    for (int r = col; r < n; ++r) {
      if (ScalarTraits<K>::is_zero(A.at(r, col))) continue;
      double mag = ScalarTraits<K>::abs_lower(A.at(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot < 0 || best <= 0) throw SingularMatrix();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(A.at(pivot, j), A.at(col, j));
        std::swap(B.at(pivot, j), B.at(col, j));
      }
    }
    K d = ScalarTraits<K>::inv(A.at(col, col));
    for (int j = 0; j < n; ++j) {
      A.at(col, j) = A.at(col, j) * d;
      B.at(col, j) = B.at(col, j) * d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      K f = A.at(r, col);
      if (ScalarTraits<K>::is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        A.at(r, j) = A.at(r, j) - f * A.at(col, j);
        B.at(r, j) = B.at(r, j) - f * B.at(col, j);
      }
    }
  }
  return B;
}

template <typename K>
K determinant(const Matrix<K>& g) {
  const int n = g.n;
  Matrix<K> A = g;
  K det = ScalarTraits<K>::one(g.field);
  bool flip = false;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    double best = -1;
    for (int r = col; r < n; ++r) {
      if (ScalarTraits<K>::is_zero(A.at(r, col))) continue;
      double mag = ScalarTraits<K>::abs_lower(A.at(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (pivot < 0) return ScalarTraits<K>::zero(g.field);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      flip = !flip;
    }
    det = det * A.at(col, col);
    K d = ScalarTraits<K>::inv(A.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      K f = A.at(r, col) * d;
      if (ScalarTraits<K>::is_zero(f)) continue;
      for (int j = col; j < n; ++j) A.at(r, j) = A.at(r, j) - f * A.at(col, j);
    }
  }
  if (flip) det = -det;
  return det;
}

template <typename K>
double max_entry_abs(const Matrix<K>& g) {
  double m = 0;
  for (const auto& x : g.a) m = std::max(m, ScalarTraits<K>::abs_upper(x));
  return m;
}

template <typename K>
double frobenius_norm(const Matrix<K>& g) {
  double s = 0;
  for (const auto& x : g.a) {
    double v = ScalarTraits<K>::abs_upper(x);
    s += v * v;
  }
  return std::sqrt(s);
}

// exact-rational -> float projection, keeping the exact matrix as shadow
RealMatrix project_to_real(const RationalMatrix& m);

RationalMatrix rational_identity(int n);

}  // namespace freecert

#endif  // FREECERT_MATRIX_HPP
