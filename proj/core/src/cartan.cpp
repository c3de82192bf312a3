#include "freecert/cartan.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "freecert/config.hpp"

namespace freecert {

RealMatrix project_to_real(const RationalMatrix& m) {
  RealMatrix r(FieldDescriptor::real(), m.n);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = to_double(m.a[i]);
  r.shadow = std::make_shared<RationalMatrix>(m);
  return r;
}

RationalMatrix rational_identity(int n) {
  return RationalMatrix::identity(FieldDescriptor::real(), n);
}

namespace {

template <typename K, typename EigenMat>
EigenMat to_eigen(const Matrix<K>& m) {
  EigenMat e(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) e(i, j) = m.at(i, j);
  return e;
}

template <typename K, typename EigenMat>
Matrix<K> from_eigen(const EigenMat& e, const FieldDescriptor& f) {
  Matrix<K> m(f, static_cast<int>(e.rows()));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) m.at(i, j) = e(i, j);
  return m;
}

template <typename K, typename EigenMat>
CartanDecomposition<K> cartan_svd(const Matrix<K>& g) {
  EigenMat eg = to_eigen<K, EigenMat>(g);
  Eigen::JacobiSVD<EigenMat> svd(eg, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int n = g.n;
  double eta = g.field.eta > 0 ? g.field.eta : 1e-12;
  // invertibility margin at machine scale; certificate margins use eta
  if (sv(n - 1) <= n * 1e-15 * sv(0)) throw SingularMatrix();

  CartanDecomposition<K> d;
  d.k1 = from_eigen<K, EigenMat>(svd.matrixU(), g.field);
  d.k2 = from_eigen<K, EigenMat>(EigenMat(svd.matrixV().adjoint()), g.field);
  d.a.reserve(n);
  for (int i = 0; i < n; ++i) d.a.push_back(K(sv(i)));

  EigenMat scaled_u = svd.matrixU();
  for (int j = 0; j < n; ++j) scaled_u.col(j) *= sv(j);
  EigenMat rec = scaled_u * svd.matrixV().adjoint();
  double res = (rec - eg).cwiseAbs().maxCoeff();
  d.residual = widen_up(res, eta);
  return d;
}

}  // namespace

CartanDecomposition<double> cartan(const RealMatrix& g) {
  return cartan_svd<double, Eigen::MatrixXd>(g);
}

CartanDecomposition<std::complex<double>> cartan(const ComplexMatrix& g) {
  return cartan_svd<std::complex<double>, Eigen::MatrixXcd>(g);
}

// Smith-style reduction over Z_p: row/column operations with coefficients in
// Z_p (so the accumulated factors stay in GL_n(Z_p)), pivoting on the entry
// of minimal valuation, ties row-major. The diagonal comes out as pure
// p-powers with nonincreasing absolute value; the pivot units are folded
// into k2.
CartanDecomposition<PadicScalar> cartan(const PadicMatrix& g) {
  const int n = g.n;
  const FieldDescriptor& f = g.field;
  PadicMatrix A = g;
  PadicMatrix L = PadicMatrix::identity(f, n);
  PadicMatrix R = PadicMatrix::identity(f, n);

  for (int i = 0; i < n; ++i) {
    int pr = -1, pc = -1;
    long bestv = 0;
    for (int r = i; r < n; ++r)
      for (int c = i; c < n; ++c) {
        const PadicScalar& x = A.at(r, c);
        if (!x.is_regular()) continue;
        if (pr < 0 || x.valuation() < bestv) {
          bestv = x.valuation();
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) {
      bool any_below = false;
      for (int r = i; r < n; ++r)
        for (int c = i; c < n; ++c)
          if (A.at(r, c).is_below()) any_below = true;
      if (any_below) throw PrecisionExhausted("p-adic Cartan pivot digits exhausted");
      throw SingularMatrix();
    }
    if (pr != i) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pr, j), A.at(i, j));
      for (int j = 0; j < n; ++j) std::swap(L.at(j, pr), L.at(j, i));  // L <- L * P
    }
    if (pc != i) {
      for (int j = 0; j < n; ++j) std::swap(A.at(j, pc), A.at(j, i));
      for (int j = 0; j < n; ++j) std::swap(R.at(pc, j), R.at(i, j));  // R <- P * R
    }
    PadicScalar piv_inv = A.at(i, i).inv();
    for (int r = i + 1; r < n; ++r) {
      const PadicScalar& x = A.at(r, i);
      if (!x.is_regular()) continue;
      PadicScalar fct = x * piv_inv;  // in Z_p: pivot valuation minimal
      for (int j = 0; j < n; ++j) A.at(r, j) = A.at(r, j) - fct * A.at(i, j);
      // A <- E A with E = I - fct e_r e_i^T, so L <- L E^{-1} = L (I + fct e_r e_i^T)
      for (int j = 0; j < n; ++j) L.at(j, i) = L.at(j, i) + L.at(j, r) * fct;
    }
    for (int c = i + 1; c < n; ++c) {
      const PadicScalar& x = A.at(i, c);
      if (!x.is_regular()) continue;
      PadicScalar fct = x * piv_inv;
      for (int j = 0; j < n; ++j) A.at(j, c) = A.at(j, c) - A.at(j, i) * fct;
      // A <- A E with E = I - fct e_i e_c^T, so R <- E^{-1} R = (I + fct e_i e_c^T) R
      for (int j = 0; j < n; ++j) R.at(i, j) = R.at(i, j) + fct * R.at(c, j);
    }
  }

  CartanDecomposition<PadicScalar> d;
  d.k1 = L;
  d.k2 = PadicMatrix(f, n);
  d.a.reserve(n);
  for (int i = 0; i < n; ++i) {
    const PadicScalar& piv = A.at(i, i);
    d.a.push_back(PadicScalar::from_parts(f.p, f.precision, piv.valuation(), 1, f.precision));
    // fold the pivot unit into k2's i-th row
    PadicScalar u = PadicScalar::from_parts(f.p, f.precision, 0, piv.unit(), piv.digits());
    for (int j = 0; j < n; ++j) d.k2.at(i, j) = u * R.at(i, j);
  }

  // certified entrywise residual of k1 diag(a) k2 - g
  PadicMatrix D(f, n);
  for (int i = 0; i < n; ++i) D.at(i, i) = d.a[static_cast<std::size_t>(i)];
  PadicMatrix rec = d.k1 * D * d.k2;
  double res = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PadicScalar diff = rec.at(i, j) - g.at(i, j);
      res = std::max(res, diff.abs_upper());
    }
  d.residual = res;
  return d;
}

}  // namespace freecert
