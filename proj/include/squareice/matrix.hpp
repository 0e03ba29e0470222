#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <vector>

#include "squareice/gaussian_rational.hpp"
#include "squareice/numeric_types.hpp"
#include "squareice/poly.hpp"
#include "squareice/root3.hpp"

namespace squareice {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

namespace detail {
// Exact division customization used by the fraction-free elimination.
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline GaussianRational ring_exact_div(const GaussianRational& a, const GaussianRational& b) { return a / b; }
inline Root3 ring_exact_div(const Root3& a, const Root3& b) { return a / b; }
inline Real ring_exact_div(const Real& a, const Real& b) { return a / b; }
inline Int ring_exact_div(const Int& a, const Int& b) {
  Int q, r;
  divide_qr(a, b, q, r);
  if (r != 0) throw std::domain_error("exact division failed over Int");
  return q;
}
template <class F>
Poly<F> ring_exact_div(const Poly<F>& a, const Poly<F>& b) {
  return exact_div(a, b);
}
template <class F>
Poly2<F> ring_exact_div(const Poly2<F>&, const Poly2<F>&) {
  // Only 2x2 bivariate determinants are needed, and those never divide.
  throw std::domain_error("exact division of bivariate polynomials is not supported");
}
}  // namespace detail

/// Exact determinant by Bareiss fraction-free elimination. Works over any
/// integral domain with exact division; intermediate entries stay minors of
/// the input, which bounds coefficient swell.
template <class T>
T det_bareiss(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      m.row(k).swap(m.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        T t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = (k == 0) ? t : detail::ring_exact_div(t, prev);
      }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? T(-d) : d;
}

struct LuResult {
  Real value;
  Real pivot_ratio;  // min |pivot| / max |pivot|
};

/// Determinant of a Real matrix by partially pivoted elimination, with the
/// pivot spread as a conditioning indicator.
inline LuResult det_lu(Matrix<Real> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_lu: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return {Real(1), Real(1)};
  Real det(1), pmin(0), pmax(0);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(best, k))) best = i;
    if (best != k) {
      m.row(k).swap(m.row(best));
      negate = !negate;
    }
    const Real piv = m(k, k);
    if (piv == 0) return {Real(0), Real(0)};
    const Real a = abs(piv);
    if (k == 0) {
      pmin = a;
      pmax = a;
    } else {
      if (a < pmin) pmin = a;
      if (a > pmax) pmax = a;
    }
    det *= piv;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Real f = m(i, k) / piv;
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return {negate ? Real(-det) : det, pmax == 0 ? Real(0) : Real(pmin / pmax)};
}

/// Copy of m with the given rows removed and only the first `cols` columns kept.
template <class T>
Matrix<T> minor_excluding(const Matrix<T>& m, Eigen::Index r1, Eigen::Index r2, Eigen::Index cols) {
  Matrix<T> out(m.rows() - 2, cols);
  Eigen::Index ri = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i == r1 || i == r2) continue;
    for (Eigen::Index j = 0; j < cols; ++j) out(ri, j) = m(i, j);
    ++ri;
  }
  return out;
}

/// Copy of m with one row and one column removed.
template <class T>
Matrix<T> minor_excluding_rc(const Matrix<T>& m, Eigen::Index row, Eigen::Index col) {
  Matrix<T> out(m.rows() - 1, m.cols() - 1);
  Eigen::Index ri = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    Eigen::Index cj = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(ri, cj++) = m(i, j);
    }
    ++ri;
  }
  return out;
}

}  // namespace squareice

namespace Eigen {

// Minimal scalar traits for the exact field types used inside matrices.
#define SQUAREICE_FIELD_NUMTRAITS(TYPE)                                   \
  template <>                                                             \
  struct NumTraits<TYPE> {                                                \
    using Real = TYPE;                                                    \
    using NonInteger = TYPE;                                              \
    using Literal = TYPE;                                                 \
    using Nested = TYPE;                                                  \
    enum {                                                                \
      IsComplex = 0,                                                      \
      IsInteger = 0,                                                      \
      IsSigned = 1,                                                       \
      RequireInitialization = 1,                                          \
      ReadCost = 8,                                                       \
      AddCost = 32,                                                       \
      MulCost = 32                                                        \
    };                                                                    \
    static inline TYPE epsilon() { return TYPE(0); }                      \
    static inline TYPE dummy_precision() { return TYPE(0); }              \
    static inline int digits10() { return 0; }                            \
  }

SQUAREICE_FIELD_NUMTRAITS(squareice::GaussianRational);
SQUAREICE_FIELD_NUMTRAITS(squareice::Root3);
SQUAREICE_FIELD_NUMTRAITS(squareice::Poly<squareice::Rational>);
SQUAREICE_FIELD_NUMTRAITS(squareice::Poly2<squareice::Rational>);

#undef SQUAREICE_FIELD_NUMTRAITS

}  // namespace Eigen
