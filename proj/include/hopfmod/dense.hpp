#pragma once

// Dense exact-rational matrices and the tensor-index conventions shared by
// every structure in the library.
//
// Tensor convention: a basis pair (i, j) of X (x) Y sits at flat index
// i * dimY + j (first factor major). kron() below agrees with this, so a
// vector of X (x) Y is kron(x, y) and a map X (x) Y -> X' (x) Y' is
// kron(f, g). Nothing else in the code base is allowed to reorder legs.

#include "hopfmod/rational.hpp"

#include <Eigen/Dense>

namespace hopfmod {

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVecQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

inline Index tensorIndex(Index i, Index dimJ, Index j) { return i * dimJ + j; }

template <typename Derived>
bool isZero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename A, typename B>
bool sameMatrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Kronecker product, first factor major. Skips zero entries of `a`, which
/// is what keeps the structure-constant arithmetic fast: catalog tensors
/// are mostly zeros.
inline MatQ kron(const MatQ& a, const MatQ& b) {
  MatQ out = MatQ::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index ja = 0; ja < a.cols(); ++ja)
    for (Index ia = 0; ia < a.rows(); ++ia) {
      const Rational& c = a(ia, ja);
      if (c == 0) continue;
      for (Index jb = 0; jb < b.cols(); ++jb)
        for (Index ib = 0; ib < b.rows(); ++ib) {
          if (b(ib, jb) == 0) continue;
          out(ia * b.rows() + ib, ja * b.cols() + jb) = c * b(ib, jb);
        }
    }
  return out;
}

inline VecQ kronVec(const VecQ& a, const VecQ& b) {
  VecQ out = VecQ::Zero(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) == 0) continue;
    for (Index j = 0; j < b.size(); ++j) {
      if (b(j) == 0) continue;
      out(i * b.size() + j) = a(i) * b(j);
    }
  }
  return out;
}

// A bilinear structure tensor t maps basis pairs to vectors: column
// tensorIndex(i, dimR, j) of t holds t(e_i, e_j). The three helpers below
// evaluate t on vectors, or curry one argument into a matrix.

inline VecQ bilinearApply(const MatQ& t, const VecQ& u, const VecQ& v) {
  const Index dimR = v.size();
  VecQ out = VecQ::Zero(t.rows());
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i) == 0) continue;
    for (Index j = 0; j < dimR; ++j) {
      if (v(j) == 0) continue;
      const Rational c = u(i) * v(j);
      const auto col = t.col(tensorIndex(i, dimR, j));
      for (Index k = 0; k < t.rows(); ++k)
        if (col(k) != 0) out(k) += c * col(k);
    }
  }
  return out;
}

/// Matrix of x -> t(u, x).
inline MatQ bilinearLeft(const MatQ& t, const VecQ& u, Index dimR) {
  MatQ out = MatQ::Zero(t.rows(), dimR);
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i) == 0) continue;
    for (Index j = 0; j < dimR; ++j) {
      const auto col = t.col(tensorIndex(i, dimR, j));
      for (Index k = 0; k < t.rows(); ++k)
        if (col(k) != 0) out(k, j) += u(i) * col(k);
    }
  }
  return out;
}

/// Matrix of x -> t(x, v).
inline MatQ bilinearRight(const MatQ& t, Index dimL, const VecQ& v) {
  const Index dimR = v.size();
  MatQ out = MatQ::Zero(t.rows(), dimL);
  for (Index j = 0; j < dimR; ++j) {
    if (v(j) == 0) continue;
    for (Index i = 0; i < dimL; ++i) {
      const auto col = t.col(tensorIndex(i, dimR, j));
      for (Index k = 0; k < t.rows(); ++k)
        if (col(k) != 0) out(k, i) += v(j) * col(k);
    }
  }
  return out;
}

/// Extracts from a bilinear tensor the matrix of x -> t(x, e_j).
inline MatQ bilinearRightBasis(const MatQ& t, Index dimL, Index dimR, Index j) {
  MatQ out(t.rows(), dimL);
  for (Index i = 0; i < dimL; ++i) out.col(i) = t.col(tensorIndex(i, dimR, j));
  return out;
}

/// Sparse-aware matrix product; worthwhile because almost every structure
/// matrix here is a signed permutation plus a little.
inline MatQ mulSparse(const MatQ& a, const MatQ& b) {
  MatQ out = MatQ::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j)
    for (Index k = 0; k < a.cols(); ++k) {
      const Rational& c = b(k, j);
      if (c == 0) continue;
      for (Index i = 0; i < a.rows(); ++i)
        if (a(i, k) != 0) out(i, j) += a(i, k) * c;
    }
  return out;
}

inline VecQ mulSparseVec(const MatQ& a, const VecQ& v) {
  VecQ out = VecQ::Zero(a.rows());
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) == 0) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, k) != 0) out(i) += a(i, k) * v(k);
  }
  return out;
}

inline VecQ unitVec(Index dim, Index i) {
  VecQ v = VecQ::Zero(dim);
  v(i) = 1;
  return v;
}

/// Pairs two tensors leg by leg: for x in X1 (x) X2 and y in Y1 (x) Y2,
/// returns sum x_(u,v) y_(p,q) first(u,p) (x) second(v,q). This is the one
/// place that combines coaction legs with products, brackets, or actions;
/// `first(u,p)` and `second(v,q)` return the component vectors.
template <typename F1, typename F2>
VecQ pairTensor(const VecQ& x, Index x2, const VecQ& y, Index y2,
                Index out1, Index out2, F1&& first, F2&& second) {
  VecQ out = VecQ::Zero(out1 * out2);
  for (Index xi = 0; xi < x.size(); ++xi) {
    if (x(xi) == 0) continue;
    const Index u = xi / x2, v = xi % x2;
    for (Index yi = 0; yi < y.size(); ++yi) {
      if (y(yi) == 0) continue;
      const Index p = yi / y2, q = yi % y2;
      const Rational c = x(xi) * y(yi);
      const VecQ a = first(u, p);
      const VecQ b = second(v, q);
      for (Index i = 0; i < out1; ++i) {
        if (a(i) == 0) continue;
        for (Index j = 0; j < out2; ++j)
          if (b(j) != 0) out(i * out2 + j) += c * a(i) * b(j);
      }
    }
  }
  return out;
}

inline Rational dotRow(const RowVecQ& r, const VecQ& v) {
  Rational out = 0;
  for (Index i = 0; i < v.size(); ++i)
    if (r(i) != 0 && v(i) != 0) out += r(i) * v(i);
  return out;
}

/// Permutation matrix sending X (x) Y to Y (x) X for dim X = a, dim Y = b.
inline MatQ legSwap(Index a, Index b) {
  MatQ out = MatQ::Zero(a * b, a * b);
  for (Index i = 0; i < a; ++i)
    for (Index j = 0; j < b; ++j)
      out(j * a + i, i * b + j) = 1;
  return out;
}

}  // namespace hopfmod
