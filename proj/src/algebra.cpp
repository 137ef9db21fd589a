#include "hopfmod/algebra.hpp"

namespace hopfmod {

VecQ StructureAlgebra::productBasisLeft(Index i, const VecQ& v) const {
  VecQ out = VecQ::Zero(dim);
  for (Index j = 0; j < dim; ++j) {
    if (v(j) == 0) continue;
    const auto col = mult.col(tensorIndex(i, dim, j));
    for (Index k = 0; k < dim; ++k)
      if (col(k) != 0) out(k) += v(j) * col(k);
  }
  return out;
}

VecQ StructureAlgebra::productBasisRight(const VecQ& v, Index j) const {
  VecQ out = VecQ::Zero(dim);
  for (Index i = 0; i < dim; ++i) {
    if (v(i) == 0) continue;
    const auto col = mult.col(tensorIndex(i, dim, j));
    for (Index k = 0; k < dim; ++k)
      if (col(k) != 0) out(k) += v(i) * col(k);
  }
  return out;
}

VecQ tensorSquareProduct(const StructureAlgebra& a, const VecQ& x, const VecQ& y) {
  const Index n = a.dim;
  VecQ out = VecQ::Zero(n * n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      const Rational& cx = x(tensorIndex(p, n, q));
      if (cx == 0) continue;
      for (Index r = 0; r < n; ++r)
        for (Index s = 0; s < n; ++s) {
          const Rational& cy = y(tensorIndex(r, n, s));
          if (cy == 0) continue;
          const Rational c = cx * cy;
          const VecQ left = a.basisProduct(p, r);
          const VecQ right = a.basisProduct(q, s);
          for (Index k = 0; k < n; ++k) {
            if (left(k) == 0) continue;
            for (Index l = 0; l < n; ++l)
              if (right(l) != 0) out(tensorIndex(k, n, l)) += c * left(k) * right(l);
          }
        }
    }
  return out;
}

VecQ tensorCubeProduct(const StructureAlgebra& a, const VecQ& x, const VecQ& y) {
  const Index n = a.dim;
  VecQ out = VecQ::Zero(n * n * n);
  for (Index i = 0; i < n * n * n; ++i) {
    if (x(i) == 0) continue;
    const Index p = i / (n * n), q = (i / n) % n, r = i % n;
    for (Index j = 0; j < n * n * n; ++j) {
      if (y(j) == 0) continue;
      const Index u = j / (n * n), v = (j / n) % n, w = j % n;
      const Rational c = x(i) * y(j);
      const VecQ f1 = a.basisProduct(p, u);
      const VecQ f2 = a.basisProduct(q, v);
      const VecQ f3 = a.basisProduct(r, w);
      for (Index k = 0; k < n; ++k) {
        if (f1(k) == 0) continue;
        for (Index l = 0; l < n; ++l) {
          if (f2(l) == 0) continue;
          const Rational cl = c * f1(k) * f2(l);
          for (Index m = 0; m < n; ++m)
            if (f3(m) != 0) out((k * n + l) * n + m) += cl * f3(m);
        }
      }
    }
  }
  return out;
}

void validateAlgebraShape(const StructureAlgebra& a) {
  if (a.mult.rows() != a.dim || a.mult.cols() != a.dim * a.dim)
    throw StructureError("algebra: mult tensor shape does not match dim");
  if (a.unit.size() != a.dim) throw StructureError("algebra: unit vector length does not match dim");
}

void validateCoalgebraShape(const StructureCoalgebra& c) {
  if (c.comult.rows() != c.dim * c.dim || c.comult.cols() != c.dim)
    throw StructureError("coalgebra: comult tensor shape does not match dim");
  if (c.counit.size() != c.dim) throw StructureError("coalgebra: counit length does not match dim");
}

Report checkAlgebra(const StructureAlgebra& a, std::size_t limit) {
  validateAlgebraShape(a);
  Report report(limit);
  const Index n = a.dim;
  for (Index i = 0; i < n && !report.full(); ++i) {
    const VecQ left = a.product(a.unit, unitVec(n, i));
    if (!sameMatrix(left, unitVec(n, i)))
      report.add("algebra/unit-left", {i}, left, unitVec(n, i));
    const VecQ right = a.product(unitVec(n, i), a.unit);
    if (!sameMatrix(right, unitVec(n, i)))
      report.add("algebra/unit-right", {i}, right, unitVec(n, i));
  }
  for (Index i = 0; i < n && !report.full(); ++i)
    for (Index j = 0; j < n && !report.full(); ++j) {
      const VecQ ij = a.basisProduct(i, j);
      for (Index k = 0; k < n && !report.full(); ++k) {
        const VecQ lhs = a.productBasisRight(ij, k);
        const VecQ rhs = a.productBasisLeft(i, a.basisProduct(j, k));
        if (!sameMatrix(lhs, rhs)) report.add("algebra/associativity", {i, j, k}, lhs, rhs);
      }
    }
  return report;
}

Report checkCoalgebra(const StructureCoalgebra& c, std::size_t limit) {
  validateCoalgebraShape(c);
  Report report(limit);
  const Index n = c.dim;
  const MatQ id = MatQ::Identity(n, n);
  const MatQ counitLeft = mulSparse(kron(c.counit, id), c.comult);
  if (!sameMatrix(counitLeft, id)) report.add("coalgebra/counit-left", {}, counitLeft, id);
  if (report.full()) return report;
  const MatQ counitRight = mulSparse(kron(id, c.counit), c.comult);
  if (!sameMatrix(counitRight, id)) report.add("coalgebra/counit-right", {}, counitRight, id);
  if (report.full()) return report;
  const MatQ lhs = mulSparse(kron(c.comult, id), c.comult);
  const MatQ rhs = mulSparse(kron(id, c.comult), c.comult);
  if (!sameMatrix(lhs, rhs)) report.add("coalgebra/coassociativity", {}, lhs, rhs);
  return report;
}

Report checkCommutative(const StructureAlgebra& a, std::size_t limit) {
  validateAlgebraShape(a);
  Report report(limit);
  for (Index i = 0; i < a.dim && !report.full(); ++i)
    for (Index j = i + 1; j < a.dim && !report.full(); ++j) {
      const VecQ ij = a.basisProduct(i, j);
      const VecQ ji = a.basisProduct(j, i);
      if (!sameMatrix(ij, ji)) report.add("algebra/commutativity", {i, j}, ij, ji);
    }
  return report;
}

}  // namespace hopfmod
