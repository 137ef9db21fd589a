#include "hopfmod/poisson.hpp"

namespace hopfmod {

void validatePoissonShape(const PoissonAlgebra& p) {
  validateAlgebraShape(p.algebra);
  if (p.bracket.rows() != p.dim() || p.bracket.cols() != p.dim() * p.dim())
    throw StructureError("poisson: bracket tensor shape does not match dim");
}

void validateModuleShape(const PoissonAlgebra& base, const PoissonModule& m) {
  validatePoissonShape(base);
  if (m.action.rows() != m.dim || m.action.cols() != m.dim * base.dim())
    throw StructureError("module: action tensor shape mismatch");
  if (m.lieAction.rows() != m.dim || m.lieAction.cols() != m.dim * base.dim())
    throw StructureError("module: lie action tensor shape mismatch");
}

Report checkPoissonAlgebra(const PoissonAlgebra& p, std::size_t limit) {
  validatePoissonShape(p);
  Report report(limit);
  report.merge(checkCommutative(p.algebra, limit));
  if (report.full()) return report;
  const Index n = p.dim();
  const StructureAlgebra& a = p.algebra;

  for (Index i = 0; i < n && !report.full(); ++i)
    for (Index j = i; j < n && !report.full(); ++j) {
      const VecQ sum = p.bracket.col(tensorIndex(i, n, j)) + p.bracket.col(tensorIndex(j, n, i));
      if (!isZero(sum))
        report.add("poisson/antisymmetry", {i, j}, p.bracket.col(tensorIndex(i, n, j)),
                   MatQ(-p.bracket.col(tensorIndex(j, n, i))));
    }
  if (report.full()) return report;

  for (Index i = 0; i < n && !report.full(); ++i)
    for (Index j = 0; j < n && !report.full(); ++j)
      for (Index k = 0; k < n && !report.full(); ++k) {
        // {b_i, {b_j, b_k}} + {b_j, {b_k, b_i}} + {b_k, {b_i, b_j}} = 0
        VecQ jac = p.bracketApply(unitVec(n, i), p.bracket.col(tensorIndex(j, n, k)));
        jac += p.bracketApply(unitVec(n, j), p.bracket.col(tensorIndex(k, n, i)));
        jac += p.bracketApply(unitVec(n, k), p.bracket.col(tensorIndex(i, n, j)));
        if (!isZero(jac)) report.add("poisson/jacobi", {i, j, k}, jac, MatQ(VecQ::Zero(n)));
      }
  if (report.full()) return report;

  for (Index i = 0; i < n && !report.full(); ++i)
    for (Index j = 0; j < n && !report.full(); ++j)
      for (Index k = 0; k < n && !report.full(); ++k) {
        // {b_i, b_j b_k} = b_j {b_i, b_k} + {b_i, b_j} b_k
        const VecQ lhs = p.bracketApply(unitVec(n, i), a.basisProduct(j, k));
        const VecQ rhs = a.productBasisLeft(j, p.bracket.col(tensorIndex(i, n, k))) +
                         a.productBasisRight(p.bracket.col(tensorIndex(i, n, j)), k);
        if (!sameMatrix(lhs, rhs)) report.add("poisson/leibniz", {i, j, k}, lhs, rhs);
      }
  return report;
}

Report checkPoissonModule(const PoissonAlgebra& base, const PoissonModule& m, std::size_t limit) {
  validateModuleShape(base, m);
  Report report(limit);
  const Index dm = m.dim, da = base.dim();
  const StructureAlgebra& a = base.algebra;

  for (Index i = 0; i < dm && !report.full(); ++i) {
    const VecQ u = m.act(unitVec(dm, i), a.unit);
    if (!sameMatrix(u, unitVec(dm, i))) report.add("module/unit", {i}, u, unitVec(dm, i));
  }
  if (report.full()) return report;

  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ miaj = m.action.col(tensorIndex(i, da, j));
      for (Index k = 0; k < da && !report.full(); ++k) {
        const VecQ lhs = m.act(miaj, unitVec(da, k));
        const VecQ rhs = m.act(unitVec(dm, i), a.basisProduct(j, k));
        if (!sameMatrix(lhs, rhs)) report.add("module/associativity", {i, j, k}, lhs, rhs);
      }
    }
  if (report.full()) return report;

  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ lie_ij = m.lieAction.col(tensorIndex(i, da, j));
      const VecQ act_ij = m.action.col(tensorIndex(i, da, j));
      for (Index k = 0; k < da && !report.full(); ++k) {
        const VecQ lie_ik = m.lieAction.col(tensorIndex(i, da, k));

        // m <> {a, a'} = (m <> a) <> a' - (m <> a') <> a
        const VecQ lieLhs = m.lie(unitVec(dm, i), base.bracket.col(tensorIndex(j, da, k)));
        const VecQ lieRhs = m.lie(lie_ij, unitVec(da, k)) - m.lie(lie_ik, unitVec(da, j));
        if (!sameMatrix(lieLhs, lieRhs))
          report.add("poisson-module/lie-law", {i, j, k}, lieLhs, lieRhs);
        if (report.full()) break;

        // (m a) <> a' = (m <> a') a + m {a, a'}
        const VecQ compatLhs = m.lie(act_ij, unitVec(da, k));
        const VecQ compatRhs = m.act(lie_ik, unitVec(da, j)) +
                               m.act(unitVec(dm, i), base.bracket.col(tensorIndex(j, da, k)));
        if (!sameMatrix(compatLhs, compatRhs))
          report.add("poisson-module/action-compat", {i, j, k}, compatLhs, compatRhs);
        if (report.full()) break;

        // m <> (a a') = (m <> a) a' + (m <> a') a
        const VecQ prodLhs = m.lie(unitVec(dm, i), a.basisProduct(j, k));
        const VecQ prodRhs = m.act(lie_ij, unitVec(da, k)) + m.act(lie_ik, unitVec(da, j));
        if (!sameMatrix(prodLhs, prodRhs))
          report.add("poisson-module/product-compat", {i, j, k}, prodLhs, prodRhs);
      }
    }
  if (report.full()) return report;

  // Derived: the unit acts trivially under the Lie action.
  const MatQ lieUnit = m.lieBy(a.unit);
  if (!isZero(lieUnit))
    report.add("poisson-module/unit-lie-trivial", {}, lieUnit, MatQ::Zero(dm, dm), true);
  return report;
}

Subspace poissonCenter(const PoissonAlgebra& p, Report* closure) {
  validatePoissonShape(p);
  const Index n = p.dim();
  MatQ stacked(n * n, n);
  for (Index j = 0; j < n; ++j)
    stacked.middleRows(j * n, n) = p.bracketRight(unitVec(n, j));
  const Subspace center = kernel(stacked);
  if (closure != nullptr) {
    for (Index r = 0; r < center.dim(); ++r)
      for (Index s = 0; s < center.dim(); ++s) {
        const VecQ u = center.basis().row(r).transpose();
        const VecQ v = center.basis().row(s).transpose();
        const VecQ prod = p.algebra.product(u, v);
        if (!center.contains(prod))
          closure->add("poisson-center/product-closure", {r, s}, prod, center.basis());
        const VecQ br = p.bracketApply(u, v);
        if (!center.contains(br))
          closure->add("poisson-center/bracket-closure", {r, s}, br, center.basis());
      }
  }
  return center;
}

Subspace lieInvariants(const PoissonModule& m) {
  const Index da = m.baseDim();
  MatQ stacked(da * m.dim, m.dim);
  for (Index j = 0; j < da; ++j)
    stacked.middleRows(j * m.dim, m.dim) = m.lieBy(unitVec(da, j));
  return kernel(stacked);
}

PoissonModule selfModule(const PoissonAlgebra& p) {
  return PoissonModule{p.dim(), p.algebra.mult, p.bracket};
}

}  // namespace hopfmod
