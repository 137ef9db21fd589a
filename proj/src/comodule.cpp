#include "hopfmod/comodule.hpp"

namespace hopfmod {

void validateComoduleShape(const WeakHopfAlgebra& h, Index dim, const MatQ& coaction) {
  validateWeakHopfShape(h);
  if (coaction.rows() != dim * h.dim() || coaction.cols() != dim)
    throw StructureError("comodule: coaction must be (dim * dimH) x dim");
}

void validateBundleShapes(const ComodulePoissonAlgebra& a) {
  validatePoissonShape(a.poisson);
  validateComoduleShape(a.hopf, a.dim(), a.coaction);
}

void validateBundleShapes(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m) {
  validateBundleShapes(a);
  validateModuleShape(a.poisson, m.module);
  validateComoduleShape(a.hopf, m.dim(), m.coaction);
}

PoissonHopfModule selfHopfModule(const ComodulePoissonAlgebra& a) {
  return PoissonHopfModule{selfModule(a.poisson), a.coaction};
}

Report checkComodule(const WeakHopfAlgebra& h, const MatQ& coaction, std::size_t limit) {
  const Index dim = coaction.cols();
  validateComoduleShape(h, dim, coaction);
  Report report(limit);
  const Index nh = h.dim();
  const MatQ idM = MatQ::Identity(dim, dim);

  // m_(0) eps(m_(1)) = m
  const MatQ counit = mulSparse(kron(idM, h.coalgebra().counit), coaction);
  if (!sameMatrix(counit, idM)) report.add("comodule/counit", {}, counit, idM);
  if (report.full()) return report;

  // (rho (x) id) rho = (id (x) Delta) rho
  const MatQ lhs = mulSparse(kron(coaction, MatQ::Identity(nh, nh)), coaction);
  const MatQ rhs = mulSparse(kron(idM, h.coalgebra().comult), coaction);
  if (!sameMatrix(lhs, rhs)) report.add("comodule/coassociativity", {}, lhs, rhs);
  return report;
}

Report checkComoduleAlgebra(const WeakHopfAlgebra& h, const StructureAlgebra& alg,
                            const MatQ& coaction, std::size_t limit) {
  validateAlgebraShape(alg);
  validateComoduleShape(h, alg.dim, coaction);
  Report report(limit);
  const Index n = alg.dim, nh = h.dim();
  const StructureAlgebra& ha = h.algebra();
  const VecQ rho1 = mulSparseVec(coaction, alg.unit);
  const MatQ epsT = h.epsilonTMatrix();

  // rho(ab) = rho(a) rho(b), products taken leg by leg in A (x) H
  for (Index i = 0; i < n && !report.full(); ++i)
    for (Index j = 0; j < n && !report.full(); ++j) {
      const VecQ lhs = mulSparseVec(coaction, alg.basisProduct(i, j));
      const VecQ rhs = pairTensor(
          coaction.col(i), nh, coaction.col(j), nh, n, nh,
          [&](Index u, Index p) { return alg.basisProduct(u, p); },
          [&](Index v, Index q) { return ha.basisProduct(v, q); });
      if (!sameMatrix(lhs, rhs)) report.add("comodule-algebra/multiplicative", {i, j}, lhs, rhs);
    }
  if (report.full()) return report;

  // 1_(0) a (x) 1_(1) = a_(0) (x) eps_t(a_(1))
  for (Index k = 0; k < n && !report.full(); ++k) {
    VecQ lhs = VecQ::Zero(n * nh);
    for (Index idx = 0; idx < rho1.size(); ++idx) {
      if (rho1(idx) == 0) continue;
      const Index u = idx / nh, v = idx % nh;
      lhs += rho1(idx) * kronVec(alg.basisProduct(u, k), unitVec(nh, v));
    }
    const VecQ rhs = mulSparseVec(kron(MatQ::Identity(n, n), epsT), coaction.col(k));
    if (!sameMatrix(lhs, rhs)) report.add("comodule-algebra/unit-coaction", {k}, lhs, rhs);
  }
  if (report.full()) return report;

  // Equivalent one-sided form: 1_(0) (x) Delta(1_(1)) = 1_(0) (x) 1_1 1_(1) (x) 1_2
  {
    const VecQ lhs = mulSparseVec(kron(MatQ::Identity(n, n), h.coalgebra().comult), rho1);
    const VecQ d1 = h.delta1();
    VecQ rhs = VecQ::Zero(n * nh * nh);
    for (Index idx = 0; idx < rho1.size(); ++idx) {
      if (rho1(idx) == 0) continue;
      const Index u = idx / nh, v = idx % nh;
      for (Index d = 0; d < d1.size(); ++d) {
        if (d1(d) == 0) continue;
        const Index i = d / nh, j = d % nh;
        const VecQ mid = ha.basisProduct(i, v);  // 1_1 1_(1)
        const Rational c = rho1(idx) * d1(d);
        for (Index t = 0; t < nh; ++t)
          if (mid(t) != 0) rhs((u * nh + t) * nh + j) += c * mid(t);
      }
    }
    if (!sameMatrix(lhs, rhs)) report.add("comodule-algebra/unit-coaction-split", {}, lhs, rhs);
  }
  if (report.full()) return report;

  // a_(0) eps(a_(1) x) = a 1_(0) eps(1_(1) x)
  for (Index k = 0; k < n && !report.full(); ++k)
    for (Index l = 0; l < nh && !report.full(); ++l) {
      VecQ lhs = VecQ::Zero(n);
      for (Index idx = 0; idx < coaction.rows(); ++idx) {
        if (coaction(idx, k) == 0) continue;
        const Index u = idx / nh, v = idx % nh;
        const Rational e = dotRow(h.coalgebra().counit, ha.basisProduct(v, l));
        if (e != 0) lhs(u) += coaction(idx, k) * e;
      }
      VecQ rhs = VecQ::Zero(n);
      for (Index idx = 0; idx < rho1.size(); ++idx) {
        if (rho1(idx) == 0) continue;
        const Index u = idx / nh, v = idx % nh;
        const Rational e = dotRow(h.coalgebra().counit, ha.basisProduct(v, l));
        if (e != 0) rhs += rho1(idx) * e * alg.basisProduct(k, u);
      }
      if (!sameMatrix(lhs, rhs)) report.add("comodule-algebra/counit-absorb", {k, l}, lhs, rhs);
    }
  return report;
}

Report checkComodulePoisson(const ComodulePoissonAlgebra& a, std::size_t limit) {
  validateBundleShapes(a);
  Report report(limit);
  const Index n = a.dim(), nh = a.hopf.dim();
  const StructureAlgebra& ha = a.hopf.algebra();

  // {a, a'}_(0) (x) {a, a'}_(1) = {a_(0), a'_(0)} (x) a_(1) a'_(1)
  for (Index i = 0; i < n && !report.full(); ++i)
    for (Index j = 0; j < n && !report.full(); ++j) {
      const VecQ lhs = mulSparseVec(a.coaction, a.poisson.bracket.col(tensorIndex(i, n, j)));
      const VecQ rhs = pairTensor(
          a.coaction.col(i), nh, a.coaction.col(j), nh, n, nh,
          [&](Index u, Index p) { return a.poisson.bracket.col(tensorIndex(u, n, p)); },
          [&](Index v, Index q) { return ha.basisProduct(v, q); });
      if (!sameMatrix(lhs, rhs)) report.add("comodule-poisson/bracket-coaction", {i, j}, lhs, rhs);
    }
  return report;
}

Report checkPoissonHopfModule(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                              std::size_t limit) {
  validateBundleShapes(a, m);
  Report report(limit);
  const Index dm = m.dim(), da = a.dim(), nh = a.hopf.dim();
  const StructureAlgebra& ha = a.hopf.algebra();

  // (a m)_(0) (x) (a m)_(1) = a_(0) m_(0) (x) a_(1) m_(1)
  for (Index j = 0; j < da && !report.full(); ++j)
    for (Index i = 0; i < dm && !report.full(); ++i) {
      const VecQ lhs = mulSparseVec(m.coaction, m.module.action.col(tensorIndex(i, da, j)));
      const VecQ rhs = pairTensor(
          a.coaction.col(j), nh, m.coaction.col(i), nh, dm, nh,
          [&](Index u, Index p) { return m.module.action.col(tensorIndex(p, da, u)); },
          [&](Index v, Index q) { return ha.basisProduct(v, q); });
      if (!sameMatrix(lhs, rhs)) report.add("hopf-module/action-coaction", {j, i}, lhs, rhs);
    }
  if (report.full()) return report;

  // (m <> a)_(0) (x) (m <> a)_(1) = m_(0) <> a_(0) (x) m_(1) a_(1)
  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ lhs = mulSparseVec(m.coaction, m.module.lieAction.col(tensorIndex(i, da, j)));
      const VecQ rhs = pairTensor(
          m.coaction.col(i), nh, a.coaction.col(j), nh, dm, nh,
          [&](Index p, Index u) { return m.module.lieAction.col(tensorIndex(p, da, u)); },
          [&](Index q, Index v) { return ha.basisProduct(q, v); });
      if (!sameMatrix(lhs, rhs)) report.add("poisson-hopf/lie-coaction", {i, j}, lhs, rhs);
    }
  return report;
}

Subspace coinvariants(const WeakHopfAlgebra& h, const MatQ& coaction) {
  const Index dim = coaction.cols(), nh = h.dim();
  const MatQ epsT = h.epsilonTMatrix();
  const MatQ diff =
      coaction - mulSparse(kron(MatQ::Identity(dim, dim), epsT), coaction);
  (void)nh;
  return kernel(diff);
}

Subspace coinvariantsViaUnit(const WeakHopfAlgebra& h, const VecQ& unitCoaction,
                             const PoissonModule& mod, const MatQ& coaction) {
  const Index dm = mod.dim, nh = h.dim();
  MatQ viaUnit = MatQ::Zero(dm * nh, dm);
  for (Index idx = 0; idx < unitCoaction.size(); ++idx) {
    if (unitCoaction(idx) == 0) continue;
    const Index u = idx / nh, v = idx % nh;
    const MatQ actBy = mod.actionBy(unitVec(mod.baseDim(), u));
    MatQ hleg = MatQ::Zero(nh, 1);
    hleg(v, 0) = unitCoaction(idx);
    viaUnit += kron(actBy, hleg);
  }
  return kernel(MatQ(coaction - viaUnit));
}

Report checkCoinvariantAgreement(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                 std::size_t limit) {
  validateBundleShapes(a, m);
  Report report(limit);
  const Subspace viaCounital = coinvariants(a.hopf, m.coaction);
  const Subspace viaUnit = coinvariantsViaUnit(a.hopf, a.unitCoaction(), m.module, m.coaction);
  if (!(viaCounital == viaUnit))
    report.add("coinvariants/characterizations-agree", {}, viaCounital.basis(), viaUnit.basis());
  return report;
}

Subspace fullCoinvariants(const WeakHopfAlgebra& h, const PoissonModule& mod,
                          const MatQ& coaction) {
  return coinvariants(h, coaction).intersect(lieInvariants(mod));
}

Report checkCoinvariantClosure(const ComodulePoissonAlgebra& a, std::size_t limit) {
  validateBundleShapes(a);
  Report report(limit);
  const Subspace coinv = coinvariants(a.hopf, a.coaction);
  const Subspace lifted = kronWithIdentity(coinv, a.hopf.dim());
  for (Index r = 0; r < coinv.dim() && !report.full(); ++r) {
    const VecQ v = coinv.basis().row(r).transpose();
    const VecQ img = mulSparseVec(a.coaction, v);
    if (!lifted.contains(img))
      report.add("coinvariants/subcomodule", {r}, img, lifted.basis());
    for (Index s = 0; s < coinv.dim() && !report.full(); ++s) {
      const VecQ w = coinv.basis().row(s).transpose();
      const VecQ prod = a.algebra().product(v, w);
      if (!coinv.contains(prod))
        report.add("coinvariants/product-closure", {r, s}, prod, coinv.basis());
      const VecQ br = a.poisson.bracketApply(v, w);
      if (!coinv.contains(br))
        report.add("coinvariants/bracket-closure", {r, s}, br, coinv.basis());
    }
  }
  return report;
}

Report checkInvariantSubmoduleClosure(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                      std::size_t limit) {
  validateBundleShapes(a, m);
  Report report(limit);
  const Index nh = a.hopf.dim();

  // Lie invariants of M form a subcomodule.
  const Subspace mInv = lieInvariants(m.module);
  const Subspace mInvLift = kronWithIdentity(mInv, nh);
  for (Index r = 0; r < mInv.dim() && !report.full(); ++r) {
    const VecQ img = mulSparseVec(m.coaction, VecQ(mInv.basis().row(r).transpose()));
    if (!mInvLift.contains(img))
      report.add("lie-invariants/subcomodule", {r}, img, mInvLift.basis());
  }
  if (report.full()) return report;

  // The Poisson center of the base is a subcomodule Poisson algebra, and the
  // full coinvariants of the base form a subalgebra.
  Report centerClosure(report.limit());
  const Subspace center = poissonCenter(a.poisson, &centerClosure);
  report.merge(centerClosure);
  if (report.full()) return report;
  const Subspace centerLift = kronWithIdentity(center, nh);
  for (Index r = 0; r < center.dim() && !report.full(); ++r) {
    const VecQ img = mulSparseVec(a.coaction, VecQ(center.basis().row(r).transpose()));
    if (!centerLift.contains(img))
      report.add("poisson-center/subcomodule", {r}, img, centerLift.basis());
  }
  if (report.full()) return report;

  const Subspace baseFull = fullCoinvariants(a.hopf, selfModule(a.poisson), a.coaction);
  for (Index r = 0; r < baseFull.dim() && !report.full(); ++r)
    for (Index s = 0; s < baseFull.dim() && !report.full(); ++s) {
      const VecQ prod = a.algebra().product(VecQ(baseFull.basis().row(r).transpose()),
                                            VecQ(baseFull.basis().row(s).transpose()));
      if (!baseFull.contains(prod))
        report.add("base-full-coinvariants/product-closure", {r, s}, prod, baseFull.basis());
    }
  if (report.full()) return report;

  // Full coinvariants of M are a module over the full coinvariants of the
  // base, and the Lie action by the base coinvariants kills them.
  const Subspace mFull = fullCoinvariants(a.hopf, m.module, m.coaction);
  for (Index r = 0; r < mFull.dim() && !report.full(); ++r)
    for (Index s = 0; s < baseFull.dim() && !report.full(); ++s) {
      const VecQ mv = mFull.basis().row(r).transpose();
      const VecQ bv = baseFull.basis().row(s).transpose();
      const VecQ acted = m.module.act(mv, bv);
      if (!mFull.contains(acted))
        report.add("full-coinvariants/action-closure", {r, s}, acted, mFull.basis());
      const VecQ lied = m.module.lie(mv, bv);
      if (!isZero(lied))
        report.add("full-coinvariants/lie-annihilation", {r, s}, lied, VecQ::Zero(m.dim()));
    }
  return report;
}

}  // namespace hopfmod
