#include "hopfmod/fundamental.hpp"

namespace hopfmod {

Report validatePhi(const ComodulePoissonAlgebra& a, const MatQ& phi, const PhiRequirements& req,
                   std::size_t limit) {
  validateBundleShapes(a);
  const Index n = a.dim(), nh = a.hopf.dim();
  if (phi.rows() != n || phi.cols() != nh)
    throw StructureError("phi must be a dimA x dimH matrix");
  Report report(limit);
  const StructureAlgebra& ha = a.hopf.algebra();

  bool colinearOk = false, unitOk = false;
  if (req.colinear) {
    const MatQ lhs = mulSparse(a.coaction, phi);
    const MatQ rhs = mulSparse(kron(phi, MatQ::Identity(nh, nh)), a.hopf.coalgebra().comult);
    colinearOk = sameMatrix(lhs, rhs);
    if (!colinearOk) report.add("integral/colinear", {}, lhs, rhs);
    if (report.full()) return report;
  }
  if (req.algebraMap) {
    for (Index i = 0; i < nh && !report.full(); ++i)
      for (Index j = 0; j < nh && !report.full(); ++j) {
        const VecQ lhs = mulSparseVec(phi, ha.basisProduct(i, j));
        const VecQ rhs = a.algebra().product(phi.col(i), phi.col(j));
        if (!sameMatrix(lhs, rhs)) report.add("integral/algebra-map", {i, j}, lhs, rhs);
      }
    if (report.full()) return report;
  }
  if (req.unitPreserving) {
    const VecQ phi1 = mulSparseVec(phi, ha.unit);
    unitOk = sameMatrix(phi1, a.algebra().unit);
    if (!unitOk) report.add("integral/unit", {}, phi1, a.algebra().unit);
    if (report.full()) return report;
  }
  if (req.normalized) {
    const VecQ rho1 = a.unitCoaction();
    VecQ acc = VecQ::Zero(n);
    for (Index idx = 0; idx < rho1.size(); ++idx) {
      if (rho1(idx) == 0) continue;
      const Index u = idx / nh, v = idx % nh;
      acc += rho1(idx) * a.algebra().product(unitVec(n, u), phi.col(v));
    }
    if (!sameMatrix(acc, a.algebra().unit))
      report.add("integral/normalized", {}, acc, a.algebra().unit);
    if (report.full()) return report;
  }
  if (req.imageCentral) {
    const Subspace center = poissonCenter(a.poisson);
    for (Index j = 0; j < nh && !report.full(); ++j)
      if (!center.contains(phi.col(j)))
        report.add("integral/image-central", {j}, phi.col(j), center.basis());
    if (report.full()) return report;
  }
  if (colinearOk && unitOk) {
    // Derived: rho(1) = phi(1_1) (x) 1_2.
    const VecQ d1 = a.hopf.delta1();
    VecQ rhs = VecQ::Zero(n * nh);
    for (Index idx = 0; idx < d1.size(); ++idx) {
      if (d1(idx) == 0) continue;
      rhs += d1(idx) * kronVec(phi.col(idx / nh), unitVec(nh, idx % nh));
    }
    const VecQ lhs = a.unitCoaction();
    if (!sameMatrix(lhs, rhs))
      report.add("integral/unit-coaction-factors", {}, lhs, rhs, true);
  }
  return report;
}

MatQ coinvariantProjection(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                           const MatQ& phi) {
  validateBundleShapes(a, m);
  const Index dm = m.dim(), nh = a.hopf.dim();
  const MatQ& s = a.hopf.antipode;
  MatQ p = MatQ::Zero(dm, dm);
  for (Index j = 0; j < dm; ++j) {
    const auto rhoCol = m.coaction.col(j);
    VecQ acc = VecQ::Zero(dm);
    for (Index idx = 0; idx < rhoCol.size(); ++idx) {
      if (rhoCol(idx) == 0) continue;
      const Index i = idx / nh, k = idx % nh;
      acc += rhoCol(idx) * m.module.act(unitVec(dm, i), mulSparseVec(phi, s.col(k)));
    }
    p.col(j) = acc;
  }
  return p;
}

Report checkProjection(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                       const MatQ& phi, std::size_t limit) {
  Report report(limit);
  const MatQ p = coinvariantProjection(a, m, phi);
  const MatQ p2 = mulSparse(p, p);
  if (!sameMatrix(p2, p)) report.add("projection/idempotent", {}, p2, p);
  if (report.full()) return report;

  const Subspace coinv = coinvariants(a.hopf, m.coaction);
  const Subspace img = image(p);
  if (!(img == coinv)) report.add("projection/image-is-coinvariants", {}, img.basis(), coinv.basis());
  if (report.full()) return report;

  for (Index r = 0; r < coinv.dim() && !report.full(); ++r) {
    const VecQ v = coinv.basis().row(r).transpose();
    const VecQ pv = mulSparseVec(p, v);
    if (!sameMatrix(pv, v)) report.add("projection/fixes-coinvariants", {r}, pv, v);
  }
  return report;
}

MatQ deformedLieTensor(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                       const MatQ& phi) {
  const MatQ p = coinvariantProjection(a, m, phi);
  const Index dm = m.dim(), da = a.dim();
  MatQ deformed = MatQ::Zero(dm, dm * da);
  for (Index c = 0; c < dm * da; ++c)
    deformed.col(c) = mulSparseVec(p, m.module.lieAction.col(c));
  return deformed;
}

Report checkDeformedLie(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                        const MatQ& phi, std::size_t limit) {
  validateBundleShapes(a, m);
  Report report(limit);
  const Index dm = m.dim(), da = a.dim(), nh = a.hopf.dim();
  const MatQ pM = coinvariantProjection(a, m, phi);
  const PoissonHopfModule aSelf = selfHopfModule(a);
  const MatQ pA = coinvariantProjection(a, aSelf, phi);
  const MatQ deformed = deformedLieTensor(a, m, phi);
  const MatQ s2 = mulSparse(a.hopf.antipode, a.hopf.antipode);

  // p_M(m a) = p_M(m) p_A(a)
  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ lhs = mulSparseVec(pM, m.module.action.col(tensorIndex(i, da, j)));
      const VecQ rhs = m.module.act(pM.col(i), pA.col(j));
      if (!sameMatrix(lhs, rhs))
        report.add("deformed-lie/projection-multiplicative", {i, j}, lhs, rhs);
    }
  if (report.full()) return report;

  // p_M(m) <>' a = p_M(m <> a) = m <>' a
  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ viaProj = bilinearApply(deformed, pM.col(i), unitVec(da, j));
      const VecQ direct = deformed.col(tensorIndex(i, da, j));
      if (!sameMatrix(viaProj, direct))
        report.add("deformed-lie/projection-absorbed", {i, j}, viaProj, direct);
    }
  if (report.full()) return report;

  // <>' satisfies the Lie-module law
  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j)
      for (Index k = 0; k < da && !report.full(); ++k) {
        const VecQ lhs =
            bilinearApply(deformed, unitVec(dm, i), a.poisson.bracket.col(tensorIndex(j, da, k)));
        const VecQ rhs =
            bilinearApply(deformed, deformed.col(tensorIndex(i, da, j)), unitVec(da, k)) -
            bilinearApply(deformed, deformed.col(tensorIndex(i, da, k)), unitVec(da, j));
        if (!sameMatrix(lhs, rhs)) report.add("deformed-lie/lie-law", {i, j, k}, lhs, rhs);
      }
  if (report.full()) return report;

  // p_M(m) <> a = (p_M(m) <>' a_(0)) . phi(S^2(a_(1)))
  for (Index i = 0; i < dm && !report.full(); ++i)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ lhs = m.module.lie(pM.col(i), unitVec(da, j));
      const auto rhoCol = a.coaction.col(j);
      VecQ rhs = VecQ::Zero(dm);
      for (Index idx = 0; idx < rhoCol.size(); ++idx) {
        if (rhoCol(idx) == 0) continue;
        const Index u = idx / nh, v = idx % nh;
        const VecQ inner = bilinearApply(deformed, pM.col(i), unitVec(da, u));
        rhs += rhoCol(idx) * m.module.act(inner, mulSparseVec(phi, s2.col(v)));
      }
      if (!sameMatrix(lhs, rhs)) report.add("deformed-lie/antipode-square", {i, j}, lhs, rhs);
    }
  if (report.full()) return report;

  // p_M(m_(0)) . phi(m_(1)) = m
  for (Index j = 0; j < dm && !report.full(); ++j) {
    const auto rhoCol = m.coaction.col(j);
    VecQ acc = VecQ::Zero(dm);
    for (Index idx = 0; idx < rhoCol.size(); ++idx) {
      if (rhoCol(idx) == 0) continue;
      const Index i = idx / nh, k = idx % nh;
      acc += rhoCol(idx) * m.module.act(pM.col(i), phi.col(k));
    }
    if (!sameMatrix(acc, VecQ(unitVec(dm, j))))
      report.add("deformed-lie/reconstruction", {j}, acc, unitVec(dm, j));
  }
  if (report.full()) return report;

  // The coinvariants are stable under <>' (their coaction images stay in
  // coinvariants (x) H).
  const Subspace coinv = coinvariants(a.hopf, m.coaction);
  const Subspace lifted = kronWithIdentity(coinv, nh);
  for (Index r = 0; r < coinv.dim() && !report.full(); ++r)
    for (Index j = 0; j < da && !report.full(); ++j) {
      const VecQ w = bilinearApply(deformed, VecQ(coinv.basis().row(r).transpose()), unitVec(da, j));
      const VecQ img = mulSparseVec(m.coaction, w);
      if (!lifted.contains(img))
        report.add("deformed-lie/coinvariants-stable", {r, j}, img, lifted.basis());
    }
  return report;
}

TheoremReport checkCoinvariantCollapse(const ComodulePoissonAlgebra& a,
                                       const PoissonHopfModule& m, const MatQ& phi) {
  const Report phiReport = validatePhi(a, phi);
  std::vector<std::string> failed;
  for (const Violation& v : phiReport.violations()) failed.push_back("integral map: " + v.law);
  if (!failed.empty()) return TheoremReport::hypothesesFailed(std::move(failed));

  const Index da = a.dim();
  const PoissonHopfModule aSelf = selfHopfModule(a);
  const MatQ deformedM = deformedLieTensor(a, m, phi);
  const MatQ deformedA = deformedLieTensor(a, aSelf, phi);
  const Subspace mCoinv = coinvariants(a.hopf, m.coaction);
  const Subspace aCoinv = coinvariants(a.hopf, a.coaction);

  auto trivialOn = [da](const MatQ& deformed, const Subspace& sub) {
    for (Index r = 0; r < sub.dim(); ++r)
      for (Index j = 0; j < da; ++j) {
        const VecQ w =
            bilinearApply(deformed, VecQ(sub.basis().row(r).transpose()), unitVec(da, j));
        if (!isZero(w)) return false;
      }
    return true;
  };
  if (!trivialOn(deformedM, mCoinv))
    failed.push_back("deformed Lie action is nontrivial on the module coinvariants");
  if (!trivialOn(deformedA, aCoinv))
    failed.push_back("deformed Lie action is nontrivial on the base coinvariants");
  if (!failed.empty()) return TheoremReport::hypothesesFailed(std::move(failed));

  Report conclusions;
  const Subspace mFull = fullCoinvariants(a.hopf, m.module, m.coaction);
  if (!(mFull == mCoinv))
    conclusions.add("collapse/module-full-equals-coinvariants", {}, mFull.basis(), mCoinv.basis());
  const Subspace aFull = fullCoinvariants(a.hopf, aSelf.module, a.coaction);
  if (!(aFull == aCoinv))
    conclusions.add("collapse/base-full-equals-coinvariants", {}, aFull.basis(), aCoinv.basis());
  return TheoremReport::fromConclusions(std::move(conclusions));
}

LinearStructure TensorOverB::structure() const {
  LinearStructure s;
  s.dim = dim();
  s.action = action;
  s.lieAction = lieAction;
  s.coaction = coaction;
  return s;
}

PoissonHopfModule TensorOverB::asHopfModule() const {
  return PoissonHopfModule{PoissonModule{dim(), action, lieAction}, coaction};
}

Subspace baseSubalgebra(const ComodulePoissonAlgebra& a) {
  return fullCoinvariants(a.hopf, selfModule(a.poisson), a.coaction);
}

BModuleData restrictedBAction(const Subspace& b, const ComodulePoissonAlgebra& a,
                              const PoissonHopfModule& m, const Subspace& sub) {
  BModuleData out;
  out.dim = sub.dim();
  out.action = MatQ::Zero(sub.dim(), sub.dim() * b.dim());
  for (Index i = 0; i < sub.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) {
      const VecQ acted = m.module.act(VecQ(sub.basis().row(i).transpose()),
                                      VecQ(b.basis().row(j).transpose()));
      if (!sub.contains(acted))
        throw StructureError("restricted action leaves the subspace");
      out.action.col(tensorIndex(i, b.dim(), j)) = sub.coords(acted);
    }
  return out;
}

BModuleData selfBModule(const Subspace& b, const ComodulePoissonAlgebra& a) {
  BModuleData out;
  out.dim = b.dim();
  out.action = MatQ::Zero(b.dim(), b.dim() * b.dim());
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) {
      const VecQ prod = a.algebra().product(VecQ(b.basis().row(i).transpose()),
                                            VecQ(b.basis().row(j).transpose()));
      if (!b.contains(prod)) throw StructureError("base subalgebra is not closed under product");
      out.action.col(tensorIndex(i, b.dim(), j)) = b.coords(prod);
    }
  return out;
}

TensorOverB buildTensorOverB(const BModuleData& n, const Subspace& b,
                             const ComodulePoissonAlgebra& a, Report* wellDefined) {
  validateBundleShapes(a);
  const Index q = b.dim(), nA = a.dim(), nh = a.hopf.dim(), nN = n.dim;
  if (n.action.rows() != nN || n.action.cols() != nN * q)
    throw StructureError("tensor over B: module action tensor shape mismatch");
  const Index amb = nN * nA;

  MatQ relations(nN * q * nA, amb);
  Index row = 0;
  for (Index i = 0; i < nN; ++i)
    for (Index bi = 0; bi < q; ++bi) {
      const VecQ nb = n.action.col(tensorIndex(i, q, bi));
      const VecQ bVec = b.basis().row(bi).transpose();
      for (Index ai = 0; ai < nA; ++ai) {
        const VecQ lhs = kronVec(nb, unitVec(nA, ai));
        const VecQ rhs = kronVec(unitVec(nN, i), a.algebra().productBasisRight(bVec, ai));
        relations.row(row++) = (lhs - rhs).transpose();
      }
    }

  TensorOverB out{b, nN, QuotientSpace(amb, Subspace::fromRows(relations)), MatQ(), MatQ(), MatQ()};
  const MatQ& p = out.quotient.projection();
  const MatQ& sec = out.quotient.section();
  const Index t = out.quotient.dim();
  const MatQ idN = MatQ::Identity(nN, nN);

  Report local;
  Report* sink = wellDefined ? wellDefined : &local;

  out.action = MatQ::Zero(t, t * nA);
  out.lieAction = MatQ::Zero(t, t * nA);
  for (Index ai = 0; ai < nA; ++ai) {
    const MatQ actAmb = kron(idN, a.algebra().rightMult(unitVec(nA, ai)));
    const MatQ lieAmb = kron(idN, a.poisson.bracketRight(unitVec(nA, ai)));
    const MatQ actDown = mulSparse(p, actAmb);
    const MatQ lieDown = mulSparse(p, lieAmb);
    if (!annihilatesRelations(out.quotient, actDown)) {
      sink->add("tensor-over-b/action-well-defined", {ai}, actDown, MatQ());
      if (!wellDefined) throw StructureError("tensor over B: action not well defined");
    }
    if (!annihilatesRelations(out.quotient, lieDown)) {
      sink->add("tensor-over-b/lie-well-defined", {ai}, lieDown, MatQ());
      if (!wellDefined) throw StructureError("tensor over B: lie action not well defined");
    }
    const MatQ act = mulSparse(actDown, sec);
    const MatQ lie = mulSparse(lieDown, sec);
    for (Index i = 0; i < t; ++i) {
      out.action.col(tensorIndex(i, nA, ai)) = act.col(i);
      out.lieAction.col(tensorIndex(i, nA, ai)) = lie.col(i);
    }
  }

  const MatQ coactAmb = kron(idN, a.coaction);  // (nN*nA*nh) x (nN*nA)
  const MatQ coactDown = mulSparse(kron(p, MatQ::Identity(nh, nh)), coactAmb);
  if (!annihilatesRelations(out.quotient, coactDown)) {
    sink->add("tensor-over-b/coaction-well-defined", {}, coactDown, MatQ());
    if (!wellDefined) throw StructureError("tensor over B: coaction not well defined");
  }
  out.coaction = mulSparse(coactDown, sec);
  return out;
}

namespace {

// alpha : sub (x)_B A -> M on the ambient tensor space, column (i, a) =
// (basis vector i of sub) . a.
MatQ alphaAmbient(const Subspace& sub, const ComodulePoissonAlgebra& a,
                  const PoissonHopfModule& m) {
  const Index p = sub.dim(), nA = a.dim();
  MatQ alpha(m.dim(), p * nA);
  for (Index i = 0; i < p; ++i) {
    const MatQ acted = // m_i . e_a for all a at once
        bilinearLeft(m.module.action, VecQ(sub.basis().row(i).transpose()), nA);
    for (Index ai = 0; ai < nA; ++ai) alpha.col(tensorIndex(i, nA, ai)) = acted.col(ai);
  }
  return alpha;
}

}  // namespace

TheoremReport checkFundamentalIso(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                  const MatQ& phi) {
  validateBundleShapes(a, m);
  const TheoremReport collapse = checkCoinvariantCollapse(a, m, phi);
  if (collapse.gatedOut()) return collapse;

  Report conclusions;
  if (!collapse.verified()) conclusions.merge(collapse.conclusions);

  const Index dm = m.dim(), nA = a.dim(), nh = a.hopf.dim();
  const Subspace b = baseSubalgebra(a);
  const Subspace mFull = fullCoinvariants(a.hopf, m.module, m.coaction);

  BModuleData mcoAction;
  try {
    mcoAction = restrictedBAction(b, a, m, mFull);
  } catch (const StructureError&) {
    conclusions.add("fundamental/coinvariants-b-module", {}, mFull.basis(), b.basis());
    return TheoremReport::fromConclusions(std::move(conclusions));
  }

  Report wellDefined;
  const TensorOverB tensor = buildTensorOverB(mcoAction, b, a, &wellDefined);
  conclusions.merge(wellDefined);
  const Index t = tensor.dim();

  if (t != dm)
    conclusions.add("fundamental/dimension", {}, MatQ::Constant(1, 1, Rational(t)),
                    MatQ::Constant(1, 1, Rational(dm)));

  const MatQ alphaAmb = alphaAmbient(mFull, a, m);
  if (!annihilatesRelations(tensor.quotient, alphaAmb))
    conclusions.add("fundamental/forward-well-defined", {}, alphaAmb, MatQ());
  const MatQ alpha = mulSparse(alphaAmb, tensor.quotient.section());  // dm x t

  // Morphism properties of alpha.
  for (Index ai = 0; ai < nA; ++ai) {
    const MatQ lhsAct = mulSparse(alpha, bilinearRightBasis(tensor.action, t, nA, ai));
    const MatQ rhsAct = mulSparse(m.module.actionBy(unitVec(nA, ai)), alpha);
    if (!sameMatrix(lhsAct, rhsAct)) {
      conclusions.add("fundamental/forward-action-linear", {ai}, lhsAct, rhsAct);
      break;
    }
  }
  for (Index ai = 0; ai < nA; ++ai) {
    const MatQ lhsLie = mulSparse(alpha, bilinearRightBasis(tensor.lieAction, t, nA, ai));
    const MatQ rhsLie = mulSparse(m.module.lieBy(unitVec(nA, ai)), alpha);
    if (!sameMatrix(lhsLie, rhsLie)) {
      conclusions.add("fundamental/forward-lie-linear", {ai}, lhsLie, rhsLie);
      break;
    }
  }
  {
    const MatQ lhsCo = mulSparse(m.coaction, alpha);
    const MatQ rhsCo = mulSparse(kron(alpha, MatQ::Identity(nh, nh)), tensor.coaction);
    if (!sameMatrix(lhsCo, rhsCo)) conclusions.add("fundamental/forward-colinear", {}, lhsCo, rhsCo);
  }

  // beta : m -> p_M(m_(0)) (x)_B phi(m_(1)).
  const MatQ pM = coinvariantProjection(a, m, phi);
  MatQ betaAmb = MatQ::Zero(mFull.dim() * nA, dm);
  bool betaOk = true;
  for (Index j = 0; j < dm && betaOk; ++j) {
    const auto rhoCol = m.coaction.col(j);
    VecQ acc = VecQ::Zero(mFull.dim() * nA);
    for (Index idx = 0; idx < rhoCol.size(); ++idx) {
      if (rhoCol(idx) == 0) continue;
      const Index i = idx / nh, k = idx % nh;
      const VecQ projected = pM.col(i);
      if (!mFull.contains(projected)) {
        conclusions.add("fundamental/projection-into-full-coinvariants", {i}, projected,
                        mFull.basis());
        betaOk = false;
        break;
      }
      acc += rhoCol(idx) * kronVec(mFull.coords(projected), phi.col(k));
    }
    if (betaOk) betaAmb.col(j) = acc;
  }

  if (betaOk) {
    const MatQ beta = mulSparse(tensor.quotient.projection(), betaAmb);  // t x dm
    const MatQ forward = mulSparse(alphaAmb, betaAmb);                   // alpha o beta on M
    if (!sameMatrix(forward, MatQ::Identity(dm, dm)))
      conclusions.add("fundamental/forward-after-backward", {}, forward, MatQ::Identity(dm, dm));
    const MatQ backward = mulSparse(beta, alpha);  // beta o alpha on the quotient
    if (!sameMatrix(backward, MatQ::Identity(t, t)))
      conclusions.add("fundamental/backward-after-forward", {}, backward, MatQ::Identity(t, t));
  }

  return TheoremReport::fromConclusions(std::move(conclusions));
}

TheoremReport checkAdjunction(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                              const MatQ& phi, const BModuleData* n) {
  validateBundleShapes(a, m);
  (void)phi;
  Report conclusions;

  const Index dm = m.dim(), nA = a.dim(), nh = a.hopf.dim();
  const Subspace b = baseSubalgebra(a);
  const BModuleData nData = n ? *n : selfBModule(b, a);
  const Index nN = nData.dim;

  // F(N) and its coinvariants.
  Report wd1;
  const TensorOverB fn = buildTensorOverB(nData, b, a, &wd1);
  conclusions.merge(wd1);
  const PoissonHopfModule fnMod = fn.asHopfModule();
  const Index f1 = fn.dim();
  const Subspace fnCo = fullCoinvariants(a.hopf, fnMod.module, fnMod.coaction);

  // G(M) with its B-action.
  const Subspace mCo = fullCoinvariants(a.hopf, m.module, m.coaction);
  BModuleData gmAction, fnCoAction;
  try {
    gmAction = restrictedBAction(b, a, m, mCo);
    fnCoAction = restrictedBAction(b, a, fnMod, fnCo);
  } catch (const StructureError&) {
    conclusions.add("adjunction/coinvariants-b-module", {}, mCo.basis(), b.basis());
    return TheoremReport::fromConclusions(std::move(conclusions));
  }

  // Hom spaces on the two sides of the bijection.
  LinearStructure mStruct{dm, m.module.action, m.module.lieAction, m.coaction};
  HomSpace homUp = solveHomSpace(fn.structure(), mStruct, HomConstraints{true, true, true});
  LinearStructure nStruct{nN, nData.action, std::nullopt, std::nullopt};
  LinearStructure gmStruct{mCo.dim(), gmAction.action, std::nullopt, std::nullopt};
  HomSpace homDown = solveHomSpace(nStruct, gmStruct, HomConstraints{true, false, false});

  if (homUp.dim() != homDown.dim())
    conclusions.add("adjunction/hom-dimensions", {}, MatQ::Constant(1, 1, Rational(homUp.dim())),
                    MatQ::Constant(1, 1, Rational(homDown.dim())));

  // Classes of n (x) 1 in F(N).
  MatQ unitEmbed(f1, nN);
  for (Index i = 0; i < nN; ++i)
    unitEmbed.col(i) =
        mulSparseVec(fn.quotient.projection(), kronVec(unitVec(nN, i), a.algebra().unit));

  // psi : f -> (n -> f(n (x) 1)); psi' : g -> (n (x) a -> g(n) . a).
  MatQ psi = MatQ::Zero(homDown.dim(), homUp.dim());
  MatQ psiPrime = MatQ::Zero(homUp.dim(), homDown.dim());
  bool bijectionOk = true;
  for (Index k = 0; k < homUp.dim() && bijectionOk; ++k) {
    const MatQ f = homUp.basisMap(k);  // dm x f1
    MatQ g(mCo.dim(), nN);
    for (Index i = 0; i < nN; ++i) {
      const VecQ value = mulSparseVec(f, unitEmbed.col(i));
      if (!mCo.contains(value)) {
        conclusions.add("adjunction/forward-lands-in-coinvariants", {k, i}, value, mCo.basis());
        bijectionOk = false;
        break;
      }
      g.col(i) = mCo.coords(value);
    }
    if (!bijectionOk) break;
    if (!homDown.containsMap(g)) {
      conclusions.add("adjunction/forward-image", {k}, g, homDown.solutions.basis());
      bijectionOk = false;
      break;
    }
    psi.col(k) = homDown.coordsOfMap(g);
  }
  for (Index k = 0; k < homDown.dim() && bijectionOk; ++k) {
    const MatQ g = homDown.basisMap(k);  // mCo.dim x nN
    MatQ amb(dm, nN * nA);
    for (Index i = 0; i < nN; ++i) {
      const VecQ gi = mCo.ambient(g.col(i));
      const MatQ acted = bilinearLeft(m.module.action, gi, nA);
      for (Index ai = 0; ai < nA; ++ai) amb.col(tensorIndex(i, nA, ai)) = acted.col(ai);
    }
    if (!annihilatesRelations(fn.quotient, amb)) {
      conclusions.add("adjunction/backward-well-defined", {k}, amb, MatQ());
      bijectionOk = false;
      break;
    }
    const MatQ f = mulSparse(amb, fn.quotient.section());
    if (!homUp.containsMap(f)) {
      conclusions.add("adjunction/backward-image", {k}, f, homUp.solutions.basis());
      bijectionOk = false;
      break;
    }
    psiPrime.col(k) = homUp.coordsOfMap(f);
  }
  if (bijectionOk) {
    const MatQ round = mulSparse(psi, psiPrime);
    if (!sameMatrix(round, MatQ::Identity(homDown.dim(), homDown.dim())))
      conclusions.add("adjunction/forward-after-backward", {}, round,
                      MatQ::Identity(homDown.dim(), homDown.dim()));
    const MatQ round2 = mulSparse(psiPrime, psi);
    if (!sameMatrix(round2, MatQ::Identity(homUp.dim(), homUp.dim())))
      conclusions.add("adjunction/backward-after-forward", {}, round2,
                      MatQ::Identity(homUp.dim(), homUp.dim()));
  }

  // Unit: n -> class(n (x) 1) must land in the coinvariants of F(N) and be
  // B-linear.
  MatQ eta(fnCo.dim(), nN);
  bool etaOk = true;
  for (Index i = 0; i < nN && etaOk; ++i) {
    if (!fnCo.contains(unitEmbed.col(i))) {
      conclusions.add("adjunction/unit-well-typed", {i}, unitEmbed.col(i), fnCo.basis());
      etaOk = false;
      break;
    }
    eta.col(i) = fnCo.coords(unitEmbed.col(i));
  }
  if (etaOk) {
    for (Index bi = 0; bi < b.dim() && etaOk; ++bi) {
      const MatQ lhs = mulSparse(eta, bilinearRightBasis(nData.action, nN, b.dim(), bi));
      const MatQ rhs = mulSparse(bilinearRightBasis(fnCoAction.action, fnCo.dim(), b.dim(), bi), eta);
      if (!sameMatrix(lhs, rhs)) {
        conclusions.add("adjunction/unit-b-linear", {bi}, lhs, rhs);
        etaOk = false;
      }
    }
  }

  // Triangle identities.
  if (etaOk && bijectionOk) {
    // counit after F(unit) on F(N)
    Report wd2;
    const TensorOverB fgfn = buildTensorOverB(fnCoAction, b, a, &wd2);
    conclusions.merge(wd2);
    const MatQ counitAmb2 = alphaAmbient(fnCo, a, fnMod);
    if (!annihilatesRelations(fgfn.quotient, counitAmb2))
      conclusions.add("adjunction/counit-well-defined", {}, counitAmb2, MatQ());
    const MatQ triangle1 =
        mulSparse(counitAmb2, mulSparse(kron(eta, MatQ::Identity(nA, nA)), fn.quotient.section()));
    if (!sameMatrix(triangle1, MatQ::Identity(f1, f1)))
      conclusions.add("adjunction/triangle-counit", {}, triangle1, MatQ::Identity(f1, f1));

    // G(counit) after unit on G(M)
    Report wd0;
    const TensorOverB fgm = buildTensorOverB(gmAction, b, a, &wd0);
    conclusions.merge(wd0);
    const PoissonHopfModule fgmMod = fgm.asHopfModule();
    const Subspace fgmCo = fullCoinvariants(a.hopf, fgmMod.module, fgmMod.coaction);
    const MatQ counitAmb0 = alphaAmbient(mCo, a, m);
    if (!annihilatesRelations(fgm.quotient, counitAmb0))
      conclusions.add("adjunction/counit-well-defined-base", {}, counitAmb0, MatQ());
    const MatQ counitQuot0 = mulSparse(counitAmb0, fgm.quotient.section());  // dm x f0

    MatQ etaG(fgmCo.dim(), mCo.dim());
    bool etaGOk = true;
    for (Index i = 0; i < mCo.dim() && etaGOk; ++i) {
      const VecQ cls = mulSparseVec(fgm.quotient.projection(),
                                    kronVec(unitVec(mCo.dim(), i), a.algebra().unit));
      if (!fgmCo.contains(cls)) {
        conclusions.add("adjunction/unit-well-typed-base", {i}, cls, fgmCo.basis());
        etaGOk = false;
        break;
      }
      etaG.col(i) = fgmCo.coords(cls);
    }
    if (etaGOk) {
      MatQ gCounit(mCo.dim(), fgmCo.dim());
      bool gOk = true;
      for (Index i = 0; i < fgmCo.dim() && gOk; ++i) {
        const VecQ img = mulSparseVec(counitQuot0, VecQ(fgmCo.basis().row(i).transpose()));
        if (!mCo.contains(img)) {
          conclusions.add("adjunction/counit-restricts", {i}, img, mCo.basis());
          gOk = false;
          break;
        }
        gCounit.col(i) = mCo.coords(img);
      }
      if (gOk) {
        const MatQ triangle2 = mulSparse(gCounit, etaG);
        if (!sameMatrix(triangle2, MatQ::Identity(mCo.dim(), mCo.dim())))
          conclusions.add("adjunction/triangle-unit", {}, triangle2,
                          MatQ::Identity(mCo.dim(), mCo.dim()));
      }
    }
  }

  return TheoremReport::fromConclusions(std::move(conclusions));
}

}  // namespace hopfmod
