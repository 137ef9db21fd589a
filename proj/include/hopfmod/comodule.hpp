#pragma once

// Right comodules over a weak Hopf algebra, comodule (Poisson) algebras,
// Poisson Hopf modules, and the coinvariant subspaces with their closure
// checks. Coactions are matrices M -> M (x) H in the fixed leg order
// (module index major, Hopf index minor).

#include "hopfmod/poisson.hpp"
#include "hopfmod/weak_hopf.hpp"

namespace hopfmod {

struct ComodulePoissonAlgebra {
  WeakHopfAlgebra hopf;
  PoissonAlgebra poisson;
  MatQ coaction;  // (dimA * dimH) x dimA

  Index dim() const { return poisson.dim(); }
  const StructureAlgebra& algebra() const { return poisson.algebra; }
  /// rho(1_A) as a vector in A (x) H.
  VecQ unitCoaction() const { return mulSparseVec(coaction, algebra().unit); }
};

/// A Poisson module over the algebra of a ComodulePoissonAlgebra together
/// with its own coaction; the base is always passed alongside.
struct PoissonHopfModule {
  PoissonModule module;
  MatQ coaction;  // (dim * dimH) x dim

  Index dim() const { return module.dim; }
};

void validateComoduleShape(const WeakHopfAlgebra& h, Index dim, const MatQ& coaction);
void validateBundleShapes(const ComodulePoissonAlgebra& a);
void validateBundleShapes(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m);

/// The algebra as a Hopf module over itself (action = product, Lie action =
/// bracket, same coaction).
PoissonHopfModule selfHopfModule(const ComodulePoissonAlgebra& a);

/// Coassociativity and the counit law of a coaction, as matrix identities.
Report checkComodule(const WeakHopfAlgebra& h, const MatQ& coaction,
                     std::size_t limit = Report::kNoLimit);

/// The comodule-algebra axioms: multiplicativity of the coaction, the
/// unit-coaction law, its equivalent one-sided form, and counit absorption.
Report checkComoduleAlgebra(const WeakHopfAlgebra& h, const StructureAlgebra& alg,
                            const MatQ& coaction, std::size_t limit = Report::kNoLimit);

/// Bracket/coaction compatibility on basis pairs.
Report checkComodulePoisson(const ComodulePoissonAlgebra& a, std::size_t limit = Report::kNoLimit);

/// The Hopf-module law and the Lie-action/coaction compatibility.
Report checkPoissonHopfModule(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                              std::size_t limit = Report::kNoLimit);

/// Coinvariants via the counital characterization: rho(m) = (id (x) eps_t) rho(m).
Subspace coinvariants(const WeakHopfAlgebra& h, const MatQ& coaction);

/// Coinvariants via the unit coaction: rho(m) = m . 1_(0) (x) 1_(1); needs a
/// module action to transport the unit coaction.
Subspace coinvariantsViaUnit(const WeakHopfAlgebra& h, const VecQ& unitCoaction,
                             const PoissonModule& mod, const MatQ& coaction);

/// Both characterizations must cut out the same canonical subspace.
Report checkCoinvariantAgreement(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                 std::size_t limit = Report::kNoLimit);

/// Coinvariant + Lie-invariant elements.
Subspace fullCoinvariants(const WeakHopfAlgebra& h, const PoissonModule& mod, const MatQ& coaction);

/// Closure of the coinvariant subalgebra: products, brackets, and the
/// coaction image stay inside.
Report checkCoinvariantClosure(const ComodulePoissonAlgebra& a, std::size_t limit = Report::kNoLimit);

/// Closure package for the invariant subspaces of a Hopf module: the Lie
/// invariants form a subcomodule, the Poisson center of the base is closed
/// under everything, and the full coinvariants form a module over the full
/// coinvariants of the base.
Report checkInvariantSubmoduleClosure(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                      std::size_t limit = Report::kNoLimit);

}  // namespace hopfmod
