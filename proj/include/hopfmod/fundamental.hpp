#pragma once

// The integral-map validator, the projection onto coinvariants, the
// deformed Lie action, tensoring over the base subalgebra of full
// coinvariants, the structure isomorphism for Poisson Hopf modules, and
// the adjunction between extension and coinvariants.

#include "hopfmod/comodule.hpp"
#include "hopfmod/hom_space.hpp"

#include <optional>

namespace hopfmod {

struct PhiRequirements {
  bool colinear = true;
  bool algebraMap = true;
  bool unitPreserving = true;   // phi(1) = 1
  bool normalized = true;       // 1_(0) phi(1_(1)) = 1
  bool imageCentral = true;     // image inside the Poisson center
};

/// Checks each requested property of phi : H -> A exactly; when colinearity
/// and unit preservation hold, also the derived unit-coaction factorization
/// rho(1) = phi(1_1) (x) 1_2.
Report validatePhi(const ComodulePoissonAlgebra& a, const MatQ& phi,
                   const PhiRequirements& req = {}, std::size_t limit = Report::kNoLimit);

/// p_M : m -> m_(0) . phi(S(m_(1))) as a dimM x dimM matrix.
MatQ coinvariantProjection(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                           const MatQ& phi);

/// p idempotent, image(p) equal to the coinvariants, p the identity on them.
Report checkProjection(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                       const MatQ& phi, std::size_t limit = Report::kNoLimit);

/// The deformed Lie action m <>' a = p_M(m <> a) as a tensor.
MatQ deformedLieTensor(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                       const MatQ& phi);

/// The five identities tying p, the deformed action, and phi together, plus
/// stability of the coinvariants under the deformed action.
Report checkDeformedLie(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                        const MatQ& phi, std::size_t limit = Report::kNoLimit);

/// If the deformed Lie action vanishes on the coinvariants (of M and of A),
/// the full coinvariants coincide with the coinvariants.
TheoremReport checkCoinvariantCollapse(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                       const MatQ& phi);

/// A module over the base subalgebra B, given as an action tensor over a
/// basis of B: column (i, j) is n_i . b_j in module coordinates.
struct BModuleData {
  Index dim = 0;
  MatQ action;  // dim x (dim * dimB)
};

/// N (x)_B A: the quotient of N (x) A by the bimodule relations, with the
/// induced action, Lie action, and coaction.
struct TensorOverB {
  Subspace b;             // basis of B inside A
  Index leftDim = 0;      // dim of N
  QuotientSpace quotient; // of N (x) A
  MatQ action;            // dim x (dim * dimA)
  MatQ lieAction;
  MatQ coaction;          // (dim * dimH) x dim

  Index dim() const { return quotient.dim(); }
  LinearStructure structure() const;
  PoissonHopfModule asHopfModule() const;
};

TensorOverB buildTensorOverB(const BModuleData& n, const Subspace& b,
                             const ComodulePoissonAlgebra& a, Report* wellDefined = nullptr);

/// The full coinvariants of A, with its product closure, as the base ring.
Subspace baseSubalgebra(const ComodulePoissonAlgebra& a);

/// B acting on a subspace of a Hopf module (restriction of the A-action).
BModuleData restrictedBAction(const Subspace& b, const ComodulePoissonAlgebra& a,
                              const PoissonHopfModule& m, const Subspace& sub);

/// B as a module over itself.
BModuleData selfBModule(const Subspace& b, const ComodulePoissonAlgebra& a);

/// The mutually inverse pair between M-coinvariants (x)_B A and M.
TheoremReport checkFundamentalIso(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                  const MatQ& phi);

/// The adjunction between - (x)_B A and taking full coinvariants: the Hom
/// bijection both ways plus both triangle identities. N defaults to B.
TheoremReport checkAdjunction(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                              const MatQ& phi, const BModuleData* n = nullptr);

}  // namespace hopfmod
