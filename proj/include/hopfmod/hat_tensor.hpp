#pragma once

// The unit-coaction subspace of N (x) H with its induced structures, the
// Hom-space transfer isomorphism between maps into it and plain maps, and
// the retraction that splits the coaction of a Hopf module.

#include "hopfmod/comodule.hpp"
#include "hopfmod/hom_space.hpp"

namespace hopfmod {

/// The standing bracket/unit-coaction compatibility: {a, 1_(0)} (x) 1_(1) = 0.
bool conditionPro(const ComodulePoissonAlgebra& a);

struct HatTensor {
  Index moduleDim = 0;  // dim of N
  Index hopfDim = 0;
  Subspace subspace;    // inside N (x) H
  MatQ lieAction;       // dim x (dim * dimA), in subspace coordinates
  MatQ coaction;        // (dim * dimH) x dim
  std::optional<MatQ> action;  // present iff H is commutative

  Index dim() const { return subspace.dim(); }
  LinearStructure structure() const;
};

/// Ambient maps on N (x) H: the Lie action / action by a basis element of A
/// twisted through the coaction, and the coaction id (x) Delta.
MatQ hatLieAmbient(const ComodulePoissonAlgebra& a, const PoissonModule& n, Index aIdx);
MatQ hatActionAmbient(const ComodulePoissonAlgebra& a, const PoissonModule& n, Index aIdx);

/// Cuts out the subspace as the kernel of the two defining conditions and
/// installs the induced structures, verifying closure (violations land in
/// `closure` when given, otherwise closure failure throws).
HatTensor buildHatTensor(const ComodulePoissonAlgebra& a, const PoissonModule& n,
                         Report* closure = nullptr);

struct HomTransferResult {
  TheoremReport report;
  Index homIntoHatDim = -1;
  Index homPlainDim = -1;
};

/// The transfer bijection between maps M -> N hat-tensor H and maps M -> N.
/// With poissonMode the maps are additionally required to be action-linear
/// (which needs H commutative); otherwise only Lie linearity and
/// colinearity are imposed (which needs H_s commutative).
HomTransferResult checkHomTransfer(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                   const PoissonModule& n, bool poissonMode);

struct RetractionResult {
  TheoremReport report;
  MatQ lambdaAmbient;   // dimM x (dimM * dimH)
  Subspace hatSubspace;
};

/// Builds lambda(m (x) h) = m_(0) . phi(S(m_(1)) h) on M hat-tensor H and
/// verifies that it splits the coaction and is colinear and Lie linear
/// (action linear too when H is commutative).
RetractionResult buildRetraction(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m,
                                 const MatQ& phi);

}  // namespace hopfmod
