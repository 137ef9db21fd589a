#pragma once

// Weak bialgebras and weak Hopf algebras, the counital maps and their
// subalgebras, and exhaustive validators for the defining axioms, the
// antipode laws, and the derived counital identity block.

#include "hopfmod/algebra.hpp"
#include "hopfmod/linalg.hpp"

#include <utility>

namespace hopfmod {

struct WeakBialgebra {
  StructureAlgebra algebra;
  StructureCoalgebra coalgebra;  // same dim, same basis
};

struct WeakHopfAlgebra {
  WeakBialgebra bialgebra;
  MatQ antipode;  // dim x dim, column i = S(b_i)

  Index dim() const { return bialgebra.algebra.dim; }
  const StructureAlgebra& algebra() const { return bialgebra.algebra; }
  const StructureCoalgebra& coalgebra() const { return bialgebra.coalgebra; }

  /// Delta(1) as a vector in H (x) H.
  VecQ delta1() const { return mulSparseVec(coalgebra().comult, algebra().unit); }

  MatQ epsilonTMatrix() const;
  MatQ epsilonSMatrix() const;
  VecQ epsilonT(const VecQ& x) const { return mulSparseVec(epsilonTMatrix(), x); }
  VecQ epsilonS(const VecQ& x) const { return mulSparseVec(epsilonSMatrix(), x); }
};

void validateWeakHopfShape(const WeakHopfAlgebra& h);

/// (H_t, H_s): the images of the counital maps, in canonical form.
std::pair<Subspace, Subspace> counitalSubspaces(const WeakHopfAlgebra& h);

/// The four weak-bialgebra axioms: multiplicativity of the coproduct, the
/// two coproduct-of-unit identities, and the weak counit laws.
Report checkWeakBialgebra(const WeakBialgebra& h, std::size_t limit = Report::kNoLimit);

/// Antipode axioms per basis vector, plus the derived antipode properties
/// (anti-multiplicative, anti-comultiplicative, unit/counit preservation),
/// the latter flagged as derived.
Report checkAntipode(const WeakHopfAlgebra& h, std::size_t limit = Report::kNoLimit);

/// The counital identity block: the coproduct shape on H_t, the antipode
/// expressions for both counital maps, the two split identities, target
/// absorption, idempotence, and the antipode exchanging H_t with H_s.
Report checkCounitalIdentities(const WeakHopfAlgebra& h, std::size_t limit = Report::kNoLimit);

struct StructuralFlags {
  bool commutative = false;
  bool cocommutative = false;
  bool delta1Symmetric = false;   // Delta(1) invariant under the leg swap
  bool sourceCentral = false;     // H_s contained in the center of H
  bool sourceCommutative = false; // H_s commutative as a subalgebra
  bool antipodeBijective = false;
};

StructuralFlags structuralPredicates(const WeakHopfAlgebra& h);

/// Center of the algebra: vectors commuting with every basis element.
Subspace algebraCenter(const StructureAlgebra& a);

}  // namespace hopfmod
