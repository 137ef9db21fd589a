#pragma once

// Poisson algebras and Poisson modules as bracket/action tensors, with
// exhaustive validators for the Lie, Leibniz, and compatibility laws, and
// the invariant subspaces cut out by the bracket and the Lie action.

#include "hopfmod/algebra.hpp"
#include "hopfmod/linalg.hpp"

namespace hopfmod {

struct PoissonAlgebra {
  StructureAlgebra algebra;  // commutative
  MatQ bracket;              // dim x dim^2; column tensorIndex(i, dim, j) = {b_i, b_j}

  Index dim() const { return algebra.dim; }
  VecQ bracketApply(const VecQ& u, const VecQ& v) const { return bilinearApply(bracket, u, v); }
  /// Matrix of x -> {u, x}.
  MatQ bracketLeft(const VecQ& u) const { return bilinearLeft(bracket, u, dim()); }
  /// Matrix of x -> {x, v}.
  MatQ bracketRight(const VecQ& v) const { return bilinearRight(bracket, dim(), v); }
};

/// A module with both an associative action m.a and a Lie action m<>a over
/// some Poisson algebra; the base is always passed alongside.
struct PoissonModule {
  Index dim = 0;
  MatQ action;     // dim x (dim * dimA); column tensorIndex(i, dimA, j) = m_i . a_j
  MatQ lieAction;  // same layout for m_i <> a_j

  Index baseDim() const { return dim == 0 ? action.cols() : action.cols() / dim; }
  VecQ act(const VecQ& m, const VecQ& a) const { return bilinearApply(action, m, a); }
  VecQ lie(const VecQ& m, const VecQ& a) const { return bilinearApply(lieAction, m, a); }
  /// Matrix of m -> m . a.
  MatQ actionBy(const VecQ& a) const { return bilinearRight(action, dim, a); }
  MatQ lieBy(const VecQ& a) const { return bilinearRight(lieAction, dim, a); }
};

void validatePoissonShape(const PoissonAlgebra& p);
void validateModuleShape(const PoissonAlgebra& base, const PoissonModule& m);

/// Commutativity, antisymmetry, Jacobi, and the Leibniz rule on basis tuples.
Report checkPoissonAlgebra(const PoissonAlgebra& p, std::size_t limit = Report::kNoLimit);

/// Unit and associativity of the action, the Lie-module law, and the two
/// action/bracket compatibilities; also the derived fact that the unit acts
/// trivially under the Lie action.
Report checkPoissonModule(const PoissonAlgebra& base, const PoissonModule& m,
                          std::size_t limit = Report::kNoLimit);

/// {a : {a, A} = 0}; optionally verifies closure under product and bracket.
Subspace poissonCenter(const PoissonAlgebra& p, Report* closure = nullptr);

/// {m : m <> a = 0 for all a}.
Subspace lieInvariants(const PoissonModule& m);

/// The base algebra as a module over itself: the action is the product and
/// the Lie action is the bracket.
PoissonModule selfModule(const PoissonAlgebra& p);

}  // namespace hopfmod
