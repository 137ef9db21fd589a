#pragma once

// Unital associative algebras and coalgebras as structure-constant tensors
// over a fixed basis, plus exhaustive validators for their laws. All axioms
// are multilinear, so checking them on basis tuples is complete.

#include "hopfmod/report.hpp"

namespace hopfmod {

struct StructureAlgebra {
  Index dim = 0;
  MatQ mult;  // dim x dim^2; column tensorIndex(i, dim, j) = b_i b_j
  VecQ unit;  // dim

  VecQ basisProduct(Index i, Index j) const { return mult.col(tensorIndex(i, dim, j)); }
  VecQ product(const VecQ& u, const VecQ& v) const { return bilinearApply(mult, u, v); }
  /// b_i * v
  VecQ productBasisLeft(Index i, const VecQ& v) const;
  /// v * b_j
  VecQ productBasisRight(const VecQ& v, Index j) const;
  /// Matrix of x -> u x.
  MatQ leftMult(const VecQ& u) const { return bilinearLeft(mult, u, dim); }
  /// Matrix of x -> x v.
  MatQ rightMult(const VecQ& v) const { return bilinearRight(mult, dim, v); }
};

struct StructureCoalgebra {
  Index dim = 0;
  MatQ comult;     // dim^2 x dim; column i = Delta(b_i), first leg major
  RowVecQ counit;  // 1 x dim
};

/// Product on the tensor square of an algebra: (u (x) v)(u' (x) v').
VecQ tensorSquareProduct(const StructureAlgebra& a, const VecQ& x, const VecQ& y);

/// Product on the tensor cube.
VecQ tensorCubeProduct(const StructureAlgebra& a, const VecQ& x, const VecQ& y);

void validateAlgebraShape(const StructureAlgebra& a);
void validateCoalgebraShape(const StructureCoalgebra& c);

/// Unit laws and associativity on every basis tuple.
Report checkAlgebra(const StructureAlgebra& a, std::size_t limit = Report::kNoLimit);

/// Counit laws and coassociativity (as exact matrix identities).
Report checkCoalgebra(const StructureCoalgebra& c, std::size_t limit = Report::kNoLimit);

/// Commutativity on every basis pair.
Report checkCommutative(const StructureAlgebra& a, std::size_t limit = Report::kNoLimit);

}  // namespace hopfmod
