#pragma once

// Hom spaces between structured vector spaces, computed by stacking one
// linear block per imposed constraint per basis element and solving the
// homogeneous system exactly. Maps are target x source matrices; their
// vectorization is column-major.

#include "hopfmod/linalg.hpp"

#include <optional>
#include <vector>

namespace hopfmod {

/// One side of a Hom problem: a coordinate space with whatever structure
/// maps it carries. Tensors use the same layouts as the module types.
struct LinearStructure {
  Index dim = 0;
  std::optional<MatQ> action;     // dim x (dim * baseDim)
  std::optional<MatQ> lieAction;  // dim x (dim * baseDim)
  std::optional<MatQ> coaction;   // (dim * hopfDim) x dim

  MatQ actionBy(Index baseDim, Index a) const;
  MatQ lieBy(Index baseDim, Index a) const;
};

struct HomConstraints {
  bool action = false;
  bool lie = false;
  bool colinear = false;
};

struct HomSpace {
  Index sourceDim = 0;
  Index targetDim = 0;
  HomConstraints constraints;
  Subspace solutions;  // subspace of column-major vectorized maps

  Index dim() const { return solutions.dim(); }
  MatQ basisMap(Index k) const;
  bool containsMap(const MatQ& f) const;
  /// Coordinates of a member map in the solved basis (throws otherwise).
  VecQ coordsOfMap(const MatQ& f) const;
};

VecQ vecMap(const MatQ& f);
MatQ unvecMap(const VecQ& v, Index rows, Index cols);

/// Solves for all maps source -> target satisfying the requested
/// equivariance constraints. Constraints that need a structure missing on
/// either side throw StructureError.
HomSpace solveHomSpace(const LinearStructure& source, const LinearStructure& target,
                       const HomConstraints& want);

}  // namespace hopfmod
