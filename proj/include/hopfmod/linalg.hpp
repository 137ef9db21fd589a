#pragma once

// Exact linear algebra over Q: canonical reduced row echelon forms,
// kernels, linear solves, subspaces in canonical form, and quotient
// spaces with a chosen section. Everything is exact; there are no
// tolerances anywhere.

#include "hopfmod/dense.hpp"

#include <optional>
#include <vector>

namespace hopfmod {

struct RrefResult {
  MatQ mat;                   // canonical RREF, zero rows dropped
  std::vector<Index> pivots;  // pivot column per row, strictly increasing
};

/// Gauss-Jordan with first-nonzero-column pivoting. Exact arithmetic needs
/// no pivot-magnitude heuristics, and the result is the canonical RREF of
/// the row space, so equality of row spaces is equality of outputs.
RrefResult rref(const MatQ& m);

/// A subspace of Q^n held as a canonical RREF basis (one basis vector per
/// row). Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);
  static Subspace fromRows(const MatQ& rows);
  static Subspace fromColumns(const MatQ& columns);

  Index ambientDim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatQ& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Residual of v after eliminating the basis rows; zero iff v is a member.
  VecQ reduce(VecQ v) const;
  bool contains(const VecQ& v) const;
  bool containsSubspace(const Subspace& other) const;
  /// Coordinates of a member in the canonical basis (throws otherwise).
  VecQ coords(const VecQ& v) const;
  /// basis()^T * coords, i.e. the ambient vector with given coordinates.
  VecQ ambient(const VecQ& coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  Index ambient_ = 0;
  MatQ basis_{MatQ::Zero(0, 0)};
  std::vector<Index> pivots_;
};

/// {v : m v = 0} in canonical form; dim = cols - rank.
Subspace kernel(const MatQ& m);

/// Image (column span) as a canonical subspace of Q^rows.
Subspace image(const MatQ& m);

struct LinearSolution {
  std::optional<VecQ> particular;  // absent iff the system is inconsistent
  Subspace homogeneous;            // kernel of the system matrix
};

LinearSolution solveLinear(const MatQ& system, const VecQ& rhs);

/// Q^n / relations with an explicit coset section. projection * section is
/// the identity on the quotient and projection annihilates exactly the
/// relations.
class QuotientSpace {
 public:
  QuotientSpace(Index ambient, Subspace relations);

  Index ambientDim() const { return ambient_; }
  Index dim() const { return projection_.rows(); }
  const Subspace& relations() const { return relations_; }
  const MatQ& projection() const { return projection_; }
  const MatQ& section() const { return section_; }

 private:
  Index ambient_;
  Subspace relations_;
  MatQ projection_;  // dim x ambient
  MatQ section_;     // ambient x dim, unit vectors at the free columns
};

/// True iff mapFromAmbient (anything x ambient) kills every relation basis
/// vector -- the well-definedness test for maps induced on a quotient.
bool annihilatesRelations(const QuotientSpace& q, const MatQ& mapFromAmbient);

/// The subspace U (x) Q^d inside ambient (x) Q^d. The Kronecker lift of a
/// canonical basis is itself canonical, so no re-reduction happens.
Subspace kronWithIdentity(const Subspace& u, Index d);

}  // namespace hopfmod
