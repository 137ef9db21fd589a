#include "hopfmod/linalg.hpp"

#include <algorithm>

namespace hopfmod {

RrefResult rref(const MatQ& m) {
  MatQ a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    if (a(r, c) != 1) {
      const Rational inv = 1 / a(r, c);
      a(r, c) = 1;
      for (Index j = c + 1; j < cols; ++j)
        if (a(r, j) != 0) a(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a(i, c) = 0;
      for (Index j = c + 1; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RrefResult out;
  out.mat = a.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

Subspace Subspace::zero(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatQ::Zero(0, ambient);
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatQ::Identity(ambient, ambient);
  s.pivots_.resize(ambient);
  for (Index i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::fromRows(const MatQ& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.basis_ = std::move(r.mat);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::fromColumns(const MatQ& columns) {
  return fromRows(columns.transpose());
}

VecQ Subspace::reduce(VecQ v) const {
  if (v.size() != ambient_) throw StructureError("subspace: ambient dimension mismatch");
  for (Index r = 0; r < basis_.rows(); ++r) {
    const Rational c = v(pivots_[r]);
    if (c == 0) continue;
    for (Index j = pivots_[r]; j < ambient_; ++j)
      if (basis_(r, j) != 0) v(j) -= c * basis_(r, j);
  }
  return v;
}

bool Subspace::contains(const VecQ& v) const {
  const VecQ res = reduce(v);
  for (Index i = 0; i < res.size(); ++i)
    if (res(i) != 0) return false;
  return true;
}

bool Subspace::containsSubspace(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (Index r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r).transpose())) return false;
  return true;
}

VecQ Subspace::coords(const VecQ& v) const {
  if (!contains(v)) throw StructureError("subspace: vector is not a member");
  VecQ c(dim());
  for (Index r = 0; r < dim(); ++r) c(r) = v(pivots_[r]);
  return c;
}

VecQ Subspace::ambient(const VecQ& coords) const {
  if (coords.size() != dim()) throw StructureError("subspace: coordinate dimension mismatch");
  return mulSparseVec(basis_.transpose(), coords);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw StructureError("subspace sum: ambient dimension mismatch");
  MatQ stacked(dim() + other.dim(), ambient_);
  stacked.topRows(dim()) = basis_;
  stacked.bottomRows(other.dim()) = other.basis_;
  return fromRows(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw StructureError("subspace intersect: ambient dimension mismatch");
  // v = x^T basis = y^T other.basis; solve for (x, y) via the kernel of
  // [basis^T | -other.basis^T].
  MatQ sys(ambient_, dim() + other.dim());
  sys.leftCols(dim()) = basis_.transpose();
  sys.rightCols(other.dim()) = -other.basis_.transpose();
  const Subspace xy = kernel(sys);
  MatQ vectors(xy.dim(), ambient_);
  for (Index r = 0; r < xy.dim(); ++r) {
    const VecQ x = xy.basis().row(r).head(dim()).transpose();
    vectors.row(r) = mulSparseVec(basis_.transpose(), x).transpose();
  }
  return fromRows(vectors);
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() &&
         sameMatrix(basis_, other.basis_);
}

Subspace kernel(const MatQ& m) {
  RrefResult r = rref(m);
  const Index cols = m.cols();
  std::vector<bool> isPivot(cols, false);
  for (Index p : r.pivots) isPivot[p] = true;
  MatQ basis(cols - static_cast<Index>(r.pivots.size()), cols);
  basis.setZero();
  Index row = 0;
  for (Index c = 0; c < cols; ++c) {
    if (isPivot[c]) continue;
    basis(row, c) = 1;
    for (Index k = 0; k < static_cast<Index>(r.pivots.size()); ++k)
      basis(row, r.pivots[k]) = -r.mat(k, c);
    ++row;
  }
  return Subspace::fromRows(basis);
}

Subspace image(const MatQ& m) { return Subspace::fromColumns(m); }

LinearSolution solveLinear(const MatQ& system, const VecQ& rhs) {
  if (rhs.size() != system.rows()) throw StructureError("solveLinear: rhs length mismatch");
  MatQ augmented(system.rows(), system.cols() + 1);
  augmented.leftCols(system.cols()) = system;
  augmented.col(system.cols()) = rhs;
  RrefResult r = rref(augmented);
  LinearSolution out;
  out.homogeneous = kernel(system);
  if (!r.pivots.empty() && r.pivots.back() == system.cols()) {
    return out;  // a pivot in the rhs column: inconsistent
  }
  VecQ x = VecQ::Zero(system.cols());
  for (Index k = 0; k < static_cast<Index>(r.pivots.size()); ++k)
    x(r.pivots[k]) = r.mat(k, system.cols());
  out.particular = std::move(x);
  return out;
}

QuotientSpace::QuotientSpace(Index ambient, Subspace relations)
    : ambient_(ambient), relations_(std::move(relations)) {
  if (relations_.ambientDim() != ambient_)
    throw StructureError("quotient: relations must live in the ambient space");
  const Index q = ambient_ - relations_.dim();
  std::vector<bool> isPivot(ambient_, false);
  for (Index p : relations_.pivots()) isPivot[p] = true;
  std::vector<Index> free;
  free.reserve(q);
  for (Index c = 0; c < ambient_; ++c)
    if (!isPivot[c]) free.push_back(c);
  projection_ = MatQ::Zero(q, ambient_);
  section_ = MatQ::Zero(ambient_, q);
  for (Index j = 0; j < ambient_; ++j) {
    const VecQ res = relations_.reduce(unitVec(ambient_, j));
    for (Index k = 0; k < q; ++k) projection_(k, j) = res(free[k]);
  }
  for (Index k = 0; k < q; ++k) section_(free[k], k) = 1;
}

bool annihilatesRelations(const QuotientSpace& q, const MatQ& mapFromAmbient) {
  const MatQ& rel = q.relations().basis();
  for (Index r = 0; r < rel.rows(); ++r) {
    const VecQ img = mulSparseVec(mapFromAmbient, rel.row(r).transpose());
    for (Index i = 0; i < img.size(); ++i)
      if (img(i) != 0) return false;
  }
  return true;
}

Subspace kronWithIdentity(const Subspace& u, Index d) {
  return Subspace::fromRows(kron(u.basis(), MatQ::Identity(d, d)));
}

}  // namespace hopfmod
