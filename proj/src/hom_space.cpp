#include "hopfmod/hom_space.hpp"

namespace hopfmod {

MatQ LinearStructure::actionBy(Index baseDim, Index a) const {
  if (!action) throw StructureError("hom: structure has no action");
  return bilinearRightBasis(*action, dim, baseDim, a);
}

MatQ LinearStructure::lieBy(Index baseDim, Index a) const {
  if (!lieAction) throw StructureError("hom: structure has no lie action");
  return bilinearRightBasis(*lieAction, dim, baseDim, a);
}

VecQ vecMap(const MatQ& f) {
  VecQ v(f.rows() * f.cols());
  for (Index j = 0; j < f.cols(); ++j)
    for (Index i = 0; i < f.rows(); ++i) v(j * f.rows() + i) = f(i, j);
  return v;
}

MatQ unvecMap(const VecQ& v, Index rows, Index cols) {
  MatQ f(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) f(i, j) = v(j * rows + i);
  return f;
}

MatQ HomSpace::basisMap(Index k) const {
  return unvecMap(solutions.basis().row(k).transpose(), targetDim, sourceDim);
}

bool HomSpace::containsMap(const MatQ& f) const { return solutions.contains(vecMap(f)); }

VecQ HomSpace::coordsOfMap(const MatQ& f) const { return solutions.coords(vecMap(f)); }

namespace {

Index actionBaseDim(const LinearStructure& s) {
  if (!s.action || s.dim == 0) return s.action ? 0 : -1;
  return s.action->cols() / s.dim;
}

Index lieBaseDim(const LinearStructure& s) {
  if (!s.lieAction || s.dim == 0) return s.lieAction ? 0 : -1;
  return s.lieAction->cols() / s.dim;
}

Index hopfDim(const LinearStructure& s) {
  if (!s.coaction || s.dim == 0) return s.coaction ? 0 : -1;
  return s.coaction->rows() / s.dim;
}

// X R_src(a) - R_tgt(a) X = 0 as rows over vec(X).
void appendEquivarianceBlocks(std::vector<MatQ>& blocks, const LinearStructure& src,
                              const LinearStructure& tgt, Index baseDim, bool lie) {
  const Index s = src.dim, t = tgt.dim;
  const MatQ idS = MatQ::Identity(s, s);
  const MatQ idT = MatQ::Identity(t, t);
  for (Index a = 0; a < baseDim; ++a) {
    const MatQ rSrc = lie ? src.lieBy(baseDim, a) : src.actionBy(baseDim, a);
    const MatQ rTgt = lie ? tgt.lieBy(baseDim, a) : tgt.actionBy(baseDim, a);
    blocks.push_back(kron(rSrc.transpose(), idT) - kron(idS, rTgt));
  }
}

// rho_tgt X - (X (x) id_H) rho_src = 0.
MatQ colinearityBlock(const LinearStructure& src, const LinearStructure& tgt, Index nh) {
  const Index s = src.dim, t = tgt.dim;
  MatQ block = kron(MatQ::Identity(s, s), *tgt.coaction);  // (s*t*nh) x (s*t)
  const MatQ& rhoSrc = *src.coaction;
  for (Index j = 0; j < s; ++j)
    for (Index r = 0; r < rhoSrc.rows(); ++r) {
      const Rational& c = rhoSrc(r, j);
      if (c == 0) continue;
      const Index iS = r / nh, kH = r % nh;
      for (Index iT = 0; iT < t; ++iT)
        block(j * (t * nh) + iT * nh + kH, iS * t + iT) -= c;
    }
  return block;
}

}  // namespace

HomSpace solveHomSpace(const LinearStructure& source, const LinearStructure& target,
                       const HomConstraints& want) {
  const Index s = source.dim, t = target.dim;
  HomSpace out;
  out.sourceDim = s;
  out.targetDim = t;
  out.constraints = want;
  if (s == 0 || t == 0) {
    out.solutions = Subspace::full(s * t);
    return out;
  }
  std::vector<MatQ> blocks;

  if (want.action) {
    const Index base = actionBaseDim(source);
    if (base < 0 || actionBaseDim(target) != base)
      throw StructureError("hom: action constraint needs matching actions on both sides");
    appendEquivarianceBlocks(blocks, source, target, base, false);
  }
  if (want.lie) {
    const Index base = lieBaseDim(source);
    if (base < 0 || lieBaseDim(target) != base)
      throw StructureError("hom: lie constraint needs matching lie actions on both sides");
    appendEquivarianceBlocks(blocks, source, target, base, true);
  }
  if (want.colinear) {
    const Index nh = hopfDim(source);
    if (nh < 0 || hopfDim(target) != nh)
      throw StructureError("hom: colinearity needs coactions over the same Hopf algebra");
    blocks.push_back(colinearityBlock(source, target, nh));
  }

  Index rows = 0;
  for (const MatQ& b : blocks) rows += b.rows();
  MatQ stacked(rows, s * t);
  Index at = 0;
  for (const MatQ& b : blocks) {
    stacked.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  if (blocks.empty()) stacked = MatQ::Zero(0, s * t);

  out.solutions = kernel(stacked);
  return out;
}

}  // namespace hopfmod
