#include "hopfmod/catalog.hpp"

#include "hopfmod/fundamental.hpp"

#include <utility>

namespace hopfmod {

namespace {

// A Hopf structure in which every basis element is group-like: the product
// of two basis elements is a basis element or zero, Delta(b) = b (x) b,
// eps(b) = 1, and the antipode permutes the basis.
WeakHopfAlgebra groupLikeHopf(Index n, const std::function<Index(Index, Index)>& prod,
                              const std::vector<Index>& unitParts,
                              const std::function<Index(Index)>& inverse) {
  StructureAlgebra alg;
  alg.dim = n;
  alg.mult = MatQ::Zero(n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index k = prod(i, j);
      if (k >= 0) alg.mult(k, tensorIndex(i, n, j)) = 1;
    }
  alg.unit = VecQ::Zero(n);
  for (Index u : unitParts) alg.unit(u) = 1;

  StructureCoalgebra co;
  co.dim = n;
  co.comult = MatQ::Zero(n * n, n);
  for (Index i = 0; i < n; ++i) co.comult(tensorIndex(i, n, i), i) = 1;
  co.counit = RowVecQ::Ones(n);

  MatQ antipode = MatQ::Zero(n, n);
  for (Index i = 0; i < n; ++i) antipode(inverse(i), i) = 1;

  return WeakHopfAlgebra{WeakBialgebra{std::move(alg), std::move(co)}, std::move(antipode)};
}

WeakHopfAlgebra z2GroupAlgebra() {
  return groupLikeHopf(
      2, [](Index i, Index j) { return i ^ j; }, {0}, [](Index i) { return i; });
}

// Disjoint union of two copies of Z2 as a groupoid: basis e1, g1, e2, g2.
WeakHopfAlgebra z2GroupoidAlgebra() {
  return groupLikeHopf(
      4,
      [](Index i, Index j) -> Index {
        if (i / 2 != j / 2) return -1;
        return (i / 2) * 2 + ((i ^ j) & 1);
      },
      {0, 2}, [](Index i) { return i; });
}

// Pair groupoid on two objects: basis u00, u01, u10, u11 with
// u(i,j) u(k,l) = delta_{jk} u(i,l).
WeakHopfAlgebra pairGroupoidAlgebra() {
  return groupLikeHopf(
      4,
      [](Index a, Index b) -> Index {
        const Index i = a / 2, j = a % 2, k = b / 2, l = b % 2;
        if (j != k) return -1;
        return i * 2 + l;
      },
      {0, 3}, [](Index a) { return (a % 2) * 2 + a / 2; });
}

// C = k[x,y]/(x^2, y^2) with {x, y} = xy; basis 1, x, y, xy.
PoissonAlgebra smallPoissonAlgebra() {
  const Index n = 4;
  StructureAlgebra alg;
  alg.dim = n;
  alg.mult = MatQ::Zero(n, n * n);
  // monomial exponents: index = ex + 2*ey
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index ex = (i & 1) + (j & 1), ey = (i >> 1) + (j >> 1);
      if (ex <= 1 && ey <= 1) alg.mult(ex + 2 * ey, tensorIndex(i, n, j)) = 1;
    }
  alg.unit = unitVec(n, 0);
  MatQ bracket = MatQ::Zero(n, n * n);
  bracket(3, tensorIndex(1, n, 2)) = 1;   // {x, y} = xy
  bracket(3, tensorIndex(2, n, 1)) = -1;  // {y, x} = -xy
  return PoissonAlgebra{std::move(alg), std::move(bracket)};
}

/// A = H with coaction Delta and zero bracket.
ComodulePoissonAlgebra selfComoduleAlgebra(const WeakHopfAlgebra& h) {
  const Index n = h.dim();
  PoissonAlgebra p{h.algebra(), MatQ::Zero(n, n * n)};
  return ComodulePoissonAlgebra{h, std::move(p), h.coalgebra().comult};
}

StructureAlgebra tensorAlgebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  const Index n = a.dim * b.dim;
  StructureAlgebra out;
  out.dim = n;
  out.mult = MatQ::Zero(n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const VecQ col = kronVec(a.basisProduct(i / b.dim, j / b.dim),
                               b.basisProduct(i % b.dim, j % b.dim));
      out.mult.col(tensorIndex(i, n, j)) = col;
    }
  out.unit = kronVec(a.unit, b.unit);
  return out;
}

/// A = C (x) H with coaction id (x) Delta, bracket {c,c'} (x) h h', and the
/// integral map phi(h) = 1 (x) h.
std::pair<ComodulePoissonAlgebra, MatQ> tensorComoduleAlgebra(const PoissonAlgebra& c,
                                                              const WeakHopfAlgebra& h,
                                                              bool zeroBracket) {
  const Index nc = c.dim(), nh = h.dim(), n = nc * nh;
  StructureAlgebra alg = tensorAlgebra(c.algebra, h.algebra());
  MatQ bracket = MatQ::Zero(n, n * n);
  if (!zeroBracket) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        bracket.col(tensorIndex(i, n, j)) =
            kronVec(c.bracket.col(tensorIndex(i / nh, nc, j / nh)),
                    h.algebra().basisProduct(i % nh, j % nh));
  }
  MatQ coaction = kron(MatQ::Identity(nc, nc), h.coalgebra().comult);
  MatQ phi = kron(MatQ(c.algebra.unit), MatQ::Identity(nh, nh));
  ComodulePoissonAlgebra cpa{h, PoissonAlgebra{std::move(alg), std::move(bracket)},
                             std::move(coaction)};
  return {std::move(cpa), std::move(phi)};
}

std::vector<std::string> tensorLabels(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + "*" + y);
  return out;
}

std::vector<CatalogEntry> buildCatalog() {
  std::vector<CatalogEntry> entries;

  const std::vector<std::string> z2Basis = {"e", "g"};
  const std::vector<std::string> groupoidBasis = {"e1", "g1", "e2", "g2"};
  const std::vector<std::string> pairBasis = {"u11", "u12", "u21", "u22"};
  const std::vector<std::string> cBasis = {"1", "x", "y", "xy"};

  {
    CatalogEntry e;
    e.id = "E1";
    e.description = "group algebra of Z2 (an ordinary Hopf algebra), bundled as a "
                    "self-comodule with zero bracket and phi = id";
    e.hopf = z2GroupAlgebra();
    e.hopfBasis = z2Basis;
    e.algebra = selfComoduleAlgebra(e.hopf);
    e.algebraBasis = z2Basis;
    e.module = selfHopfModule(*e.algebra);
    e.moduleBasis = z2Basis;
    e.phi = MatQ::Identity(2, 2);
    e.expectedDims = {{"H", 2},     {"H_t", 1},    {"H_s", 1},   {"A", 2},
                      {"A^coH", 1}, {"A^A", 2},    {"A^AcoH", 1}, {"M^coH", 1},
                      {"M^A", 2},   {"M^AcoH", 1}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E2";
    e.description = "groupoid algebra of Z2 + Z2: commutative, cocommutative weak Hopf "
                    "algebra with Delta(1) != 1 (x) 1";
    e.hopf = z2GroupoidAlgebra();
    e.hopfBasis = groupoidBasis;
    e.expectedDims = {{"H", 4}, {"H_t", 2}, {"H_s", 2}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E3";
    e.description = "pair-groupoid algebra on two objects (2x2 matrix units): "
                    "noncommutative, source subalgebra not central; carries a small "
                    "commutative bundle A = H_t for hypothesis-failure paths";
    e.hopf = pairGroupoidAlgebra();
    e.hopfBasis = pairBasis;
    // A = H_t = span{u11, u22} with coaction Delta restricted to it.
    const Index nh = 4;
    StructureAlgebra alg;
    alg.dim = 2;
    alg.mult = MatQ::Zero(2, 4);
    alg.mult(0, tensorIndex(0, 2, 0)) = 1;
    alg.mult(1, tensorIndex(1, 2, 1)) = 1;
    alg.unit = VecQ::Ones(2);
    MatQ coaction = MatQ::Zero(2 * nh, 2);
    coaction(tensorIndex(0, nh, 0), 0) = 1;  // rho(u11) = u11 (x) u11
    coaction(tensorIndex(1, nh, 3), 1) = 1;  // rho(u22) = u22 (x) u22
    e.algebra = ComodulePoissonAlgebra{e.hopf, PoissonAlgebra{alg, MatQ::Zero(2, 4)},
                                       std::move(coaction)};
    e.algebraBasis = {"u11", "u22"};
    e.module = selfHopfModule(*e.algebra);
    e.moduleBasis = e.algebraBasis;
    e.expectedDims = {{"H", 4},     {"H_t", 2}, {"H_s", 2},    {"A", 2},
                      {"A^coH", 2}, {"A^A", 2}, {"A^AcoH", 2}, {"M^coH", 2},
                      {"M^A", 2},   {"M^AcoH", 2}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E4";
    e.description = "the groupoid algebra of Z2 + Z2 as a comodule Poisson algebra over "
                    "itself (coaction Delta, zero bracket), self-module, phi = id";
    e.hopf = z2GroupoidAlgebra();
    e.hopfBasis = groupoidBasis;
    e.algebra = selfComoduleAlgebra(e.hopf);
    e.algebraBasis = groupoidBasis;
    e.module = selfHopfModule(*e.algebra);
    e.moduleBasis = groupoidBasis;
    e.phi = MatQ::Identity(4, 4);
    e.expectedDims = {{"H", 4},     {"H_t", 2},    {"H_s", 2},    {"A", 4},
                      {"A^coH", 2}, {"A^A", 4},    {"A^AcoH", 2}, {"M^coH", 2},
                      {"M^A", 4},   {"M^AcoH", 2}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E5";
    e.description = "A = C (x) H for C = k[x,y]/(x^2,y^2) with {x,y} = xy and H the "
                    "Z2 + Z2 groupoid algebra; coaction id (x) Delta, phi(h) = 1 (x) h, "
                    "self-module";
    e.hopf = z2GroupoidAlgebra();
    e.hopfBasis = groupoidBasis;
    auto [cpa, phi] = tensorComoduleAlgebra(smallPoissonAlgebra(), e.hopf, false);
    e.algebra = std::move(cpa);
    e.algebraBasis = tensorLabels(cBasis, groupoidBasis);
    e.module = selfHopfModule(*e.algebra);
    e.moduleBasis = e.algebraBasis;
    e.phi = std::move(phi);
    e.expectedDims = {{"H", 4},     {"H_t", 2},    {"H_s", 2},    {"A", 16},
                      {"A^coH", 8}, {"A^A", 8},    {"A^AcoH", 4}, {"M^coH", 8},
                      {"M^A", 8},   {"M^AcoH", 4}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "E6";
    e.description = "same underlying data as E5 but with the zero bracket; the positive "
                    "path for the structure theorem at dimension 16";
    e.hopf = z2GroupoidAlgebra();
    e.hopfBasis = groupoidBasis;
    auto [cpa, phi] = tensorComoduleAlgebra(smallPoissonAlgebra(), e.hopf, true);
    e.algebra = std::move(cpa);
    e.algebraBasis = tensorLabels(cBasis, groupoidBasis);
    e.module = selfHopfModule(*e.algebra);
    e.moduleBasis = e.algebraBasis;
    e.phi = std::move(phi);
    e.expectedDims = {{"H", 4},     {"H_t", 2},     {"H_s", 2},    {"A", 16},
                      {"A^coH", 8}, {"A^A", 16},    {"A^AcoH", 8}, {"M^coH", 8},
                      {"M^A", 16},  {"M^AcoH", 8}};
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = buildCatalog();
  return entries;
}

const CatalogEntry& catalogEntry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw StructureError("unknown catalog entry: " + std::string(id));
}

namespace {

struct TensorSlot {
  std::string name;
  MatQ* mat = nullptr;
  VecQ* vec = nullptr;
  RowVecQ* row = nullptr;

  Index rows() const { return mat ? mat->rows() : vec ? vec->size() : 1; }
  Index cols() const { return mat ? mat->cols() : vec ? 1 : row->size(); }
  Rational& at(Index r, Index c) const {
    if (mat) return (*mat)(r, c);
    if (vec) return (*vec)(r);
    return (*row)(c);
  }
};

std::vector<TensorSlot> tensorSlots(CatalogEntry& e) {
  std::vector<TensorSlot> slots;
  slots.push_back({"hopf.mult", &e.hopf.bialgebra.algebra.mult, nullptr, nullptr});
  slots.push_back({"hopf.unit", nullptr, &e.hopf.bialgebra.algebra.unit, nullptr});
  slots.push_back({"hopf.comult", &e.hopf.bialgebra.coalgebra.comult, nullptr, nullptr});
  slots.push_back({"hopf.counit", nullptr, nullptr, &e.hopf.bialgebra.coalgebra.counit});
  slots.push_back({"hopf.antipode", &e.hopf.antipode, nullptr, nullptr});
  if (e.algebra) {
    slots.push_back({"algebra.mult", &e.algebra->poisson.algebra.mult, nullptr, nullptr});
    slots.push_back({"algebra.unit", nullptr, &e.algebra->poisson.algebra.unit, nullptr});
    slots.push_back({"algebra.bracket", &e.algebra->poisson.bracket, nullptr, nullptr});
    slots.push_back({"algebra.coaction", &e.algebra->coaction, nullptr, nullptr});
  }
  if (e.module) {
    slots.push_back({"module.action", &e.module->module.action, nullptr, nullptr});
    slots.push_back({"module.lie_action", &e.module->module.lieAction, nullptr, nullptr});
    slots.push_back({"module.coaction", &e.module->coaction, nullptr, nullptr});
  }
  if (e.phi) slots.push_back({"phi", &*e.phi, nullptr, nullptr});
  return slots;
}

}  // namespace

std::vector<MutationSite> mutationSites(const CatalogEntry& entry) {
  CatalogEntry copy = entry;  // slots hold mutable pointers; sites only need shapes
  std::vector<MutationSite> sites;
  for (const TensorSlot& slot : tensorSlots(copy))
    for (Index r = 0; r < slot.rows(); ++r)
      for (Index c = 0; c < slot.cols(); ++c) sites.push_back({slot.name, r, c});
  return sites;
}

CatalogEntry mutate(const CatalogEntry& entry, const MutationSite& site) {
  CatalogEntry copy = entry;
  for (const TensorSlot& slot : tensorSlots(copy)) {
    if (slot.name != site.tensor) continue;
    if (site.row < 0 || site.row >= slot.rows() || site.col < 0 || site.col >= slot.cols())
      throw StructureError("mutation site out of range: " + site.tensor);
    slot.at(site.row, site.col) += 1;
    return copy;
  }
  throw StructureError("unknown mutation tensor: " + site.tensor);
}

void forEachMutation(const CatalogEntry& entry,
                     const std::function<bool(const CatalogEntry&, const MutationSite&)>& visit) {
  CatalogEntry working = entry;
  for (const TensorSlot& slot : tensorSlots(working))
    for (Index r = 0; r < slot.rows(); ++r)
      for (Index c = 0; c < slot.cols(); ++c) {
        slot.at(r, c) += 1;
        const bool keepGoing = visit(working, MutationSite{slot.name, r, c});
        slot.at(r, c) -= 1;
        if (!keepGoing) return;
      }
}

namespace {

bool anyViolation(const Report& r) { return !r.ok(); }

bool phiInvalid(const ComodulePoissonAlgebra& a, const MatQ& phi) {
  return !validatePhi(a, phi, PhiRequirements{}, 1).ok();
}

bool runHopfChecks(const WeakHopfAlgebra& h) {
  return anyViolation(checkCoalgebra(h.coalgebra(), 1)) ||
         anyViolation(checkAlgebra(h.algebra(), 1)) ||
         anyViolation(checkWeakBialgebra(h.bialgebra, 1)) ||
         anyViolation(checkAntipode(h, 1)) || anyViolation(checkCounitalIdentities(h, 1));
}

bool runAlgebraChecks(const ComodulePoissonAlgebra& a) {
  return anyViolation(checkComodule(a.hopf, a.coaction, 1)) ||
         anyViolation(checkComoduleAlgebra(a.hopf, a.algebra(), a.coaction, 1)) ||
         anyViolation(checkComodulePoisson(a, 1)) ||
         anyViolation(checkPoissonAlgebra(a.poisson, 1)) ||
         anyViolation(checkAlgebra(a.algebra(), 1));
}

bool runModuleChecks(const ComodulePoissonAlgebra& a, const PoissonHopfModule& m) {
  return anyViolation(checkComodule(a.hopf, m.coaction, 1)) ||
         anyViolation(checkPoissonHopfModule(a, m, 1)) ||
         anyViolation(checkPoissonModule(a.poisson, m.module, 1));
}

}  // namespace

bool mutationDetected(const CatalogEntry& e, const MutationSite& site) {
  const bool isHopf = site.tensor.rfind("hopf.", 0) == 0;
  const bool isAlgebra = site.tensor.rfind("algebra.", 0) == 0;
  const bool isModule = site.tensor.rfind("module.", 0) == 0;
  const bool isPhi = site.tensor == "phi";

  if (isPhi && e.algebra && phiInvalid(*e.algebra, *e.phi)) return true;
  if (isModule && e.algebra && e.module && runModuleChecks(*e.algebra, *e.module)) return true;
  if (isAlgebra && e.algebra && runAlgebraChecks(*e.algebra)) return true;
  if (isHopf && runHopfChecks(e.hopf)) return true;

  // Fallback: the full battery, in dependency order.
  if (runHopfChecks(e.hopf)) return true;
  if (e.algebra && runAlgebraChecks(*e.algebra)) return true;
  if (e.algebra && e.module && runModuleChecks(*e.algebra, *e.module)) return true;
  if (e.algebra && e.phi && phiInvalid(*e.algebra, *e.phi)) return true;
  return false;
}

}  // namespace hopfmod
