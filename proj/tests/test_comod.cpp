#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/catalog.hpp"

using namespace hopfmod;

namespace {

const std::vector<const char*> kBundleIds = {"E1", "E3", "E4", "E5", "E6"};

}  // namespace

TEST_CASE("catalog comodule layers validate") {
  for (const char* id : kBundleIds) {
    const CatalogEntry& e = catalogEntry(id);
    const ComodulePoissonAlgebra& a = *e.algebra;
    INFO(id);
    REQUIRE(checkComodule(a.hopf, a.coaction).ok());
    REQUIRE(checkComoduleAlgebra(a.hopf, a.algebra(), a.coaction).ok());
    REQUIRE(checkComodulePoisson(a).ok());
    REQUIRE(checkPoissonHopfModule(a, *e.module).ok());
  }
}

TEST_CASE("the regular coaction is a comodule") {
  const WeakHopfAlgebra& h = catalogEntry("E2").hopf;
  REQUIRE(checkComodule(h, h.coalgebra().comult).ok());
  REQUIRE(checkComoduleAlgebra(h, h.algebra(), h.coalgebra().comult).ok());
}

TEST_CASE("the zero coaction violates the counit law") {
  const WeakHopfAlgebra& h = catalogEntry("E2").hopf;
  const Report r = checkComodule(h, MatQ::Zero(16, 4));
  REQUIRE(!r.ok());
  REQUIRE(r.violations()[0].law == "comodule/counit");
}

TEST_CASE("naive trivial coaction fails the unit-coaction axiom") {
  // a (x) 1 is not a comodule-algebra coaction when Delta(1) != 1 (x) 1.
  const CatalogEntry& e = catalogEntry("E4");
  const WeakHopfAlgebra& h = e.algebra->hopf;
  const Index n = 4, nh = 4;
  MatQ naive = MatQ::Zero(n * nh, n);
  for (Index i = 0; i < n; ++i) {
    for (Index v = 0; v < nh; ++v)
      naive(tensorIndex(i, nh, v), i) = h.algebra().unit(v);
  }
  Report combined;
  combined.merge(checkComodule(h, naive));
  combined.merge(checkComoduleAlgebra(h, e.algebra->algebra(), naive));
  REQUIRE(!combined.ok());
}

TEST_CASE("coinvariants of the catalog bundles") {
  SECTION("ordinary Hopf case gives the scalars") {
    const CatalogEntry& e = catalogEntry("E1");
    const Subspace co = coinvariants(e.hopf, e.algebra->coaction);
    REQUIRE(co.dim() == 1);
    REQUIRE(co.contains(e.algebra->algebra().unit));
  }
  SECTION("groupoid self-bundle gives the target subalgebra") {
    const CatalogEntry& e = catalogEntry("E4");
    const Subspace co = coinvariants(e.hopf, e.algebra->coaction);
    REQUIRE(co == counitalSubspaces(e.hopf).first);
  }
  SECTION("tensor bundle gives C (x) H_t") {
    const CatalogEntry& e = catalogEntry("E5");
    const Subspace co = coinvariants(e.hopf, e.algebra->coaction);
    REQUIRE(co.dim() == 8);
    for (Index c = 0; c < 4; ++c) {
      REQUIRE(co.contains(unitVec(16, c * 4 + 0)));   // c (x) e1
      REQUIRE(co.contains(unitVec(16, c * 4 + 2)));   // c (x) e2
      REQUIRE(!co.contains(unitVec(16, c * 4 + 1)));  // c (x) g1
    }
  }
}

TEST_CASE("the two coinvariant characterizations agree on every bundle") {
  for (const char* id : kBundleIds) {
    const CatalogEntry& e = catalogEntry(id);
    INFO(id);
    REQUIRE(checkCoinvariantAgreement(*e.algebra, *e.module).ok());
  }
}

TEST_CASE("full coinvariants") {
  const CatalogEntry& e5 = catalogEntry("E5");
  const Subspace full5 = fullCoinvariants(e5.hopf, e5.module->module, e5.module->coaction);
  REQUIRE(full5.dim() == 4);
  for (Index i : {0, 2, 12, 14}) REQUIRE(full5.contains(unitVec(16, i)));

  const CatalogEntry& e6 = catalogEntry("E6");
  REQUIRE(fullCoinvariants(e6.hopf, e6.module->module, e6.module->coaction).dim() == 8);

  const CatalogEntry& e4 = catalogEntry("E4");
  const Subspace full4 = fullCoinvariants(e4.hopf, e4.module->module, e4.module->coaction);
  REQUIRE(full4 == counitalSubspaces(e4.hopf).first);

  SECTION("it is the intersection of the two invariant subspaces") {
    const Subspace viaParts = coinvariants(e5.hopf, e5.module->coaction)
                                  .intersect(lieInvariants(e5.module->module));
    REQUIRE(full5 == viaParts);
  }
}

TEST_CASE("expected dimensions recorded in the catalog hold") {
  for (const auto& e : catalog()) {
    INFO(e.id);
    REQUIRE(e.expectedDims.at("H") == e.hopf.dim());
    const auto [ht, hs] = counitalSubspaces(e.hopf);
    REQUIRE(e.expectedDims.at("H_t") == ht.dim());
    REQUIRE(e.expectedDims.at("H_s") == hs.dim());
    if (!e.algebra) continue;
    const ComodulePoissonAlgebra& a = *e.algebra;
    REQUIRE(e.expectedDims.at("A") == a.dim());
    REQUIRE(e.expectedDims.at("A^coH") == coinvariants(a.hopf, a.coaction).dim());
    REQUIRE(e.expectedDims.at("A^A") == poissonCenter(a.poisson).dim());
    REQUIRE(e.expectedDims.at("A^AcoH") ==
            fullCoinvariants(a.hopf, selfModule(a.poisson), a.coaction).dim());
    REQUIRE(e.expectedDims.at("M^coH") == coinvariants(a.hopf, e.module->coaction).dim());
    REQUIRE(e.expectedDims.at("M^A") == lieInvariants(e.module->module).dim());
    REQUIRE(e.expectedDims.at("M^AcoH") ==
            fullCoinvariants(a.hopf, e.module->module, e.module->coaction).dim());
  }
}

TEST_CASE("closure packages") {
  for (const char* id : kBundleIds) {
    const CatalogEntry& e = catalogEntry(id);
    INFO(id);
    REQUIRE(checkCoinvariantClosure(*e.algebra).ok());
    REQUIRE(checkInvariantSubmoduleClosure(*e.algebra, *e.module).ok());
  }
}

TEST_CASE("bracket incompatible with the coaction is caught") {
  CatalogEntry e = catalogEntry("E5");
  ComodulePoissonAlgebra& a = *e.algebra;
  // redefine {x (x) e1, y (x) e1} = xy (x) g1 (keeping antisymmetry)
  const Index xe1 = 4, ye1 = 8, xyg1 = 13;
  a.poisson.bracket.col(tensorIndex(xe1, 16, ye1)) = unitVec(16, xyg1);
  a.poisson.bracket.col(tensorIndex(ye1, 16, xe1)) = -unitVec(16, xyg1);
  const Report r = checkComodulePoisson(a);
  REQUIRE(!r.ok());
  REQUIRE(r.violations()[0].law == "comodule-poisson/bracket-coaction");
  REQUIRE(r.violations()[0].where == std::vector<Index>{xe1, ye1});
}

TEST_CASE("zeroed Lie action with a live bracket breaks the module laws") {
  CatalogEntry e = catalogEntry("E5");
  e.module->module.lieAction.setZero();
  Report combined;
  combined.merge(checkPoissonModule(e.algebra->poisson, e.module->module));
  combined.merge(checkPoissonHopfModule(*e.algebra, *e.module));
  REQUIRE(!combined.ok());
}

TEST_CASE("corrupting one coaction entry of E5 is caught") {
  CatalogEntry e = catalogEntry("E5");
  e.algebra->coaction(5, 7) += 1;
  Report combined;
  combined.merge(checkComodule(e.hopf, e.algebra->coaction, 1));
  REQUIRE(!combined.ok());
}
