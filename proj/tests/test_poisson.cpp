#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/catalog.hpp"
#include "hopfmod/poisson.hpp"

using namespace hopfmod;

namespace {

// k[x,y]/(x^2,y^2) with {x,y} = xy, rebuilt by hand for these tests.
PoissonAlgebra smallNilpotent() {
  StructureAlgebra alg;
  alg.dim = 4;
  alg.mult = MatQ::Zero(4, 16);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) {
      const Index ex = (i & 1) + (j & 1), ey = (i >> 1) + (j >> 1);
      if (ex <= 1 && ey <= 1) alg.mult(ex + 2 * ey, tensorIndex(i, 4, j)) = 1;
    }
  alg.unit = unitVec(4, 0);
  MatQ bracket = MatQ::Zero(4, 16);
  bracket(3, tensorIndex(1, 4, 2)) = 1;
  bracket(3, tensorIndex(2, 4, 1)) = -1;
  return PoissonAlgebra{alg, bracket};
}

}  // namespace

TEST_CASE("the nilpotent example is a Poisson algebra") {
  const PoissonAlgebra p = smallNilpotent();
  REQUIRE(checkAlgebra(p.algebra).ok());
  REQUIRE(checkPoissonAlgebra(p).ok());
}

TEST_CASE("zero bracket is always Poisson") {
  PoissonAlgebra p = smallNilpotent();
  p.bracket.setZero();
  REQUIRE(checkPoissonAlgebra(p).ok());
  REQUIRE(poissonCenter(p) == Subspace::full(4));
}

TEST_CASE("a bracket violating Leibniz on the relations is reported") {
  PoissonAlgebra p = smallNilpotent();
  // {x, y} := x forces {x, y^2} = 0 against 2y{x,y} = 2xy.
  p.bracket.setZero();
  p.bracket(1, tensorIndex(1, 4, 2)) = 1;
  p.bracket(1, tensorIndex(2, 4, 1)) = -1;
  const Report r = checkPoissonAlgebra(p);
  REQUIRE(!r.ok());
  bool leibnizAt = false;
  for (const auto& v : r.violations())
    if (v.law == "poisson/leibniz" && v.where == std::vector<Index>{1, 2, 2}) leibnizAt = true;
  REQUIRE(leibnizAt);
}

TEST_CASE("poisson center of the nilpotent example") {
  const PoissonAlgebra p = smallNilpotent();
  Report closure;
  const Subspace center = poissonCenter(p, &closure);
  REQUIRE(center.dim() == 2);
  REQUIRE(center.contains(unitVec(4, 0)));   // 1
  REQUIRE(center.contains(unitVec(4, 3)));   // xy
  REQUIRE(!center.contains(unitVec(4, 1)));  // x
  REQUIRE(closure.ok());
}

TEST_CASE("self module over the nilpotent example") {
  const PoissonAlgebra p = smallNilpotent();
  const PoissonModule m = selfModule(p);
  REQUIRE(checkPoissonModule(p, m).ok());
  REQUIRE(lieInvariants(m) == poissonCenter(p));
}

TEST_CASE("self module with the product as the Lie action fails the Lie law") {
  const PoissonAlgebra p = smallNilpotent();
  PoissonModule m = selfModule(p);
  m.lieAction = p.algebra.mult;
  const Report r = checkPoissonModule(p, m);
  REQUIRE(!r.ok());
  bool lieish = false;
  for (const auto& v : r.violations())
    if (v.law == "poisson-module/lie-law" || v.law == "poisson-module/action-compat" ||
        v.law == "poisson-module/product-compat" || v.law == "poisson-module/unit-lie-trivial")
      lieish = true;
  REQUIRE(lieish);
}

TEST_CASE("trivial one dimensional module") {
  PoissonAlgebra p = smallNilpotent();
  p.bracket.setZero();
  PoissonModule m;
  m.dim = 1;
  m.action = MatQ::Zero(1, 4);
  // augmentation action: n . c = coefficient of 1 in c
  m.action(0, 0) = 1;
  m.lieAction = MatQ::Zero(1, 4);
  REQUIRE(checkPoissonModule(p, m).ok());
  REQUIRE(lieInvariants(m) == Subspace::full(1));
}

TEST_CASE("catalog Poisson layers validate") {
  for (const char* id : {"E1", "E3", "E4", "E5", "E6"}) {
    const CatalogEntry& e = catalogEntry(id);
    INFO(id);
    REQUIRE(e.algebra.has_value());
    REQUIRE(checkPoissonAlgebra(e.algebra->poisson).ok());
    REQUIRE(checkPoissonModule(e.algebra->poisson, e.module->module).ok());
  }
}

TEST_CASE("catalog Poisson centers have the expected dimensions") {
  REQUIRE(poissonCenter(catalogEntry("E5").algebra->poisson).dim() == 8);
  REQUIRE(poissonCenter(catalogEntry("E6").algebra->poisson).dim() == 16);
  REQUIRE(poissonCenter(catalogEntry("E4").algebra->poisson).dim() == 4);
}

TEST_CASE("lie invariants of the E5 self module match the center") {
  const CatalogEntry& e = catalogEntry("E5");
  REQUIRE(lieInvariants(e.module->module) == poissonCenter(e.algebra->poisson));
}
