#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/catalog.hpp"

using namespace hopfmod;

TEST_CASE("catalog lists the six entries in order") {
  const auto& entries = catalog();
  REQUIRE(entries.size() == 6);
  for (std::size_t i = 0; i < entries.size(); ++i)
    REQUIRE(entries[i].id == "E" + std::to_string(i + 1));
  REQUIRE_THROWS_AS(catalogEntry("E9"), StructureError);
}

TEST_CASE("basis labels match the dimensions") {
  for (const auto& e : catalog()) {
    REQUIRE(static_cast<Index>(e.hopfBasis.size()) == e.hopf.dim());
    if (e.algebra)
      REQUIRE(static_cast<Index>(e.algebraBasis.size()) == e.algebra->dim());
    if (e.module)
      REQUIRE(static_cast<Index>(e.moduleBasis.size()) == e.module->dim());
  }
}

TEST_CASE("mutation site enumeration") {
  REQUIRE(mutationSites(catalogEntry("E2")).size() == 152);
  // full bundle: hopf 152, algebra 4096+16+4096+1024, module 4096+4096+1024, phi 64
  REQUIRE(mutationSites(catalogEntry("E5")).size() == 18664);
}

TEST_CASE("mutate returns a perturbed copy") {
  const CatalogEntry& e = catalogEntry("E2");
  const MutationSite site{"hopf.antipode", 1, 1};
  const CatalogEntry mutated = mutate(e, site);
  REQUIRE(mutated.hopf.antipode(1, 1) == e.hopf.antipode(1, 1) + 1);
  REQUIRE(sameMatrix(e.hopf.antipode, catalogEntry("E2").hopf.antipode));
  REQUIRE_THROWS_AS(mutate(e, MutationSite{"hopf.antipode", 9, 0}), StructureError);
  REQUIRE_THROWS_AS(mutate(e, MutationSite{"nope", 0, 0}), StructureError);
}

TEST_CASE("forEachMutation visits every site once and restores the entry") {
  const CatalogEntry& e = catalogEntry("E2");
  std::size_t visits = 0;
  forEachMutation(e, [&](const CatalogEntry& m, const MutationSite& site) {
    ++visits;
    // the working copy differs from the original at exactly this site
    if (site.tensor == "hopf.antipode")
      REQUIRE(m.hopf.antipode(site.row, site.col) == e.hopf.antipode(site.row, site.col) + 1);
    return true;
  });
  REQUIRE(visits == mutationSites(e).size());

  std::size_t stopped = 0;
  forEachMutation(e, [&](const CatalogEntry&, const MutationSite&) {
    ++stopped;
    return stopped < 5;
  });
  REQUIRE(stopped == 5);
}

TEST_CASE("known single-site mutations are detected") {
  SECTION("groupoid antipode") {
    const MutationSite site{"hopf.antipode", 1, 1};
    const CatalogEntry m = mutate(catalogEntry("E2"), site);
    REQUIRE(!checkAntipode(m.hopf, 1).ok());
    REQUIRE(mutationDetected(m, site));
  }
  SECTION("groupoid unit coproduct") {
    const MutationSite site{"hopf.comult", 0, 0};
    const CatalogEntry m = mutate(catalogEntry("E2"), site);
    REQUIRE(mutationDetected(m, site));
  }
  SECTION("tensor bundle bracket") {
    const MutationSite site{"algebra.bracket", 12, tensorIndex(4, 16, 8)};
    const CatalogEntry m = mutate(catalogEntry("E5"), site);
    REQUIRE(mutationDetected(m, site));
  }
  SECTION("tensor bundle integral map") {
    const MutationSite site{"phi", 5, 1};
    const CatalogEntry m = mutate(catalogEntry("E5"), site);
    REQUIRE(mutationDetected(m, site));
  }
}
