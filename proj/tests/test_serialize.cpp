#include <catch2/catch_amalgamated.hpp>

#include "hopfmod/serialize.hpp"

#include <fstream>

using namespace hopfmod;
using nlohmann::json;

#ifndef HOPFMOD_SOURCE_DIR
#define HOPFMOD_SOURCE_DIR "."
#endif

namespace {

json minimalHopfDoc() {
  // the Z2 group algebra
  json doc;
  doc["field"] = "Q";
  doc["kind"] = "weak_hopf";
  doc["basis"] = {"e", "g"};
  doc["mult"] = json::array({json::array({0, 0, 0, "1"}), json::array({0, 1, 1, "1"}),
                             json::array({1, 0, 1, "1"}), json::array({1, 1, 0, "1"})});
  doc["unit"] = json::array({json::array({0, "1"})});
  doc["comult"] = json::array({json::array({0, 0, 0, "1"}), json::array({1, 1, 1, "1"})});
  doc["counit"] = json::array({json::array({0, "1"}), json::array({1, "1"})});
  doc["antipode"] = json::array({json::array({0, 0, "1"}), json::array({1, 1, "1"})});
  return doc;
}

}  // namespace

TEST_CASE("weak Hopf documents load") {
  const StructureBundle b = loadStructure(minimalHopfDoc());
  REQUIRE(b.hopf.dim() == 2);
  REQUIRE(checkAlgebra(b.hopf.algebra()).ok());
  REQUIRE(checkAntipode(b.hopf).ok());
  REQUIRE(!b.algebra.has_value());
}

TEST_CASE("parse failures carry messages and throw ParseError") {
  json doc = minimalHopfDoc();
  SECTION("missing key") {
    doc.erase("antipode");
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
  SECTION("wrong field") {
    doc["field"] = "R";
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
  SECTION("unknown kind") {
    doc["kind"] = "hopf";
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
  SECTION("index out of range") {
    doc["mult"].push_back(json::array({0, 0, 7, "1"}));
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
  SECTION("float entries are rejected") {
    doc["mult"][0][3] = 0.5;
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
  SECTION("zero denominator") {
    doc["mult"][0][3] = "1/0";
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
  SECTION("malformed rational") {
    doc["mult"][0][3] = "one half";
    REQUIRE_THROWS_AS(loadStructure(doc), ParseError);
  }
}

TEST_CASE("catalog entries round trip through JSON") {
  for (const auto& e : catalog()) {
    INFO(e.id);
    const StructureBundle reloaded = loadStructure(toJson(e));
    REQUIRE(sameMatrix(reloaded.hopf.algebra().mult, e.hopf.algebra().mult));
    REQUIRE(sameMatrix(reloaded.hopf.algebra().unit, e.hopf.algebra().unit));
    REQUIRE(sameMatrix(reloaded.hopf.coalgebra().comult, e.hopf.coalgebra().comult));
    REQUIRE(sameMatrix(reloaded.hopf.coalgebra().counit, e.hopf.coalgebra().counit));
    REQUIRE(sameMatrix(reloaded.hopf.antipode, e.hopf.antipode));
    REQUIRE(reloaded.algebra.has_value() == e.algebra.has_value());
    if (e.algebra) {
      REQUIRE(sameMatrix(reloaded.algebra->poisson.algebra.mult, e.algebra->poisson.algebra.mult));
      REQUIRE(sameMatrix(reloaded.algebra->poisson.bracket, e.algebra->poisson.bracket));
      REQUIRE(sameMatrix(reloaded.algebra->coaction, e.algebra->coaction));
    }
    if (e.module) {
      REQUIRE(sameMatrix(reloaded.module->module.action, e.module->module.action));
      REQUIRE(sameMatrix(reloaded.module->module.lieAction, e.module->module.lieAction));
      REQUIRE(sameMatrix(reloaded.module->coaction, e.module->coaction));
    }
    if (e.phi) REQUIRE(sameMatrix(*reloaded.phi, *e.phi));
  }
}

TEST_CASE("shipped catalog files match the built-in instances") {
  for (const auto& e : catalog()) {
    INFO(e.id);
    const std::string path =
        std::string(HOPFMOD_SOURCE_DIR) + "/data/catalog/" + e.id + ".json";
    const StructureBundle fromFile = loadStructureFile(path);
    const StructureBundle builtin = bundleFromCatalog(e);
    REQUIRE(toJson(fromFile).dump() == toJson(builtin).dump());
  }
}

TEST_CASE("serialization is deterministic") {
  const json a = toJson(catalogEntry("E5"));
  const json b = toJson(catalogEntry("E5"));
  REQUIRE(a.dump() == b.dump());
  REQUIRE(compactDump(a) == compactDump(b));
}

TEST_CASE("catalog addressing") {
  REQUIRE(resolveInput("catalog:E2").hopf.dim() == 4);
  REQUIRE_THROWS_AS(resolveInput("catalog:E9"), ParseError);
  REQUIRE_THROWS_AS(resolveInput("/nonexistent/file.json"), ParseError);
}

TEST_CASE("integral map files") {
  const std::string path = "phi_test_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"kind": "integral_map", "phi": [[0, 0, "1"], [1, 1, "1/2"]]})";
  }
  const MatQ phi = loadPhiFile(path, 4, 2);
  REQUIRE(phi.rows() == 4);
  REQUIRE(phi.cols() == 2);
  REQUIRE(phi(0, 0) == 1);
  REQUIRE(phi(1, 1) == Rational(1, 2));
  std::remove(path.c_str());
}

TEST_CASE("b_module documents load against the computed base") {
  // B-module over E4's base subalgebra (dimension 2): B acting on itself.
  json doc;
  doc["field"] = "Q";
  doc["kind"] = "b_module";
  doc["algebra"] = toJson(catalogEntry("E4"))["algebra"];
  doc["basis"] = {"b0", "b1"};
  doc["action"] = json::array({json::array({0, 0, 0, "1"}), json::array({0, 1, 0, "0"}),
                               json::array({1, 1, 1, "1"})});
  const StructureBundle b = loadStructure(doc);
  REQUIRE(b.bmodule.has_value());
  REQUIRE(b.bmodule->dim == 2);
  REQUIRE(b.bmodule->action.cols() == 4);
}
