#pragma once

// JSON structure files: sparse structure-constant documents over Q with
// string rationals, one kind per structure level. The same format ships
// the catalog entries, so the files double as format documentation.

#include "hopfmod/catalog.hpp"
#include "hopfmod/fundamental.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hopfmod {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a structure file provides. The Hopf layer is always present;
/// higher layers appear for the richer kinds.
struct StructureBundle {
  std::string kind;
  std::string id;
  std::vector<std::string> hopfBasis;
  std::vector<std::string> algebraBasis;
  std::vector<std::string> moduleBasis;
  WeakHopfAlgebra hopf;
  std::optional<ComodulePoissonAlgebra> algebra;
  std::optional<PoissonHopfModule> module;
  std::optional<BModuleData> bmodule;
  std::optional<MatQ> phi;
};

StructureBundle loadStructure(const nlohmann::json& doc);
StructureBundle loadStructureFile(const std::string& path);

/// Standalone integral-map file: {"kind": "integral_map", "phi": [[i,j,"p/q"]...]}
/// with i indexing the Hopf basis and j the algebra basis of the consuming
/// bundle.
MatQ loadPhiFile(const std::string& path, Index dimA, Index dimH);

/// Resolves "catalog:<id>" to a built-in entry, anything else as a path.
StructureBundle resolveInput(const std::string& spec);

StructureBundle bundleFromCatalog(const CatalogEntry& entry);

nlohmann::json toJson(const CatalogEntry& entry);
nlohmann::json toJson(const StructureBundle& bundle);

nlohmann::json violationToJson(const Violation& v);
nlohmann::json reportToJson(const Report& r);

/// Indented dump that keeps arrays of primitives on one line, so sparse
/// entries read as [i, j, k, "p/q"].
std::string compactDump(const nlohmann::json& doc, int indent = 2);

}  // namespace hopfmod
