#pragma once

// Built-in validated instances: group and groupoid algebras as weak Hopf
// algebras, a small Poisson algebra, and tensor-product comodule Poisson
// algebras over them, each bundled with self-modules and integral maps
// where those exist. Also the single-site mutation machinery used by the
// negative tests.

#include "hopfmod/comodule.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfmod {

struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<std::string> hopfBasis;
  std::vector<std::string> algebraBasis;
  std::vector<std::string> moduleBasis;
  WeakHopfAlgebra hopf;
  std::optional<ComodulePoissonAlgebra> algebra;
  std::optional<PoissonHopfModule> module;
  std::optional<MatQ> phi;  // dimA x dimH
  std::map<std::string, Index> expectedDims;
};

/// All built-in entries, in id order.
const std::vector<CatalogEntry>& catalog();

/// Lookup by id ("E1" .. "E6"); throws StructureError for unknown ids.
const CatalogEntry& catalogEntry(std::string_view id);

/// One structure constant: a tensor name ("hopf.mult", "algebra.bracket",
/// "module.action", "phi", ...) and a position in that matrix.
struct MutationSite {
  std::string tensor;
  Index row = 0;
  Index col = 0;
};

/// Every structure-constant position of the entry.
std::vector<MutationSite> mutationSites(const CatalogEntry& entry);

/// Copy of the entry with the addressed constant perturbed by +1.
CatalogEntry mutate(const CatalogEntry& entry, const MutationSite& site);

/// Applies every single-site mutation in turn, invoking the visitor on the
/// mutated entry. Mutations happen in place and are restored afterwards,
/// so visiting all ~10^4 sites of a large entry stays cheap. The visitor
/// returns false to stop the sweep.
void forEachMutation(const CatalogEntry& entry,
                     const std::function<bool(const CatalogEntry&, const MutationSite&)>& visit);

/// Runs the validators that depend on the mutated tensor, cheapest first,
/// stopping at the first violation. Falls back to the full battery before
/// declaring the mutation undetected.
bool mutationDetected(const CatalogEntry& mutated, const MutationSite& site);

}  // namespace hopfmod
