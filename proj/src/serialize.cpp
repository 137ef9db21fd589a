#include "hopfmod/serialize.hpp"

#include <fstream>

namespace hopfmod {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

const json& require(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing key: ") + key);
  return *it;
}

Index checkedIndex(const json& value, Index bound, const char* what) {
  if (!value.is_number_integer()) fail(std::string("index is not an integer in ") + what);
  const auto i = value.get<long long>();
  if (i < 0 || i >= bound) fail(std::string("index out of range in ") + what);
  return static_cast<Index>(i);
}

Rational entryValue(const json& value, const char* what) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) {
    try {
      return parseRational(value.get<std::string>());
    } catch (const StructureError& e) {
      fail(std::string(e.what()) + " in " + what);
    }
  }
  fail(std::string("rational entries must be strings like \"p/q\" in ") + what);
}

// Sparse readers. Each entry is [indices..., "p/q"], with the index roles
// fixed per tensor; repeated entries accumulate.

MatQ readTensor3(const json& doc, const char* key, Index d1, Index d2, Index d3,
                 bool firstMajorRows) {
  // firstMajorRows: rows indexed by (j, k) pairs (comult/coaction style),
  // otherwise columns are the (i, j) pairs (mult/bracket/action style).
  MatQ out = firstMajorRows ? MatQ::Zero(d2 * d3, d1) : MatQ::Zero(d3, d1 * d2);
  const json& arr = require(doc, key);
  if (!arr.is_array()) fail(std::string(key) + " must be an array");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 4) fail(std::string(key) + " entries must be [i,j,k,\"p/q\"]");
    const Index i = checkedIndex(e[0], d1, key);
    const Index j = checkedIndex(e[1], d2, key);
    const Index k = checkedIndex(e[2], d3, key);
    if (firstMajorRows)
      out(j * d3 + k, i) += entryValue(e[3], key);
    else
      out(k, i * d2 + j) += entryValue(e[3], key);
  }
  return out;
}

MatQ readMatrix(const json& doc, const char* key, Index rows, Index cols) {
  // entries [i, j, "p/q"]: column i (source basis), row j (target basis)
  MatQ out = MatQ::Zero(rows, cols);
  const json& arr = require(doc, key);
  if (!arr.is_array()) fail(std::string(key) + " must be an array");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3) fail(std::string(key) + " entries must be [i,j,\"p/q\"]");
    const Index i = checkedIndex(e[0], cols, key);
    const Index j = checkedIndex(e[1], rows, key);
    out(j, i) += entryValue(e[2], key);
  }
  return out;
}

VecQ readVector(const json& doc, const char* key, Index dim) {
  VecQ out = VecQ::Zero(dim);
  const json& arr = require(doc, key);
  if (!arr.is_array()) fail(std::string(key) + " must be an array");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) fail(std::string(key) + " entries must be [i,\"p/q\"]");
    out(checkedIndex(e[0], dim, key)) += entryValue(e[1], key);
  }
  return out;
}

std::vector<std::string> readBasis(const json& doc) {
  const json& arr = require(doc, "basis");
  if (!arr.is_array() || arr.empty()) fail("basis must be a nonempty array of labels");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) fail("basis labels must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void checkField(const json& doc) {
  if (require(doc, "field").get<std::string>() != "Q") fail("field must be \"Q\"");
}

WeakHopfAlgebra readWeakHopf(const json& doc, std::vector<std::string>& basisOut) {
  checkField(doc);
  basisOut = readBasis(doc);
  const Index n = static_cast<Index>(basisOut.size());
  StructureAlgebra alg;
  alg.dim = n;
  alg.mult = readTensor3(doc, "mult", n, n, n, false);
  alg.unit = readVector(doc, "unit", n);
  StructureCoalgebra co;
  co.dim = n;
  co.comult = readTensor3(doc, "comult", n, n, n, true);
  co.counit = readVector(doc, "counit", n).transpose();
  MatQ antipode = readMatrix(doc, "antipode", n, n);
  return WeakHopfAlgebra{WeakBialgebra{std::move(alg), std::move(co)}, std::move(antipode)};
}

ComodulePoissonAlgebra readAlgebraLayer(const json& doc, const WeakHopfAlgebra& hopf,
                                        std::vector<std::string>& basisOut) {
  checkField(doc);
  basisOut = readBasis(doc);
  const Index n = static_cast<Index>(basisOut.size());
  const Index nh = hopf.dim();
  StructureAlgebra alg;
  alg.dim = n;
  alg.mult = readTensor3(doc, "mult", n, n, n, false);
  alg.unit = readVector(doc, "unit", n);
  MatQ bracket = readTensor3(doc, "bracket", n, n, n, false);
  MatQ coaction = readTensor3(doc, "coaction", n, n, nh, true);
  return ComodulePoissonAlgebra{hopf, PoissonAlgebra{std::move(alg), std::move(bracket)},
                                std::move(coaction)};
}

}  // namespace

StructureBundle loadStructure(const json& doc) {
  if (!doc.is_object()) fail("structure file must be a JSON object");
  StructureBundle out;
  out.kind = require(doc, "kind").get<std::string>();
  if (doc.contains("id")) out.id = doc["id"].get<std::string>();

  if (out.kind == "weak_hopf") {
    out.hopf = readWeakHopf(doc, out.hopfBasis);
  } else if (out.kind == "comodule_poisson_algebra") {
    out.hopf = readWeakHopf(require(doc, "hopf"), out.hopfBasis);
    out.algebra = readAlgebraLayer(doc, out.hopf, out.algebraBasis);
  } else if (out.kind == "poisson_hopf_module" || out.kind == "b_module") {
    const json& algebraDoc = require(doc, "algebra");
    out.hopf = readWeakHopf(require(algebraDoc, "hopf"), out.hopfBasis);
    out.algebra = readAlgebraLayer(algebraDoc, out.hopf, out.algebraBasis);
    checkField(doc);
    out.moduleBasis = readBasis(doc);
    const Index dm = static_cast<Index>(out.moduleBasis.size());
    if (out.kind == "poisson_hopf_module") {
      PoissonModule mod;
      mod.dim = dm;
      mod.action = readTensor3(doc, "action", dm, out.algebra->dim(), dm, false);
      mod.lieAction = readTensor3(doc, "lie_action", dm, out.algebra->dim(), dm, false);
      MatQ coaction = readTensor3(doc, "coaction", dm, dm, out.hopf.dim(), true);
      out.module = PoissonHopfModule{std::move(mod), std::move(coaction)};
    } else {
      const Subspace b = baseSubalgebra(*out.algebra);
      BModuleData mod;
      mod.dim = dm;
      mod.action = readTensor3(doc, "action", dm, b.dim(), dm, false);
      out.bmodule = std::move(mod);
    }
  } else {
    fail("unknown kind: " + out.kind);
  }

  const json* phiHost = nullptr;
  if (doc.contains("phi")) phiHost = &doc;
  if (!phiHost && doc.contains("algebra") && doc["algebra"].contains("phi"))
    phiHost = &doc["algebra"];
  if (phiHost && out.algebra)
    out.phi = readMatrix(*phiHost, "phi", out.algebra->dim(), out.hopf.dim());
  return out;
}

StructureBundle loadStructureFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail("invalid JSON in " + path + ": " + e.what());
  }
  StructureBundle out = loadStructure(doc);
  if (out.id.empty()) out.id = path;
  return out;
}

MatQ loadPhiFile(const std::string& path, Index dimA, Index dimH) {
  std::ifstream in(path);
  if (!in) fail("cannot open: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    fail("invalid JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object() || require(doc, "kind").get<std::string>() != "integral_map")
    fail("integral map file must have kind \"integral_map\"");
  return readMatrix(doc, "phi", dimA, dimH);
}

StructureBundle bundleFromCatalog(const CatalogEntry& entry) {
  StructureBundle out;
  out.kind = entry.module ? "poisson_hopf_module"
                          : (entry.algebra ? "comodule_poisson_algebra" : "weak_hopf");
  out.id = "catalog:" + entry.id;
  out.hopfBasis = entry.hopfBasis;
  out.algebraBasis = entry.algebraBasis;
  out.moduleBasis = entry.moduleBasis;
  out.hopf = entry.hopf;
  out.algebra = entry.algebra;
  out.module = entry.module;
  out.phi = entry.phi;
  return out;
}

StructureBundle resolveInput(const std::string& spec) {
  if (spec.rfind("catalog:", 0) == 0) {
    try {
      return bundleFromCatalog(catalogEntry(spec.substr(8)));
    } catch (const StructureError& e) {
      fail(e.what());
    }
  }
  return loadStructureFile(spec);
}

namespace {

json tensor3ToJson(const MatQ& t, Index d1, Index d2, Index d3, bool firstMajorRows) {
  json arr = json::array();
  for (Index i = 0; i < d1; ++i) {
    if (firstMajorRows) {
      for (Index j = 0; j < d2; ++j)
        for (Index k = 0; k < d3; ++k) {
          const Rational& c = t(j * d3 + k, i);
          if (c != 0) arr.push_back({i, j, k, formatRational(c)});
        }
    } else {
      for (Index j = 0; j < d2; ++j)
        for (Index k = 0; k < d3; ++k) {
          const Rational& c = t(k, i * d2 + j);
          if (c != 0) arr.push_back({i, j, k, formatRational(c)});
        }
    }
  }
  return arr;
}

json matrixToJson(const MatQ& m) {
  json arr = json::array();
  for (Index i = 0; i < m.cols(); ++i)
    for (Index j = 0; j < m.rows(); ++j)
      if (m(j, i) != 0) arr.push_back({i, j, formatRational(m(j, i))});
  return arr;
}

json vectorToJson(const VecQ& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) arr.push_back({i, formatRational(v(i))});
  return arr;
}

json hopfToJson(const WeakHopfAlgebra& h, const std::vector<std::string>& basis) {
  const Index n = h.dim();
  json doc;
  doc["field"] = "Q";
  doc["kind"] = "weak_hopf";
  doc["basis"] = basis;
  doc["mult"] = tensor3ToJson(h.algebra().mult, n, n, n, false);
  doc["unit"] = vectorToJson(h.algebra().unit);
  doc["comult"] = tensor3ToJson(h.coalgebra().comult, n, n, n, true);
  doc["counit"] = vectorToJson(h.coalgebra().counit.transpose());
  doc["antipode"] = matrixToJson(h.antipode);
  return doc;
}

json algebraToJson(const ComodulePoissonAlgebra& a, const std::vector<std::string>& hopfBasis,
                   const std::vector<std::string>& basis, const std::optional<MatQ>& phi) {
  const Index n = a.dim(), nh = a.hopf.dim();
  json doc;
  doc["field"] = "Q";
  doc["kind"] = "comodule_poisson_algebra";
  doc["hopf"] = hopfToJson(a.hopf, hopfBasis);
  doc["basis"] = basis;
  doc["mult"] = tensor3ToJson(a.algebra().mult, n, n, n, false);
  doc["unit"] = vectorToJson(a.algebra().unit);
  doc["bracket"] = tensor3ToJson(a.poisson.bracket, n, n, n, false);
  doc["coaction"] = tensor3ToJson(a.coaction, n, n, nh, true);
  if (phi) doc["phi"] = matrixToJson(*phi);
  return doc;
}

}  // namespace

json toJson(const StructureBundle& bundle) {
  if (!bundle.algebra) {
    json doc = hopfToJson(bundle.hopf, bundle.hopfBasis);
    if (!bundle.id.empty()) doc["id"] = bundle.id;
    return doc;
  }
  if (!bundle.module) {
    json doc = algebraToJson(*bundle.algebra, bundle.hopfBasis, bundle.algebraBasis, bundle.phi);
    if (!bundle.id.empty()) doc["id"] = bundle.id;
    return doc;
  }
  const Index dm = bundle.module->dim(), da = bundle.algebra->dim(), nh = bundle.hopf.dim();
  json doc;
  doc["field"] = "Q";
  doc["kind"] = "poisson_hopf_module";
  doc["algebra"] = algebraToJson(*bundle.algebra, bundle.hopfBasis, bundle.algebraBasis, bundle.phi);
  doc["basis"] = bundle.moduleBasis;
  doc["action"] = tensor3ToJson(bundle.module->module.action, dm, da, dm, false);
  doc["lie_action"] = tensor3ToJson(bundle.module->module.lieAction, dm, da, dm, false);
  doc["coaction"] = tensor3ToJson(bundle.module->coaction, dm, dm, nh, true);
  if (!bundle.id.empty()) doc["id"] = bundle.id;
  return doc;
}

json toJson(const CatalogEntry& entry) {
  json doc = toJson(bundleFromCatalog(entry));
  doc["id"] = entry.id;
  doc["description"] = entry.description;
  return doc;
}

json violationToJson(const Violation& v) {
  json out;
  out["law"] = v.law;
  out["at"] = v.where;
  out["derived"] = v.derived;
  json lhs = json::array(), rhs = json::array();
  for (Index j = 0; j < v.lhs.cols(); ++j)
    for (Index i = 0; i < v.lhs.rows(); ++i)
      if (v.lhs(i, j) != 0) lhs.push_back({i, j, formatRational(v.lhs(i, j))});
  for (Index j = 0; j < v.rhs.cols(); ++j)
    for (Index i = 0; i < v.rhs.rows(); ++i)
      if (v.rhs(i, j) != 0) rhs.push_back({i, j, formatRational(v.rhs(i, j))});
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  return out;
}

json reportToJson(const Report& r) {
  json out;
  json vs = json::array();
  for (const auto& v : r.violations()) vs.push_back(violationToJson(v));
  out["violations"] = vs;
  out["notes"] = r.notes();
  return out;
}

namespace {

bool isLeafArray(const json& value) {
  if (!value.is_array()) return false;
  for (const auto& e : value)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

void dumpCompact(const json& value, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * depth), ' ');
  const std::string padIn(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += padIn + json(it.key()).dump() + ": ";
      dumpCompact(it.value(), out, indent, depth + 1);
    }
    out += "\n" + pad + "}";
  } else if (value.is_array() && !isLeafArray(value)) {
    out += "[\n";
    bool first = true;
    for (const auto& e : value) {
      if (!first) out += ",\n";
      first = false;
      out += padIn;
      dumpCompact(e, out, indent, depth + 1);
    }
    out += "\n" + pad + "]";
  } else {
    out += value.dump();
  }
}

}  // namespace

std::string compactDump(const json& doc, int indent) {
  std::string out;
  dumpCompact(doc, out, indent, 0);
  return out;
}

}  // namespace hopfmod
