// hopfmod — checks weak Hopf algebras, comodule Poisson algebras, and
// Poisson Hopf modules given as exact structure constants: axioms, derived
// subspaces, the hat-tensor constructions, the coinvariant projection, the
// structure isomorphism, and the extension/coinvariants adjunction.
//
// Inputs are JSON structure files or built-in instances ("catalog:E5").
// Exit codes: 0 all checks pass (gated-out statements do not fail a run),
// 1 at least one violation, 2 unusable input.

#include "hopfmod/hat_tensor.hpp"
#include "hopfmod/serialize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace hopfmod;
using nlohmann::json;

namespace {

struct CheckResult {
  std::string name;
  std::string outcome;  // pass | violation | hypothesis_failed | skipped
  Report report;
  std::vector<std::string> reasons;
};

CheckResult fromReport(std::string name, Report r) {
  CheckResult out{std::move(name), r.ok() ? "pass" : "violation", std::move(r), {}};
  return out;
}

CheckResult fromTheorem(std::string name, TheoremReport t) {
  CheckResult out;
  out.name = std::move(name);
  switch (t.status) {
    case TheoremReport::Status::Verified: out.outcome = "pass"; break;
    case TheoremReport::Status::Violated: out.outcome = "violation"; break;
    case TheoremReport::Status::HypothesesFailed: out.outcome = "hypothesis_failed"; break;
  }
  out.report = std::move(t.conclusions);
  out.reasons = std::move(t.hypothesisFailures);
  return out;
}

CheckResult skipped(std::string name, std::string reason) {
  CheckResult out;
  out.name = std::move(name);
  out.outcome = "skipped";
  out.reasons.push_back(std::move(reason));
  return out;
}

std::vector<CheckResult> runAxioms(const StructureBundle& b) {
  std::vector<CheckResult> out;
  out.push_back(fromReport("hopf/algebra", checkAlgebra(b.hopf.algebra())));
  out.push_back(fromReport("hopf/coalgebra", checkCoalgebra(b.hopf.coalgebra())));
  out.push_back(fromReport("hopf/weak-bialgebra", checkWeakBialgebra(b.hopf.bialgebra)));
  out.push_back(fromReport("hopf/antipode", checkAntipode(b.hopf)));
  out.push_back(fromReport("hopf/counital-identities", checkCounitalIdentities(b.hopf)));
  if (b.algebra) {
    const ComodulePoissonAlgebra& a = *b.algebra;
    out.push_back(fromReport("algebra/associative-unital", checkAlgebra(a.algebra())));
    out.push_back(fromReport("algebra/poisson", checkPoissonAlgebra(a.poisson)));
    out.push_back(fromReport("algebra/comodule", checkComodule(a.hopf, a.coaction)));
    out.push_back(fromReport("algebra/comodule-algebra",
                             checkComoduleAlgebra(a.hopf, a.algebra(), a.coaction)));
    out.push_back(fromReport("algebra/comodule-poisson", checkComodulePoisson(a)));
  }
  if (b.algebra && b.module) {
    out.push_back(
        fromReport("module/poisson-module", checkPoissonModule(b.algebra->poisson, b.module->module)));
    out.push_back(fromReport("module/comodule", checkComodule(b.hopf, b.module->coaction)));
    out.push_back(fromReport("module/poisson-hopf", checkPoissonHopfModule(*b.algebra, *b.module)));
  }
  if (b.algebra && b.phi)
    out.push_back(fromReport("integral/valid", validatePhi(*b.algebra, *b.phi)));
  return out;
}

std::vector<CheckResult> runLemmas(const StructureBundle& b) {
  std::vector<CheckResult> out;
  if (!b.algebra) {
    out.push_back(skipped("lemma/all", "input has no comodule Poisson algebra layer"));
    return out;
  }
  const ComodulePoissonAlgebra& a = *b.algebra;
  out.push_back(fromReport("lemma/coinvariant-closure", checkCoinvariantClosure(a)));

  const bool pro = conditionPro(a);
  {
    CheckResult c;
    c.name = "hypothesis/bracket-unit-coaction";
    c.outcome = pro ? "pass" : "hypothesis_failed";
    if (!pro) c.reasons.push_back("{a, 1_(0)} (x) 1_(1) != 0 for some basis a");
    out.push_back(std::move(c));
  }

  if (!b.module) {
    out.push_back(skipped("lemma/module-level", "input has no module layer"));
    return out;
  }
  const PoissonHopfModule& m = *b.module;
  out.push_back(fromReport("lemma/coinvariant-agreement", checkCoinvariantAgreement(a, m)));
  out.push_back(
      fromReport("lemma/invariant-submodule-closure", checkInvariantSubmoduleClosure(a, m)));

  if (pro) {
    Report closure;
    buildHatTensor(a, m.module, &closure);
    out.push_back(fromReport("lemma/hat-tensor-closure", std::move(closure)));
    out.push_back(fromTheorem("lemma/hom-transfer-lie", checkHomTransfer(a, m, m.module, false).report));
    out.push_back(
        fromTheorem("lemma/hom-transfer-poisson", checkHomTransfer(a, m, m.module, true).report));
  } else {
    out.push_back(skipped("lemma/hat-tensor-closure", "bracket/unit-coaction hypothesis fails"));
  }

  if (b.phi) {
    out.push_back(fromReport("lemma/projection", checkProjection(a, m, *b.phi)));
    out.push_back(fromReport("lemma/deformed-lie", checkDeformedLie(a, m, *b.phi)));
    out.push_back(fromTheorem("lemma/coinvariant-collapse", checkCoinvariantCollapse(a, m, *b.phi)));
  } else {
    out.push_back(skipped("lemma/projection", "no integral map provided"));
  }

  {
    Report wellDefined;
    const Subspace base = baseSubalgebra(a);
    buildTensorOverB(selfBModule(base, a), base, a, &wellDefined);
    out.push_back(fromReport("lemma/tensor-over-b", std::move(wellDefined)));
  }
  return out;
}

std::vector<CheckResult> runTheorems(const StructureBundle& b) {
  std::vector<CheckResult> out;
  if (!b.algebra || !b.module) {
    out.push_back(skipped("theorem/all", "input has no module layer"));
    return out;
  }
  if (b.phi) {
    out.push_back(fromTheorem("theorem/retraction", buildRetraction(*b.algebra, *b.module, *b.phi).report));
    out.push_back(fromTheorem("theorem/fundamental-iso",
                              checkFundamentalIso(*b.algebra, *b.module, *b.phi)));
    out.push_back(fromTheorem("theorem/adjunction",
                              checkAdjunction(*b.algebra, *b.module, *b.phi,
                                              b.bmodule ? &*b.bmodule : nullptr)));
  } else {
    out.push_back(skipped("theorem/retraction", "no integral map provided"));
    out.push_back(skipped("theorem/fundamental-iso", "no integral map provided"));
    out.push_back(fromTheorem("theorem/adjunction",
                              checkAdjunction(*b.algebra, *b.module, MatQ(),
                                              b.bmodule ? &*b.bmodule : nullptr)));
  }
  return out;
}

json checksToJson(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json entry;
    entry["name"] = c.name;
    entry["outcome"] = c.outcome;
    if (!c.report.violations().empty()) entry["violations"] = reportToJson(c.report)["violations"];
    if (!c.report.notes().empty()) entry["notes"] = c.report.notes();
    if (!c.reasons.empty()) entry["reasons"] = c.reasons;
    arr.push_back(entry);
  }
  return arr;
}

json summarize(const std::vector<CheckResult>& checks) {
  json summary;
  int pass = 0, violation = 0, gated = 0, skip = 0;
  for (const auto& c : checks) {
    if (c.outcome == "pass") ++pass;
    else if (c.outcome == "violation") ++violation;
    else if (c.outcome == "hypothesis_failed") ++gated;
    else ++skip;
  }
  summary["pass"] = pass;
  summary["violation"] = violation;
  summary["hypothesis_failed"] = gated;
  summary["skipped"] = skip;
  return summary;
}

void printChecksText(std::ostream& os, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    std::string tag = "PASS";
    if (c.outcome == "violation") tag = "FAIL";
    else if (c.outcome == "hypothesis_failed") tag = "GATED";
    else if (c.outcome == "skipped") tag = "SKIP";
    os << tag << "  " << c.name << "\n";
    for (const auto& r : c.reasons) os << "      - " << r << "\n";
    for (const auto& v : c.report.violations()) {
      os << "      violated: " << v.law;
      if (!v.where.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < v.where.size(); ++i)
          os << (i ? "," : "") << v.where[i];
        os << ")";
      }
      os << "\n";
    }
  }
}

int emit(const json& diffable, double elapsedMs, const std::string& format,
         const std::string& outPath, const std::vector<CheckResult>& checks) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!outPath.empty()) {
    file.open(outPath);
    if (!file) {
      std::cerr << "error: cannot write " << outPath << "\n";
      return 2;
    }
    os = &file;
  }
  if (format == "json") {
    json doc;
    doc["diffable"] = diffable;
    doc["timing_ms"] = elapsedMs;
    *os << doc.dump(2) << "\n";
  } else {
    *os << "instance: " << diffable["instance"].get<std::string>() << "\n";
    printChecksText(*os, checks);
    const json& s = diffable["summary"];
    *os << "summary: " << s["pass"] << " pass, " << s["violation"] << " violation, "
        << s["hypothesis_failed"] << " gated, " << s["skipped"] << " skipped"
        << "  (" << elapsedMs << " ms)\n";
  }
  for (const auto& c : checks)
    if (c.outcome == "violation") return 1;
  return 0;
}

void printSubspace(std::ostream& os, const std::string& name, const Subspace& s) {
  os << name << ": dim " << s.dim() << "\n";
  for (Index r = 0; r < s.dim(); ++r) {
    os << "    [";
    for (Index c = 0; c < s.ambientDim(); ++c)
      os << (c ? " " : "") << formatRational(s.basis()(r, c));
    os << "]\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checker for weak Hopf / Poisson Hopf module structures"};
  app.require_subcommand(1);

  std::string input, outPath, format = "text", suite = "all";
  std::string pathM, pathPhi, pathN;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "structure file or catalog:<id>")->required();
    cmd->add_option("--out", outPath, "write the report to a file");
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* cmdCheck = app.add_subcommand("check", "run axiom/lemma/theorem suites");
  addCommon(cmdCheck);
  cmdCheck->add_option("--suite", suite, "axioms, lemmas, theorems, or all")
      ->check(CLI::IsMember({"axioms", "lemmas", "theorems", "all"}));

  CLI::App* cmdFundamental =
      app.add_subcommand("fundamental", "integral map, collapse, structure iso, adjunction");
  addCommon(cmdFundamental);
  cmdFundamental->add_option("module", pathM, "module file (when the first input is an algebra)");
  cmdFundamental->add_option("phi", pathPhi, "integral map file");

  CLI::App* cmdSubspaces = app.add_subcommand("subspaces", "print the derived subspaces");
  addCommon(cmdSubspaces);

  CLI::App* cmdHat = app.add_subcommand("hat-tensor", "build the unit-coaction subspace of M (x) H");
  addCommon(cmdHat);

  CLI::App* cmdLambda = app.add_subcommand("lambda", "build the coaction-splitting retraction");
  addCommon(cmdLambda);
  cmdLambda->add_option("--phi", pathPhi, "integral map file overriding the bundled one");

  CLI::App* cmdAdjunction = app.add_subcommand("adjunction", "check the extension/coinvariants adjunction");
  addCommon(cmdAdjunction);
  cmdAdjunction->add_option("--n", pathN, "b_module file to extend (defaults to the base itself)");

  CLI::App* cmdList = app.add_subcommand("list-catalog", "list built-in instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmdList->parsed()) {
      for (const auto& e : catalog()) {
        std::cout << e.id << "  dim H = " << e.hopf.dim();
        if (e.algebra) std::cout << ", dim A = " << e.algebra->dim();
        if (e.phi) std::cout << ", integral map bundled";
        std::cout << "\n    " << e.description << "\n";
      }
      return 0;
    }

    StructureBundle bundle = resolveInput(input);

    if (cmdCheck->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<CheckResult> checks;
      auto append = [&](std::vector<CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
      };
      if (suite == "axioms" || suite == "all") append(runAxioms(bundle));
      if (suite == "lemmas" || suite == "all") append(runLemmas(bundle));
      if (suite == "theorems" || suite == "all") append(runTheorems(bundle));
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      json diffable;
      diffable["instance"] = bundle.id.empty() ? input : bundle.id;
      diffable["suite"] = suite;
      diffable["checks"] = checksToJson(checks);
      diffable["summary"] = summarize(checks);
      return emit(diffable, ms, format, outPath, checks);
    }

    if (cmdSubspaces->parsed()) {
      const auto [ht, hs] = counitalSubspaces(bundle.hopf);
      printSubspace(std::cout, "H_t", ht);
      printSubspace(std::cout, "H_s", hs);
      const StructuralFlags flags = structuralPredicates(bundle.hopf);
      std::cout << "flags: commutative=" << flags.commutative
                << " cocommutative=" << flags.cocommutative
                << " delta1-symmetric=" << flags.delta1Symmetric
                << " source-central=" << flags.sourceCentral
                << " source-commutative=" << flags.sourceCommutative
                << " antipode-bijective=" << flags.antipodeBijective << "\n";
      if (bundle.algebra) {
        const ComodulePoissonAlgebra& a = *bundle.algebra;
        printSubspace(std::cout, "A^coH", coinvariants(a.hopf, a.coaction));
        printSubspace(std::cout, "A^A", poissonCenter(a.poisson));
        printSubspace(std::cout, "A^AcoH",
                      fullCoinvariants(a.hopf, selfModule(a.poisson), a.coaction));
      }
      if (bundle.algebra && bundle.module) {
        const PoissonHopfModule& m = *bundle.module;
        printSubspace(std::cout, "M^coH", coinvariants(bundle.hopf, m.coaction));
        printSubspace(std::cout, "M^A", lieInvariants(m.module));
        printSubspace(std::cout, "M^AcoH",
                      fullCoinvariants(bundle.hopf, m.module, m.coaction));
      }
      return 0;
    }

    if (cmdHat->parsed()) {
      if (!bundle.algebra || !bundle.module) {
        std::cerr << "error: hat-tensor needs a module bundle\n";
        return 2;
      }
      std::cout << "bracket/unit-coaction hypothesis: "
                << (conditionPro(*bundle.algebra) ? "holds" : "fails") << "\n";
      if (!conditionPro(*bundle.algebra)) return 0;
      Report closure;
      const HatTensor hat = buildHatTensor(*bundle.algebra, bundle.module->module, &closure);
      std::cout << "dim (M hat-tensor H) = " << hat.dim() << " inside " << hat.moduleDim << " * "
                << hat.hopfDim << "\n";
      std::cout << "closure: " << (closure.ok() ? "all structures stay inside" : "VIOLATED")
                << "\n";
      std::cout << "induced action present: " << (hat.action ? "yes (H commutative)" : "no")
                << "\n";
      return closure.ok() ? 0 : 1;
    }

    if (cmdLambda->parsed()) {
      if (!bundle.algebra || !bundle.module) {
        std::cerr << "error: lambda needs a module bundle\n";
        return 2;
      }
      if (!pathPhi.empty())
        bundle.phi = loadPhiFile(pathPhi, bundle.algebra->dim(), bundle.hopf.dim());
      if (!bundle.phi) {
        std::cerr << "error: no integral map available\n";
        return 2;
      }
      const RetractionResult r = buildRetraction(*bundle.algebra, *bundle.module, *bundle.phi);
      const CheckResult c = fromTheorem("theorem/retraction", r.report);
      printChecksText(std::cout, {c});
      return c.outcome == "violation" ? 1 : 0;
    }

    if (cmdAdjunction->parsed()) {
      if (!bundle.algebra || !bundle.module) {
        std::cerr << "error: adjunction needs a module bundle\n";
        return 2;
      }
      std::optional<BModuleData> n;
      if (!pathN.empty()) {
        const StructureBundle nBundle = resolveInput(pathN);
        if (!nBundle.bmodule) {
          std::cerr << "error: --n must be a b_module file\n";
          return 2;
        }
        n = nBundle.bmodule;
      }
      const TheoremReport r = checkAdjunction(*bundle.algebra, *bundle.module,
                                              bundle.phi ? *bundle.phi : MatQ(),
                                              n ? &*n : nullptr);
      const CheckResult c = fromTheorem("theorem/adjunction", r);
      printChecksText(std::cout, {c});
      return c.outcome == "violation" ? 1 : 0;
    }

    if (cmdFundamental->parsed()) {
      if (!pathM.empty()) {
        // three-file form: algebra, module, integral map
        const StructureBundle mBundle = resolveInput(pathM);
        if (!mBundle.module) {
          std::cerr << "error: second input must be a poisson_hopf_module file\n";
          return 2;
        }
        bundle.module = mBundle.module;
        if (!pathPhi.empty() && bundle.algebra)
          bundle.phi = loadPhiFile(pathPhi, bundle.algebra->dim(), bundle.hopf.dim());
      }
      if (!bundle.algebra || !bundle.module) {
        std::cerr << "error: fundamental needs an algebra and a module\n";
        return 2;
      }
      if (!bundle.phi) {
        std::cerr << "error: no integral map available\n";
        return 2;
      }
      const ComodulePoissonAlgebra& a = *bundle.algebra;
      const PoissonHopfModule& m = *bundle.module;

      std::vector<CheckResult> checks;
      checks.push_back(fromReport("integral/valid", validatePhi(a, *bundle.phi)));
      checks.push_back(
          fromTheorem("lemma/coinvariant-collapse", checkCoinvariantCollapse(a, m, *bundle.phi)));
      checks.push_back(
          fromTheorem("theorem/fundamental-iso", checkFundamentalIso(a, m, *bundle.phi)));
      checks.push_back(fromTheorem("theorem/adjunction",
                                   checkAdjunction(a, m, *bundle.phi, nullptr)));

      const Subspace base = baseSubalgebra(a);
      const Subspace mco = fullCoinvariants(a.hopf, m.module, m.coaction);
      std::cout << "dim A = " << a.dim() << ", dim M = " << m.dim() << "\n";
      std::cout << "dim B = A^AcoH = " << base.dim() << ", dim M^AcoH = " << mco.dim() << "\n";
      bool canTensor = true;
      try {
        Report wd;
        const TensorOverB t = buildTensorOverB(restrictedBAction(base, a, m, mco), base, a, &wd);
        std::cout << "dim (M^AcoH tensor_B A) = " << t.dim() << "\n";
      } catch (const StructureError&) {
        canTensor = false;
        std::cout << "M^AcoH is not closed under the base action\n";
      }
      (void)canTensor;
      printChecksText(std::cout, checks);
      for (const auto& c : checks)
        if (c.outcome == "violation") return 1;
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
