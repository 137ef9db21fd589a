#pragma once

#include "hopfmod/dense.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace hopfmod {

/// One failed identity: which law, at which basis indices, and the two
/// sides that disagree (as column vectors or matrices, whatever the law
/// naturally produces).
struct Violation {
  std::string law;
  std::vector<Index> where;
  MatQ lhs;
  MatQ rhs;
  /// True when the failing identity is a consequence of the axioms rather
  /// than an axiom itself; such a failure on otherwise-passing data points
  /// at a bug, not at bad input.
  bool derived = false;
};

/// Violation accumulator with an optional cap, so sweeps can stop at the
/// first hit while diagnostic runs collect everything.
class Report {
 public:
  static constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

  Report() = default;
  explicit Report(std::size_t limit) : limit_(limit) {}

  bool ok() const { return violations_.empty(); }
  bool full() const { return violations_.size() >= limit_; }
  std::size_t limit() const { return limit_; }

  void add(Violation v) {
    if (!full()) violations_.push_back(std::move(v));
  }
  void add(std::string law, std::vector<Index> where, MatQ lhs, MatQ rhs, bool derived = false) {
    add(Violation{std::move(law), std::move(where), std::move(lhs), std::move(rhs), derived});
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  void merge(const Report& other) {
    for (const auto& v : other.violations_) add(v);
    for (const auto& n : other.notes_) notes_.push_back(n);
  }

  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t limit_ = kNoLimit;
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

/// Outcome of a gated statement check. Hypotheses are evaluated first;
/// a conclusion is only ever reported on instances whose hypotheses hold.
struct TheoremReport {
  enum class Status { HypothesesFailed, Verified, Violated };

  Status status = Status::HypothesesFailed;
  std::vector<std::string> hypothesisFailures;  // empty unless gated out
  Report conclusions;                           // conclusion violations, if any

  bool verified() const { return status == Status::Verified; }
  bool gatedOut() const { return status == Status::HypothesesFailed; }

  static TheoremReport fromConclusions(Report r) {
    TheoremReport t;
    t.status = r.ok() ? Status::Verified : Status::Violated;
    t.conclusions = std::move(r);
    return t;
  }
  static TheoremReport hypothesesFailed(std::vector<std::string> reasons) {
    TheoremReport t;
    t.status = Status::HypothesesFailed;
    t.hypothesisFailures = std::move(reasons);
    return t;
  }
};

}  // namespace hopfmod
