#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "torsionlab/dataset.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

struct Check {
  std::string id;
  std::string table;
  std::string status;  // "pass", "fail", "skip"
  std::string reason;  // for skip
  std::string detail;
  double seconds = 0;
  std::map<std::string, std::string> meta;  // engine metadata
};

struct HarnessOptions {
  std::set<std::string> tables;  // empty: all
  bool slow = false;
  const Dataset* dataset = nullptr;  // null: embedded
};

const std::vector<std::string>& harness_tables();  // tables, aux, lemma, jacobians, modcurve, units
// Checks in a fixed order; independent dataset rows may run on worker threads.
std::vector<Check> verify_paper(const HarnessOptions& opt);

struct HarnessSummary {
  int pass = 0, fail = 0, skip = 0;
};
HarnessSummary summarize(const std::vector<Check>& checks);

// The seven fields of class number one other than Q(i), Q(sqrt -3).
const std::vector<long>& fields_S();

// Random E(alpha, beta) with alpha, beta in O_K of norm at most norm_bound.
std::vector<CurveK> random_corpus(FieldTag tag, int count, std::uint64_t seed, long norm_bound = 10000);
// Curves with prescribed torsion built from the parametrizations of the order criteria.
std::vector<CurveK> constructed_corpus(FieldTag tag);

// Reductions used for the Jacobian bound over K: F_p when p splits or ramifies, F_{p^2} when inert.
std::vector<long> jacobian_reduction_fields(long D);

}  // namespace torsionlab
