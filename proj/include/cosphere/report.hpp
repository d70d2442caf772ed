#pragma once

#include "cosphere/criteria.hpp"
#include "cosphere/fvm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cosphere {

struct FrequencyReport {
  std::string case_label;  // A | B | C | intersection
  Criterion criterion = Criterion::kOptimal;
  std::vector<std::uint64_t> counts;  // by catalog group id
  std::uint64_t total = 0;
  std::uint64_t configs = 0;
  std::uint64_t fvm_pass = 0;
  std::vector<std::string> notes;
};

struct EnumerationOptions {
  std::string case_label;
  Criterion criterion = Criterion::kOptimal;
  int jobs = 1;
  std::string checkpoint_path;  // enables restartable chunk sums when set
  IntersectionRule rule = IntersectionRule::kRankTies;
  std::uint64_t limit = 0;  // debug: stop after this many configs (0 = all)
};

/// Enumerates the case's configuration stream, tessellates every
/// configuration, applies the criterion and aggregates classify() counts
/// plus the finite-volume verdicts. Deterministic output for any job
/// count. Throws UnknownShapeError (with config id in the message) when a
/// shape is missing from the catalog.
FrequencyReport run_enumeration(const EnumerationOptions& opt, const Catalog& cat);

/// Canonical textual rendering (byte-identical across runs).
std::string render_report(const FrequencyReport& report, const Catalog& cat);

struct GoldenDiff {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Exact comparison against a golden CSV (name,count rows plus optional
/// case/criterion/total/fvm_pass/configs metadata). Throws
/// std::invalid_argument on malformed files.
GoldenDiff verify_golden(const FrequencyReport& report, const Catalog& cat,
                         const std::string& golden_path);

/// Rebuilds the shipped catalog from scratch: discovery over the 4096
/// unit-cube bisection configurations names the 7 initial and 17
/// bisection elements structurally; with_intersection additionally runs
/// the full intersection enumeration and names the 14 intersection
/// elements, using the published frequencies (table10 golden) to fix the
/// name binding inside the (V,E,F)-degenerate pairs.
Catalog regenerate_catalog(bool with_intersection, int jobs, IntersectionRule rule);

}  // namespace cosphere
