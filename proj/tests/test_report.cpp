#include "cosphere/report.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"

using namespace cosphere;

TEST_CASE("reports are deterministic across worker counts") {
  Catalog cat = Catalog::load(CATALOG_PATH);
  EnumerationOptions opt;
  opt.case_label = "A";
  opt.criterion = Criterion::kOptimal;
  opt.limit = 768;
  opt.jobs = 1;
  std::string serial = render_report(run_enumeration(opt, cat), cat);
  opt.jobs = 3;
  std::string parallel = render_report(run_enumeration(opt, cat), cat);
  CHECK(serial == parallel);
  opt.jobs = 2;
  CHECK(render_report(run_enumeration(opt, cat), cat) == serial);
}

TEST_CASE("checkpoint restart reproduces the uninterrupted report") {
  Catalog cat = Catalog::load(CATALOG_PATH);
  EnumerationOptions opt;
  opt.case_label = "A";
  opt.criterion = Criterion::kOptimal;
  opt.limit = 1024;
  opt.jobs = 1;
  FrequencyReport full = run_enumeration(opt, cat);

  std::string path = "checkpoint_test.tmp";
  std::remove(path.c_str());
  EnumerationOptions partial = opt;
  partial.checkpoint_path = path;
  partial.limit = 512;
  run_enumeration(partial, cat);  // first half, checkpointed
  partial.limit = 1024;
  FrequencyReport resumed = run_enumeration(partial, cat);
  CHECK(render_report(resumed, cat) == render_report(full, cat));
  std::remove(path.c_str());
}

TEST_CASE("golden verification reports exact diffs") {
  Catalog cat = Catalog::load(CATALOG_PATH);
  EnumerationOptions opt;
  opt.case_label = "A";
  opt.criterion = Criterion::kOptimal;
  opt.limit = 64;
  FrequencyReport rep = run_enumeration(opt, cat);

  std::string match = "golden_match.tmp";
  {
    std::ofstream out(match);
    out << "# test golden\n";
    out << "total," << rep.total << "\n";
    const auto& groups = cat.group_order();
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (rep.counts[g]) out << groups[g] << ',' << rep.counts[g] << '\n';
  }
  GoldenDiff ok = verify_golden(rep, cat, match);
  CHECK(ok.ok);
  CHECK(ok.lines.empty());

  std::string mismatch = "golden_mismatch.tmp";
  {
    std::ofstream out(mismatch);
    const auto& groups = cat.group_order();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!rep.counts[g]) continue;
      std::uint64_t n = rep.counts[g];
      if (groups[g] == "Tetrahedron") ++n;  // one perturbed count
      out << groups[g] << ',' << n << '\n';
    }
  }
  GoldenDiff bad = verify_golden(rep, cat, mismatch);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.lines.size() == 1);
  CHECK(bad.lines[0].rfind("Tetrahedron", 0) == 0);

  CHECK_THROWS_AS(verify_golden(rep, cat, "does_not_exist.csv"),
                  std::invalid_argument);
  std::string malformed = "golden_malformed.tmp";
  {
    std::ofstream out(malformed);
    out << "Tetrahedron,notanumber\n";
  }
  CHECK_THROWS_AS(verify_golden(rep, cat, malformed), std::invalid_argument);
  std::remove(match.c_str());
  std::remove(mismatch.c_str());
  std::remove(malformed.c_str());
}
