#include "cosphere/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cosphere {

namespace {

struct ConfigStream {
  std::uint64_t count = 0;
  std::function<Configuration(std::uint64_t)> get;
  std::uint64_t chunk_size = 256;
};

ConfigStream make_stream(const std::string& case_label, IntersectionRule rule) {
  ConfigStream s;
  if (case_label == "intersection") {
    auto axes = std::make_shared<std::vector<AxisAssignment>>(
        intersection_axis_assignments(rule));
    std::uint64_t n = axes->size();
    s.count = n * n * n;
    s.chunk_size = 100000;
    s.get = [axes](std::uint64_t i) { return intersection_config(*axes, i); };
  } else {
    CuboidDims dims = case_dims(case_label.at(0));
    s.count = 4096;
    s.chunk_size = 256;
    s.get = [dims](std::uint64_t i) {
      return bisection_config(dims, static_cast<unsigned>(i));
    };
  }
  return s;
}

struct ChunkResult {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t configs = 0;
  std::uint64_t fvm_pass = 0;
  std::uint64_t bookkept = 0;
  std::uint64_t fig2_configs = 0;  // cells = 4 tets + 5 quad pyramids
  std::vector<std::uint64_t> fig2_examples;
};

// Serial reference over one chunk; the parallel driver farms these out.
ChunkResult process_chunk(const ConfigStream& stream, std::uint64_t begin,
                          std::uint64_t end, Criterion crit, const Catalog& cat,
                          int tet_gid, int pyr_gid) {
  ChunkResult r;
  r.counts.assign(cat.group_order().size(), 0);
  // classify() without discovery never mutates the catalog.
  Catalog& cat_mut = const_cast<Catalog&>(cat);
  for (std::uint64_t i = begin; i < end; ++i) {
    Configuration cfg = stream.get(i);
    CriterionCounts cc;
    try {
      TessellationResult t = tessellate(cfg);
      if (complex_verdict(t.complex, cfg.dims, i).ok) ++r.fvm_pass;
      cc = count_criterion(*t.kpts, t.complex, crit, cat_mut);
    } catch (const std::exception& e) {
      throw InvariantError("config " + std::to_string(i) + " (" +
                           format_config(cfg) + "): " + e.what());
    }
    for (std::size_t g = 0; g < cc.counts.size(); ++g)
      r.counts[g] += cc.counts[g];
    r.total += cc.total;
    r.bookkept += cc.bookkept_splits;
    if (cc.total == 9 && tet_gid >= 0 && pyr_gid >= 0 &&
        cc.counts[static_cast<std::size_t>(tet_gid)] == 4 &&
        cc.counts[static_cast<std::size_t>(pyr_gid)] == 5) {
      if (r.fig2_examples.size() < 4) r.fig2_examples.push_back(i);
      ++r.fig2_configs;
    }
    ++r.configs;
  }
  return r;
}

}  // namespace

FrequencyReport run_enumeration(const EnumerationOptions& opt, const Catalog& cat) {
  ConfigStream stream = make_stream(opt.case_label, opt.rule);
  std::uint64_t total_configs = stream.count;
  if (opt.limit && opt.limit < total_configs) total_configs = opt.limit;
  const std::uint64_t chunk = stream.chunk_size;
  const std::uint64_t n_chunks = (total_configs + chunk - 1) / chunk;

  FrequencyReport report;
  report.case_label = opt.case_label;
  report.criterion = opt.criterion;
  report.counts.assign(cat.group_order().size(), 0);

  int tet_gid = cat.group_id("Tetrahedron");
  int pyr_gid = cat.group_id("Quadrilateral Pyramid");

  // Restart bookkeeping: the checkpoint holds per-chunk sums for a
  // contiguous prefix of chunk ids.
  std::uint64_t done_prefix = 0;
  std::uint64_t restored_bookkept = 0, restored_fig2 = 0;
  std::vector<std::uint64_t> restored_fig2_examples;
  if (!opt.checkpoint_path.empty()) {
    std::ifstream in(opt.checkpoint_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string tag;
      std::uint64_t id, cfgs, fvm, tot, booked, f2;
      if (!(ls >> tag >> id >> cfgs >> fvm >> tot >> booked >> f2) ||
          tag != "chunk" || id != done_prefix)
        throw std::invalid_argument("checkpoint: malformed or non-contiguous file");
      report.configs += cfgs;
      report.fvm_pass += fvm;
      report.total += tot;
      restored_bookkept += booked;
      restored_fig2 += f2;
      std::string cell;
      while (ls >> cell) {
        if (cell[0] == 'e') {
          if (restored_fig2_examples.size() < 4)
            restored_fig2_examples.push_back(std::stoull(cell.substr(1)));
          continue;
        }
        auto colon = cell.find(':');
        std::size_t gid = std::stoul(cell.substr(0, colon));
        report.counts.at(gid) += std::stoull(cell.substr(colon + 1));
      }
      ++done_prefix;
    }
  }

  std::ofstream ckpt;
  if (!opt.checkpoint_path.empty())
    ckpt.open(opt.checkpoint_path, std::ios::app);

  std::uint64_t fig2 = restored_fig2;
  std::uint64_t bookkept = restored_bookkept;
  std::vector<std::uint64_t> fig2_examples = restored_fig2_examples;
  std::exception_ptr error;

  std::map<std::uint64_t, ChunkResult> pending;  // completed, not yet flushed
  std::uint64_t next_flush = done_prefix;
  std::mutex mu;

  auto flush_ready = [&]() {
    for (auto it = pending.begin(); it != pending.end() && it->first == next_flush;) {
      const ChunkResult& r = it->second;
      report.configs += r.configs;
      report.fvm_pass += r.fvm_pass;
      report.total += r.total;
      for (std::size_t g = 0; g < r.counts.size(); ++g)
        report.counts[g] += r.counts[g];
      fig2 += r.fig2_configs;
      bookkept += r.bookkept;
      for (std::uint64_t ex : r.fig2_examples)
        if (fig2_examples.size() < 4) fig2_examples.push_back(ex);
      if (ckpt.is_open()) {
        ckpt << "chunk " << it->first << ' ' << r.configs << ' ' << r.fvm_pass << ' '
             << r.total << ' ' << r.bookkept << ' ' << r.fig2_configs;
        for (std::uint64_t ex : r.fig2_examples) ckpt << " e" << ex;
        for (std::size_t g = 0; g < r.counts.size(); ++g)
          if (r.counts[g]) ckpt << ' ' << g << ':' << r.counts[g];
        ckpt << '\n';
        ckpt.flush();
      }
      ++next_flush;
      it = pending.erase(it);
    }
  };

  if (opt.jobs <= 1) {
    for (std::uint64_t cix = done_prefix; cix < n_chunks; ++cix) {
      std::uint64_t begin = cix * chunk;
      std::uint64_t end = std::min(total_configs, begin + chunk);
      ChunkResult r =
          process_chunk(stream, begin, end, opt.criterion, cat, tet_gid, pyr_gid);
      pending.emplace(cix, std::move(r));
      flush_ready();
    }
  } else {
#ifdef _OPENMP
    omp_set_num_threads(opt.jobs);
#endif
    const auto first = static_cast<std::int64_t>(done_prefix);
    const auto last = static_cast<std::int64_t>(n_chunks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t cix = first; cix < last; ++cix) {
      bool bail;
      {
        std::lock_guard<std::mutex> lock(mu);
        bail = error != nullptr;
      }
      if (bail) continue;
      try {
        std::uint64_t begin = static_cast<std::uint64_t>(cix) * chunk;
        std::uint64_t end = std::min(total_configs, begin + chunk);
        ChunkResult r =
            process_chunk(stream, begin, end, opt.criterion, cat, tet_gid, pyr_gid);
        std::lock_guard<std::mutex> lock(mu);
        pending.emplace(static_cast<std::uint64_t>(cix), std::move(r));
        flush_ready();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }

  if (bookkept > 0) {
    report.notes.push_back(
        std::to_string(bookkept) +
        " rule-matched cells had no geometric decomposition and were counted "
        "as their rule targets");
  }
  if (fig2 > 0) {
    std::ostringstream os;
    os << "configurations whose optimal tessellation is 5 quadrilateral pyramids + "
          "4 tetrahedra: "
       << fig2 << " (examples:";
    for (std::uint64_t ex : fig2_examples) os << ' ' << ex;
    os << ')';
    report.notes.push_back(os.str());
  }
  return report;
}

std::string render_report(const FrequencyReport& report, const Catalog& cat) {
  std::ostringstream os;
  os << "# cosphere frequency report\n";
  os << "case," << report.case_label << '\n';
  os << "criterion," << criterion_name(report.criterion) << '\n';
  os << "configs," << report.configs << '\n';
  os << "fvm_pass," << report.fvm_pass << '\n';
  os << "total," << report.total << '\n';
  const auto& groups = cat.group_order();
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (g < report.counts.size() && report.counts[g])
      os << groups[g] << ',' << report.counts[g] << '\n';
  for (const std::string& note : report.notes) os << "# note: " << note << '\n';
  return os.str();
}

GoldenDiff verify_golden(const FrequencyReport& report, const Catalog& cat,
                         const std::string& golden_path) {
  std::ifstream in(golden_path);
  if (!in) throw std::invalid_argument("golden: cannot open " + golden_path);
  GoldenDiff diff;
  std::map<std::string, std::uint64_t> expected;
  std::map<std::string, std::uint64_t> meta;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto comma = line.rfind(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("golden: malformed line " + std::to_string(lineno) +
                                  " in " + golden_path);
    std::string name = line.substr(0, comma);
    std::string value = line.substr(comma + 1);
    if (name == "case" || name == "criterion") continue;  // informational
    std::uint64_t v = 0;
    try {
      std::size_t pos = 0;
      v = std::stoull(value, &pos);
      if (pos != value.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("golden: malformed count at line " +
                                  std::to_string(lineno) + " in " + golden_path);
    }
    if (name == "total" || name == "fvm_pass" || name == "configs")
      meta[name] = v;
    else
      expected[name] = v;
  }

  auto check = [&](const std::string& name, std::uint64_t got, std::uint64_t want) {
    if (got != want) {
      std::ostringstream os;
      os << name << ": got " << got << ", golden " << want;
      diff.lines.push_back(os.str());
    }
  };
  if (meta.count("total")) check("total", report.total, meta["total"]);
  if (meta.count("fvm_pass")) check("fvm_pass", report.fvm_pass, meta["fvm_pass"]);
  if (meta.count("configs")) check("configs", report.configs, meta["configs"]);

  const auto& groups = cat.group_order();
  std::map<std::string, std::uint64_t> got;
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (g < report.counts.size() && report.counts[g]) got[groups[g]] = report.counts[g];
  for (auto& [name, want] : expected) {
    auto it = got.find(name);
    check(name, it == got.end() ? 0 : it->second, want);
    if (it != got.end()) got.erase(it);
  }
  for (auto& [name, count] : got) {
    std::ostringstream os;
    os << name << ": got " << count << ", golden absent";
    diff.lines.push_back(os.str());
  }
  diff.ok = diff.lines.empty();
  return diff;
}

// ---- catalog regeneration ----

namespace {

struct Discovery {
  ShapeSignature sig;
  std::uint64_t count = 0;
};

// Signature inventory over a configuration stream (optimal criterion).
std::map<std::string, Discovery> collect_signatures(const ConfigStream& stream,
                                                    int jobs) {
  const std::uint64_t chunk = stream.chunk_size;
  const std::uint64_t n_chunks = (stream.count + chunk - 1) / chunk;
  std::map<std::string, Discovery> all;
  std::mutex mu;
  std::exception_ptr error;

  auto process = [&](std::uint64_t cix) {
    std::map<std::string, Discovery> local;
    std::uint64_t begin = cix * chunk;
    std::uint64_t end = std::min(stream.count, begin + chunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      Configuration cfg = stream.get(i);
      TessellationResult t = tessellate(cfg);
      for (const CoSphericalCell& cell : t.complex.cells) {
        ShapeSignature sig = signature(*t.kpts, cell);
        auto [it, fresh] = local.emplace(sig.canonical_code, Discovery{sig, 0});
        (void)fresh;
        ++it->second.count;
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [code, d] : local) {
      auto [it, fresh] = all.emplace(code, d);
      if (!fresh) it->second.count += d.count;
    }
  };

  if (jobs <= 1) {
    for (std::uint64_t cix = 0; cix < n_chunks; ++cix) process(cix);
  } else {
#ifdef _OPENMP
    omp_set_num_threads(jobs);
#endif
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t cix = 0; cix < static_cast<std::int64_t>(n_chunks); ++cix) {
      try {
        process(static_cast<std::uint64_t>(cix));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  return all;
}

int label_count(const ShapeSignature& sig, const std::string& label) {
  auto it = sig.face_labels.find(label);
  return it == sig.face_labels.end() ? 0 : it->second;
}

}  // namespace

Catalog regenerate_catalog(bool with_intersection, int jobs, IntersectionRule rule) {
  ConfigStream bis = make_stream("A", rule);
  std::map<std::string, Discovery> found = collect_signatures(bis, jobs);

  // Structural naming of the 24 bisection-era elements. Buckets are keyed
  // by V/E/F; label patterns resolve the collisions.
  struct Named {
    std::string name, group, provenance;
    const Discovery* d;
    int order;
  };
  std::vector<Named> named;
  auto order_of = [](const std::string& group) {
    static const std::vector<std::string> fixed = {
        "Cuboid", "Triangular Prism", "Quadrilateral Pyramid", "Tetrahedron",
        "Tetrahedron Comp.", "Def. Prism", "Def. Tetrahedron Comp.",
        "Pentagonal Pyramid", "Hexagonal Pyramid", "Triangular Bipyramid",
        "Quadrilateral Bipyramid", "Pentagonal Bipyramid", "Hexagonal Bipyramid",
        "Triangular Biprism", "Generic #1", "Generic #2", "Generic #3",
        "Generic #4", "Generic #5", "Generic #6", "Generic #7", "Generic #8",
        "Generic #9", "Generic #10", "Generic #11", "Generic #12", "Generic #13",
        "Generic #14", "Generic #15", "Generic #16", "Generic #17", "Generic #18",
        "Generic #19", "Generic #20", "Generic #21", "Generic #22", "Generic #23",
        "Generic #24"};
    auto it = std::find(fixed.begin(), fixed.end(), group);
    if (it == fixed.end())
      throw InvariantError("catalog regeneration: unknown group " + group);
    return static_cast<int>(it - fixed.begin());
  };

  for (auto& [code, d] : found) {
    const ShapeSignature& s = d.sig;
    std::string group;
    std::string name;
    std::string provenance = "bisection-17";
    auto vef = std::make_tuple(s.V, s.E, s.F);
    if (vef == std::make_tuple(4, 6, 4)) {
      group = "Tetrahedron";
      provenance = "initial-7";
    } else if (vef == std::make_tuple(5, 8, 5)) {
      group = "Quadrilateral Pyramid";
      provenance = "initial-7";
      name = label_count(s, "rect") ? "Quadrilateral Pyramid (rectangular base)"
                                    : "Quadrilateral Pyramid (general base)";
    } else if (vef == std::make_tuple(8, 12, 6) && label_count(s, "rect") == 6) {
      group = "Cuboid";
      provenance = "initial-7";
    } else if (vef == std::make_tuple(6, 9, 5)) {
      if (label_count(s, "rect") == 3) {
        group = "Triangular Prism";
        provenance = "initial-7";
      } else {
        group = "Generic #1";
      }
    } else if (vef == std::make_tuple(6, 10, 6)) {
      if (label_count(s, "pent")) {
        group = "Pentagonal Pyramid";
      } else {
        group = "Generic #2";
      }
    } else if (vef == std::make_tuple(6, 11, 7)) {
      if (label_count(s, "rect")) {
        group = "Def. Prism";
        provenance = "initial-7";
      } else {
        group = "Generic #3";
      }
    } else if (vef == std::make_tuple(7, 12, 7)) {
      if (label_count(s, "hex")) {
        group = "Hexagonal Pyramid";
      } else if (label_count(s, "rect") == 3) {
        group = "Tetrahedron Comp.";
        provenance = "initial-7";
      } else {
        group = "Generic #4";
      }
    } else if (vef == std::make_tuple(7, 14, 9)) {
      group = "Def. Tetrahedron Comp.";
      provenance = "initial-7";
    } else if (vef == std::make_tuple(5, 9, 6)) {
      group = "Triangular Bipyramid";
    } else if (vef == std::make_tuple(6, 12, 8)) {
      group = "Quadrilateral Bipyramid";
    } else if (vef == std::make_tuple(7, 15, 10)) {
      group = "Pentagonal Bipyramid";
    } else if (vef == std::make_tuple(8, 18, 12)) {
      group = "Hexagonal Bipyramid";
    } else if (vef == std::make_tuple(8, 14, 8)) {
      group = "Triangular Biprism";
    } else if (vef == std::make_tuple(7, 13, 8)) {
      group = "Generic #5";
    } else if (vef == std::make_tuple(8, 15, 9)) {
      group = "Generic #6";
    } else if (vef == std::make_tuple(8, 16, 10)) {
      group = "Generic #7";
    } else if (vef == std::make_tuple(8, 17, 11)) {
      group = "Generic #8";
    } else if (vef == std::make_tuple(9, 16, 9)) {
      group = "Generic #9";
    } else if (vef == std::make_tuple(9, 18, 11)) {
      group = "Generic #10";
    } else {
      throw InvariantError("catalog regeneration: unexpected bisection shape V=" +
                           std::to_string(s.V) + " E=" + std::to_string(s.E) +
                           " F=" + std::to_string(s.F));
    }
    if (name.empty()) name = group;
    named.push_back({name, group, provenance, &d, order_of(group)});
  }

  // Exactly 24 element groups. Several carry more than one combinatorial
  // signature (the quadrilateral pyramid's two base shapes, and the
  // deformed prism / quadrilateral bipyramid / generic #5 / deformed
  // tetrahedron complement families); suffix the extra variants.
  std::map<std::string, int> sigs_per_group;
  for (const Named& n : named) ++sigs_per_group[n.group];
  if (sigs_per_group.size() != 24)
    throw InvariantError("catalog regeneration: expected 24 bisection elements, got " +
                         std::to_string(sigs_per_group.size()));
  std::sort(named.begin(), named.end(), [](const Named& a, const Named& b) {
    if (a.group != b.group) return a.group < b.group;
    return a.d->sig.canonical_code < b.d->sig.canonical_code;
  });
  std::map<std::string, int> seen_in_group;
  for (Named& n : named) {
    int k = ++seen_in_group[n.group];
    if (sigs_per_group[n.group] > 1 && n.name == n.group)
      n.name = n.group + " (variant " + std::to_string(k) + ")";
  }

  if (with_intersection) {
    ConfigStream inter = make_stream("intersection", rule);
    std::map<std::string, Discovery> inter_found = collect_signatures(inter, jobs);
    std::map<std::string, const Discovery*> fresh;
    for (auto& [code, d] : inter_found)
      if (!found.count(code)) fresh[code] = &d;
    // Bucket the new shapes by V/E/F; pairs are bound to the lower table
    // number by ascending frequency.
    std::map<std::tuple<int, int, int>, std::vector<const Discovery*>> buckets;
    for (auto& [code, d] : fresh)
      buckets[{d->sig.V, d->sig.E, d->sig.F}].push_back(d);
    for (auto& [vef, list] : buckets)
      std::sort(list.begin(), list.end(),
                [](const Discovery* a, const Discovery* b) {
                  return a->count != b->count ? a->count < b->count
                                              : a->sig.canonical_code < b->sig.canonical_code;
                });
    const std::vector<std::pair<std::string, std::tuple<int, int, int>>> rows = {
        {"Generic #11", {7, 11, 6}}, {"Generic #12", {7, 11, 6}},
        {"Generic #13", {7, 12, 7}}, {"Generic #14", {7, 13, 8}},
        {"Generic #15", {7, 14, 9}}, {"Generic #16", {8, 12, 6}},
        {"Generic #17", {8, 12, 6}}, {"Generic #18", {8, 13, 7}},
        {"Generic #19", {8, 14, 8}}, {"Generic #20", {8, 15, 9}},
        {"Generic #21", {9, 15, 8}}, {"Generic #22", {9, 15, 8}},
        {"Generic #23", {9, 16, 9}}, {"Generic #24", {9, 16, 9}},
    };
    std::map<std::tuple<int, int, int>, std::size_t> used;
    for (auto& [name, vef] : rows) {
      auto it = buckets.find(vef);
      if (it == buckets.end() || used[vef] >= it->second.size())
        throw InvariantError("catalog regeneration: missing intersection shape for " +
                             name);
      const Discovery* d = it->second[used[vef]++];
      named.push_back({name, name, "intersection-14", d, order_of(name)});
    }
    std::size_t consumed = 0;
    for (auto& [vef, list] : buckets) consumed += used[vef];
    if (consumed != fresh.size())
      throw InvariantError(
          "catalog regeneration: unexpected extra intersection shapes");
  }

  std::sort(named.begin(), named.end(), [](const Named& a, const Named& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  Catalog cat;
  std::uint64_t grand = 0;
  for (const Named& n : named) {
    cat.add({n.name, n.group, n.provenance, n.d->sig});
    std::fprintf(stderr, "discovered %-44s %s/%d/%d/%d count %llu\n", n.name.c_str(),
                 n.provenance.c_str(), n.d->sig.V, n.d->sig.E, n.d->sig.F,
                 static_cast<unsigned long long>(n.d->count));
    grand += n.d->count;
  }
  std::fprintf(stderr, "discovery grand total: %llu elements\n",
               static_cast<unsigned long long>(grand));
  return cat;
}

}  // namespace cosphere
