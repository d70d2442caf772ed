#include "cosphere/mesh_export.hpp"
#include "cosphere/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>

using namespace cosphere;

namespace {

Configuration config_from_string(const std::string& text, const std::string& dims) {
  if (text.rfind("dims=", 0) == 0) return parse_config(text);
  // 12-bit hex mask shorthand for bisection configurations.
  std::size_t pos = 0;
  unsigned long mask = std::stoul(text, &pos, 16);
  if (pos != text.size() || mask > 0xfffu)
    throw std::invalid_argument(
        "config: expected a dims=...;edges=... string or a 12-bit hex mask");
  Configuration proto =
      parse_config("dims=" + dims + ";edges=-,-,-,-,-,-,-,-,-,-,-,-");
  return bisection_config(proto.dims, static_cast<unsigned>(mask));
}

int run_tessellate(const std::string& config_text, const std::string& dims,
                   const std::string& criterion, const std::string& export_format,
                   const std::string& out_path, const std::string& catalog_path) {
  Configuration cfg = config_from_string(config_text, dims);
  Catalog cat = Catalog::load(catalog_path);
  TessellationResult t = tessellate(cfg);
  std::vector<ClassifiedCell> cells =
      apply_criterion(*t.kpts, t.complex, parse_criterion(criterion), cat, false);

  std::map<std::string, int> tally;
  for (const ClassifiedCell& c : cells) ++tally[c.group];
  std::cout << "configuration " << format_config(cfg) << '\n';
  std::cout << cells.size() << " elements\n";
  for (auto& [name, count] : tally) std::cout << "  " << name << " x" << count << '\n';
  FvmVerdict verdict = complex_verdict(t.complex, cfg.dims);
  std::cout << "circumcenter requirement: " << (verdict.ok ? "pass" : "fail") << '\n';

  if (!export_format.empty()) {
    MeshFormat fmt = export_format == "off" ? MeshFormat::kOff : MeshFormat::kVtk;
    std::string path =
        out_path.empty() ? std::string("tessellation.") + export_format : out_path;
    export_mesh(t.complex.points, cells, fmt, path);
    std::cout << "wrote " << path << " and " << path << ".cells.csv\n";
  }
  return 0;
}

int run_enumerate(const std::string& case_label, const std::string& criterion,
                  const std::string& golden, int jobs, const std::string& checkpoint,
                  const std::string& out_path, const std::string& rule_name,
                  std::uint64_t limit, const std::string& catalog_path) {
  Catalog cat = Catalog::load(catalog_path);
  EnumerationOptions opt;
  opt.case_label = case_label;
  opt.criterion = parse_criterion(criterion);
  opt.jobs = jobs;
  opt.checkpoint_path = checkpoint;
  opt.limit = limit;
  if (rule_name == "ties")
    opt.rule = IntersectionRule::kRankTies;
  else if (rule_name == "gaps")
    opt.rule = IntersectionRule::kOrderedGaps;
  else
    throw std::invalid_argument("rule: expected ties or gaps");

  FrequencyReport report = run_enumeration(opt, cat);
  std::string text = render_report(report, cat);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
  }
  std::cout << text;

  if (!golden.empty()) {
    GoldenDiff diff = verify_golden(report, cat, golden);
    if (!diff.ok) {
      std::cout << "golden mismatch vs " << golden << ":\n";
      for (const std::string& line : diff.lines) std::cout << "  " << line << '\n';
      return 1;
    }
    std::cout << "golden match: " << golden << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delaunay tessellations of 1-irregular cuboids into maximal "
               "co-spherical elements"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string catalog_path = "data/catalog.json";
  app.add_option("--catalog", catalog_path, "catalog JSON path")
      ->capture_default_str();

  auto* tess = app.add_subcommand("tessellate", "tessellate one configuration");
  std::string config_text, dims = "1,1,1", criterion = "optimal";
  std::string export_format, out_path;
  tess->add_option("--config", config_text,
                   "dims=...;edges=... string or 12-bit hex bisection mask")
      ->required();
  tess->add_option("--dims", dims, "cuboid dims for mask shorthand")
      ->capture_default_str();
  tess->add_option("--criterion", criterion, "optimal|faces|edges")
      ->capture_default_str();
  tess->add_option("--export", export_format, "off|vtk")
      ->check(CLI::IsMember({"off", "vtk"}));
  tess->add_option("--out", out_path, "export path");

  auto* enumerate = app.add_subcommand("enumerate", "run a full configuration study");
  std::string case_label, golden, checkpoint, rule_name = "ties";
  int jobs = 1;
  std::uint64_t limit = 0;
  enumerate->add_option("--case", case_label, "A|B|C|intersection")->required();
  enumerate->add_option("--criterion", criterion, "optimal|faces|edges")
      ->capture_default_str();
  enumerate->add_option("--golden", golden, "golden CSV to verify against");
  enumerate->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  enumerate->add_option("--checkpoint", checkpoint,
                        "append-only partial sums; restartable");
  enumerate->add_option("--out", out_path, "write the report here");
  enumerate->add_option("--rule", rule_name, "intersection Steiner rule: ties|gaps")
      ->capture_default_str();
  enumerate->add_option("--limit", limit, "stop after N configurations (debug)");

  auto* catalog = app.add_subcommand("catalog", "catalog maintenance");
  bool regenerate = false, with_intersection = false;
  std::string cat_out = "data/catalog.json";
  catalog->add_flag("--regenerate", regenerate, "rebuild by discovery runs");
  catalog->add_flag("--with-intersection", with_intersection,
                    "also run the (long) intersection discovery");
  catalog->add_option("--out", cat_out, "output path")->capture_default_str();
  catalog->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tess->parsed())
      return run_tessellate(config_text, dims, criterion, export_format, out_path,
                            catalog_path);
    if (enumerate->parsed())
      return run_enumerate(case_label, criterion, golden, jobs, checkpoint, out_path,
                           rule_name, limit, catalog_path);
    if (catalog->parsed()) {
      if (!regenerate) {
        Catalog cat = Catalog::load(catalog_path);
        for (const CatalogEntry& e : cat.entries())
          std::cout << e.name << " (" << e.group << ", " << e.provenance
                    << ") V=" << e.sig.V << " E=" << e.sig.E << " F=" << e.sig.F
                    << '\n';
        return 0;
      }
      Catalog cat =
          regenerate_catalog(with_intersection, jobs, IntersectionRule::kRankTies);
      cat.save(cat_out);
      std::cout << "wrote " << cat_out << " (" << cat.entries().size()
                << " signatures)\n";
      return 0;
    }
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const UnknownShapeError& e) {
    std::cerr << "unknown shape: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
