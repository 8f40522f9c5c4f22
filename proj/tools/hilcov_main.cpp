// Command-line front end: curve tables, coverage simulation, schedule
// inspection and verification campaigns, with CSV / JSON / SVG export.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hilcov/errors.hpp"
#include "hilcov/io.hpp"
#include "hilcov/simulate.hpp"
#include "hilcov/tree.hpp"
#include "hilcov/verify.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << content;
}

hilcov::World load_world_or_die(const std::string& path) {
  try {
    return hilcov::load_world_file(path);
  } catch (const hilcov::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: "
              << e.what() << "\n";
    std::exit(2);
  }
}

int cmd_curve(int order, const std::string& map_name, const std::string& csv,
              const std::string& svg) {
  hilcov::MapVariant variant = hilcov::map_variant_from_string(map_name);
  if (!svg.empty()) {
    write_file(svg, hilcov::curve_svg(order, variant));
  }
  std::string table = "rank,digits,x,y\n";
  std::uint64_t count = std::uint64_t{1} << (2 * order);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    hilcov::NodeIndex node = hilcov::NodeIndex::from_rank(rank, order);
    hilcov::ExactPoint p =
        variant == hilcov::MapVariant::standard ? hilcov::map_standard(node)
        : variant == hilcov::MapVariant::simplified
            ? hilcov::map_simplified(node)
            : hilcov::map_center(node).center();
    table += std::to_string(node.rank()) + "," + node.to_string() + "," +
             p.x().to_decimal() + "," + p.y().to_decimal() + "\n";
  }
  if (!csv.empty()) {
    write_file(csv, table);
  } else if (svg.empty()) {
    std::cout << table;
  }
  return 0;
}

int cmd_cover(const std::string& world_path, const std::string& mode,
              const std::string& csv, const std::string& svg,
              const std::string& report_path, bool verify) {
  hilcov::World world = load_world_or_die(world_path);
  hilcov::Trace trace = mode == "tree" ? hilcov::plan_nonuniform(world)
                                       : hilcov::simulate(world);
  if (!csv.empty()) write_file(csv, hilcov::trace_to_csv(trace));
  if (!svg.empty()) write_file(svg, hilcov::trace_svg(world, trace));
  hilcov::CoverageReport report = hilcov::verify_coverage(world, trace);
  if (!report_path.empty()) {
    write_file(report_path, hilcov::coverage_report_to_json(report));
  }
  std::cout << "steps=" << report.step_count
            << " covered=" << report.covered_leaves << "/"
            << report.free_leaves << " revisits=" << report.revisit_count
            << " queries=" << report.query_count
            << " rewrites=" << report.rewrite_count
            << " path_length=" << report.path_length << "\n";
  if (verify) {
    std::cout << (report.pass ? "verification: PASS" : "verification: FAIL")
              << "\n";
    if (!report.pass) {
      for (const auto& m : report.missed) std::cout << "missed: " << m << "\n";
      for (const auto& m : report.incursions) {
        std::cout << "incursion: " << m << "\n";
      }
      for (const auto& m : report.adjacency_faults) {
        std::cout << "adjacency: " << m << "\n";
      }
      return 1;
    }
  }
  return 0;
}

int cmd_tree(const std::string& world_path, const std::string& csv) {
  hilcov::World world = load_world_or_die(world_path);
  hilcov::ResolutionMap map;
  if (world.resolution) {
    map = *world.resolution;
  } else {
    map.default_order = world.order;
  }
  std::string table = "slot,order,digits,rank,x,y\n";
  std::vector<hilcov::NodeIndex> leaves =
      hilcov::build_leaves(map, world.order);
  for (size_t slot = 0; slot < leaves.size(); ++slot) {
    hilcov::ExactPoint c = hilcov::cell_of(leaves[slot]).center();
    table += std::to_string(slot) + "," + std::to_string(leaves[slot].order) +
             "," + leaves[slot].to_string() + "," +
             std::to_string(leaves[slot].rank()) + "," + c.x().to_decimal() +
             "," + c.y().to_decimal() + "\n";
  }
  if (!csv.empty()) {
    write_file(csv, table);
  } else {
    std::cout << table;
  }
  return 0;
}

int cmd_verify(int order, const std::string& mode,
               const std::string& report_path) {
  hilcov::CampaignReport report;
  if (mode == "pairs") {
    if (order > 4) {
      std::cerr << "error: pair campaigns support order <= 4\n";
      return 2;
    }
    report = hilcov::verify_multi_obstacle(order);
  } else {
    if (order > 5) {
      std::cerr << "error: single-obstacle campaigns support order <= 5\n";
      return 2;
    }
    report = hilcov::verify_single_obstacle(order);
  }
  if (!report_path.empty()) {
    write_file(report_path, hilcov::campaign_report_to_json(report));
  }
  std::cout << report.name << " (order " << report.order
            << "): worlds=" << report.worlds << " passes=" << report.passes
            << " failures=" << report.failures << " errors=" << report.errors
            << "\n";
  for (const auto& c : report.counterexamples) {
    std::cout << "counterexample: " << c.world << " — " << c.detail << "\n";
  }
  return report.failures == 0 && report.errors == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-curve coverage planning toolkit"};
  app.require_subcommand(1);

  int curve_order = 2;
  std::string curve_map = "center";
  std::string curve_csv, curve_svg_path;
  CLI::App* curve = app.add_subcommand("curve", "Tabulate or draw a curve");
  curve->add_option("--order", curve_order, "Curve order (1..8)")
      ->check(CLI::Range(1, 8));
  curve->add_option("--map", curve_map,
                    "Point map: standard, center or simplified")
      ->check(CLI::IsMember({"standard", "center", "simplified"}));
  curve->add_option("--csv", curve_csv, "Write the point table as CSV");
  curve->add_option("--svg", curve_svg_path, "Write a curve drawing as SVG");

  std::string cover_world, cover_mode = "uniform";
  std::string cover_csv, cover_svg, cover_report;
  bool cover_verify = false;
  CLI::App* cover =
      app.add_subcommand("cover", "Simulate online coverage of a world");
  cover->add_option("--world", cover_world, "World description file")
      ->required();
  cover->add_option("--mode", cover_mode,
                    "uniform (single order) or tree (resolution map)")
      ->check(CLI::IsMember({"uniform", "tree"}));
  cover->add_option("--csv", cover_csv, "Write the trace as CSV");
  cover->add_option("--svg", cover_svg, "Write the executed path as SVG");
  cover->add_option("--report", cover_report,
                    "Write the coverage report as JSON");
  cover->add_flag("--verify", cover_verify,
                  "Check coverage, adjacency and obstacle avoidance; "
                  "exit nonzero on failure");

  std::string tree_world, tree_csv;
  CLI::App* tree =
      app.add_subcommand("tree", "List the leaf schedule of a world");
  tree->add_option("--world", tree_world, "World description file")
      ->required();
  tree->add_option("--csv", tree_csv, "Write the leaf table as CSV");

  int verify_order = 2;
  std::string verify_mode = "single", verify_report;
  CLI::App* verify =
      app.add_subcommand("verify", "Run an exhaustive obstacle campaign");
  verify->add_option("--order", verify_order, "Grid order")
      ->check(CLI::Range(1, 5));
  verify->add_option("--mode", verify_mode,
                     "single (every cell) or pairs (edge-disjoint pairs)")
      ->check(CLI::IsMember({"single", "pairs"}));
  verify->add_option("--report", verify_report,
                     "Write the campaign report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (curve->parsed()) {
      return cmd_curve(curve_order, curve_map, curve_csv, curve_svg_path);
    }
    if (cover->parsed()) {
      return cmd_cover(cover_world, cover_mode, cover_csv, cover_svg,
                       cover_report, cover_verify);
    }
    if (tree->parsed()) return cmd_tree(tree_world, tree_csv);
    if (verify->parsed()) {
      return cmd_verify(verify_order, verify_mode, verify_report);
    }
  } catch (const hilcov::ParseError& e) {
    std::cerr << "error at line " << e.line() << ", column " << e.column()
              << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
