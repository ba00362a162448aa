#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elep/families.hpp"
#include "elep/pairs.hpp"
#include "elep/search.hpp"
#include "elep/tree.hpp"
#include "emit.hpp"
#include "svg.hpp"

namespace {

using namespace elep;

constexpr int kOk = 0;
constexpr int kNegative = 1;  // well-formed input, negative answer
constexpr int kUsage = 2;

std::optional<Nat> parse_nat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Nat v;
  if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (v < 1) return std::nullopt;
  return v;
}

int run_check(const std::string& a_text, const std::string& b_text) {
  const auto a = parse_nat(a_text);
  const auto b = parse_nat(b_text);
  if (!a || !b) {
    std::cerr << "check: sides must be positive integers\n";
    return kUsage;
  }
  const auto j = cli::check_to_json(*a, *b);
  std::cout << j.dump(2) << "\n";
  return j.at("valid").get<bool>() ? kOk : kNegative;
}

int run_tree(unsigned depth, const std::string& max_b_text, const std::string& format) {
  std::optional<Nat> max_b;
  if (!max_b_text.empty()) {
    max_b = parse_nat(max_b_text);
    if (!max_b || *max_b < 4) {
      std::cerr << "tree: --max-b must be an integer >= 4\n";
      return kUsage;
    }
  }
  const tree::TreeNode root = tree::enumerate(depth, max_b);
  if (format == "json")
    std::cout << cli::tree_to_json(root).dump(2) << "\n";
  else if (format == "dot")
    std::cout << cli::tree_to_dot(root);
  else if (format == "csv")
    std::cout << cli::tree_to_csv(root);
  else {
    std::cerr << "tree: unknown format '" << format << "'\n";
    return kUsage;
  }
  return kOk;
}

int run_family(const std::string& kind_text, unsigned count) {
  const auto kind = cli::parse_family_kind(kind_text);
  if (!kind) {
    std::cerr << "family: kind must be horizontal, vs2, vs4a or vs4b\n";
    return kUsage;
  }
  std::cout << cli::family_csv(*kind, count);
  return kOk;
}

int run_realize(const std::string& a_text, const std::string& b_text,
                const std::string& svg_path, double scale, bool labels) {
  const auto a_in = parse_nat(a_text);
  const auto b_in = parse_nat(b_text);
  if (!a_in || !b_in) {
    std::cerr << "realize: sides must be positive integers\n";
    return kUsage;
  }
  const Nat a = std::min(*a_in, *b_in);
  const Nat b = std::max(*a_in, *b_in);
  if (a == b || !pairs::check_sides(a, b)) {
    nlohmann::json j;
    j["valid"] = false;
    j["reason"] = "no equable lattice parallelogram has these sides";
    std::cout << j.dump(2) << "\n";
    return kNegative;
  }
  const auto realization = search::realize(a, b);
  auto j = cli::realization_to_json(realization);
  j["valid"] = true;
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) {
      std::cerr << "realize: cannot write '" << svg_path << "'\n";
      return kUsage;
    }
    out << cli::render_svg(realization, scale, labels);
    j["svg"] = svg_path;
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int run_scan(long max_coord, int jobs, const std::vector<std::string>& expect_empty) {
  for (const auto& cls : expect_empty) {
    if (cls != "rhombus" && cls != "vertical-diagonal") {
      std::cerr << "scan: --expect-empty takes rhombus or vertical-diagonal\n";
      return kUsage;
    }
  }
  const auto report = search::scan(max_coord, jobs);
  std::cout << cli::scan_report_to_json(report).dump(2) << "\n";

  for (const auto& cls : expect_empty) {
    for (const auto& entry : report.found) {
      if (cls == "rhombus" && entry.a == entry.b) return kNegative;
      if (cls == "vertical-diagonal" && entry.flags.has_vertical_diagonal)
        return kNegative;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for equable parallelograms on the Eisenstein lattice"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Decide whether sides a*sqrt(3), b*sqrt(3) admit an equable parallelogram");
  std::string check_a, check_b;
  check->add_option("a", check_a, "first side / sqrt(3)")->required();
  check->add_option("b", check_b, "second side / sqrt(3)")->required();

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "Enumerate the tree of realizable side pairs");
  unsigned tree_depth = 0;
  std::string tree_max_b;
  std::string tree_format = "json";
  tree_cmd->add_option("--depth", tree_depth, "tree depth (root = 0)")
      ->required()
      ->check(CLI::Range(0u, 12u));
  tree_cmd->add_option("--max-b", tree_max_b, "prune subtrees whose b exceeds this");
  tree_cmd->add_option("--format", tree_format, "json, dot or csv")
      ->check(CLI::IsMember({"json", "dot", "csv"}));

  // family
  auto* family = app.add_subcommand("family", "Emit a closed-form family as CSV");
  std::string family_kind;
  unsigned family_count = 0;
  family->add_option("kind", family_kind, "horizontal, vs2, vs4a or vs4b")->required();
  family->add_option("--count", family_count, "number of rows")
      ->required()
      ->check(CLI::Range(1u, 40u));

  // realize
  auto* realize_cmd = app.add_subcommand("realize", "Produce an explicit lattice realization");
  std::string realize_a, realize_b, realize_svg;
  double realize_scale = 40.0;
  bool realize_labels = false;
  realize_cmd->add_option("a", realize_a, "first side / sqrt(3)")->required();
  realize_cmd->add_option("b", realize_b, "second side / sqrt(3)")->required();
  realize_cmd->add_option("--svg", realize_svg, "write an SVG figure to this path");
  realize_cmd->add_option("--scale", realize_scale, "pixels per lattice unit")
      ->check(CLI::PositiveNumber);
  realize_cmd->add_flag("--labels", realize_labels, "draw vertex labels in the SVG");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive equable-parallelogram scan of a coordinate box");
  long scan_max = 0;
  int scan_jobs = 1;
  std::vector<std::string> scan_expect;
  scan_cmd->add_option("max_coord", scan_max, "coordinate bound (box half-width)")
      ->required()
      ->check(CLI::Range(1L, 60L));
  scan_cmd->add_option("--jobs", scan_jobs, "worker threads")->check(CLI::Range(1, 64));
  scan_cmd->add_option("--expect-empty", scan_expect,
                       "fail (exit 1) when this class is nonempty: rhombus or vertical-diagonal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return run_check(check_a, check_b);
    if (tree_cmd->parsed()) return run_tree(tree_depth, tree_max_b, tree_format);
    if (family->parsed()) return run_family(family_kind, family_count);
    if (realize_cmd->parsed())
      return run_realize(realize_a, realize_b, realize_svg, realize_scale, realize_labels);
    if (scan_cmd->parsed()) return run_scan(scan_max, scan_jobs, scan_expect);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
