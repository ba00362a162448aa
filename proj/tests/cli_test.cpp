// End-to-end exercises of the elep binary: exit codes, output formats and
// guard rails. Takes the binary path as argv[1].

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "subprocess.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::printf("ok   %s\n", what.c_str());
  } else {
    std::printf("FAIL %s\n", what.c_str());
    ++failures;
  }
}

std::string elep;

testutil::CommandResult run(const std::string& args) {
  return testutil::run_command(elep + " " + args + " 2>/dev/null");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: elep_cli_tests <path-to-elep-binary>\n";
    return 2;
  }
  elep = testutil::quoted(argv[1]);

  using nlohmann::json;

  // check
  {
    const auto r = run("check 2 4");
    expect(r.exit_code == 0, "check 2 4 exits 0");
    const auto j = json::parse(r.output);
    expect(j.at("valid") == true && j.at("disc") == 12 && j.at("h_s") == "3" &&
               j.at("h_l") == "6",
           "check 2 4 reports disc=12, h_s=3, h_l=6");
    expect(run("check 3 6").exit_code == 1, "check 3 6 exits 1");
    expect(run("check 2").exit_code == 2, "check 2 exits 2 (usage)");
    expect(run("check 0 4").exit_code == 2, "check 0 4 exits 2 (usage)");
    expect(run("check x y").exit_code == 2, "check x y exits 2 (usage)");
  }

  // tree
  {
    const auto depth0 = run("tree --depth 0");
    const auto j = json::parse(depth0.output);
    expect(depth0.exit_code == 0 && j.at("a") == 2 && j.at("b") == 4 &&
               j.at("children").empty(),
           "tree --depth 0 emits the lone root record");

    const auto dot = run("tree --depth 1 --format dot");
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = dot.output.find(" -- ", pos)) != std::string::npos;
         pos += 4)
      ++edges;
    expect(dot.exit_code == 0 && edges == 3 &&
               dot.output.find("label=\"phi1,2\"") != std::string::npos &&
               dot.output.find("label=\"phi1,4\"") != std::string::npos &&
               dot.output.find("label=\"phi2,4\"") != std::string::npos,
           "tree --depth 1 --format dot has 3 labeled edges");

    const auto csv = run("tree --depth 2 --format csv");
    std::size_t rows = 0;
    for (std::size_t pos = 0; (pos = csv.output.find("\r\n", pos)) != std::string::npos;
         pos += 2)
      ++rows;
    expect(csv.exit_code == 0 && rows == 14, "tree --depth 2 --format csv has 13 rows");

    expect(run("tree --depth 13").exit_code == 2, "tree --depth 13 exits 2 (guard)");
    expect(run("tree --depth 2 --max-b 100").exit_code == 0, "tree --max-b accepted");
  }

  // family
  {
    const auto r = run("family horizontal --count 3");
    expect(r.exit_code == 0 &&
               r.output.find("2,\"(7,4)\",14,52,-26-4w,66,\"(1,11)\"") != std::string::npos,
           "family horizontal --count 3 emits the third row");
    expect(run("family vs2 --count 2").output.find("2,\"(9,11)\",28,30,22,\"(5,1)\"") !=
               std::string::npos,
           "family vs2 --count 2 emits the second row");
    expect(run("family vs4a --count 1").output.find("1,\"(1,13)\",14,9,\"(1,3)\"") !=
               std::string::npos,
           "family vs4a --count 1 emits the first row");
    expect(run("family bogus --count 1").exit_code == 2, "family bogus exits 2");
    expect(run("family vs2 --count 50").exit_code == 2, "family count guard exits 2");
  }

  // realize
  {
    const auto tmp = std::filesystem::temp_directory_path() / "elep_cli_test.svg";
    std::filesystem::remove(tmp);
    const auto r = run("realize 2 4 --svg " + testutil::quoted(tmp.string()));
    const auto j = json::parse(r.output);
    expect(r.exit_code == 0 && j.at("determinant") == 24,
           "realize 2 4 reports determinant 24");
    std::ifstream svg(tmp);
    std::string svg_text((std::istreambuf_iterator<char>(svg)),
                         std::istreambuf_iterator<char>());
    expect(svg_text.find("<svg") != std::string::npos &&
               svg_text.find("<polygon") != std::string::npos,
           "realize --svg writes an SVG with the parallelogram");
    std::filesystem::remove(tmp);

    const auto r414 = json::parse(run("realize 4 14").output);
    expect(r414.at("determinant") == 72, "realize 4 14 reports determinant 72");
    expect(run("realize 5 7").exit_code == 1, "realize 5 7 exits 1");
  }

  // scan
  {
    const auto r = run("scan 10");
    const auto j = json::parse(r.output);
    bool has_root = false;
    for (const auto& e : j.at("found"))
      if (e.at("a") == 2 && e.at("b") == 4) has_root = true;
    expect(r.exit_code == 0 && has_root, "scan 10 finds (2,4)");

    expect(run("scan 30 --expect-empty vertical-diagonal").exit_code == 0,
           "scan 30 --expect-empty vertical-diagonal exits 0");
    expect(run("scan 30 --expect-empty rhombus").exit_code == 0,
           "scan 30 --expect-empty rhombus exits 0");
    expect(run("scan 61").exit_code == 2, "scan 61 exits 2 (guard)");

    const auto seq = run("scan 12");
    const auto par = run("scan 12 --jobs 3");
    expect(seq.exit_code == 0 && par.exit_code == 0 && seq.output == par.output,
           "scan 12 --jobs 3 output is byte-identical to sequential");
  }

  if (failures) {
    std::printf("%d CLI check(s) failed\n", failures);
    return 1;
  }
  std::printf("all CLI checks passed\n");
  return 0;
}
