#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli/commands.hpp"

using namespace spectral::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "spectral");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(SPECTRAL_TEST_DATA) / name).string(); }

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / "spectral_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("ft prints the transform") {
  const auto r = run({"ft", "--body", data("square.json"), "--xi", "0.5,0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.405285") != std::string::npos);
}

TEST_CASE("csv output round-trips at full precision") {
  const auto out = scratch("ft.csv");
  const auto r = run({"ft", "--body", data("h0.json"), "--xi", "0.3,0.1", "--xi", "1,-0.4", "--out", out.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  const auto rows = read_csv(text.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0][0] == "xi1");
  CHECK(std::stod(rows[2][0]) == 1.0);
  CHECK(std::stod(rows[2][1]) == -0.4);

  const fs::path manifest = out.string() + ".manifest.json";
  REQUIRE(fs::exists(manifest));
  std::ifstream min(manifest);
  const auto doc = nlohmann::json::parse(min);
  CHECK(doc["command"] == "ft");
  CHECK(doc.contains("parameters"));
  CHECK(doc.contains("tolerances"));
  CHECK(doc.contains("wall_time_s"));
}

TEST_CASE("input errors exit with 2") {
  auto m = run({"ft", "--body", data("malformed.json"), "--xi", "0,0"});
  CHECK(m.code == 2);
  CHECK(m.err.find("vertices[1][1]") != std::string::npos);
  CHECK(run({"ft", "--body", data("broken.json"), "--xi", "0,0"}).code == 2);
  const auto nc = run({"classify", "--body", data("nonconvex.json")});
  CHECK(nc.code == 2);
  CHECK(nc.err.find("validation error") != std::string::npos);
  CHECK(run({"ft", "--body", data("square.json"), "--xi", "zero"}).code == 2);
  CHECK(run({"ft", "--body", data("missing.json"), "--xi", "0,0"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}

TEST_CASE("classify") {
  auto c = run({"classify", "--body", data("octagon.json")});
  CHECK(c.code == 1);
  CHECK(c.out.find("not_spectral polygon_n_ge_4") != std::string::npos);
  c = run({"classify", "--body", data("h0.json")});
  CHECK(c.code == 0);
  CHECK(c.out.find("spectral symmetric_hexagon") != std::string::npos);
  CHECK(run({"classify", "--body", data("disc.json")}).out.find("not_polygon") != std::string::npos);
  CHECK(run({"classify", "--body", data("rhombus.json")}).code == 0);
  CHECK(run({"classify", "--body", data("triangle.json")}).code == 1);
}

TEST_CASE("property commands") {
  CHECK(run({"spectrum-check", "--body", data("square.json"), "--lattice", "1 0; 0 1"}).code == 0);
  CHECK(run({"spectrum-check", "--body", data("square.json"), "--lattice", "2 0; 0 1", "--parseval-samples", "3"}).code == 1);
  CHECK(run({"spectrum-check", "--body", data("square.json"), "--lattice", "1 0; 0 0.5"}).code == 1);
  CHECK(run({"tile-check", "--body", data("h0.json")}).code == 0);
  CHECK(run({"tile-check", "--body", data("octagon.json")}).code != 0);
  CHECK(run({"certify", "--body", data("octagon.json")}).code == 0);
  CHECK(run({"certify", "--body", data("decagon.json")}).code == 0);
  CHECK(run({"gap-check", "--body", data("square.json"), "--lattice", "1 0; 0 1"}).code == 0);
  CHECK(run({"zeros", "--body", data("square.json"), "--from", "0.5,0.5", "--to", "3.5,0.5"}).code == 0);
  CHECK(run({"zeros", "--body", data("triangle.json"), "--from", "0.5,0.5", "--to", "3.5,0.5"}).code == 2);
  CHECK(run({"cap-scan", "--height", R"({"kind":"semicircle","r":0.5})", "--delta", "0.01"}).code == 0);
  CHECK(run({"density", "--lattice", "1 0; 0 1", "--R-list", "5,10"}).code == 0);
}

TEST_CASE("lattice and point parsing") {
  const auto l = parse_lattice("1 0.5; 0 1.25");
  CHECK(l.g1() == spectral::Point2{1, 0});
  CHECK(l.g2() == spectral::Point2{0.5, 1.25});
  CHECK(parse_point(" 1.5 , -2") == spectral::Point2{1.5, -2});
  CHECK(parse_list("1,2,3").size() == 3);
  CHECK_THROWS(parse_lattice("1 0; 0"));
  CHECK_THROWS(parse_point("1;2"));
}
