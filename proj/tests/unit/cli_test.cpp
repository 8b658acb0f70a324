#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "simplex-cover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = simplex_cover::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

std::string strip_elapsed(const std::string& report) {
  return std::regex_replace(report, std::regex(R"("elapsed_ms":\d+)"), "");
}

// Vertex lists of every cover polygon, in drawing units.
std::vector<std::vector<std::pair<double, double>>> cover_polygons(const std::string& svg) {
  std::vector<std::vector<std::pair<double, double>>> out;
  const std::regex poly(R"re(<polygon class="cover [a-z_]+" points="([^"]*)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
    std::vector<std::pair<double, double>> pts;
    std::istringstream in((*it)[1].str());
    for (std::string pair; in >> pair;) {
      const auto comma = pair.find(',');
      pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace

TEST(CliCount, Examples) {
  const auto r = run({"count", "--d", "2", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).front(), "6");
  EXPECT_EQ(lines(run({"count", "--d", "3", "--n", "2"}).out).front(), "20");
  EXPECT_EQ(run({"count", "--d", "1", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--d", "2", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"count", "--d", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliCount, HelpExitsCleanly) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(CliCover, Examples) {
  const auto one = run({"cover", "--d", "2", "--n", "1"});
  EXPECT_EQ(one.code, 0);
  const auto rows = lines(one.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], R"({"kind":"base_a","v":[0,0],"pi":[1,2],"anchor":["0","0"]})");

  const auto two = run({"cover", "--d", "2", "--n", "2"});
  const auto rows2 = lines(two.out);
  EXPECT_EQ(rows2.size(), 6u);
  EXPECT_EQ(occurrences(two.out, R"("kind":"top")"), 1u);
  EXPECT_EQ(run({"cover", "--d", "2", "--n", "2"}).out, two.out);
}

TEST(CliCover, WritesFileAndReportsIoFailure) {
  const auto path = std::filesystem::temp_directory_path() / "simplex_cover_cli_test.jsonl";
  ASSERT_EQ(run({"cover", "--d", "3", "--n", "2", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(lines(content.str()).size(), 20u);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"cover", "--d", "2", "--n", "1", "--out", "/nonexistent-dir/x.jsonl"}).code, 1);
}

TEST(CliWitness, Examples) {
  const auto b = run({"witness", "--d", "2", "--n", "2", "--point", "9/8,9/8"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find(R"("route":"base_b")"), std::string::npos);
  EXPECT_NE(b.out.find(R"("anchor":["1","1/4"])"), std::string::npos);

  const auto t = run({"witness", "--d", "2", "--n", "2", "--point", "9/4,9/4"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find(R"("route":"top")"), std::string::npos);

  EXPECT_EQ(run({"witness", "--d", "2", "--n", "2", "--point", "3,0"}).code, 1);
  EXPECT_EQ(run({"witness", "--d", "2", "--n", "2", "--point", "1/2"}).code, 2);
  EXPECT_EQ(run({"witness", "--d", "2", "--n", "2", "--point", "1/0,0"}).code, 2);
  EXPECT_EQ(run({"witness", "--d", "2", "--n", "2", "--point", "a,b"}).code, 2);
}

TEST(CliVerify, Examples) {
  const auto lattice = run({"verify", "--d", "2", "--n", "2", "--mode", "lattice", "--q", "4"});
  EXPECT_EQ(lattice.code, 0);
  EXPECT_NE(lattice.out.find(R"("fallback":0)"), std::string::npos);
  EXPECT_NE(lattice.out.find(R"("failures":[])"), std::string::npos);

  const auto random =
      run({"verify", "--d", "4", "--n", "3", "--mode", "random", "--samples", "2000", "--seed", "1"});
  EXPECT_EQ(random.code, 0);
  EXPECT_EQ(random.out.rfind(R"({"total":2000,"covered":2000,)", 0), 0u);

  EXPECT_EQ(run({"verify", "--d", "2", "--n", "2", "--eps", "1/2"}).code, 2);
  EXPECT_EQ(run({"verify", "--d", "2", "--n", "2", "--eps", "-1/8"}).code, 2);
  EXPECT_EQ(run({"verify", "--d", "2", "--n", "2", "--eps", "x"}).code, 2);
  EXPECT_EQ(run({"verify", "--d", "2", "--n", "2", "--mode", "grid"}).code, 2);
  EXPECT_EQ(run({"verify", "--d", "2", "--n", "2", "--eps", "1/8"}).code, 0);
}

TEST(CliVerify, SameSeedSameReport) {
  const std::vector<std::string> args = {"verify", "--d", "3", "--n", "2", "--seed", "9"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip_elapsed(a.out), strip_elapsed(b.out));
}

TEST(CliRender, PolygonCounts) {
  const auto two = run({"render", "--n", "2"});
  EXPECT_EQ(two.code, 0);
  EXPECT_EQ(cover_polygons(two.out).size(), 6u);
  EXPECT_EQ(occurrences(two.out, R"(class="target")"), 1u);
  EXPECT_NE(two.out.find("<!-- simplex-cover d=2 n=2"), std::string::npos);
  EXPECT_EQ(cover_polygons(run({"render", "--n", "1"}).out).size(), 3u);
  EXPECT_EQ(run({"render", "--n", "0"}).code, 2);
}

TEST(CliRender, EquilateralTrianglesHaveUnitSides) {
  const auto r = run({"render", "--n", "2", "--equilateral"});
  ASSERT_EQ(r.code, 0);
  const auto polys = cover_polygons(r.out);
  ASSERT_EQ(polys.size(), 6u);
  constexpr double kPixelsPerUnit = 100.0;
  for (const auto& p : polys) {
    ASSERT_EQ(p.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& a = p[i];
      const auto& b = p[(i + 1) % 3];
      const double side = std::hypot(a.first - b.first, a.second - b.second) / kPixelsPerUnit;
      EXPECT_NEAR(side, 1.0, 1e-9);
    }
  }
}

TEST(CliRender, LabelsAreOptional) {
  EXPECT_EQ(occurrences(run({"render", "--n", "2"}).out, "<text"), 0u);
  EXPECT_EQ(occurrences(run({"render", "--n", "2", "--labels"}).out, "<text"), 6u);
}
