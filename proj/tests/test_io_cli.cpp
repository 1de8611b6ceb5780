#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "stdpairs/io.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace stdpairs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

class Workdir {
public:
  Workdir() : dir_(fs::temp_directory_path() / ("stdpairs_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &body) const {
    auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  std::string matrix(const std::string &name, const IntMatrix &m) const {
    return write(name, emit_matrix(m).dump());
  }

  std::string ideal(const std::string &name, const std::vector<IntVec> &g) const {
    Json gens = Json::array();
    for (const auto &v : g)
      gens.push_back(v);
    return write(name, Json{{"generators", gens}}.dump());
  }

private:
  fs::path dir_;
};

Run cli(const std::string &args) {
  std::string cmd = std::string(STDPAIRS_CLI) + " " + args + " 2>/dev/null";
  FILE *pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int st = ::pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

} // namespace

TEST_CASE("matrix and ideal files round trip") {
  for (const auto &s : fixture::all()) {
    auto m = emit_matrix(s.matrix);
    CHECK(emit_matrix(parse_matrix(m)) == m);
  }
  auto c = fixture::config(fixture::wedge());
  auto ideal = MonomialIdeal::from_degrees(c, {{3, 1}, {2, 2}});
  auto j = emit_ideal(ideal);
  CHECK(emit_ideal(MonomialIdeal::from_degrees(c, parse_generators(j))) == j);
  CHECK(parse_json(j.dump()) == j);
}

TEST_CASE("pair sets and decompositions round trip") {
  auto c = fixture::config(fixture::holey_cube());
  auto ideal = MonomialIdeal::from_degrees(c, {{1, 0, 0}, {1, 1, 1}, {1, 1, 2}});
  auto s = standard_pairs(ideal);
  auto j = emit_standard_pairs(*c, s);
  CHECK(emit_standard_pairs(*c, overlap_classes(*c, parse_pairs(*c, j))) == j);

  for (auto r : {primary_decomposition(ideal), irreducible_decomposition(ideal)}) {
    check_decomposition(ideal, r);
    auto d = emit_decomposition(*c, r);
    CHECK(emit_decomposition(*c, parse_decomposition(c, d)) == d);
  }
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(parse_json("{\"matrix\": [[1, 0], [0"), Error);
  try {
    parse_matrix(parse_json("{\"matrix\": [[1, 0], [0]]}"));
    FAIL("ragged matrix accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("std-pairs on the plane lists four pairs") {
  Workdir w;
  auto a = w.matrix("a.json", fixture::plane().matrix);
  auto i = w.ideal("i.json", {{3, 1}, {1, 2}});
  auto r = cli("std-pairs --matrix " + a + " --ideal " + i);
  REQUIRE(r.status == 0);
  auto j = parse_json(r.out);
  CHECK(j.at("pairs").size() == 4);
  CHECK(cli("std-pairs --matrix " + a + " --ideal " + i).out == r.out);
}

TEST_CASE("irreducible-decomp over k[x^2, y, xy] gives two components") {
  Workdir w;
  auto a = w.matrix("a.json", fixture::even_plane().matrix);
  auto i = w.ideal("i.json", {{0, 2}, {1, 2}});
  auto r = cli("irreducible-decomp --check --matrix " + a + " --ideal " + i);
  REQUIRE(r.status == 0);
  auto j = parse_json(r.out);
  CHECK(j.at("kind") == "irreducible");
  CHECK(j.at("components").size() == 2);
}

TEST_CASE("intersect with the unit ideal returns the other ideal") {
  Workdir w;
  auto a = w.matrix("a.json", fixture::wedge().matrix);
  auto unit = w.ideal("unit.json", {{0, 0}});
  auto i = w.ideal("i.json", {{2, 2}, {3, 1}});
  auto r = cli("intersect --matrix " + a + " --ideal " + unit + " --other " + i);
  REQUIRE(r.status == 0);
  CHECK(parse_json(r.out) == parse_json(R"({"generators": [[2, 2], [3, 1]]})"));
}

TEST_CASE("errors exit nonzero with an error object") {
  Workdir w;
  auto bad = w.write("bad.json", "{\"matrix\": ");
  auto i = w.ideal("i.json", {{1, 0, 0}});
  auto r = cli("std-pairs --matrix " + bad + " --ideal " + i);
  CHECK(r.status == 2);
  CHECK(parse_json(r.out).at("error").at("kind") == "ParseError");

  CHECK(cli("no-such-command").status == 2);

  auto cube = w.matrix("cube.json", fixture::holey_cube().matrix);
  r = cli("render-2d --matrix " + cube + " --ideal " + i);
  CHECK(r.status == 1);
  CHECK(parse_json(r.out).at("error").at("kind") == "UnsupportedDimension");
}

TEST_CASE("render-2d draws an SVG for two-row configurations") {
  Workdir w;
  auto a = w.matrix("a.json", fixture::plane().matrix);
  auto i = w.ideal("i.json", {{3, 1}, {1, 2}});
  auto r = cli("render-2d --matrix " + a + " --ideal " + i);
  REQUIRE(r.status == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
}
