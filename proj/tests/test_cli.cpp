#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "crysref/catalog.hpp"
#include "crysref/specfile.hpp"

namespace {

struct Result {
  int rc;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int rc = crysref::cli::run(args, o, e);
  return {rc, o.str(), e.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    const auto p = l.find_first_not_of(' ');
    if (p != std::string::npos && l.substr(p) == line) return true;
  }
  return false;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("crysref_test_" + std::to_string(::getpid()) + "_" + name);
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("exit codes") {
  auto r = run({"dets", "A3"});
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "det_matrix: 4"));
  CHECK(has_line(r.out, "agree: true"));

  CHECK(run({}).rc == 1);
  CHECK(run({"frobnicate"}).rc == 1);
  r = run({"dets", "K99"});
  CHECK(r.rc == 1);
  CHECK(r.err.find("UnknownGroup") != std::string::npos);
  CHECK(run({"dets", "K33"}).rc == 2);
  r = run({"dets", "G(4,2,3)"});
  CHECK(r.rc == 2);
  CHECK(r.err.find("WrongGeneratorCount") != std::string::npos);
  r = run({"classify", "G(4,4,3)", "--cap", "10"});
  CHECK(r.rc == 3);
  CHECK(run({"one-dim", "--kind", "W5"}).rc == 1);
  CHECK(run({"dets", "A2", "--cap", "x"}).rc == 1);
}

TEST_CASE("dets of G(m,m,3)") {
  CHECK(has_line(run({"dets", "G(4,4,3)"}).out, "det_matrix: 2"));
  CHECK(has_line(run({"dets", "G(6,6,3)"}).out, "det_matrix: 1"));
  CHECK(has_line(run({"dets", "G(3,3,3)"}).out, "det_matrix: 3"));
}

TEST_CASE("classify K31") {
  const auto p = temp_path("k31.json");
  auto r = run({"classify", "K31", "--json", p.string()});
  REQUIRE(r.rc == 0);
  CHECK(has_line(r.out, "order: 46080"));
  CHECK(has_line(r.out, "non_semidirect: true"));
  CHECK(has_line(r.out, "classes: [0, 1/2 + 1/2*z4]"));
  auto j = read_json(p);
  std::filesystem::remove(p);
  CHECK(j["group"] == "K31");
  CHECK(j["closure"]["order"] == 46080);
  CHECK(j["non_semidirect"] == true);
  CHECK(j["admissibility"]["ring"] == "Z[i]");
  const auto& item = j["lattices"]["items"][0];
  CHECK(item["semidirect_r_group"] == "yes");
  CHECK(item["lambda_scan"]["classes"] == nlohmann::json::array({"0", "1/2 + 1/2*z4"}));
  CHECK(item["non_split_extensions"][0]["split"] == false);
}

TEST_CASE("classify G(4,2,3)") {
  auto r = run({"root-lattices", "G(4,2,3)"});
  REQUIRE(r.rc == 0);
  CHECK(has_line(r.out, "count: 5"));
  r = run({"h1", "G(4,2,3)"});
  CHECK(has_line(r.out, "invariant_factors: [2, 2]"));
}

TEST_CASE("cocycle check") {
  auto r = run({"cocycle-check", "K31", "--lambda", "(1+i)/2"});
  REQUIRE(r.rc == 0);
  CHECK(has_line(r.out, "coboundary: false"));
  r = run({"cocycle-check", "K31", "--lambda", "1/2"});
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "satisfied: false"));
  CHECK(has_line(r.out, "well_defined_relators: false"));
}

TEST_CASE("one-dim") {
  auto r = run({"one-dim", "--kind", "W2l", "--lambda", "1+2i"});
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "lambda: 2*z4"));
  r = run({"one-dim", "--kind", "W3"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("mirrors") != std::string::npos);
  CHECK(run({"one-dim", "--kind", "W2l", "--lambda", "3"}).rc == 2);
}

TEST_CASE("output is deterministic") {
  for (const char* g : {"K31", "G(3,1,3)", "G(4,2,4)"}) {
    auto a = run({"classify", g});
    auto b = run({"classify", g});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json matches the human report") {
  const auto p = temp_path("g313.json");
  auto r = run({"classify", "G(3,1,3)", "--json", p.string()});
  REQUIRE(r.rc == 0);
  auto j = read_json(p);
  std::filesystem::remove(p);
  CHECK(has_line(r.out, "count: " + std::to_string(j["lattices"]["count"].get<int>())));
  CHECK(j["lattices"]["count"] == 2);
  CHECK(has_line(r.out, "order: " + std::to_string(j["closure"]["order"].get<long long>())));
  CHECK(has_line(r.out, "ring: " + j["admissibility"]["ring"].get<std::string>()));
}

TEST_CASE("cap from the environment") {
  ::setenv("CRYSREF_CAP", "10", 1);
  CHECK(run({"classify", "G(4,4,3)"}).rc == 3);
  CHECK(run({"classify", "G(4,4,3)", "--cap", "100000"}).rc == 0);
  ::setenv("CRYSREF_CAP", "abc", 1);
  CHECK(run({"graph", "A2"}).rc == 1);
  ::unsetenv("CRYSREF_CAP");
  CHECK(run({"graph", "G(4,4,3)"}).rc == 0);
}

TEST_CASE("spec file input") {
  const auto p = temp_path("g663.json");
  {
    std::ofstream f(p);
    f << crysref::dump_spec(crysref::get_group("G(6,6,3)").spec);
  }
  auto a = run({"dets", p.string()});
  auto b = run({"dets", "G(6,6,3)"});
  CHECK(a.rc == 0);
  CHECK(has_line(a.out, "det_matrix: 1"));
  CHECK(a.out.substr(a.out.find('\n')) == b.out.substr(b.out.find('\n')));
  {
    std::ofstream f(p);
    f << "{ not json";
  }
  CHECK(run({"dets", p.string()}).rc == 1);
  std::filesystem::remove(p);
}

TEST_CASE("catalog listing") {
  auto r = run({"catalog"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("K31") != std::string::npos);
  r = run({"catalog", "G(4,2,3)"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("order") != std::string::npos);
}

TEST_CASE("classify --all agrees with the catalog expectations") {
  const auto p = temp_path("all.json");
  auto r = run({"classify", "--all", "--jobs", "4", "--json", p.string()});
  REQUIRE(r.rc == 0);
  auto j = read_json(p);
  std::filesystem::remove(p);
  CHECK(j["errors"] == 0);
  size_t k = 0;
  int checked = 0;
  for (const auto& g : crysref::catalog()) {
    if (!g.has_data || !g.closure_feasible || g.family == crysref::Family::OneDim) continue;
    REQUIRE(k < j["groups"].size());
    const auto& x = j["groups"][k++];
    CAPTURE(g.name);
    REQUIRE(x["group"] == g.name);
    const auto& e = g.expected;
    if (e.order) CHECK(x["closure"]["order"] == e.order->value);
    if (e.admissible) CHECK(x["admissibility"]["admissible"] == e.admissible->value);
    if (e.trace_ring) CHECK(x["admissibility"]["ring"] == e.trace_ring->value);
    if (!x.contains("lattices")) continue;
    if (e.non_semidirect) {
      CHECK(x["non_semidirect"] == e.non_semidirect->value);
      ++checked;
    }
    if (e.lattices_raw) CHECK(x["lattices"]["count"] == e.lattices_raw->value);
    if (e.lattice_classes) CHECK(x["lattices"]["similarity_representatives"].size() == static_cast<size_t>(e.lattice_classes->value));
  }
  CHECK(k == j["groups"].size());
  CHECK(checked >= 10);
  CHECK(run({"classify", "K31", "--all"}).rc == 1);
}
