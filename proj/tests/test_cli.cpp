#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmod/cli.hpp"
#include "qmod/io.hpp"

using namespace qmod;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "qmoduli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qmod_cli_" + name)).string();
}

}  // namespace

TEST_CASE("verify on a correct file") {
  std::string p = tmp("dz2.json");
  save_algebra(builtin("double:group_algebra:2"), p);
  Result r = call({"verify", p});
  CHECK(r.code == exit_ok);
  Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j["hopf"]["pass"] == true);
  CHECK(j["quasitriangular"]["pass"] == true);
  std::filesystem::remove(p);
}

TEST_CASE("verify on a broken antipode names a witness") {
  Json j = algebra_to_json(builtin("sweedler"));
  Json& S = j["antipode"];
  REQUIRE(S.is_array());
  // swap two rows of the antipode matrix
  std::swap(S[1], S[2]);
  std::string p = tmp("broken.json");
  std::ofstream(p) << dump(j);
  Result r = call({"verify", p});
  CHECK(r.code == exit_failed);
  Json out = r.json();
  CHECK(out["pass"] == false);
  bool named = false;
  for (const auto& c : out["hopf"]["checks"])
    if (c["name"] == "antipode") {
      CHECK(c["pass"] == false);
      named = c.contains("witness") && !c["witness"].empty();
    }
  CHECK(named);
  std::filesystem::remove(p);
}

TEST_CASE("moduli associativity on D(Z/2)") {
  Result r = call({"moduli", "--g", "1", "--n", "0", "--check-associativity", "builtin:double:group_algebra:2"});
  CHECK(r.code == exit_ok);
  Json j = r.json();
  CHECK(j["pass"] == true);
  CHECK(j.dump().find("\"dim\":16") != std::string::npos);
}

TEST_CASE("matrix relations through the CLI") {
  Result r = call({"moduli", "--g", "1", "--n", "0", "--check-matrix-relations", "builtin:sweedler"});
  CHECK(r.code == exit_ok);
}

TEST_CASE("input errors exit 2 with an error object") {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"verify"},
           {"verify", tmp("does_not_exist.json")},
           {"verify", "builtin:nonsense"},
           {"verify", "builtin:taft"},
           {"moduli", "--g", "1", "builtin:sweedler"},
           {"moduli", "--g", "-1", "--n", "0", "builtin:sweedler"},
           {"moduli", "--g", "0", "--n", "1", "builtin:taft:3"},
           {"wilson", "--g", "0", "--n", "1", "--word", "q1", "builtin:sweedler"},
           {"wilson", "--g", "0", "--n", "1", "--word", "a1", "builtin:sweedler"},
           {"reduce", "--g", "0", "--n", "1", "builtin:sweedler"},
           {"alekseev", "--g", "0", "--n", "1", "--variant", "odd", "builtin:sweedler"}}) {
    Result r = call(args);
    CAPTURE(r.out);
    CHECK(r.code == exit_input);
    Json j = r.json();
    CHECK(j.contains("error"));
    CHECK(j.contains("message"));
    CHECK(!r.err.empty());
  }
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args{"invariants", "--g", "0", "--n", "1", "builtin:sweedler"};
  Result a = call(args), b = call(args);
  CHECK(a.code == exit_ok);
  CHECK(a.out == b.out);
  std::vector<std::string> t4 = args;
  t4.insert(t4.begin() + 1, {"--threads", "4"});
  CHECK(call(t4).out == a.out);
}

TEST_CASE("double writes a verified file") {
  std::string in = tmp("sw.json"), out = tmp("dsw.json");
  save_algebra(builtin("sweedler"), in);
  Result r = call({"double", in, "--out", out});
  CHECK(r.code == exit_ok);
  Algebra D = load_algebra(out);
  CHECK(D.H.dim == 16);
  CHECK(verify_hopf(D.H).pass());
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("alekseev, reduce, wilson and export") {
  Result a = call({"alekseev", "--g", "1", "--n", "0", "--rank", "--check-morphism", "builtin:double:group_algebra:2"});
  CHECK(a.code == exit_ok);
  CHECK(a.out.find("\"rank\": 16") != std::string::npos);
  Result f = call({"alekseev", "--g", "0", "--n", "2", "--variant", "findim", "--check-morphism",
                   "builtin:double:group_algebra:2"});
  CHECK(f.code == exit_ok);
  Result q = call({"reduce", "--g", "0", "--n", "1", "builtin:double:group_algebra:2"});
  CHECK(q.code == exit_ok);
  Result w = call({"wilson", "--g", "0", "--n", "1", "--word", "m1", "--color", "regular",
                   "builtin:double:group_algebra:2"});
  CHECK(w.code == exit_ok);
  CHECK(w.json()["pass"] == true);
  std::string p = tmp("table.json");
  Result e = call({"export", "--table", "moduli", "--g", "0", "--n", "1", "builtin:group_algebra:2", "--out", p});
  CHECK(e.code == exit_ok);
  std::ifstream is(p);
  Json t = Json::parse(is);
  CHECK(t.is_array());
  CHECK(!t.empty());
  std::filesystem::remove(p);
}

TEST_CASE("help") {
  Result r = call({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(r.err.find("verify") != std::string::npos);
}
