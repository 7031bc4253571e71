#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qmod/io.hpp"

using namespace qmod;

namespace {

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qmod_io_" + name);
}

}  // namespace

TEST_CASE("algebra files round trip exactly") {
  for (const char* s : {"group_algebra:2:trivial", "group_algebra:3", "sweedler", "taft:3", "double:group_algebra:2",
                        "double:sweedler"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    Json j = algebra_to_json(A);
    Algebra B = algebra_from_json(j);
    CHECK(B.H.dim == A.H.dim);
    CHECK(B.H.mult == A.H.mult);
    CHECK(B.H.comult == A.H.comult);
    CHECK(B.H.antipode.matrix == A.H.antipode.matrix);
    CHECK(B.H.counit == A.H.counit);
    CHECK(B.H.unit == A.H.unit);
    CHECK(B.R.has_value() == A.R.has_value());
    if (A.R) {
      CHECK(B.R->R == A.R->R);
      CHECK(B.R->R_inv == A.R->R_inv);
      CHECK(B.R_unverified);
    }
    CHECK(B.ribbon.has_value() == A.ribbon.has_value());
    if (A.ribbon) {
      CHECK(B.ribbon->v == A.ribbon->v);
      CHECK(B.ribbon->pivot == A.ribbon->pivot);
    }
    CHECK(B.reps.size() == A.reps.size());
    CHECK(B.pivot.has_value() == A.pivot.has_value());
    CHECK(dump(algebra_to_json(B)) == dump(j));
  }
}

TEST_CASE("save and load") {
  Algebra A = builtin("sweedler");
  auto p = tmp_file("sweedler.json");
  save_algebra(A, p.string());
  Algebra B = load_algebra(p.string());
  CHECK(dump(algebra_to_json(B)) == dump(algebra_to_json(A)));
  CHECK(verify_hopf(B.H).pass());
  std::filesystem::remove(p);
  CHECK_THROWS_AS(load_algebra(p.string()), FormatError);
}

TEST_CASE("malformed files") {
  Json good = algebra_to_json(builtin("group_algebra:2"));
  CHECK_NOTHROW(algebra_from_json(good));
  CHECK_THROWS_AS(algebra_from_json(Json::array()), FormatError);
  for (const char* k : {"dim", "mult", "comult", "counit", "unit", "antipode"}) {
    Json j = good;
    j.erase(k);
    CHECK_THROWS_AS(algebra_from_json(j), FormatError);
  }
  Json j = good;
  j["counit"] = Json::array({"1"});
  CHECK_THROWS_AS(algebra_from_json(j), FormatError);
  j = good;
  j["mult"] = Json::array({Json::array({0, 0, 7, "1"})});
  CHECK_THROWS_AS(algebra_from_json(j), FormatError);
  j = good;
  j["counit"][0] = "1 +";
  CHECK_THROWS_AS(algebra_from_json(j), ParseError);
  j = good;
  j["dim"] = "two";
  CHECK_THROWS_AS(algebra_from_json(j), FormatError);
  auto p = tmp_file("junk.json");
  std::ofstream(p) << "{ not json";
  CHECK_THROWS_AS(load_algebra(p.string()), FormatError);
  std::filesystem::remove(p);
}

TEST_CASE("scalars print in the literal grammar") {
  Cyclotomic c = Cyclotomic(8, mpq_class(-3, 4)) + Cyclotomic::zeta_power(8, 3, 2);
  Json j = scalar_json(c);
  REQUIRE(j.is_string());
  CHECK(Cyclotomic::parse(j.get<std::string>(), 8) == c);
  CHECK(vec_json(Vec{Cyclotomic(1, 1), Cyclotomic(1)}).dump() == "[\"1\",\"0\"]");
}

TEST_CASE("report json") {
  Report r;
  r.add("a", true);
  r.add("b", false, {3, 4}, "why");
  Json j = report_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["witness"] == Json::array({3, 4}));
  CHECK(!j["checks"][0].contains("witness"));
  CHECK(j.begin().key() == "pass");
}

TEST_CASE("moduli table export is deterministic") {
  Algebra A = builtin("group_algebra:2");
  Moduli L = make_moduli(A, {0, 1});
  Json t1 = moduli_table_json(L), t2 = moduli_table_json(make_moduli(A, {0, 1}));
  CHECK(dump(t1) == dump(t2));
  CHECK(t1.size() == product_table(L).size());
}

TEST_CASE("subspace json") {
  Subspace s = span({unit_vec(3, 1, 1)}, 3, 1);
  Json j = subspace_json(s, true);
  CHECK(j["dim"] == 1);
  CHECK(j["ambient"] == 3);
  CHECK(j["basis"].size() == 1);
  CHECK(!subspace_json(s).contains("basis"));
}
