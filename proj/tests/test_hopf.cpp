#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/hopf.hpp"

using namespace qmod;

namespace {

const char* const kQuasitriangular[] = {"group_algebra:2:trivial", "group_algebra:2", "group_algebra:3",
                                        "sweedler", "double:group_algebra:2", "double:sweedler"};

bool failed(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c && !c->pass;
}

}  // namespace

TEST_CASE("builtins satisfy the Hopf axioms") {
  for (const char* s : {"group_algebra:1", "group_algebra:4", "sweedler", "taft:3", "double:group_algebra:2",
                        "double:sweedler", "restricted_sl2:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    CHECK(verify_hopf(A.H).pass());
    for (const auto& r : A.reps) CHECK(verify_representation(A.H, r).pass());
  }
}

TEST_CASE("dimensions of builtins") {
  CHECK(builtin("group_algebra:5").H.dim == 5);
  CHECK(builtin("sweedler").H.dim == 4);
  CHECK(builtin("taft:3").H.dim == 9);
  CHECK(builtin("double:sweedler").H.dim == 16);
  CHECK(builtin("restricted_sl2:2").H.dim == 16);
  CHECK_THROWS_AS(builtin("nonsense"), UnknownBuiltin);
  CHECK_THROWS_AS(builtin("taft"), BadParams);
  CHECK_THROWS_AS(builtin("group_algebra:0"), BadParams);
  CHECK_THROWS_AS(builtin("group_algebra:2:weird"), BadParams);
}

TEST_CASE("corrupted antipode is caught with a witness") {
  Algebra A = builtin("sweedler");
  HopfAlgebra H = A.H;
  auto e = H.antipode.matrix.entries;
  REQUIRE(!e.empty());
  auto it = e.begin();
  H.antipode.matrix.set(it->first, -it->second);
  H.finalize();
  Report r = verify_hopf(H);
  CHECK(!r.pass());
  REQUIRE(r.find("antipode"));
  CHECK(!r.find("antipode")->pass);
  CHECK(!r.find("antipode")->witness.empty());
  CHECK(r.find("associativity")->pass);
}

TEST_CASE("quasitriangular structures") {
  for (const char* s : kQuasitriangular) {
    CAPTURE(s);
    Algebra A = builtin(s);
    REQUIRE(A.R);
    Report r = verify_quasitriangular(A.H, *A.R);
    CHECK(r.pass());
    CHECK(r.find("qybe"));
  }
}

TEST_CASE("wrong R is rejected") {
  Algebra A = builtin("sweedler");
  // 1 (x) 1 is not almost cocommutative on a noncocommutative algebra
  QuasitriangularData trivial{A.H.pure2(A.H.one(), A.H.one()), A.H.pure2(A.H.one(), A.H.one())};
  Report r = verify_quasitriangular(A.H, trivial);
  CHECK(failed(r, "almost_cocommutative"));
  // the flip of the correct R satisfies neither hexagon for Sweedler
  QuasitriangularData flipped{A.H.flip2(A.R->R), A.H.flip2(A.R->R_inv)};
  CHECK(!verify_quasitriangular(A.H, flipped).pass());
}

TEST_CASE("restricted sl2 candidate R fails and is reported") {
  Algebra A = builtin("restricted_sl2:2");
  REQUIRE(A.R);
  CHECK(!verify_quasitriangular(A.H, *A.R).pass());
  CHECK(center(A.H).dim() == 5);
}

TEST_CASE("Drinfeld element implements S^2") {
  for (const char* s : kQuasitriangular) {
    CAPTURE(s);
    Algebra A = builtin(s);
    const HopfAlgebra& H = A.H;
    Vec u = drinfeld_element(H, *A.R);
    auto ui = invert_element(H, u);
    REQUIRE(ui);
    for (int i = 0; i < H.dim; ++i) CHECK(H.S(H.S(H.basis(i))) == H.mul3(u, H.basis(i), *ui));
  }
}

TEST_CASE("ribbon elements") {
  for (const char* s : {"group_algebra:2:trivial", "group_algebra:2", "group_algebra:3", "sweedler",
                        "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    REQUIRE(A.ribbon);
    CHECK(verify_ribbon(A.H, *A.R, *A.ribbon).pass());
    for (const auto& v : find_ribbon_element(A.H, *A.R)) CHECK(verify_ribbon(A.H, *A.R, v).pass());
  }
  // the double of a Taft algebra of even order is not ribbon
  Algebra D = builtin("double:sweedler");
  CHECK(!D.ribbon);
  CHECK(find_ribbon_element(D.H, *D.R).empty());
  CHECK(D.pivot);
}

TEST_CASE("pivotal elements conjugate by S^2") {
  for (const char* s : {"sweedler", "taft:3", "double:sweedler"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    REQUIRE(A.pivot);
    const HopfAlgebra& H = A.H;
    auto gi = invert_element(H, *A.pivot);
    REQUIRE(gi);
    for (int i = 0; i < H.dim; ++i) CHECK(H.S(H.S(H.basis(i))) == H.mul3(*A.pivot, H.basis(i), *gi));
  }
}

TEST_CASE("Drinfeld double") {
  Algebra A = builtin("sweedler");
  auto [D, R] = drinfeld_double(A.H);
  CHECK(D.dim == 16);
  CHECK(verify_hopf(D).pass());
  CHECK(verify_quasitriangular(D, R).pass());
  auto Rinv = invert_element2(D, R.R);
  REQUIRE(Rinv);
  CHECK(*Rinv == R.R_inv);
}

TEST_CASE("centers and integrals") {
  CHECK(center(builtin("group_algebra:3").H).dim() == 3);
  CHECK(center(builtin("double:group_algebra:2").H).dim() == 4);
  CHECK(center(builtin("sweedler").H).dim() == 1);
  CHECK(center(builtin("double:sweedler").H).dim() == 5);
  for (const char* s : {"group_algebra:3", "sweedler", "double:sweedler"}) {
    CAPTURE(s);
    const HopfAlgebra H = builtin(s).H;
    Subspace Z = center(H);
    for (const auto& z : Z.basis())
      for (int i = 0; i < H.dim; ++i) CHECK(H.mul(z, H.basis(i)) == H.mul(H.basis(i), z));
    Subspace I = left_integrals(H);
    CHECK(I.dim() == 1);
    for (int i = 0; i < H.dim; ++i) CHECK(H.mul(H.basis(i), I.basis()[0]) == scaled(I.basis()[0], H.eps(H.basis(i))));
  }
}

TEST_CASE("algebra generators generate") {
  for (const char* s : {"sweedler", "double:group_algebra:2", "double:sweedler"}) {
    CAPTURE(s);
    const HopfAlgebra H = builtin(s).H;
    std::vector<Vec> gens;
    for (int i : algebra_generators(H)) gens.push_back(H.basis(i));
    MulOracle mul = [&](const Vec& x, const Vec& y) { return H.mul(x, y); };
    CHECK(span_closure(gens, mul, H.one()).dim() == H.dim);
  }
}

TEST_CASE("regular, trivial and tensor representations") {
  const HopfAlgebra H = builtin("sweedler").H;
  Representation reg = regular_representation(H), triv = trivial_representation(H);
  CHECK(verify_representation(H, reg).pass());
  CHECK(verify_representation(H, triv).pass());
  Representation t = tensor_representation(H, reg, triv);
  CHECK(t.dim_v == 4);
  CHECK(verify_representation(H, t).pass());
  Representation rr = tensor_representation(H, reg, reg);
  CHECK(verify_representation(H, rr).pass());
}

TEST_CASE("iterated coproduct and tensor powers") {
  const HopfAlgebra H = builtin("sweedler").H;
  for (int i = 0; i < H.dim; ++i) {
    Vec x = H.basis(i);
    CHECK(H.iterated_coproduct(x, 1) == to_sparse(x));
    CHECK(H.iterated_coproduct(x, 2) == H.coproduct(x));
    // (eps (x) id (x) id) Delta^(3) = Delta
    SVec d3 = H.iterated_coproduct(x, 3), back;
    for (const auto& [k, c] : d3) {
      auto idx = split_index(k, H.dim, 3);
      sadd(back, idx[1] * H.dim + idx[2], c * H.eps(H.basis(idx[0])));
    }
    CHECK(back == H.coproduct(x));
  }
  // Delta is an algebra map into H (x) H
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < H.dim; ++j)
      CHECK(H.coproduct(H.mul(H.basis(i), H.basis(j))) ==
            H.tensor_mul(H.coproduct(H.basis(i)), H.coproduct(H.basis(j)), 2));
  CHECK(join_index(split_index(37, 4, 3), 4) == 37);
  CHECK(ipow(4, 3) == 64);
}

TEST_CASE("matrix helpers") {
  Mat a{{Cyclotomic(1, 1), Cyclotomic(1, 2)}, {Cyclotomic(1, 3), Cyclotomic(1, 4)}};
  auto ai = mat_inverse(a);
  REQUIRE(ai);
  CHECK(mat_mul(a, *ai) == mat_identity(2, 1));
  Mat sing{{Cyclotomic(1, 1), Cyclotomic(1, 2)}, {Cyclotomic(1, 2), Cyclotomic(1, 4)}};
  CHECK(!mat_inverse(sing));
  CHECK(mat_kron(a, mat_identity(2, 1)).size() == 4);
  CHECK(mat_is_zero(mat_sub(a, mat_transpose(mat_transpose(a)))));
}
