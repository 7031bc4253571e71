#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "qmod/moduli.hpp"

using namespace qmod;

namespace {

struct RTerm {
  int s, t;
  Cyclotomic c;
};

std::vector<RTerm> r_terms(const SVec& R, int d) {
  std::vector<RTerm> out;
  for (const auto& [k, c] : R) out.push_back({static_cast<int>(k / d), static_cast<int>(k % d), c});
  return out;
}

// h |> phi <| k
Mat act(const Coregular& C, const Vec& h, const Vec& k) { return mat_mul(C.left_of(h), C.right_of(k)); }

struct Quad {
  Cyclotomic c;
  Mat first, second;
};

// Y(j)(phi) X(i)(psi) = sum X(i)(S(R3_1 R4_1) |> psi <| R1_1 R2_1) Y(j)(S(R1_2 R3_2) |> phi <| R2_2 R4_2)
std::vector<Quad> cross_quads(const HopfAlgebra& H, const SVec& R, const Coregular& C) {
  auto rs = r_terms(R, H.dim);
  std::vector<Quad> out;
  auto e = [&](int i) { return H.basis(i); };
  for (const auto& r1 : rs)
    for (const auto& r2 : rs)
      for (const auto& r3 : rs)
        for (const auto& r4 : rs) {
          Cyclotomic c = r1.c * r2.c * r3.c * r4.c;
          Mat m1 = act(C, H.S(H.mul(e(r3.s), e(r4.s))), H.mul(e(r1.s), e(r2.s)));
          Mat m2 = act(C, H.S(H.mul(e(r1.t), e(r3.t))), H.mul(e(r2.t), e(r4.t)));
          out.push_back({c, m1, m2});
        }
  return out;
}

// A(i)(phi) B(i)(psi) = sum B(i)(R4_2 R3_1 |> psi <| R1_1 R2_1) A(i)(R3_2 S(R1_2) |> phi <| R2_2 R4_1)
std::vector<Quad> exchange_quads(const HopfAlgebra& H, const SVec& R, const Coregular& C) {
  auto rs = r_terms(R, H.dim);
  std::vector<Quad> out;
  auto e = [&](int i) { return H.basis(i); };
  for (const auto& r1 : rs)
    for (const auto& r2 : rs)
      for (const auto& r3 : rs)
        for (const auto& r4 : rs) {
          Cyclotomic c = r1.c * r2.c * r3.c * r4.c;
          Mat m1 = act(C, H.mul(e(r4.t), e(r3.s)), H.mul(e(r1.s), e(r2.s)));
          Mat m2 = act(C, H.mul(e(r3.t), H.S(e(r1.t))), H.mul(e(r2.t), e(r4.s)));
          out.push_back({c, m1, m2});
        }
  return out;
}

Vec column(const Mat& m, int j) {
  Vec v;
  for (const auto& row : m) v.push_back(row[j]);
  return v;
}

// sum over quads of the pure tensor (first psi, second phi) placed at positions lo < hi
SVec quad_product(const Moduli& L, const std::vector<Quad>& qs, int lo, int hi, int phi, int psi) {
  SVec out;
  std::vector<Vec> slots(L.slots(), L.H().counit);
  for (const auto& q : qs) {
    slots[lo] = column(q.first, psi);
    slots[hi] = column(q.second, phi);
    saxpy(out, q.c, L.pure(slots));
  }
  return out;
}

const char* const kSmall[] = {"group_algebra:2", "group_algebra:3", "sweedler", "double:group_algebra:2"};

}  // namespace

TEST_CASE("loop algebra matches the explicit formula") {
  for (const char* s : kSmall) {
    CAPTURE(s);
    Algebra A = builtin(s);
    Moduli L = make_moduli(A, {0, 1});
    const HopfAlgebra& H = L.H();
    for (int a = 0; a < H.dim; ++a)
      for (int b = 0; b < H.dim; ++b)
        CHECK(L.mul(L.basis(a), L.basis(b)) == to_sparse(loop_product(H, L.R(), H.basis(a), H.basis(b))));
  }
}

TEST_CASE("handle algebra matches the explicit formula") {
  for (const char* s : kSmall) {
    CAPTURE(s);
    Algebra A = builtin(s);
    Moduli L = make_moduli(A, {1, 0});
    for (std::int64_t i = 0; i < L.dim(); ++i)
      for (std::int64_t j = 0; j < L.dim(); ++j)
        CHECK(L.mul(L.basis(i), L.basis(j)) == handle_product(L.H(), L.R(), L.basis(i), L.basis(j)));
  }
}

TEST_CASE("cross-factor rule agrees with the four-R formula") {
  for (const char* s : {"group_algebra:3", "sweedler", "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    for (Signature sig : {Signature{0, 2}, Signature{1, 1}}) {
      Moduli L = make_moduli(A, sig);
      auto qs = cross_quads(L.H(), L.R().R, L.cor());
      const int d = L.d();
      for (int lo = 0; lo < L.slots(); ++lo)
        for (int hi = lo + 1; hi < L.slots(); ++hi) {
          if (sig.g == 1 && hi == 1) continue;  // B(1), A(1) follow the exchange rule
          for (int phi = 0; phi < d; ++phi)
            for (int psi = 0; psi < d; ++psi)
              CHECK(L.mul(L.letter(hi, phi), L.letter(lo, psi)) == quad_product(L, qs, lo, hi, phi, psi));
        }
    }
  }
}

TEST_CASE("A/B exchange agrees with the four-R formula") {
  for (const char* s : {"group_algebra:3", "sweedler", "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    Moduli L = make_moduli(A, {1, 0});
    auto qs = exchange_quads(L.H(), L.R().R, L.cor());
    const int d = L.d();
    const int b = L.position({SlotKind::B, 1}), a = L.position({SlotKind::A, 1});
    for (int phi = 0; phi < d; ++phi)
      for (int psi = 0; psi < d; ++psi)
        CHECK(L.mul(L.letter(a, phi), L.letter(b, psi)) == quad_product(L, qs, b, a, phi, psi));
  }
}

TEST_CASE("slot embeddings are algebra maps") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {1, 1});
  const HopfAlgebra& H = L.H();
  for (Slot sl : {Slot{SlotKind::B, 1}, Slot{SlotKind::A, 1}, Slot{SlotKind::M, 2}})
    for (int a = 0; a < H.dim; ++a)
      for (int b = 0; b < H.dim; ++b) {
        ModuliElement x = embed(L, sl, H.basis(a)), y = embed(L, sl, H.basis(b));
        ModuliElement xy = graph_product(L, x, y);
        CHECK(xy.coeffs == embed(L, sl, loop_product(H, L.R(), H.basis(a), H.basis(b))).coeffs);
      }
}

TEST_CASE("associativity, unit and module-algebra law") {
  for (const char* s : kSmall) {
    CAPTURE(s);
    Algebra A = builtin(s);
    for (Signature sig : {Signature{0, 1}, Signature{1, 0}, Signature{0, 2}}) {
      Moduli L = make_moduli(A, sig);
      CHECK(check_associativity(L).pass());
      CHECK(check_module_algebra(L).pass());
    }
  }
  Moduli L = make_moduli(builtin("sweedler"), {1, 1});
  CHECK(check_associativity(L, 300, 5).pass());
  CHECK(check_module_algebra(L, 100, 5).pass());
}

TEST_CASE("sampled associativity on the double of Sweedler") {
  Algebra A = builtin("double:sweedler");
  Moduli L = make_moduli(A, {0, 1});
  CHECK(check_associativity(L, 200, 17).pass());
}

TEST_CASE("coad is a right action") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {1, 0});
  const HopfAlgebra& H = L.H();
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < H.dim; ++k)
      for (std::int64_t i = 0; i < L.dim(); i += 3) {
        Vec hv = H.basis(h), kv = H.basis(k);
        CHECK(L.coad(H.mul(hv, kv), L.basis(i)) == L.coad(kv, L.coad(hv, L.basis(i))));
      }
  for (std::int64_t i = 0; i < L.dim(); ++i) CHECK(L.coad(H.one(), L.basis(i)) == L.basis(i));
}

TEST_CASE("invariants") {
  Algebra A = builtin("double:group_algebra:2");
  Moduli L01 = make_moduli(A, {0, 1});
  Subspace inv = invariants(L01);
  CHECK(inv.dim() == 4);
  const HopfAlgebra& H = L01.H();
  for (const auto& v : inv.basis())
    for (int h = 0; h < H.dim; ++h)
      CHECK(L01.to_dense(L01.coad(H.basis(h), to_sparse(v))) == scaled(v, H.eps(H.basis(h))));
  CHECK(invariants(make_moduli(builtin("sweedler"), {1, 1})).dim() == 18);
  CHECK(invariants(make_moduli(builtin("double:sweedler"), {0, 1})).dim() == 5);
  // products of invariants are invariant
  Moduli L = make_moduli(builtin("sweedler"), {1, 0});
  Subspace I10 = invariants(L);
  for (const auto& x : I10.basis())
    for (const auto& y : I10.basis()) CHECK(I10.contains(L.to_dense(L.mul(to_sparse(x), to_sparse(y)))));
}

TEST_CASE("errors") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {1, 1});
  Moduli L2 = make_moduli(A, {0, 2});
  CHECK_THROWS_AS(L.position({SlotKind::A, 2}), BadSlot);
  CHECK_THROWS_AS(L.position({SlotKind::M, 1}), BadSlot);
  CHECK_THROWS_AS(L.position({SlotKind::M, 3}), BadSlot);
  ModuliElement x{L.sig(), L.unit()}, y{L2.sig(), L2.unit()};
  CHECK_THROWS_AS(graph_product(L, x, y), SignatureMismatch);
  CHECK_THROWS_AS(make_moduli(builtin("taft:3"), {0, 1}), MissingRMatrix);
}

TEST_CASE("matrix relations") {
  for (const char* s : {"sweedler", "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    Representation V = regular_representation(A.H);
    for (Signature sig : {Signature{1, 0}, Signature{1, 1}, Signature{0, 2}}) {
      Moduli L = make_moduli(A, sig);
      Report r = check_matrix_relations(L, V, V);
      CHECK(r.pass());
      CHECK(!r.checks.empty());
    }
    Moduli L = make_moduli(A, {1, 0});
    for (const auto& W : A.reps) CHECK(check_matrix_relations(L, V, W).pass());
  }
}

TEST_CASE("wrong R breaks fusion") {
  Algebra A = builtin("sweedler");
  const HopfAlgebra& H = A.H;
  QuasitriangularData flipped{H.flip2(A.R->R), H.flip2(A.R->R_inv)};
  Moduli L(make_loop_tables(H, flipped), {1, 1});
  Representation V = regular_representation(H);
  Report r = check_matrix_relations(L, V, V);
  const Check* fusion = r.find("fusion M(2)");
  REQUIRE(fusion);
  CHECK(!fusion->pass);
  CHECK(!r.pass());
}

TEST_CASE("holonomy letters are invertible") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {1, 1});
  for (int pos = 0; pos < L.slots(); ++pos) {
    LHElement x = holonomy_letter_at(L, pos), xi = holonomy_letter_at(L, pos, true);
    CHECK(lh_equal(lh_mul(L, x, xi), lh_one(L)));
    CHECK(lh_equal(lh_mul(L, xi, x), lh_one(L)));
  }
  Representation V = regular_representation(A.H);
  HolonomyMatrix M = holonomy_matrix(L, V, {SlotKind::M, 2});
  LMatrix p = lmatrix_mul(L, M.entries, M.inverse);
  for (int i = 0; i < V.dim_v; ++i)
    for (int j = 0; j < V.dim_v; ++j) CHECK(p[i][j] == (i == j ? L.unit() : SVec{}));
}

TEST_CASE("product table") {
  Moduli L = make_moduli(builtin("group_algebra:2"), {0, 1});
  auto t = product_table(L);
  CHECK(!t.empty());
  for (const auto& [i, j, k, c] : t) CHECK(L.mul(L.basis(i), L.basis(j)).at(k) == c);
}

TEST_CASE("table cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "qmod_test_cache";
  std::filesystem::remove_all(dir);
  setenv("QMODULI_CACHE_DIR", dir.c_str(), 1);
  Algebra A = builtin("sweedler");
  auto fresh = make_loop_tables(A);
  REQUIRE(std::filesystem::exists(dir));
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
  auto cached = make_loop_tables(A);
  unsetenv("QMODULI_CACHE_DIR");
  Moduli L1(fresh, {1, 1}), L2(cached, {1, 1});
  for (std::int64_t i = 0; i < L1.dim(); i += 5)
    for (std::int64_t j = 0; j < L1.dim(); j += 7) CHECK(L1.mul(L1.basis(i), L1.basis(j)) == L2.mul(L2.basis(i), L2.basis(j)));
  std::filesystem::remove_all(dir);
}
