#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmod/linalg.hpp"

using namespace qmod;

namespace {

Vec random_vec(std::mt19937& rng, int n, int order, int zeros = 0) {
  Vec v = zero_vec(n, order);
  for (int i = 0; i < n; ++i) {
    if (zeros && static_cast<int>(rng() % 10) < zeros) continue;
    v[i] = Cyclotomic::zeta_power(order, rng() % order, static_cast<long>(rng() % 7) - 3);
  }
  return v;
}

Cyclotomic dot(const Vec& a, const Vec& b) {
  Cyclotomic s(a.empty() ? 1 : a[0].order());
  for (size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

}  // namespace

TEST_CASE("tensor indexing") {
  Tensor t({2, 3, 4}, 1);
  CHECK(t.size() == 24);
  CHECK(t.flat_index({1, 2, 3}) == 23);
  CHECK(t.multi_index(17) == std::vector<int>{1, 1, 1});
  t.set({0, 1, 2}, Cyclotomic(1, 5));
  t.add({0, 1, 2}, Cyclotomic(1, -5));
  CHECK(t.entries.empty());
  t.set({1, 0, 3}, Cyclotomic(1, 2));
  CHECK(Tensor::from_dense(t.shape, 1, t.to_dense()) == t);
  CHECK(Tensor::from_sparse(t.shape, 1, t.to_sparse()) == t);
  CHECK_THROWS_AS(t.get({2, 0, 0}), Error);
  CHECK_THROWS_AS(t.get({0, 0}), Error);
}

TEST_CASE("sparse accumulation drops zeros") {
  SVec v;
  sadd(v, 3, Cyclotomic(1, 2));
  sadd(v, 3, Cyclotomic(1, -2));
  CHECK(v.empty());
  SVec x{{1, Cyclotomic(1, 1)}, {4, Cyclotomic(1, 3)}};
  saxpy(v, Cyclotomic(1, 2), x);
  CHECK(to_dense(v, 5, 1)[4] == Cyclotomic(1, 6));
  CHECK(to_sparse(to_dense(v, 5, 1)) == v);
}

TEST_CASE("rank-nullity and kernel correctness") {
  std::mt19937 rng(9);
  for (int order : {1, 3, 4}) {
    for (int t = 0; t < 12; ++t) {
      int r = 2 + rng() % 5, c = 2 + rng() % 6;
      std::vector<Vec> rows;
      for (int i = 0; i < r; ++i) rows.push_back(random_vec(rng, c, order, 5));
      // a dependent row
      if (r > 2) rows.push_back(rows[0] + scaled(rows[1], Cyclotomic::zeta_power(order, 1)));
      int rk = rank_rows(rows, c, order);
      auto ker = kernel_rows(rows, c, order);
      CHECK(rk + static_cast<int>(ker.size()) == c);
      for (const auto& k : ker) {
        CHECK(!is_zero(k));
        for (const auto& row : rows) CHECK(dot(row, k).is_zero());
      }
      CHECK(span(ker, c, order).dim() == static_cast<int>(ker.size()));
    }
  }
}

TEST_CASE("linear solve") {
  std::mt19937 rng(4);
  for (int t = 0; t < 15; ++t) {
    int n = 2 + rng() % 4;
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) rows.push_back(random_vec(rng, n, 3));
    Vec x = random_vec(rng, n, 3);
    Vec b = zero_vec(n, 3);
    for (int i = 0; i < n; ++i) b[i] = dot(rows[i], x);
    auto sol = solve_rows(rows, b, n, 3);
    REQUIRE(sol);
    for (int i = 0; i < n; ++i) CHECK(dot(rows[i], *sol) == b[i]);
  }
  // inconsistent: x = 1 and x = 2
  std::vector<Vec> rows{{Cyclotomic(1, 1)}, {Cyclotomic(1, 1)}};
  CHECK(!solve_rows(rows, {Cyclotomic(1, 1), Cyclotomic(1, 2)}, 1, 1));
}

TEST_CASE("linear maps") {
  std::vector<Vec> rows{{Cyclotomic(1, 1), Cyclotomic(1, 2)}, {Cyclotomic(1, 2), Cyclotomic(1, 4)}};
  LinearMap m = LinearMap::from_rows(rows, 2, 1);
  CHECK(rank(m) == 1);
  CHECK(nullity(m) == 1);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m.apply(k[0].to_dense())));
  CHECK(m.rows() == rows);
  LinearMap mc = LinearMap::from_columns({rows[0], rows[1]}, 2, 1);
  CHECK(mc.apply(unit_vec(2, 1, 1)) == rows[1]);
}

TEST_CASE("subspace operations") {
  std::mt19937 rng(21);
  int n = 6;
  std::vector<Vec> a, b;
  for (int i = 0; i < 3; ++i) a.push_back(random_vec(rng, n, 4, 3));
  for (int i = 0; i < 2; ++i) b.push_back(random_vec(rng, n, 4, 3));
  b.push_back(a[0] + a[1]);
  Subspace A = span(a, n, 4), B = span(b, n, 4);
  Subspace S = sum(A, B), I = intersect(A, B);
  CHECK(S.dim() + I.dim() == A.dim() + B.dim());
  CHECK(A.contains(I));
  CHECK(B.contains(I));
  CHECK(S.contains(A));
  CHECK(I.contains(a[0] + a[1]));
  for (const auto& v : a) {
    auto c = A.coordinates(v);
    REQUIRE(c);
    Vec back = zero_vec(n, 4);
    for (int i = 0; i < A.dim(); ++i) axpy(back, (*c)[i], A.basis()[i]);
    CHECK(back == v);
  }
  CHECK(full_space(n, 4).dim() == n);
  CHECK(!A.add(a[2] - a[0]));
  // the reduced form is canonical
  std::vector<Vec> shuffled{a[2], a[0] + a[1], a[1]};
  CHECK(span(shuffled, n, 4) == A);
}

TEST_CASE("span closure and ideal closure") {
  // C[x]/(x^3) with basis 1, x, x^2
  MulOracle mul = [](const Vec& p, const Vec& q) {
    Vec r = zero_vec(3, 1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; i + j < 3; ++j) r[i + j].add_product(p[i], q[j]);
    return r;
  };
  Vec one = unit_vec(3, 0, 1), x = unit_vec(3, 1, 1), x2 = unit_vec(3, 2, 1);
  CHECK(span_closure({x}, mul, one).dim() == 3);
  CHECK(span_closure({x2}, mul, one).dim() == 2);
  std::vector<Vec> amb{one, x, x2};
  Subspace I = left_ideal_closure({x}, mul, amb);
  CHECK(I.dim() == 2);
  CHECK(!I.contains(one));
  CHECK(left_ideal_closure({one}, mul, amb).dim() == 3);
}
