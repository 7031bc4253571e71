#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmod/reduction.hpp"

using namespace qmod;

namespace {

bool check_failed(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c && !c->pass;
}

bool has_hypothesis(const QuantumReduction& q, const std::string& text) {
  return std::find(q.failed_hypotheses.begin(), q.failed_hypotheses.end(), text) != q.failed_hypotheses.end();
}

}  // namespace

TEST_CASE("moment subalgebra") {
  for (const char* s : {"group_algebra:3", "double:group_algebra:2", "double:sweedler"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    MomentSubalgebra m = moment_subalgebra(A.H, *A.R);
    CHECK(m.image.dim() == A.H.dim);
    CHECK(m.checks.pass());
  }
  Algebra S = builtin("sweedler");
  CHECK_THROWS_AS(moment_subalgebra(S.H, *S.R), NotInjective);
  Algebra T = builtin("group_algebra:2:trivial");
  CHECK_THROWS_AS(moment_subalgebra(T.H, *T.R), NotInjective);
}

TEST_CASE("boundary elements satisfy fusion and reflection") {
  for (const char* s : {"group_algebra:3", "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    for (Signature sig : {Signature{0, 1}, Signature{1, 0}, Signature{0, 2}, Signature{1, 1}}) {
      Moduli L = make_moduli(A, sig);
      CHECK(check_boundary_relations(L, A.ribbon).pass());
    }
  }
}

TEST_CASE("boundary element of a single puncture is the holonomy") {
  Algebra A = builtin("double:group_algebra:2");
  Moduli L = make_moduli(A, {0, 1});
  BoundaryElements C = boundary_elements(L, A.ribbon);
  CHECK(C.handles.empty());
  CHECK(lh_equal(C.total, holonomy_letter(L, {SlotKind::M, 1})));
}

TEST_CASE("quantum moment map") {
  for (const char* s : {"group_algebra:3", "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    for (Signature sig : {Signature{0, 1}, Signature{1, 0}, Signature{0, 2}}) {
      Moduli L = make_moduli(A, sig);
      MomentMap m(L, A.ribbon);
      Report r = check_qmm(m);
      CHECK(r.pass());
      CHECK(r.find("moment map identity"));
      CHECK(m(A.H.one()) == L.unit());
      CHECK(mu(L, A.ribbon, A.H.one()) == L.unit());
    }
  }
  Algebra D = builtin("double:sweedler");
  Moduli L = make_moduli(D, {0, 1});
  CHECK(check_qmm(MomentMap(L, D.ribbon), 40, 2).pass());
}

TEST_CASE("dropping v^2 breaks the moment map on Z/3") {
  Algebra A = builtin("group_algebra:3");
  REQUIRE(A.ribbon);
  CHECK(A.H.mul(A.ribbon->v, A.ribbon->v) != A.H.one());
  Moduli L = make_moduli(A, {1, 0});
  Report r = check_qmm(MomentMap(L, A.ribbon, true));
  CHECK(!r.pass());
  CHECK(check_failed(r, "multiplicative"));
  CHECK(check_failed(r, "action recovered"));
}

TEST_CASE("dropping v^2 is invisible when v^2 = 1") {
  Algebra A = builtin("double:group_algebra:2");
  CHECK(A.H.mul(A.ribbon->v, A.ribbon->v) == A.H.one());
  Moduli L = make_moduli(A, {1, 0});
  MomentMap with(L, A.ribbon), without(L, A.ribbon, true);
  for (int k = 0; k < A.H.dim; ++k) CHECK(with.psi(k) == without.psi(k));
}

TEST_CASE("missing ribbon") {
  Algebra D = builtin("double:sweedler");
  Moduli L = make_moduli(D, {1, 0});
  CHECK_THROWS_AS(MomentMap(L, D.ribbon), MissingRibbon);
  CHECK_NOTHROW(MomentMap(make_moduli(D, {0, 1}), D.ribbon));
}

TEST_CASE("ideal I_eps") {
  Algebra A = builtin("double:group_algebra:2");
  Moduli L = make_moduli(A, {0, 1});
  MomentMap m(L, A.ribbon);
  IdealReport ir = ideal_epsilon(m);
  CHECK(ir.ideal.dim() == 3);
  CHECK(ir.coad_stable);
  CHECK(ir.tensor_square_redundant);
  CHECK(!ir.ideal.contains(L.to_dense(L.unit())));
  // a left ideal
  for (const auto& x : ir.ideal.basis())
    for (std::int64_t i = 0; i < L.dim(); ++i) CHECK(ir.ideal.contains(L.to_dense(L.mul(L.basis(i), to_sparse(x)))));
}

TEST_CASE("quantum reduction of D(Z/2)") {
  Algebra A = builtin("double:group_algebra:2");
  {
    Moduli L = make_moduli(A, {0, 1});
    QuantumReduction q = quantum_reduction(MomentMap(L, A.ribbon));
    CHECK(q.dim_L == 4);
    CHECK(q.dim_invariants == 4);
    CHECK(q.dim_ideal == 3);
    CHECK(q.dim_reduced == 1);
    CHECK(q.dim_kernel == 3);
    CHECK(q.well_defined);
    CHECK(q.closed);
    CHECK(q.surjective);
    CHECK(q.semisimple);
    REQUIRE(q.kernel_is_reynolds_image);
    CHECK(*q.kernel_is_reynolds_image);
    CHECK(q.failed_hypotheses.empty());
  }
  {
    Moduli L = make_moduli(A, {1, 0});
    QuantumReduction q = quantum_reduction(MomentMap(L, A.ribbon));
    CHECK(q.dim_reduced == q.dim_invariants - q.dim_kernel);
    CHECK(q.dim_reduced == 16);
    CHECK(q.surjective);
    CHECK(q.failed_hypotheses.empty());
  }
}

TEST_CASE("quantum reduction of Z/3") {
  Algebra A = builtin("group_algebra:3");
  for (Signature sig : {Signature{0, 1}, Signature{1, 0}}) {
    Moduli L = make_moduli(A, sig);
    QuantumReduction q = quantum_reduction(MomentMap(L, A.ribbon));
    CHECK(q.dim_reduced == q.dim_invariants - q.dim_kernel);
    CHECK(q.surjective);
    CHECK(q.rank_pi == q.dim_reduced);
    CHECK(q.failed_hypotheses.empty());
  }
}

TEST_CASE("non-semisimple reduction is reported, not hidden") {
  Algebra D = builtin("double:sweedler");
  Moduli L = make_moduli(D, {0, 1});
  QuantumReduction q = quantum_reduction(MomentMap(L, D.ribbon));
  CHECK(!q.semisimple);
  CHECK(!q.kernel_is_reynolds_image);
  CHECK(has_hypothesis(q, "H is not semisimple: no Reynolds operator"));
  CHECK(q.dim_invariants == 5);
  CHECK(q.dim_ideal == 15);
}

TEST_CASE("integrals and the Reynolds operator") {
  Algebra A = builtin("double:group_algebra:2");
  Vec lam = normalized_integral(A.H);
  CHECK(A.H.eps(lam).is_one());
  for (int h = 0; h < A.H.dim; ++h) {
    CHECK(A.H.mul(A.H.basis(h), lam) == scaled(lam, A.H.eps(A.H.basis(h))));
    CHECK(A.H.mul(lam, A.H.basis(h)) == scaled(lam, A.H.eps(A.H.basis(h))));
  }
  CHECK_THROWS_AS(normalized_integral(builtin("sweedler").H), NotSemisimple);
  CHECK_THROWS_AS(normalized_integral(builtin("double:sweedler").H), NotSemisimple);
  for (Signature sig : {Signature{0, 1}, Signature{1, 0}}) {
    CHECK(check_reynolds(make_moduli(A, sig)).pass());
    CHECK(check_reynolds(make_moduli(builtin("group_algebra:3"), sig)).pass());
  }
}
