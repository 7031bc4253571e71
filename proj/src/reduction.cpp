#include "qmod/reduction.hpp"

#include <random>

namespace qmod {

MomentSubalgebra moment_subalgebra(const HopfAlgebra& H, const QuasitriangularData& R) {
  const int d = H.dim;
  MomentSubalgebra m;
  Mat P = mat_zero(d, d, H.order());
  std::vector<Vec> cols;
  for (int a = 0; a < d; ++a) {
    Vec c = phi01(H, R, H.basis(a));
    for (int k = 0; k < d; ++k) P[k][a] = c[k];
    cols.push_back(c);
  }
  m.image = span(cols, d, H.order());
  if (m.image.dim() < d)
    throw NotInjective("Phi_{0,1} has rank " + std::to_string(m.image.dim()) + " < " + std::to_string(d));
  m.section = *mat_inverse(P);
  const auto& B = m.image.basis();
  bool sub = true, coideal = true, ad = true;
  for (const auto& x : B)
    for (const auto& y : B) sub = sub && m.image.contains(H.mul(x, y));
  for (const auto& x : B) {
    // first legs attached to each second-leg basis index must lie in H'
    std::vector<Vec> legs(d, H.zero_elt());
    for (const auto& [idx, c] : H.coproduct(x)) legs[idx % d][idx / d] += c;
    for (const auto& l : legs) coideal = coideal && m.image.contains(l);
    for (int h = 0; h < d; ++h) ad = ad && m.image.contains(adjoint_right(H, H.basis(h), x));
  }
  m.checks.add("subalgebra", sub);
  m.checks.add("right coideal", coideal);
  m.checks.add("ad-stable", ad);
  return m;
}

BoundaryElements boundary_elements(const Moduli& L, const std::optional<RibbonData>& ribbon, bool drop_v2) {
  const HopfAlgebra& H = L.H();
  const int g = L.sig().g, n = L.sig().n;
  if (g > 0 && !drop_v2 && !ribbon) throw MissingRibbon("C(i) needs the ribbon element v");
  BoundaryElements out;
  out.total = lh_one(L);
  for (int i = 1; i <= g; ++i) {
    LHElement B = holonomy_letter(L, {SlotKind::B, i}), A = holonomy_letter(L, {SlotKind::A, i});
    LHElement Bi = holonomy_letter(L, {SlotKind::B, i}, true), Ai = holonomy_letter(L, {SlotKind::A, i}, true);
    LHElement c = lh_mul(L, lh_mul(L, lh_mul(L, B, Ai), Bi), A);
    if (!drop_v2) c = lh_left_h(L, H.mul(ribbon->v, ribbon->v), c);
    out.total = lh_mul(L, out.total, c);
    out.handles.push_back(std::move(c));
  }
  for (int j = g + 1; j <= g + n; ++j) out.total = lh_mul(L, out.total, holonomy_letter(L, {SlotKind::M, j}));
  return out;
}

BoundaryMatrix boundary_matrices(const Moduli& L, const std::optional<RibbonData>& ribbon, const Representation& V,
                                 bool drop_v2) {
  BoundaryElements e = boundary_elements(L, ribbon, drop_v2);
  BoundaryMatrix m;
  m.rep = &V;
  for (const auto& c : e.handles) m.Ci.push_back(lh_in_rep(c, V));
  m.C = lh_in_rep(e.total, V);
  return m;
}

namespace {

// H part x -> x (x) 1, 1 (x) x or Delta(x)
enum class Leg { first, second, both };

LHElement lift2(const Moduli& L, const LHElement& x, Leg leg) {
  const HopfAlgebra& H = L.H();
  LHElement out;
  out.k = 2;
  for (const auto& [b, v] : x.terms) {
    SVec t;
    for (const auto& [h, c] : v) {
      SVec p = leg == Leg::first    ? H.pure2(H.basis(static_cast<int>(h)), H.one())
               : leg == Leg::second ? H.pure2(H.one(), H.basis(static_cast<int>(h)))
                                    : H.coproduct(H.basis(static_cast<int>(h)));
      saxpy(t, c, p);
    }
    if (!t.empty()) out.terms[b] = t;
  }
  return out;
}

LHElement scalar2(const Moduli& L, const SVec& r) {
  LHElement out;
  out.k = 2;
  for (const auto& [b, c] : L.unit()) {
    SVec t;
    saxpy(t, c, r);
    out.terms[b] = t;
  }
  return out;
}

void fusion_reflection(Report& rep, const Moduli& L, const LHElement& X, const std::string& name) {
  const HopfAlgebra& H = L.H();
  LHElement R = scalar2(L, L.R().R), Rp = scalar2(L, H.flip2(L.R().R)), Rpi = scalar2(L, H.flip2(L.R().R_inv));
  LHElement X1 = lift2(L, X, Leg::first), X2 = lift2(L, X, Leg::second);
  LHElement lhs = lift2(L, X, Leg::both);
  LHElement rhs = lh_mul(L, lh_mul(L, lh_mul(L, X1, Rp), X2), Rpi);
  rep.add("fusion " + name, lh_equal(lhs, rhs));
  LHElement l2 = lh_mul(L, lh_mul(L, lh_mul(L, R, X1), Rp), X2);
  LHElement r2 = lh_mul(L, lh_mul(L, lh_mul(L, X2, R), X1), Rp);
  rep.add("reflection " + name, lh_equal(l2, r2));
}

}  // namespace

Report check_boundary_relations(const Moduli& L, const std::optional<RibbonData>& ribbon) {
  Report rep;
  BoundaryElements e = boundary_elements(L, ribbon);
  for (size_t i = 0; i < e.handles.size(); ++i) fusion_reflection(rep, L, e.handles[i], "C(" + std::to_string(i + 1) + ")");
  fusion_reflection(rep, L, e.total, "C");
  return rep;
}

// ---------------------------------------------------------------------------

MomentMap::MomentMap(const Moduli& L, const std::optional<RibbonData>& ribbon, bool drop_v2)
    : L_(&L), sub_(moment_subalgebra(L.H(), L.R())), C_(boundary_elements(L, ribbon, drop_v2)) {
  psi_.assign(L.d(), {});
  for (const auto& [b, v] : C_.total.terms)
    for (const auto& [h, c] : v) sadd(psi_[h], b, c);
}

SVec MomentMap::operator()(const Vec& hp) const {
  if (!sub_.image.contains(hp)) throw NotInHPrime("element is outside H'");
  const int d = L_->d();
  SVec out;
  for (int a = 0; a < d; ++a) {
    Cyclotomic c(L_->order());
    for (int k = 0; k < d; ++k)
      if (!hp[k].is_zero()) c += sub_.section[a][k] * hp[k];
    if (!c.is_zero()) saxpy(out, c, psi_[a]);
  }
  return out;
}

SVec MomentMap::of_basis(int k) const { return (*this)(L_->H().basis(k)); }

SVec mu(const Moduli& L, const std::optional<RibbonData>& ribbon, const Vec& hp) { return MomentMap(L, ribbon)(hp); }

Report check_qmm(const MomentMap& m, std::optional<int> samples, unsigned seed) {
  Report rep;
  const Moduli& L = m.moduli();
  const HopfAlgebra& H = L.H();
  const int d = H.dim;
  const auto& Bp = m.subalgebra().image.basis();
  std::vector<SVec> mub;
  for (const auto& b : Bp) mub.push_back(m(b));
  rep.add("unit", m(H.one()) == L.unit());

  std::vector<std::pair<int, std::int64_t>> pairs;
  if (!samples) {
    for (int k = 0; k < static_cast<int>(Bp.size()); ++k)
      for (std::int64_t a = 0; a < L.dim(); ++a) pairs.push_back({k, a});
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pk(0, static_cast<int>(Bp.size()) - 1);
    std::uniform_int_distribution<std::int64_t> pa(0, L.dim() - 1);
    for (int s = 0; s < *samples; ++s) pairs.push_back({pk(rng), pa(rng)});
  }
  bool ok = true;
  std::vector<long> w;
  for (const auto& [k, a] : pairs) {
    SVec x = L.basis(a);
    SVec lhs = L.mul(mub[k], x);
    SVec rhs;
    for (const auto& [idx, c] : H.coproduct(Bp[k])) {
      SVec t = L.coad(H.Sinv(H.basis(static_cast<int>(idx % d))), x);
      saxpy(rhs, c, L.mul(t, m(H.basis(static_cast<int>(idx / d)))));
    }
    if (lhs != rhs) {
      ok = false;
      w = {k, static_cast<long>(a)};
      break;
    }
  }
  rep.add("moment map identity", ok, w, std::to_string(pairs.size()) + " pairs");

  ok = true;
  w.clear();
  for (size_t i = 0; i < Bp.size() && ok; ++i)
    for (size_t j = 0; j < Bp.size(); ++j)
      if (m(H.mul(Bp[i], Bp[j])) != L.mul(mub[i], mub[j])) {
        ok = false;
        w = {static_cast<long>(i), static_cast<long>(j)};
        break;
      }
  rep.add("multiplicative", ok, w);

  ok = true;
  w.clear();
  for (int h = 0; h < d && ok; ++h)
    for (size_t i = 0; i < Bp.size(); ++i)
      if (m(adjoint_right(H, H.basis(h), Bp[i])) != L.coad(H.basis(h), mub[i])) {
        ok = false;
        w = {h, static_cast<long>(i)};
        break;
      }
  rep.add("equivariant", ok, w);

  if (m.subalgebra().image.dim() == d) {
    ok = true;
    w.clear();
    std::vector<SVec> mue(d), musi(d);
    for (int h = 0; h < d; ++h) {
      mue[h] = m(H.basis(h));
      musi[h] = m(H.Sinv(H.basis(h)));
    }
    for (int h = 0; h < d && ok; ++h)
      for (std::int64_t a = 0; a < L.dim(); ++a) {
        SVec x = L.basis(a);
        SVec rhs;
        for (const auto& t : H.coprod_terms(h)) saxpy(rhs, t.c, L.mul(L.mul(mue[t.b], x), musi[t.a]));
        if (L.coad(H.Sinv(H.basis(h)), x) != rhs) {
          ok = false;
          w = {h, static_cast<long>(a)};
          break;
        }
      }
    rep.add("action recovered", ok, w);
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// entries of C - id in the representation V
std::vector<Vec> c_minus_id(const MomentMap& m, const Representation& V) {
  const Moduli& L = m.moduli();
  const int n = static_cast<int>(L.dim());
  const Vec one = L.to_dense(L.unit());
  std::vector<Vec> out;
  for (int i = 0; i < V.dim_v; ++i)
    for (int j = 0; j < V.dim_v; ++j) {
      Vec e = zero_vec(n, L.order());
      for (int k = 0; k < L.d(); ++k)
        if (!V.mats[k][i][j].is_zero())
          for (const auto& [b, c] : m.psi(k)) e[b] += V.mats[k][i][j] * c;
      if (i == j) axpy(e, Cyclotomic(L.order(), -1), one);
      out.push_back(std::move(e));
    }
  return out;
}

MulOracle moduli_mul(const Moduli& L) {
  return [&L](const Vec& x, const Vec& y) { return L.to_dense(L.mul(to_sparse(x), to_sparse(y))); };
}

std::vector<Vec> ambient_basis(const Moduli& L) {
  std::vector<Vec> b;
  for (std::int64_t i = 0; i < L.dim(); ++i) b.push_back(unit_vec(static_cast<int>(L.dim()), static_cast<int>(i), L.order()));
  return b;
}

}  // namespace

IdealReport ideal_epsilon(const MomentMap& m) {
  const Moduli& L = m.moduli();
  const HopfAlgebra& H = L.H();
  IdealReport r;
  Representation reg = regular_representation(H);
  r.generators = c_minus_id(m, reg);
  r.ideal = left_ideal_closure(r.generators, moduli_mul(L), ambient_basis(L));
  r.coad_stable = true;
  for (const auto& v : r.ideal.basis()) {
    for (int h = 0; h < H.dim && r.coad_stable; ++h)
      r.coad_stable = r.ideal.contains(L.to_dense(L.coad(H.basis(h), to_sparse(v))));
    if (!r.coad_stable) break;
  }
  r.tensor_square_redundant = true;
  for (const auto& e : c_minus_id(m, tensor_representation(H, reg, reg)))
    if (!r.ideal.contains(e)) {
      r.tensor_square_redundant = false;
      break;
    }
  return r;
}

Vec normalized_integral(const HopfAlgebra& H) {
  const int n = H.dim;
  std::vector<Vec> rows;
  for (int h = 0; h < n; ++h) {
    Mat Lm = H.left_mult_matrix(H.basis(h)), Rm = H.right_mult_matrix(H.basis(h));
    for (int r = 0; r < n; ++r) {
      Vec a = Lm[r], b = Rm[r];
      a[r] -= H.counit[h];
      b[r] -= H.counit[h];
      rows.push_back(a);
      rows.push_back(b);
    }
  }
  for (const auto& v : kernel_rows(rows, n, H.order())) {
    Cyclotomic e = H.eps(v);
    if (!e.is_zero()) return scaled(v, e.inverse());
  }
  throw NotSemisimple("no two-sided integral with nonzero counit");
}

SVec reynolds(const Moduli& L, const SVec& x) { return L.coad(normalized_integral(L.H()), x); }

Report check_reynolds(const Moduli& L) {
  Report rep;
  const Vec lam = normalized_integral(L.H());
  const int n = static_cast<int>(L.dim());
  std::vector<SVec> r(n);
  for (int i = 0; i < n; ++i) r[i] = L.coad(lam, L.basis(i));
  auto rey = [&](const SVec& x) {
    SVec out;
    for (const auto& [k, c] : x) saxpy(out, c, r[k]);
    return out;
  };
  bool idem = true;
  for (int i = 0; i < n && idem; ++i) idem = rey(r[i]) == r[i];
  rep.add("idempotent", idem);
  Subspace inv = invariants(L);
  bool into = true;
  for (int i = 0; i < n && into; ++i) into = inv.contains(L.to_dense(r[i]));
  rep.add("image in invariants", into);
  bool onto = true;
  for (const auto& v : inv.basis()) onto = onto && rey(to_sparse(v)) == to_sparse(v);
  rep.add("fixes invariants", onto);
  bool bim = true;
  std::vector<long> w;
  for (size_t a = 0; a < inv.basis().size() && bim; ++a) {
    SVec x = to_sparse(inv.basis()[a]);
    for (int i = 0; i < n; ++i) {
      SVec y = L.basis(i);
      if (rey(L.mul(x, y)) != L.mul(x, r[i]) || rey(L.mul(y, x)) != L.mul(r[i], x)) {
        bim = false;
        w = {static_cast<long>(a), i};
        break;
      }
    }
  }
  rep.add("bimodule", bim, w);
  return rep;
}

QuantumReduction quantum_reduction(const MomentMap& m) {
  const Moduli& L = m.moduli();
  const HopfAlgebra& H = L.H();
  const int n = static_cast<int>(L.dim()), order = L.order();
  QuantumReduction q;
  q.dim_L = n;
  IdealReport ir = ideal_epsilon(m);
  q.ideal = ir.ideal;
  q.dim_ideal = q.ideal.dim();
  if (!ir.coad_stable) q.failed_hypotheses.push_back("I_eps is not coad-stable");

  // quotient coordinates: the non-pivot positions of the reduced echelon form
  std::vector<int> np;
  {
    std::vector<bool> piv(n, false);
    for (int p : q.ideal.pivots()) piv[p] = true;
    for (int i = 0; i < n; ++i)
      if (!piv[i]) np.push_back(i);
  }
  const int qd = static_cast<int>(np.size());
  auto quot = [&](const Vec& x) {
    Vec r = q.ideal.reduce(x), out = zero_vec(qd, order);
    for (int j = 0; j < qd; ++j) out[j] = r[np[j]];
    return out;
  };
  auto lift = [&](const Vec& t) {
    Vec y = zero_vec(n, order);
    for (int j = 0; j < qd; ++j) y[np[j]] = t[j];
    return y;
  };

  // (L/I)^H
  std::vector<Vec> rows;
  for (int gi : algebra_generators(H)) {
    std::vector<Vec> cols;
    for (int j = 0; j < qd; ++j) {
      Vec y = unit_vec(n, np[j], order);
      Vec c = L.to_dense(L.coad(H.basis(gi), to_sparse(y)));
      axpy(c, -H.counit[gi], y);
      cols.push_back(quot(c));
    }
    for (int r = 0; r < qd; ++r) {
      Vec row = zero_vec(qd, order);
      for (int j = 0; j < qd; ++j) row[j] = cols[j][r];
      rows.push_back(row);
    }
  }
  std::vector<Vec> ts = qd ? kernel_rows(rows, qd, order) : std::vector<Vec>{};
  q.dim_reduced = static_cast<int>(ts.size());
  for (const auto& t : ts) q.reduced.push_back(lift(t));

  // coordinates in the reduced basis
  std::vector<Vec> trows(qd, zero_vec(q.dim_reduced, order));
  for (int a = 0; a < q.dim_reduced; ++a)
    for (int r = 0; r < qd; ++r) trows[r][a] = ts[a][r];
  auto coords = [&](const Vec& x) { return solve_rows(trows, quot(x), q.dim_reduced, order); };

  q.well_defined = true;
  for (const auto& i : q.ideal.basis()) {
    for (const auto& y : q.reduced)
      if (!q.ideal.contains(L.to_dense(L.mul(to_sparse(i), to_sparse(y))))) {
        q.well_defined = false;
        break;
      }
    if (!q.well_defined) break;
  }
  q.closed = true;
  q.table.assign(q.dim_reduced, std::vector<Vec>(q.dim_reduced));
  for (int a = 0; a < q.dim_reduced; ++a)
    for (int b = 0; b < q.dim_reduced; ++b) {
      auto c = coords(L.to_dense(L.mul(to_sparse(q.reduced[a]), to_sparse(q.reduced[b]))));
      if (!c) {
        q.closed = false;
        continue;
      }
      q.table[a][b] = *c;
    }
  if (!q.well_defined) q.failed_hypotheses.push_back("reduced product depends on representatives");
  if (!q.closed) q.failed_hypotheses.push_back("reduced product leaves the invariants");

  // pi : L^H -> (L/I)^H
  q.invariants = invariants(L);
  q.dim_invariants = q.invariants.dim();
  q.kernel = intersect(q.invariants, q.ideal);
  q.dim_kernel = q.kernel.dim();
  q.pi = mat_zero(q.dim_reduced, q.dim_invariants, order);
  bool lands = true;
  for (int j = 0; j < q.dim_invariants; ++j) {
    auto c = coords(q.invariants.basis()[j]);
    if (!c) {
      lands = false;
      continue;
    }
    for (int a = 0; a < q.dim_reduced; ++a) q.pi[a][j] = (*c)[a];
  }
  if (!lands) q.failed_hypotheses.push_back("pi does not land in (L/I)^H");
  q.rank_pi = q.dim_reduced ? rank_rows(q.pi, q.dim_invariants, order) : 0;
  q.surjective = lands && q.rank_pi == q.dim_reduced;
  if (q.dim_invariants - q.rank_pi != q.dim_kernel) q.failed_hypotheses.push_back("ker pi differs from I_eps cap L^H");

  try {
    const Vec lam = normalized_integral(H);
    q.semisimple = true;
    Subspace img(n, order);
    for (std::int64_t x = 0; x < L.dim(); ++x)
      for (const auto& c : ir.generators) {
        SVec xc = L.mul(L.basis(x), to_sparse(c));
        img.add(L.to_dense(L.coad(lam, xc)));
      }
    q.kernel_is_reynolds_image = img == q.kernel;
  } catch (const NotSemisimple&) {
    q.semisimple = false;
    q.failed_hypotheses.push_back("H is not semisimple: no Reynolds operator");
  }
  if (!q.surjective) q.failed_hypotheses.push_back("pi is not surjective");
  return q;
}

}  // namespace qmod
