#include "qmod/hopf.hpp"

#include <functional>

namespace qmod {

// ---------------------------------------------------------------------------
// dense matrices

Mat mat_zero(int r, int c, int order) { return Mat(r, zero_vec(c, order)); }

Mat mat_identity(int n, int order) {
  Mat m = mat_zero(n, n, order);
  for (int i = 0; i < n; ++i) m[i][i] = Cyclotomic(order, 1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int r = static_cast<int>(a.size());
  const int c = b.empty() ? 0 : static_cast<int>(b[0].size());
  const int order = b.empty() || b[0].empty() ? 1 : b[0][0].order();
  Mat m = mat_zero(r, c, order);
  for (int i = 0; i < r; ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      axpy(m[i], a[i][k], b[k]);
    }
  return m;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat m = a;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
  return m;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat m = a;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= b[i][j];
  return m;
}

Mat mat_scale(const Mat& a, const Cyclotomic& c) {
  Mat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

Mat mat_kron(const Mat& a, const Mat& b) {
  const int ar = static_cast<int>(a.size()), br = static_cast<int>(b.size());
  const int ac = ar ? static_cast<int>(a[0].size()) : 0, bc = br ? static_cast<int>(b[0].size()) : 0;
  const int order = ar && ac ? a[0][0].order() : 1;
  Mat m = mat_zero(ar * br, ac * bc, order);
  for (int i = 0; i < ar; ++i)
    for (int j = 0; j < ac; ++j) {
      if (a[i][j].is_zero()) continue;
      for (int k = 0; k < br; ++k)
        for (int l = 0; l < bc; ++l)
          if (!b[k][l].is_zero()) m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    }
  return m;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat m = mat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()), a[0][0].order());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) m[j][i] = a[i][j];
  return m;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& r : a)
    if (!is_zero(r)) return false;
  return true;
}

std::optional<Mat> mat_inverse(const Mat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return a;
  const int order = a[0][0].order();
  Mat m = a;
  Mat inv = mat_identity(n, order);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Cyclotomic s = m[c][c].inverse();
    m[c] = scaled(m[c], s);
    inv[c] = scaled(inv[c], s);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Cyclotomic f = -m[r][c];
      axpy(m[r], f, m[c]);
      axpy(inv[r], f, inv[c]);
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// index helpers

std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

std::vector<int> split_index(std::int64_t flat, int base, int k) {
  std::vector<int> idx(k);
  for (int i = k - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(flat % base);
    flat /= base;
  }
  return idx;
}

std::int64_t join_index(const std::vector<int>& idx, int base) {
  std::int64_t f = 0;
  for (int i : idx) f = f * base + i;
  return f;
}

// ---------------------------------------------------------------------------
// HopfAlgebra

void HopfAlgebra::finalize() {
  const int n = dim;
  mt_.assign(static_cast<size_t>(n) * n, {});
  for (const auto& [idx, c] : mult.entries) mt_[idx[0] * n + idx[1]].push_back({idx[2], c});
  ct_.assign(n, {});
  for (const auto& [idx, c] : comult.entries) ct_[idx[0]].push_back({idx[1], idx[2], c});
  S_ = antipode.rows();
  auto inv = mat_inverse(S_);
  Sinv_ = inv ? *inv : Mat{};
  if (static_cast<int>(basis_names.size()) != n) basis_names.clear();
}

std::string HopfAlgebra::name_of(int i) const {
  if (i >= 0 && i < static_cast<int>(basis_names.size())) return basis_names[i];
  return "e" + std::to_string(i);
}

Vec HopfAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec r = zero_elt();
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Cyclotomic xy = x[i] * y[j];
      for (const auto& t : prod_terms(i, j)) r[t.k].add_product(xy, t.c);
    }
  }
  return r;
}

Vec HopfAlgebra::S(const Vec& x) const {
  Vec r = zero_elt();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!S_[i][j].is_zero() && !x[j].is_zero()) r[i].add_product(S_[i][j], x[j]);
  return r;
}

Vec HopfAlgebra::Sinv(const Vec& x) const {
  if (Sinv_.empty()) throw Error("antipode is not invertible");
  Vec r = zero_elt();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!Sinv_[i][j].is_zero() && !x[j].is_zero()) r[i].add_product(Sinv_[i][j], x[j]);
  return r;
}

Cyclotomic HopfAlgebra::eps(const Vec& x) const {
  Cyclotomic r = zero();
  for (int i = 0; i < dim; ++i)
    if (!x[i].is_zero() && !counit[i].is_zero()) r.add_product(x[i], counit[i]);
  return r;
}

SVec HopfAlgebra::coproduct(const Vec& x) const {
  SVec r;
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : coprod_terms(i)) sadd(r, static_cast<std::int64_t>(t.a) * dim + t.b, x[i] * t.c);
  }
  return r;
}

SVec HopfAlgebra::iterated_coproduct(const Vec& x, int k) const {
  if (k == 0) {
    SVec r;
    sadd(r, 0, eps(x));
    return r;
  }
  SVec cur = to_sparse(x);
  for (int level = 2; level <= k; ++level) {
    SVec next;
    for (const auto& [idx, c] : cur) {
      const int last = static_cast<int>(idx % dim);
      const std::int64_t head = idx / dim;
      for (const auto& t : coprod_terms(last))
        sadd(next, (head * dim + t.a) * dim + t.b, c * t.c);
    }
    cur = std::move(next);
  }
  return cur;
}

SVec HopfAlgebra::tensor_mul(const SVec& x, const SVec& y, int k) const {
  SVec r;
  std::vector<int> ia(k), ib(k);
  for (const auto& [a, ca] : x) {
    auto sa = split_index(a, dim, k);
    for (const auto& [b, cb] : y) {
      auto sb = split_index(b, dim, k);
      Cyclotomic c0 = ca * cb;
      // expand slot by slot
      std::function<void(int, std::int64_t, const Cyclotomic&)> rec = [&](int s, std::int64_t acc, const Cyclotomic& c) {
        if (s == k) {
          sadd(r, acc, c);
          return;
        }
        for (const auto& t : prod_terms(sa[s], sb[s])) rec(s + 1, acc * dim + t.k, c * t.c);
      };
      rec(0, 0, c0);
    }
  }
  return r;
}

SVec HopfAlgebra::tensor_one(int k) const {
  SVec r;
  r[0] = one_scalar();
  for (int s = 0; s < k; ++s) {
    SVec next;
    for (const auto& [idx, c] : r)
      for (int i = 0; i < dim; ++i)
        if (!unit[i].is_zero()) sadd(next, idx * dim + i, c * unit[i]);
    r = std::move(next);
  }
  return r;
}

SVec HopfAlgebra::pure2(const Vec& a, const Vec& b) const {
  SVec r;
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j)
      if (!b[j].is_zero()) sadd(r, static_cast<std::int64_t>(i) * dim + j, a[i] * b[j]);
  }
  return r;
}

SVec HopfAlgebra::flip2(const SVec& x) const {
  SVec r;
  for (const auto& [idx, c] : x) r.emplace((idx % dim) * dim + idx / dim, c);
  return r;
}

Mat HopfAlgebra::left_mult_matrix(const Vec& h) const {
  Mat m = mat_zero(dim, dim, scalar_order);
  for (int j = 0; j < dim; ++j) {
    Vec col = mul(h, basis(j));
    for (int i = 0; i < dim; ++i) m[i][j] = col[i];
  }
  return m;
}

Mat HopfAlgebra::right_mult_matrix(const Vec& h) const {
  Mat m = mat_zero(dim, dim, scalar_order);
  for (int j = 0; j < dim; ++j) {
    Vec col = mul(basis(j), h);
    for (int i = 0; i < dim; ++i) m[i][j] = col[i];
  }
  return m;
}

Mat Representation::rho(const Vec& h) const {
  const int order = h.empty() ? 1 : h[0].order();
  Mat m = mat_zero(dim_v, dim_v, order);
  for (size_t b = 0; b < h.size(); ++b) {
    if (h[b].is_zero()) continue;
    for (int i = 0; i < dim_v; ++i) axpy(m[i], h[b], mats[b][i]);
  }
  return m;
}

const Representation* Algebra::find_rep(const std::string& n) const {
  for (const auto& r : reps)
    if (r.name == n) return &r;
  return nullptr;
}

// ---------------------------------------------------------------------------
// verification

namespace {

SVec slot_embed(const HopfAlgebra& H, const SVec& x2, int i, int j, int k) {
  // place the two legs of x2 in slots i, j of H^{(x)k}, unit elsewhere
  SVec r;
  const int n = H.dim;
  const SVec one = to_sparse(H.one());
  for (const auto& [idx, c] : x2) {
    const int a = static_cast<int>(idx / n), b = static_cast<int>(idx % n);
    std::vector<std::pair<std::int64_t, Cyclotomic>> partial = {{0, c}};
    for (int s = 0; s < k; ++s) {
      std::vector<std::pair<std::int64_t, Cyclotomic>> next;
      for (const auto& [p, pc] : partial) {
        if (s == i)
          next.push_back({p * n + a, pc});
        else if (s == j)
          next.push_back({p * n + b, pc});
        else
          for (const auto& [u, uc] : one) next.push_back({p * n + u, pc * uc});
      }
      partial = std::move(next);
    }
    for (const auto& [p, pc] : partial) sadd(r, p, pc);
  }
  return r;
}

SVec apply_coproduct_slot(const HopfAlgebra& H, const SVec& x, int k, int slot) {
  // H^{(x)k} -> H^{(x)k+1}, Delta on `slot`
  SVec r;
  const int n = H.dim;
  for (const auto& [idx, c] : x) {
    auto s = split_index(idx, n, k);
    for (const auto& t : H.coprod_terms(s[slot])) {
      std::vector<int> o;
      for (int q = 0; q < k; ++q) {
        if (q == slot) {
          o.push_back(t.a);
          o.push_back(t.b);
        } else {
          o.push_back(s[q]);
        }
      }
      sadd(r, join_index(o, n), c * t.c);
    }
  }
  return r;
}

SVec apply_counit_slot(const HopfAlgebra& H, const SVec& x, int k, int slot) {
  SVec r;
  const int n = H.dim;
  for (const auto& [idx, c] : x) {
    auto s = split_index(idx, n, k);
    if (H.counit[s[slot]].is_zero()) continue;
    std::vector<int> o;
    for (int q = 0; q < k; ++q)
      if (q != slot) o.push_back(s[q]);
    sadd(r, join_index(o, n), c * H.counit[s[slot]]);
  }
  return r;
}

}  // namespace

Report verify_hopf(const HopfAlgebra& H) {
  Report rep;
  const int n = H.dim;
  // associativity
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
          Vec a = H.mul(H.mul(H.basis(i), H.basis(j)), H.basis(k));
          Vec b = H.mul(H.basis(i), H.mul(H.basis(j), H.basis(k)));
          if (a != b) {
            ok = false;
            w = {i, j, k};
          }
        }
    rep.add("associativity", ok, w);
  }
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i) {
      if (H.mul(H.one(), H.basis(i)) != H.basis(i) || H.mul(H.basis(i), H.one()) != H.basis(i)) {
        ok = false;
        w = {i};
      }
    }
    rep.add("unit", ok, w);
  }
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i) {
      SVec d = H.coproduct(H.basis(i));
      if (apply_coproduct_slot(H, d, 2, 0) != apply_coproduct_slot(H, d, 2, 1)) {
        ok = false;
        w = {i};
      }
    }
    rep.add("coassociativity", ok, w);
  }
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i) {
      SVec d = H.coproduct(H.basis(i));
      SVec e = to_sparse(H.basis(i));
      if (apply_counit_slot(H, d, 2, 0) != e || apply_counit_slot(H, d, 2, 1) != e) {
        ok = false;
        w = {i};
      }
    }
    rep.add("counit", ok, w);
  }
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        SVec lhs = H.coproduct(H.mul(H.basis(i), H.basis(j)));
        SVec rhs = H.tensor_mul(H.coproduct(H.basis(i)), H.coproduct(H.basis(j)), 2);
        if (lhs != rhs) {
          ok = false;
          w = {i, j};
        }
      }
    rep.add("comult_multiplicative", ok, w);
  }
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (H.eps(H.mul(H.basis(i), H.basis(j))) != H.eps(H.basis(i)) * H.eps(H.basis(j))) {
          ok = false;
          w = {i, j};
        }
    rep.add("counit_multiplicative", ok, w);
  }
  rep.add("comult_unit", H.coproduct(H.one()) == H.pure2(H.one(), H.one()));
  rep.add("counit_unit", H.eps(H.one()).is_one());
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i) {
      Vec l = H.zero_elt(), r = H.zero_elt();
      for (const auto& t : H.coprod_terms(i)) {
        axpy(l, t.c, H.mul(H.S(H.basis(t.a)), H.basis(t.b)));
        axpy(r, t.c, H.mul(H.basis(t.a), H.S(H.basis(t.b))));
      }
      Vec e = scaled(H.one(), H.eps(H.basis(i)));
      if (l != e || r != e) {
        ok = false;
        w = {i};
      }
    }
    rep.add("antipode", ok, w);
  }
  rep.add("antipode_invertible", H.has_invertible_antipode());
  return rep;
}

Report verify_quasitriangular(const HopfAlgebra& H, const QuasitriangularData& Q) {
  Report rep;
  const int n = H.dim;
  const SVec one2 = H.tensor_one(2);
  rep.add("R_invertible", H.tensor_mul(Q.R, Q.R_inv, 2) == one2 && H.tensor_mul(Q.R_inv, Q.R, 2) == one2);
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i) {
      SVec d = H.coproduct(H.basis(i));
      if (H.tensor_mul(Q.R, d, 2) != H.tensor_mul(H.flip2(d), Q.R, 2)) {
        ok = false;
        w = {i};
      }
    }
    rep.add("almost_cocommutative", ok, w);
  }
  {
    SVec l = apply_coproduct_slot(H, Q.R, 2, 0);
    SVec r = H.tensor_mul(slot_embed(H, Q.R, 0, 2, 3), slot_embed(H, Q.R, 1, 2, 3), 3);
    rep.add("coproduct_first_leg", l == r);
  }
  {
    SVec l = apply_coproduct_slot(H, Q.R, 2, 1);
    SVec r = H.tensor_mul(slot_embed(H, Q.R, 0, 2, 3), slot_embed(H, Q.R, 0, 1, 3), 3);
    rep.add("coproduct_second_leg", l == r);
  }
  {
    SVec one1 = to_sparse(H.one());
    rep.add("counit_legs", apply_counit_slot(H, Q.R, 2, 0) == one1 && apply_counit_slot(H, Q.R, 2, 1) == one1);
  }
  {
    SVec r12 = slot_embed(H, Q.R, 0, 1, 3), r13 = slot_embed(H, Q.R, 0, 2, 3), r23 = slot_embed(H, Q.R, 1, 2, 3);
    SVec l = H.tensor_mul(H.tensor_mul(r12, r13, 3), r23, 3);
    SVec r = H.tensor_mul(H.tensor_mul(r23, r13, 3), r12, 3);
    rep.add("qybe", l == r);
  }
  return rep;
}

Vec drinfeld_element(const HopfAlgebra& H, const QuasitriangularData& Q) {
  Vec u = H.zero_elt();
  for (const auto& [idx, c] : Q.R) {
    const int a = static_cast<int>(idx / H.dim), b = static_cast<int>(idx % H.dim);
    axpy(u, c, H.mul(H.S(H.basis(b)), H.basis(a)));
  }
  return u;
}

std::optional<Vec> invert_element(const HopfAlgebra& H, const Vec& x) {
  // x y = 1 with y unknown: columns are x e_j
  Mat L = H.left_mult_matrix(x);
  auto y = solve_rows(L, H.one(), H.dim, H.order());
  if (!y) return std::nullopt;
  if (H.mul(*y, x) != H.one()) return std::nullopt;
  return y;
}

std::optional<SVec> invert_element2(const HopfAlgebra& H, const SVec& x) {
  const int n2 = H.dim * H.dim;
  std::vector<Vec> rows(n2, zero_vec(n2, H.order()));
  for (int j = 0; j < n2; ++j) {
    SVec e;
    e[j] = H.one_scalar();
    for (const auto& [k, c] : H.tensor_mul(x, e, 2)) rows[k][j] = c;
  }
  auto y = solve_rows(rows, to_dense(H.tensor_one(2), n2, H.order()), n2, H.order());
  if (!y) return std::nullopt;
  SVec ys = to_sparse(*y);
  if (H.tensor_mul(ys, x, 2) != H.tensor_one(2)) return std::nullopt;
  return ys;
}

Report verify_ribbon(const HopfAlgebra& H, const QuasitriangularData& Q, const RibbonData& rb) {
  Report rep;
  const int n = H.dim;
  rep.add("v_inverse", H.mul(rb.v, rb.v_inv) == H.one() && H.mul(rb.v_inv, rb.v) == H.one());
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i)
      if (H.mul(rb.v, H.basis(i)) != H.mul(H.basis(i), rb.v)) {
        ok = false;
        w = {i};
      }
    rep.add("v_central", ok, w);
  }
  {
    SVec rr = H.tensor_mul(H.flip2(Q.R), Q.R, 2);
    rep.add("coproduct_v", H.tensor_mul(H.coproduct(rb.v), rr, 2) == H.pure2(rb.v, rb.v));
  }
  rep.add("antipode_v", H.S(rb.v) == rb.v);
  rep.add("counit_v", H.eps(rb.v).is_one());
  Vec u = drinfeld_element(H, Q);
  rep.add("drinfeld_element", u == rb.u);
  rep.add("pivot", H.mul(rb.u, rb.v_inv) == rb.pivot);
  {
    bool ok = true;
    std::vector<long> w;
    for (int i = 0; i < n && ok; ++i) {
      Vec s2 = H.S(H.S(H.basis(i)));
      if (H.mul(s2, rb.pivot) != H.mul(rb.pivot, H.basis(i))) {
        ok = false;
        w = {i};
      }
    }
    rep.add("pivotal_conjugation", ok, w);
  }
  rep.add("pivot_grouplike", H.coproduct(rb.pivot) == H.pure2(rb.pivot, rb.pivot));
  rep.add("u_S_u_equals_v_squared", H.mul(rb.u, H.S(rb.u)) == H.mul(rb.v, rb.v));
  return rep;
}

Report verify_representation(const HopfAlgebra& H, const Representation& V) {
  Report rep;
  bool ok = static_cast<int>(V.mats.size()) == H.dim;
  std::vector<long> w;
  for (int i = 0; i < H.dim && ok; ++i)
    for (int j = 0; j < H.dim && ok; ++j)
      if (mat_mul(V.mats[i], V.mats[j]) != V.rho(H.mul(H.basis(i), H.basis(j)))) {
        ok = false;
        w = {i, j};
      }
  rep.add("rep_multiplicative", ok, w);
  rep.add("rep_unit", ok && V.rho(H.one()) == mat_identity(V.dim_v, H.order()));
  return rep;
}

// ---------------------------------------------------------------------------
// ribbon search

namespace {

bool is_grouplike(const HopfAlgebra& H, const Vec& w) {
  return H.eps(w).is_one() && H.coproduct(w) == H.pure2(w, w);
}

// Rows of the linear map t -> sum t_i L(K_i) where L is linear in w.
void collect_grouplikes(const HopfAlgebra& H, Vec w0, std::vector<Vec> K, std::vector<Vec>& out, int depth) {
  const int n = H.dim, order = H.order();
  auto push = [&](const Vec& w) {
    if (!is_grouplike(H, w)) return;
    for (const auto& o : out)
      if (o == w) return;
    out.push_back(w);
  };
  if (K.empty()) {
    push(w0);
    return;
  }
  if (depth > n + 2) {
    push(w0);
    for (const auto& k : K) {
      push(w0 + k);
      push(w0 - k);
    }
    return;
  }
  // functional phi0 vanishing on K with phi0(w0) = 1, plus annihilator of span(w0, K)
  std::vector<Vec> rows = K;
  rows.push_back(w0);
  Vec rhs = zero_vec(static_cast<int>(rows.size()), order);
  rhs.back() = Cyclotomic(order, 1);
  auto phi0 = solve_rows(rows, rhs, n, order);
  if (!phi0) return;
  std::vector<Vec> ann = kernel_rows(rows, n, order);
  // linear equations in t: for each functional f with target value f(w) (1 or 0):
  // (f (x) id) D(w) - f(w) w = 0 and (id (x) f) D(w) - f(w) w = 0
  auto contract = [&](const Vec& w, const Vec& f, int side) {
    Vec r = zero_vec(n, order);
    for (const auto& [idx, c] : H.coproduct(w)) {
      const int a = static_cast<int>(idx / n), b = static_cast<int>(idx % n);
      if (side == 0) {
        if (!f[a].is_zero()) r[b].add_product(c, f[a]);
      } else {
        if (!f[b].is_zero()) r[a].add_product(c, f[b]);
      }
    }
    return r;
  };
  std::vector<Vec> eq_rows;
  Vec eq_rhs;
  std::vector<std::pair<Vec, int>> fs = {{*phi0, 1}};
  for (const auto& a : ann) fs.push_back({a, 0});
  for (const auto& [f, val] : fs)
    for (int side = 0; side < 2; ++side) {
      Vec base = contract(w0, f, side);
      if (val) base = base - w0;
      std::vector<Vec> cols;
      for (const auto& k : K) {
        Vec col = contract(k, f, side);
        if (val) col = col - k;
        cols.push_back(col);
      }
      for (int r = 0; r < n; ++r) {
        Vec row = zero_vec(static_cast<int>(K.size()), order);
        for (size_t i = 0; i < K.size(); ++i) row[i] = cols[i][r];
        eq_rows.push_back(row);
        eq_rhs.push_back(-base[r]);
      }
    }
  auto t0 = solve_rows(eq_rows, eq_rhs, static_cast<int>(K.size()), order);
  if (!t0) return;
  auto tk = kernel_rows(eq_rows, static_cast<int>(K.size()), order);
  Vec w1 = w0;
  for (size_t i = 0; i < K.size(); ++i) axpy(w1, (*t0)[i], K[i]);
  std::vector<Vec> K1;
  for (const auto& t : tk) {
    Vec k = zero_vec(n, order);
    for (size_t i = 0; i < K.size(); ++i) axpy(k, t[i], K[i]);
    K1.push_back(k);
  }
  if (K1.size() == K.size()) {
    // no progress: the linear consequences do not cut further
    collect_grouplikes(H, w1, K1, out, n + 3);
    return;
  }
  collect_grouplikes(H, w1, K1, out, depth + 1);
}

}  // namespace

std::vector<RibbonData> find_ribbon_element(const HopfAlgebra& H, const QuasitriangularData& Q) {
  // a ribbon element is v = u w with w grouplike; centrality of v and S(v) = v are linear in w
  const int n = H.dim, order = H.order();
  std::vector<RibbonData> out;
  Vec u = drinfeld_element(H, Q);
  if (!invert_element(H, u)) return out;
  std::vector<Vec> rows;
  Vec rhs;
  for (int h = 0; h < n; ++h) {
    // u w e_h - e_h u w
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) {
      Vec uw = H.mul(u, H.basis(j));
      cols.push_back(H.mul(uw, H.basis(h)) - H.mul(H.basis(h), uw));
    }
    for (int r = 0; r < n; ++r) {
      Vec row = zero_vec(n, order);
      for (int j = 0; j < n; ++j) row[j] = cols[j][r];
      rows.push_back(row);
      rhs.push_back(Cyclotomic(order));
    }
  }
  {
    Vec Su = H.S(u);
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) cols.push_back(H.mul(H.S(H.basis(j)), Su) - H.mul(u, H.basis(j)));
    for (int r = 0; r < n; ++r) {
      Vec row = zero_vec(n, order);
      for (int j = 0; j < n; ++j) row[j] = cols[j][r];
      rows.push_back(row);
      rhs.push_back(Cyclotomic(order));
    }
  }
  rows.push_back(H.counit);
  rhs.push_back(Cyclotomic(order, 1));
  auto w0 = solve_rows(rows, rhs, n, order);
  if (!w0) return out;
  std::vector<Vec> K = kernel_rows(rows, n, order);
  std::vector<Vec> gl;
  collect_grouplikes(H, *w0, K, gl, 0);
  for (const auto& w : gl) {
    RibbonData rb;
    rb.u = u;
    rb.v = H.mul(u, w);
    auto vi = invert_element(H, rb.v);
    if (!vi) continue;
    rb.v_inv = *vi;
    rb.pivot = H.mul(u, rb.v_inv);
    if (verify_ribbon(H, Q, rb).pass()) out.push_back(rb);
  }
  return out;
}

std::optional<Vec> find_pivotal(const HopfAlgebra& H, const std::vector<Vec>& grouplikes) {
  for (const auto& w : grouplikes) {
    if (!is_grouplike(H, w)) continue;
    auto wi = invert_element(H, w);
    if (!wi) continue;
    bool ok = true;
    for (int i = 0; i < H.dim && ok; ++i) ok = H.S(H.S(H.basis(i))) == H.mul3(w, H.basis(i), *wi);
    if (ok) return w;
  }
  return std::nullopt;
}

Subspace center(const HopfAlgebra& H) {
  const int n = H.dim;
  std::vector<Vec> rows;
  for (int h = 0; h < n; ++h) {
    std::vector<Vec> cols;
    for (int j = 0; j < n; ++j) cols.push_back(H.mul(H.basis(h), H.basis(j)) - H.mul(H.basis(j), H.basis(h)));
    for (int r = 0; r < n; ++r) {
      Vec row = zero_vec(n, H.order());
      for (int j = 0; j < n; ++j) row[j] = cols[j][r];
      rows.push_back(row);
    }
  }
  return span(kernel_rows(rows, n, H.order()), n, H.order());
}

Subspace left_integrals(const HopfAlgebra& H) {
  const int n = H.dim;
  std::vector<Vec> rows;
  for (int h = 0; h < n; ++h) {
    Mat L = H.left_mult_matrix(H.basis(h));
    Cyclotomic e = H.counit[h];
    for (int r = 0; r < n; ++r) {
      Vec row = L[r];
      row[r] -= e;
      rows.push_back(row);
    }
  }
  return span(kernel_rows(rows, n, H.order()), n, H.order());
}

std::vector<int> algebra_generators(const HopfAlgebra& H) {
  std::vector<int> gens;
  std::vector<Vec> gv;
  MulOracle mul = [&](const Vec& a, const Vec& b) { return H.mul(a, b); };
  Subspace s = span_closure(gv, mul, H.one());
  for (int i = 0; i < H.dim && s.dim() < H.dim; ++i) {
    if (s.contains(H.basis(i))) continue;
    gens.push_back(i);
    gv.push_back(H.basis(i));
    s = span_closure(gv, mul, H.one());
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Drinfeld double

std::pair<HopfAlgebra, QuasitriangularData> drinfeld_double(const HopfAlgebra& A) {
  if (!verify_hopf(A).pass()) throw Error("drinfeld_double: input fails the Hopf axioms");
  const int n = A.dim, N = n * n, order = A.order();
  auto idx = [n](int f, int a) { return f * n + a; };
  HopfAlgebra D;
  D.dim = N;
  D.scalar_order = order;
  D.mult = Tensor({N, N, N}, order);
  D.comult = Tensor({N, N, N}, order);
  // coregular sandwich: (a_p > f^k < S^-1(a_r))(z) = f^k(S^-1(a_r) z a_p)
  auto sandwich = [&](int p, int k, int r) {
    Vec out = zero_vec(n, order);
    Vec sr = A.Sinv(A.basis(r));
    for (int z = 0; z < n; ++z) out[z] = A.mul3(sr, A.basis(z), A.basis(p))[k];
    return out;
  };
  // star product in A*: (f^i f^j)(x) = sum comult[x,i,j]
  auto star = [&](const Vec& f, const Vec& g) {
    Vec out = zero_vec(n, order);
    for (int x = 0; x < n; ++x)
      for (const auto& t : A.coprod_terms(x))
        if (!f[t.a].is_zero() && !g[t.b].is_zero()) out[x].add_product(t.c, f[t.a] * g[t.b]);
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec d3 = A.iterated_coproduct(A.basis(j), 3);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::map<std::int64_t, Cyclotomic> acc;
          for (const auto& [t, c] : d3) {
            auto s = split_index(t, n, 3);
            Vec f = star(A.basis(i), sandwich(s[0], k, s[2]));
            Vec a = A.mul(A.basis(s[1]), A.basis(l));
            for (int x = 0; x < n; ++x) {
              if (f[x].is_zero()) continue;
              for (int y = 0; y < n; ++y)
                if (!a[y].is_zero()) sadd(acc, idx(x, y), c * f[x] * a[y]);
            }
          }
          for (const auto& [t, c] : acc) D.mult.set({idx(i, j), idx(k, l), static_cast<int>(t)}, c);
        }
    }
  // coproduct: D(f^i (x) a_j) = sum mult[p,q,i] comult[j,s,t] (f^q (x) a_s) (x) (f^p (x) a_t)
  for (const auto& [mi, mc] : A.mult.entries) {
    const int p = mi[0], q = mi[1], i = mi[2];
    for (int j = 0; j < n; ++j)
      for (const auto& t : A.coprod_terms(j)) D.comult.add({idx(i, j), idx(q, t.a), idx(p, t.b)}, mc * t.c);
  }
  D.counit = zero_vec(N, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) D.counit[idx(i, j)] = A.unit[i] * A.counit[j];
  D.unit = zero_vec(N, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) D.unit[idx(i, j)] = A.counit[i] * A.unit[j];
  D.finalize();
  // antipode: S(f (x) a) = (eps (x) S(a)) (f o S^-1 (x) 1)
  D.antipode = LinearMap(N, N, order);
  for (int i = 0; i < n; ++i) {
    // f^i o S^-1 in dual coordinates: x -> f^i(S^-1(e_x)) = Sinv[i][x]
    Vec fs = zero_vec(n, order);
    for (int x = 0; x < n; ++x) fs[x] = A.Sinv_matrix()[i][x];
    Vec left_f = zero_vec(N, order);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) left_f[idx(x, y)] = fs[x] * A.unit[y];
    for (int j = 0; j < n; ++j) {
      Vec sa = A.S(A.basis(j));
      Vec left_a = zero_vec(N, order);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) left_a[idx(x, y)] = A.counit[x] * sa[y];
      Vec img = D.mul(left_a, left_f);
      for (int r = 0; r < N; ++r)
        if (!img[r].is_zero()) D.antipode.matrix.set({r, idx(i, j)}, img[r]);
    }
  }
  if (!A.basis_names.empty())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) D.basis_names.push_back("f(" + A.name_of(i) + ")" + A.name_of(j));
  D.finalize();
  // R = sum_i (eps (x) a_i) (x) (f^i (x) 1)
  QuasitriangularData Q;
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < n; ++x) {
      if (A.counit[x].is_zero()) continue;
      for (int y = 0; y < n; ++y) {
        if (A.unit[y].is_zero()) continue;
        sadd(Q.R, static_cast<std::int64_t>(idx(x, i)) * N + idx(i, y), A.counit[x] * A.unit[y]);
      }
    }
  // R^-1 = (S (x) id) R
  for (const auto& [t, c] : Q.R) {
    const int a = static_cast<int>(t / N), b = static_cast<int>(t % N);
    Vec sa = D.S(D.basis(a));
    for (int x = 0; x < N; ++x)
      if (!sa[x].is_zero()) sadd(Q.R_inv, static_cast<std::int64_t>(x) * N + b, c * sa[x]);
  }
  return {D, Q};
}

// ---------------------------------------------------------------------------
// representations

Representation regular_representation(const HopfAlgebra& H) {
  Representation V;
  V.name = "regular";
  V.dim_v = H.dim;
  for (int b = 0; b < H.dim; ++b) V.mats.push_back(H.left_mult_matrix(H.basis(b)));
  return V;
}

Representation trivial_representation(const HopfAlgebra& H) {
  Representation V;
  V.name = "trivial";
  V.dim_v = 1;
  for (int b = 0; b < H.dim; ++b) V.mats.push_back(Mat{Vec{H.counit[b]}});
  return V;
}

Representation tensor_representation(const HopfAlgebra& H, const Representation& V, const Representation& W) {
  Representation T;
  T.name = V.name + "*" + W.name;
  T.dim_v = V.dim_v * W.dim_v;
  for (int b = 0; b < H.dim; ++b) {
    Mat m = mat_zero(T.dim_v, T.dim_v, H.order());
    for (const auto& t : H.coprod_terms(b)) m = mat_add(m, mat_scale(mat_kron(V.mats[t.a], W.mats[t.b]), t.c));
    T.mats.push_back(m);
  }
  return T;
}

}  // namespace qmod
