#include "qmod/alekseev.hpp"

#include <random>

namespace qmod {

namespace {

Vec lft(const HopfAlgebra& H, int a, const Vec& phi) { return coregular(H, Side::left, H.basis(a), phi); }
Vec rgt(const HopfAlgebra& H, int a, const Vec& phi) { return coregular(H, Side::right, H.basis(a), phi); }

// sum of c * (phi (x) x) into a flat index phi*d + x, shifted by `scale` then `offset`
void add_outer(SVec& out, const Vec& phi, const Vec& x, const Cyclotomic& c, std::int64_t stride,
               std::int64_t offset, int d) {
  for (int i = 0; i < d; ++i) {
    if (phi[i].is_zero()) continue;
    Cyclotomic ci = c * phi[i];
    for (int k = 0; k < d; ++k)
      if (!x[k].is_zero()) sadd(out, (static_cast<std::int64_t>(i) * d + k) * stride + offset, ci * x[k]);
  }
}

// sum (R1_2 R2_2) (x) (R3_1 R1_1) (x) (R3_2 R2_1)
SVec phi10_tensor(const HopfAlgebra& H, const QuasitriangularData& R) {
  const int d = H.dim;
  const std::int64_t d2 = static_cast<std::int64_t>(d) * d;
  SVec A;  // (R1_2 R2_2) (x) R1_1 (x) R2_1
  for (const auto& [i1, c1] : R.R)
    for (const auto& [i2, c2] : R.R) {
      const int s1 = static_cast<int>(i1 / d), t1 = static_cast<int>(i1 % d);
      const int s2 = static_cast<int>(i2 / d), t2 = static_cast<int>(i2 % d);
      for (const auto& p : H.prod_terms(t1, t2)) sadd(A, p.k * d2 + s1 * d + s2, c1 * c2 * p.c);
    }
  SVec T;
  for (const auto& [ia, ca] : A) {
    const int a0 = static_cast<int>(ia / d2), a1 = static_cast<int>(ia / d % d), a2 = static_cast<int>(ia % d);
    for (const auto& [i3, c3] : R.R) {
      const int s3 = static_cast<int>(i3 / d), t3 = static_cast<int>(i3 % d);
      for (const auto& p : H.prod_terms(s3, a1))
        for (const auto& q : H.prod_terms(t3, a2)) sadd(T, a0 * d2 + p.k * d + q.k, ca * c3 * p.c * q.c);
    }
  }
  return T;
}

Mat rep_matrix(const HopfAlgebra& H, const std::function<Vec(const Vec&)>& act) {
  const int d = H.dim;
  Mat m = mat_zero(d, d, H.order());
  for (int j = 0; j < d; ++j) {
    Vec c = act(H.basis(j));
    for (int i = 0; i < d; ++i) m[i][j] = c[i];
  }
  return m;
}

}  // namespace

HeisenbergElement heis_pure(const HopfAlgebra& H, const Vec& phi, const Vec& x) {
  SVec out;
  add_outer(out, phi, x, H.one_scalar(), 1, 0, H.dim);
  return out;
}

TwoSidedElement twosided_pure(const HopfAlgebra& H, const Vec& phi, const Vec& x, const Vec& y) {
  SVec px = heis_pure(H, phi, x), out;
  for (const auto& [i, c] : px)
    for (int k = 0; k < H.dim; ++k)
      if (!y[k].is_zero()) sadd(out, i * H.dim + k, c * y[k]);
  return out;
}

TwoSidedElement heis_to_twosided(const HopfAlgebra& H, const HeisenbergElement& x) {
  SVec out;
  for (const auto& [i, c] : x)
    for (int k = 0; k < H.dim; ++k)
      if (!H.unit[k].is_zero()) sadd(out, i * H.dim + k, c * H.unit[k]);
  return out;
}

HeisenbergElement heis_product(const HopfAlgebra& H, const HeisenbergElement& x, const HeisenbergElement& y) {
  const int d = H.dim;
  SVec out;
  for (const auto& [ix, cx] : x) {
    const int phi = static_cast<int>(ix / d), h = static_cast<int>(ix % d);
    for (const auto& [iy, cy] : y) {
      const int psi = static_cast<int>(iy / d), k = static_cast<int>(iy % d);
      for (const auto& t : H.coprod_terms(h)) {
        Vec f = star(H, H.basis(phi), lft(H, t.a, H.basis(psi)));
        Vec g = zero_vec(d, H.order());
        for (const auto& p : H.prod_terms(t.b, k)) g[p.k] += p.c;
        add_outer(out, f, g, cx * cy * t.c, 1, 0, d);
      }
    }
  }
  return out;
}

TwoSidedElement twosided_product(const HopfAlgebra& H, const TwoSidedElement& x, const TwoSidedElement& y) {
  const int d = H.dim;
  const std::int64_t d2 = static_cast<std::int64_t>(d) * d;
  SVec out;
  for (const auto& [ix, cx] : x) {
    const int phi = static_cast<int>(ix / d2), h = static_cast<int>(ix / d % d), w = static_cast<int>(ix % d);
    for (const auto& [iy, cy] : y) {
      const int psi = static_cast<int>(iy / d2), z = static_cast<int>(iy / d % d), t = static_cast<int>(iy % d);
      for (const auto& th : H.coprod_terms(h))
        for (const auto& tw : H.coprod_terms(w)) {
          // phi * (h1 |> psi <| S^-1(w2)) # (h2 z (x) w1 t)
          Vec f = star(H, H.basis(phi),
                       lft(H, th.a, coregular(H, Side::right, H.Sinv(H.basis(tw.b)), H.basis(psi))));
          if (is_zero(f)) continue;
          const Cyclotomic c = cx * cy * th.c * tw.c;
          for (const auto& p : H.prod_terms(th.b, z))
            for (const auto& q : H.prod_terms(tw.a, t))
              for (int i = 0; i < d; ++i)
                if (!f[i].is_zero()) sadd(out, i * d2 + p.k * d + q.k, c * p.c * q.c * f[i]);
        }
    }
  }
  return out;
}

Vec heis_rep(const HopfAlgebra& H, const TwoSidedElement& x, const Vec& psi) {
  const int d = H.dim;
  const std::int64_t d2 = static_cast<std::int64_t>(d) * d;
  Vec out = H.zero_elt();
  for (const auto& [ix, c] : x) {
    const int phi = static_cast<int>(ix / d2), h = static_cast<int>(ix / d % d), w = static_cast<int>(ix % d);
    Vec t = lft(H, h, coregular(H, Side::right, H.Sinv(H.basis(w)), psi));
    axpy(out, c, star(H, H.basis(phi), t));
  }
  return out;
}

Mat heis_rep_matrix(const HopfAlgebra& H, const TwoSidedElement& x) {
  return rep_matrix(H, [&](const Vec& psi) { return heis_rep(H, x, psi); });
}

Mat heis_rep_matrix_h(const HopfAlgebra& H, const HeisenbergElement& x) {
  return heis_rep_matrix(H, heis_to_twosided(H, x));
}

HeisenbergElement heis_right_action(const HopfAlgebra& H, const HeisenbergElement& x, const Vec& h) {
  const int d = H.dim;
  SVec out;
  SVec D4 = H.iterated_coproduct(h, 4);
  for (const auto& [ix, cx] : x) {
    const int phi = static_cast<int>(ix / d), k = static_cast<int>(ix % d);
    for (const auto& [it, ct] : D4) {
      auto l = split_index(it, d, 4);
      Vec f = coregular(H, Side::left, H.S(H.basis(l[1])), rgt(H, l[2], H.basis(phi)));
      Vec g = H.mul3(H.S(H.basis(l[0])), H.basis(k), H.basis(l[3]));
      add_outer(out, f, g, cx * ct, 1, 0, d);
    }
  }
  return out;
}

Vec phi01(const HopfAlgebra& H, const QuasitriangularData& R, const Vec& phi) {
  const int d = H.dim;
  SVec M = H.tensor_mul(R.R, H.flip2(R.R), 2);
  Vec out = H.zero_elt();
  for (const auto& [i, c] : M)
    if (!phi[i / d].is_zero()) out[i % d] += c * phi[i / d];
  return out;
}

namespace {

SVec phi10_with(const HopfAlgebra& H, const QuasitriangularData& R, const SVec& T, const SVec& x) {
  const int d = H.dim;
  const std::int64_t d2 = static_cast<std::int64_t>(d) * d;
  SVec out;
  for (const auto& [ix, cx] : x) {
    const Vec beta = H.basis(static_cast<int>(ix / d));
    const Vec p = phi01(H, R, H.basis(static_cast<int>(ix % d)));
    for (const auto& [it, ct] : T) {
      const int l = static_cast<int>(it / d2), r = static_cast<int>(it / d % d), m = static_cast<int>(it % d);
      Vec f = lft(H, l, rgt(H, r, beta));
      if (is_zero(f)) continue;
      add_outer(out, f, H.mul(H.basis(m), p), cx * ct, 1, 0, d);
    }
  }
  return out;
}

}  // namespace

HeisenbergElement phi10(const HopfAlgebra& H, const QuasitriangularData& R, const SVec& x) {
  return phi10_with(H, R, phi10_tensor(H, R), x);
}

std::vector<HeisenbergElement> q_elements(const HopfAlgebra& H) {
  const int d = H.dim, N = d * d;
  // columns: rho(f^i # e_x) flattened row-major
  std::vector<Vec> rows(N, zero_vec(N, H.order()));
  for (int i = 0; i < d; ++i)
    for (int x = 0; x < d; ++x) {
      Mat m = heis_rep_matrix_h(H, SVec{{static_cast<std::int64_t>(i) * d + x, H.one_scalar()}});
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rows[r * d + c][i * d + x] = m[r][c];
    }
  std::vector<HeisenbergElement> out;
  for (int h = 0; h < d; ++h) {
    Mat target = rep_matrix(H, [&](const Vec& psi) {
      return coregular(H, Side::right, H.Sinv(H.basis(h)), psi);
    });
    Vec b = zero_vec(N, H.order());
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) b[r * d + c] = target[r][c];
    auto q = solve_rows(rows, b, N, H.order());
    if (!q) throw QhUnavailable("the Heisenberg representation does not realize Q_" + H.name_of(h));
    out.push_back(to_sparse(*q));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Target

Target::Target(const HopfAlgebra& H, Signature sig, Variant v) : H_(&H), sig_(sig), var_(v) {
  const int d = H.dim;
  const int hd = v == Variant::general ? d * d * d : d * d;
  for (int i = 0; i < sig.g; ++i) fdim_.push_back(hd);
  for (int j = 0; j < sig.n; ++j) fdim_.push_back(d);
  dim_ = 1;
  for (int f : fdim_) dim_ *= f;
}

const SVec& Target::handle_basis_mul(std::int64_t i, std::int64_t j) const {
  auto key = std::make_pair(i, j);
  auto it = handle_memo_.find(key);
  if (it != handle_memo_.end()) return it->second;
  SVec x{{i, H_->one_scalar()}}, y{{j, H_->one_scalar()}};
  SVec r = var_ == Variant::general ? twosided_product(*H_, x, y) : heis_product(*H_, x, y);
  return handle_memo_[key] = std::move(r);
}

SVec Target::handle_mul(const SVec& x, const SVec& y) const {
  SVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) saxpy(out, a * b, handle_basis_mul(i, j));
  return out;
}

SVec Target::handle_h(const Vec& h) const {
  const HopfAlgebra& H = *H_;
  return var_ == Variant::general ? twosided_pure(H, H.counit, h, H.one()) : heis_pure(H, H.counit, h);
}

const SVec& Target::tilde(int h) const {
  const HopfAlgebra& H = *H_;
  if (tilde_.empty()) {
    if (var_ == Variant::general) {
      for (int k = 0; k < H.dim; ++k) tilde_.push_back(twosided_pure(H, H.counit, H.one(), H.basis(k)));
    } else {
      tilde_ = q_elements(H);
    }
  }
  return tilde_[h];
}

SVec Target::factor_mul(int f, std::int64_t i, std::int64_t j) const {
  if (f < sig_.g) return handle_basis_mul(i, j);
  SVec out;
  for (const auto& t : H_->prod_terms(static_cast<int>(i), static_cast<int>(j))) sadd(out, t.k, t.c);
  return out;
}

SVec Target::mul(const SVec& x, const SVec& y) const {
  const int F = factors();
  std::vector<std::int64_t> pw(F, 1);
  for (int f = F - 2; f >= 0; --f) pw[f] = pw[f + 1] * fdim_[f + 1];
  SVec out;
  for (const auto& [ix, cx] : x)
    for (const auto& [iy, cy] : y) {
      SVec cur{{0, cx * cy}};
      for (int f = 0; f < F && !cur.empty(); ++f) {
        SVec p = factor_mul(f, ix / pw[f] % fdim_[f], iy / pw[f] % fdim_[f]);
        SVec next;
        for (const auto& [a, ca] : cur)
          for (const auto& [b, cb] : p) sadd(next, a * fdim_[f] + b, ca * cb);
        cur = std::move(next);
      }
      for (const auto& [k, c] : cur) sadd(out, k, c);
    }
  return out;
}

SVec Target::pad_front(const SVec& x, int from) const {
  const HopfAlgebra& H = *H_;
  SVec prefix{{0, H.one_scalar()}};
  for (int f = 0; f < from; ++f) {
    SVec u = f < sig_.g ? handle_h(H.one()) : to_sparse(H.one());
    SVec next;
    for (const auto& [a, ca] : prefix)
      for (const auto& [b, cb] : u) sadd(next, a * fdim_[f] + b, ca * cb);
    prefix = std::move(next);
  }
  std::int64_t tail = 1;
  for (int f = from; f < factors(); ++f) tail *= fdim_[f];
  SVec out;
  for (const auto& [a, ca] : prefix)
    for (const auto& [b, cb] : x) sadd(out, a * tail + b, ca * cb);
  return out;
}

SVec Target::one() const { return pad_front(SVec{{0, H_->one_scalar()}}, factors()); }

SVec Target::D_tail(const Vec& h, int handles, int punctures) const {
  const HopfAlgebra& H = *H_;
  const int d = H.dim;
  const int legs = 2 * handles + punctures;
  if (legs == 0) {
    SVec e;
    sadd(e, 0, H.eps(h));
    return e;
  }
  const int hd = sig_.g > 0 ? fdim_[0] : (var_ == Variant::general ? d * d * d : d * d);
  std::map<std::pair<int, int>, SVec> pair_memo;
  SVec out;
  for (const auto& [it, ct] : H.iterated_coproduct(h, legs)) {
    auto l = split_index(it, d, legs);
    SVec cur{{0, ct}};
    for (int i = 0; i < handles; ++i) {
      auto key = std::make_pair(l[2 * i], l[2 * i + 1]);
      auto pm = pair_memo.find(key);
      if (pm == pair_memo.end())
        pm = pair_memo.emplace(key, handle_mul(tilde(key.first), handle_h(H.basis(key.second)))).first;
      SVec next;
      for (const auto& [a, ca] : cur)
        for (const auto& [b, cb] : pm->second) sadd(next, a * hd + b, ca * cb);
      cur = std::move(next);
    }
    for (int j = 0; j < punctures; ++j) {
      SVec next;
      for (const auto& [a, ca] : cur) sadd(next, a * d + l[2 * handles + j], ca);
      cur = std::move(next);
    }
    for (const auto& [k, c] : cur) sadd(out, k, c);
  }
  return out;
}

SVec dgn(const Target& T, const Vec& h) { return T.D_tail(h, T.sig().g, T.sig().n); }

// ---------------------------------------------------------------------------
// AlekseevMap

namespace {

// x (x) y with y over `ydim`
SVec outer(const SVec& x, const SVec& y, std::int64_t ydim) {
  SVec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) sadd(out, a * ydim + b, ca * cb);
  return out;
}

}  // namespace

AlekseevMap::AlekseevMap(const Moduli& L, Variant v) : L_(&L), T_(L.H(), L.sig(), v) {
  const HopfAlgebra& H = L.H();
  const int d = H.dim, g = L.sig().g, n = L.sig().n;
  const QuasitriangularData& R = L.R();
  std::vector<std::int64_t> tail(T_.factors() + 1, 1);
  for (int f = T_.factors() - 1; f >= 0; --f) tail[f] = tail[f + 1] * T_.factor_dim(f);

  if (g > 0) {
    Moduli L10(L.tables_ptr(), {1, 0});
    std::vector<SVec> p10(d * d);
    SVec T = phi10_tensor(H, R);
    for (int x = 0; x < d * d; ++x) {
      SVec img = phi10_with(H, R, T, L10.basis(x));
      p10[x] = v == Variant::general ? heis_to_twosided(H, img) : img;
    }
    hgen_.assign(g, std::vector<SVec>(d * d));
    for (int k = 1; k <= g; ++k)
      for (int x = 0; x < d * d; ++x) {
        SVec acc;
        for (const auto& [ir, cr] : R.R) {
          const int s = static_cast<int>(ir / d), t = static_cast<int>(ir % d);
          SVec head;
          for (const auto& [y, cy] : L10.coad(H.basis(s), L10.basis(x))) saxpy(head, cy, p10[y]);
          if (head.empty()) continue;
          SVec full = outer(head, T_.D_tail(H.basis(t), g - k, n), tail[k]);
          saxpy(acc, cr, full);
        }
        hgen_[k - 1][x] = T_.pad_front(acc, k - 1);
      }
  }
  if (n > 0) {
    pgen_.assign(n, std::vector<SVec>(d));
    for (int l = 1; l <= n; ++l)
      for (int a = 0; a < d; ++a) {
        SVec acc;
        for (const auto& [ir, cr] : R.R) {
          const int s = static_cast<int>(ir / d), t = static_cast<int>(ir % d);
          Vec phi = L.tables().coad_ops[s].apply(H.basis(a));
          if (is_zero(phi)) continue;
          SVec head = to_sparse(phi01(H, R, phi));
          SVec full = outer(head, T_.D_tail(H.basis(t), 0, n - l), tail[g + l]);
          saxpy(acc, cr, full);
        }
        pgen_[l - 1][a] = T_.pad_front(acc, g + l - 1);
      }
  }
}

const SVec& AlekseevMap::handle_generator(int k, int x) const { return hgen_.at(k - 1).at(x); }
const SVec& AlekseevMap::puncture_generator(int l, int a) const { return pgen_.at(l - 1).at(a); }

SVec AlekseevMap::apply_basis(std::int64_t i) const {
  const Moduli& L = *L_;
  const int d = L.d(), g = L.sig().g, n = L.sig().n;
  SVec cur = T_.one();
  for (int k = 1; k <= g; ++k) {
    const int x = L.digit(i, 2 * k - 2) * d + L.digit(i, 2 * k - 1);
    cur = T_.mul(cur, hgen_[k - 1][x]);
  }
  for (int l = 1; l <= n; ++l) cur = T_.mul(cur, pgen_[l - 1][L.digit(i, 2 * g + l - 1)]);
  return cur;
}

SVec AlekseevMap::apply(const SVec& x) const {
  SVec out;
  for (const auto& [i, c] : x) saxpy(out, c, apply_basis(i));
  return out;
}

SVec phign(const Moduli& L, const SVec& x, Variant v) { return AlekseevMap(L, v).apply(x); }

InjectivityReport injectivity_report(const Moduli& L, Variant v) {
  AlekseevMap phi(L, v);
  const std::int64_t n = L.dim();
  const int tdim = static_cast<int>(phi.target().dim());
  Subspace img(tdim, L.order());
  for (std::int64_t i = 0; i < n; ++i) img.add(to_dense(phi.apply_basis(i), tdim, L.order()));
  InjectivityReport r;
  r.rank = img.dim();
  r.dim = n;
  r.injective = r.rank == n;
  return r;
}

Report check_phign_morphism(const Moduli& L, Variant v, std::optional<int> samples, unsigned seed) {
  Report rep;
  AlekseevMap phi(L, v);
  const Target& T = phi.target();
  const std::int64_t n = L.dim();
  rep.add("unit", phi.apply(L.unit()) == T.one());
  std::vector<SVec> img(n);
  std::vector<bool> have(n, false);
  auto image = [&](std::int64_t i) -> const SVec& {
    if (!have[i]) {
      img[i] = phi.apply_basis(i);
      have[i] = true;
    }
    return img[i];
  };
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  if (!samples) {
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j) pairs.push_back({i, j});
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (int s = 0; s < *samples; ++s) pairs.push_back({pick(rng), pick(rng)});
  }
  bool ok = true;
  std::vector<long> w;
  for (const auto& [i, j] : pairs) {
    SVec lhs;
    for (const auto& [k, c] : L.mul(L.basis(i), L.basis(j))) saxpy(lhs, c, image(k));
    if (lhs != T.mul(image(i), image(j))) {
      ok = false;
      w = {static_cast<long>(i), static_cast<long>(j)};
      break;
    }
  }
  rep.add("multiplicative", ok, w,
          (samples ? "random basis pairs: " : "all basis pairs: ") + std::to_string(pairs.size()));
  return rep;
}

Report check_dgn_commutation(const Moduli& L, Variant v) {
  Report rep;
  AlekseevMap phi(L, v);
  const Target& T = phi.target();
  const HopfAlgebra& H = L.H();
  std::vector<SVec> D(H.dim), img(L.dim());
  for (int h = 0; h < H.dim; ++h) D[h] = dgn(T, H.basis(h));
  for (std::int64_t i = 0; i < L.dim(); ++i) img[i] = phi.apply_basis(i);
  bool mult_ok = true;
  std::vector<long> mw;
  for (int a = 0; a < H.dim && mult_ok; ++a)
    for (int b = 0; b < H.dim; ++b) {
      SVec lhs;
      for (const auto& t : H.prod_terms(a, b)) saxpy(lhs, t.c, D[t.k]);
      if (lhs != T.mul(D[a], D[b])) {
        mult_ok = false;
        mw = {a, b};
        break;
      }
    }
  rep.add("D multiplicative", mult_ok, mw);
  bool ok = true;
  std::vector<long> w;
  for (int h = 0; h < H.dim && ok; ++h)
    for (std::int64_t i = 0; i < L.dim(); ++i) {
      SVec lhs = T.mul(D[h], img[i]);
      SVec rhs;
      for (const auto& t : H.coprod_terms(h)) {
        SVec x = L.coad(H.Sinv(H.basis(t.b)), L.basis(i));
        SVec px;
        for (const auto& [k, c] : x) saxpy(px, c, img[k]);
        saxpy(rhs, t.c, T.mul(px, D[t.a]));
      }
      if (lhs != rhs) {
        ok = false;
        w = {h, static_cast<long>(i)};
        break;
      }
    }
  rep.add("D commutation", ok, w);
  return rep;
}

namespace {

// each handle factor through the two-sided (or Heisenberg) representation on H*
SVec to_end(const Target& T, const HopfAlgebra& H, const SVec& x, std::vector<std::map<std::int64_t, SVec>>& memo) {
  const int F = T.factors(), g = T.sig().g, d = H.dim;
  std::vector<std::int64_t> pw(F, 1);
  for (int f = F - 2; f >= 0; --f) pw[f] = pw[f + 1] * T.factor_dim(f + 1);
  auto handle_end = [&](std::int64_t b) -> const SVec& {
    auto& m = memo[0];
    auto it = m.find(b);
    if (it != m.end()) return it->second;
    SVec e{{b, H.one_scalar()}};
    Mat r = T.variant() == Variant::general ? heis_rep_matrix(H, e) : heis_rep_matrix_h(H, e);
    SVec flat;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!r[i][j].is_zero()) flat[i * d + j] = r[i][j];
    return m[b] = flat;
  };
  SVec out;
  for (const auto& [ix, cx] : x) {
    SVec cur{{0, cx}};
    for (int f = 0; f < F; ++f) {
      const std::int64_t b = ix / pw[f] % T.factor_dim(f);
      SVec next;
      if (f < g) {
        const SVec& e = handle_end(b);
        for (const auto& [a, ca] : cur)
          for (const auto& [k, ck] : e) sadd(next, a * d * d + k, ca * ck);
      } else {
        for (const auto& [a, ca] : cur) sadd(next, a * d + b, ca);
      }
      cur = std::move(next);
    }
    for (const auto& [k, c] : cur) sadd(out, k, c);
  }
  return out;
}

}  // namespace

Report check_variants_agree(const Moduli& L) {
  Report rep;
  AlekseevMap gen(L, Variant::general), fin(L, Variant::findim);
  std::vector<std::map<std::int64_t, SVec>> mg(1), mf(1);
  bool ok = true;
  std::vector<long> w;
  for (std::int64_t i = 0; i < L.dim(); ++i)
    if (to_end(gen.target(), L.H(), gen.apply_basis(i), mg) != to_end(fin.target(), L.H(), fin.apply_basis(i), mf)) {
      ok = false;
      w = {static_cast<long>(i)};
      break;
    }
  rep.add("variants agree on End(H*)", ok, w);
  return rep;
}

Report check_phi01(const HopfAlgebra& H, const QuasitriangularData& R) {
  Report rep;
  const int d = H.dim;
  std::vector<Vec> img(d);
  for (int a = 0; a < d; ++a) img[a] = phi01(H, R, H.basis(a));
  rep.add("unit", phi01(H, R, H.counit) == H.one());
  bool ok = true;
  std::vector<long> w;
  for (int a = 0; a < d && ok; ++a)
    for (int b = 0; b < d; ++b) {
      Vec lhs = phi01(H, R, loop_product(H, R, H.basis(a), H.basis(b)));
      if (lhs != H.mul(img[a], img[b])) {
        ok = false;
        w = {a, b};
        break;
      }
    }
  rep.add("multiplicative", ok, w);
  ok = true;
  w.clear();
  for (int h = 0; h < d && ok; ++h)
    for (int a = 0; a < d; ++a)
      if (phi01(H, R, coad01(H, H.basis(h), H.basis(a))) != adjoint_right(H, H.basis(h), img[a])) {
        ok = false;
        w = {h, a};
        break;
      }
  rep.add("equivariant", ok, w);
  return rep;
}

Report check_phi10(const Moduli& L10) {
  Report rep;
  const HopfAlgebra& H = L10.H();
  const QuasitriangularData& R = L10.R();
  const int n = static_cast<int>(L10.dim());
  std::vector<SVec> img(n);
  SVec T = phi10_tensor(H, R);
  for (int x = 0; x < n; ++x) img[x] = phi10_with(H, R, T, L10.basis(x));
  rep.add("unit", phi10(H, R, L10.unit()) == heis_pure(H, H.counit, H.one()));
  bool ok = true;
  std::vector<long> w;
  for (int x = 0; x < n && ok; ++x)
    for (int y = 0; y < n; ++y) {
      SVec lhs;
      for (const auto& [k, c] : L10.mul(L10.basis(x), L10.basis(y))) saxpy(lhs, c, img[k]);
      if (lhs != heis_product(H, img[x], img[y])) {
        ok = false;
        w = {x, y};
        break;
      }
    }
  rep.add("multiplicative", ok, w);
  ok = true;
  w.clear();
  for (int h = 0; h < H.dim && ok; ++h)
    for (int x = 0; x < n; ++x) {
      SVec lhs;
      for (const auto& [k, c] : L10.coad(H.basis(h), L10.basis(x))) saxpy(lhs, c, img[k]);
      if (lhs != heis_right_action(H, img[x], H.basis(h))) {
        ok = false;
        w = {h, x};
        break;
      }
    }
  rep.add("equivariant", ok, w);
  return rep;
}

}  // namespace qmod
