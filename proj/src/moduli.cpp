#include "qmod/moduli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace qmod {

namespace {

using Pair = std::int64_t;

struct PairOp {
  Cyclotomic c;
  SparseOp first, second;
};

// sum_r c_r (first_r (x) second_r) applied to a vector over H* (x) H*
SVec pair_apply(const SVec& in, const std::vector<PairOp>& ops, int d) {
  SVec out;
  for (const auto& [idx, c] : in) {
    const int i = static_cast<int>(idx / d), j = static_cast<int>(idx % d);
    for (const auto& op : ops) {
      Cyclotomic cc = c * op.c;
      for (const auto& [i2, a] : op.first.col(i)) {
        Cyclotomic ca = cc * a;
        for (const auto& [j2, b] : op.second.col(j)) sadd(out, static_cast<Pair>(i2) * d + j2, ca * b);
      }
    }
  }
  return out;
}

struct RTerm {
  int s, t;
  Cyclotomic c;
};

std::vector<RTerm> r_terms(const SVec& R, int d) {
  std::vector<RTerm> out;
  for (const auto& [idx, c] : R) out.push_back({static_cast<int>(idx / d), static_cast<int>(idx % d), c});
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint(const HopfAlgebra& H, const QuasitriangularData& R) {
  std::ostringstream os;
  os << H.dim << ' ' << H.order() << '\n';
  for (const auto& [idx, c] : H.mult.entries) os << idx[0] << ' ' << idx[1] << ' ' << idx[2] << ' ' << c << '\n';
  os << "|\n";
  for (const auto& [idx, c] : H.comult.entries) os << idx[0] << ' ' << idx[1] << ' ' << idx[2] << ' ' << c << '\n';
  os << "|\n";
  for (const auto& [idx, c] : H.antipode.matrix.entries) os << idx[0] << ' ' << idx[1] << ' ' << c << '\n';
  os << "|\n";
  for (const auto& [idx, c] : R.R) os << idx << ' ' << c << '\n';
  return os.str();
}

void write_tables(const LoopTables& t, const std::filesystem::path& file) {
  const int d = t.H.dim;
  auto tmp = file;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(file.string() + std::to_string(std::rand())));
  {
    std::ofstream os(tmp);
    if (!os) return;
    os << "qmod-loop-tables 1 " << d << '\n';
    for (int ab = 0; ab < d * d; ++ab) {
      for (const auto& x : t.mult01[ab]) os << "M " << ab << ' ' << x.k << ' ' << x.c << '\n';
      for (const auto& x : t.exch[ab]) os << "E " << ab << ' ' << x.lo << ' ' << x.hi << ' ' << x.c << '\n';
      for (const auto& x : t.cross[ab]) os << "C " << ab << ' ' << x.lo << ' ' << x.hi << ' ' << x.c << '\n';
    }
    os << "end\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

bool read_tables(LoopTables& t, const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) return false;
  const int d = t.H.dim, order = t.H.order();
  std::string magic;
  int version = 0, dd = 0;
  if (!(is >> magic >> version >> dd) || magic != "qmod-loop-tables" || version != 1 || dd != d) return false;
  t.mult01.assign(d * d, {});
  t.exch.assign(d * d, {});
  t.cross.assign(d * d, {});
  std::string tag;
  try {
    while (is >> tag) {
      if (tag == "end") return true;
      int ab = 0, x = 0, y = 0;
      std::string c;
      if (tag == "M") {
        if (!(is >> ab >> x >> c) || ab < 0 || ab >= d * d) return false;
        t.mult01[ab].push_back({x, Cyclotomic::parse(c, order)});
      } else if (tag == "E" || tag == "C") {
        if (!(is >> ab >> x >> y >> c) || ab < 0 || ab >= d * d) return false;
        (tag == "E" ? t.exch : t.cross)[ab].push_back({x, y, Cyclotomic::parse(c, order)});
      } else {
        return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

void build_tables(LoopTables& t) {
  const HopfAlgebra& H = t.H;
  const Coregular& C = *t.cor;
  const int d = H.dim;
  auto rs = r_terms(t.R.R, d);
  auto L = [&](int h) { return SparseOp::from_mat(C.left(h)); };
  auto Rt = [&](int h) { return SparseOp::from_mat(C.right(h)); };
  std::vector<PairOp> p1, p2, o1, o2, o3, o4, cr;
  for (const auto& r : rs) {
    SparseOp Ls = L(r.s), Lt = L(r.t), Rs = Rt(r.s), Rtt = Rt(r.t);
    SparseOp LSt = SparseOp::from_mat(C.left_of(H.S(H.basis(r.t))));
    p1.push_back({r.c, LSt, Rs});
    p2.push_back({r.c, Lt, Ls});
    o1.push_back({r.c, Rs, LSt});
    o2.push_back({r.c, Rs, Rtt});
    o3.push_back({r.c, Ls, Lt});
    o4.push_back({r.c, Lt, Rs});
    cr.push_back({r.c, t.coad_ops[r.s], t.coad_ops[r.t]});
  }
  // f^i * f^j in H*
  std::vector<std::vector<Term>> star_t(d * d);
  for (const auto& [idx, c] : H.comult.entries) star_t[idx[1] * d + idx[2]].push_back({idx[0], c});

  t.mult01.assign(d * d, {});
  t.exch.assign(d * d, {});
  t.cross.assign(d * d, {});
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const int ab = a * d + b;
      // loop product f^a f^b
      SVec v{{ab, H.one_scalar()}};
      v = pair_apply(pair_apply(v, p1, d), p2, d);
      SVec prod;
      for (const auto& [idx, c] : v)
        for (const auto& s : star_t[idx]) sadd(prod, s.k, c * s.c);
      for (const auto& [k, c] : prod) t.mult01[ab].push_back({static_cast<int>(k), c});
      // A-letter f^a times B-letter f^b, acting on psi (x) phi = f^b (x) f^a
      SVec w{{static_cast<Pair>(b) * d + a, H.one_scalar()}};
      w = pair_apply(pair_apply(pair_apply(pair_apply(w, o1, d), o2, d), o3, d), o4, d);
      for (const auto& [idx, c] : w) t.exch[ab].push_back({static_cast<int>(idx / d), static_cast<int>(idx % d), c});
      SVec x{{static_cast<Pair>(b) * d + a, H.one_scalar()}};
      x = pair_apply(x, cr, d);
      for (const auto& [idx, c] : x) t.cross[ab].push_back({static_cast<int>(idx / d), static_cast<int>(idx % d), c});
    }
}

}  // namespace

std::shared_ptr<const LoopTables> make_loop_tables(const HopfAlgebra& H, const QuasitriangularData& R) {
  auto t = std::make_shared<LoopTables>();
  t->H = H;
  t->R = R;
  t->cor = std::make_unique<Coregular>(t->H);
  for (int h = 0; h < H.dim; ++h) t->coad_ops.push_back(SparseOp::from_mat(t->cor->coad(h)));
  const char* dir = std::getenv("QMODULI_CACHE_DIR");
  std::filesystem::path file;
  if (dir && *dir) {
    char name[64];
    std::snprintf(name, sizeof name, "loop-%016llx.txt",
                  static_cast<unsigned long long>(fnv1a(fingerprint(H, R))));
    file = std::filesystem::path(dir) / name;
    if (read_tables(*t, file)) return t;
  }
  build_tables(*t);
  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    write_tables(*t, file);
  }
  return t;
}

std::shared_ptr<const LoopTables> make_loop_tables(const Algebra& A) {
  if (!A.R) throw MissingRMatrix(A.name + " carries no R-matrix");
  return make_loop_tables(A.H, *A.R);
}

const Mat& LoopTables::loop_inverse() const {
  std::call_once(inv_once_, [this] {
    const int d = H.dim, order = H.order();
    const int N = d * d;
    // X Z = eps (x) 1 and Z X = eps (x) 1 with X = sum_a f^a (x) e_a
    auto column = [&](int k, int h, bool left) {
      Vec col = zero_vec(N, order);
      for (int a = 0; a < d; ++a) {
        const auto& m = left ? mult01[a * d + k] : mult01[k * d + a];
        const auto& p = left ? H.prod_terms(a, h) : H.prod_terms(h, a);
        for (const auto& x : m)
          for (const auto& y : p) col[x.k * d + y.k].add_product(x.c, y.c);
      }
      return col;
    };
    Mat rows = mat_zero(2 * N, N, order);
    for (int k = 0; k < d; ++k)
      for (int h = 0; h < d; ++h) {
        Vec cl = column(k, h, true), cr = column(k, h, false);
        for (int r = 0; r < N; ++r) {
          rows[r][k * d + h] = cl[r];
          rows[N + r][k * d + h] = cr[r];
        }
      }
    Vec rhs = zero_vec(2 * N, order);
    for (int k = 0; k < d; ++k)
      for (int h = 0; h < d; ++h) {
        Cyclotomic c = H.counit[k] * H.unit[h];
        rhs[k * d + h] = c;
        rhs[N + k * d + h] = c;
      }
    auto z = solve_rows(rows, rhs, N, order);
    if (!z) return;
    inv_ = mat_zero(d, d, order);
    for (int k = 0; k < d; ++k)
      for (int h = 0; h < d; ++h) inv_[k][h] = (*z)[k * d + h];
  });
  if (inv_.empty()) throw NotInvertible("the loop holonomy matrix has no two-sided inverse");
  return inv_;
}

// ---------------------------------------------------------------------------
// Moduli

Moduli::Moduli(std::shared_ptr<const LoopTables> t, Signature sig) : t_(std::move(t)), sig_(sig) {
  if (sig.g < 0 || sig.n < 0 || sig.slots() == 0) throw SignatureMismatch("signature needs 2g+n >= 1");
  m_ = sig.slots();
  d_ = t_->H.dim;
  dim_ = ipow(d_, m_);
  pw_.assign(m_, 1);
  for (int p = m_ - 2; p >= 0; --p) pw_[p] = pw_[p + 1] * d_;
}

Moduli make_moduli(const Algebra& A, Signature sig) { return Moduli(make_loop_tables(A), sig); }

SlotKind Moduli::kind_at(int pos) const {
  if (pos < 2 * sig_.g) return pos % 2 == 0 ? SlotKind::B : SlotKind::A;
  return SlotKind::M;
}

int Moduli::position(Slot s) const {
  switch (s.kind) {
    case SlotKind::A:
    case SlotKind::B:
      if (s.index < 1 || s.index > sig_.g)
        throw BadSlot(std::string(s.kind == SlotKind::A ? "A(" : "B(") + std::to_string(s.index) +
                      ") needs 1 <= i <= g = " + std::to_string(sig_.g));
      return 2 * (s.index - 1) + (s.kind == SlotKind::A ? 1 : 0);
    case SlotKind::M:
      if (s.index < sig_.g + 1 || s.index > sig_.g + sig_.n)
        throw BadSlot("M(" + std::to_string(s.index) + ") needs g+1 <= j <= g+n");
      return sig_.g + s.index - 1;
  }
  throw BadSlot("unknown slot kind");
}

SVec Moduli::pure(const std::vector<Vec>& phis) const {
  SVec cur{{0, t_->H.one_scalar()}};
  for (int p = 0; p < m_; ++p) {
    SVec next;
    for (const auto& [idx, c] : cur)
      for (int k = 0; k < d_; ++k)
        if (!phis[p][k].is_zero()) sadd(next, idx * d_ + k, c * phis[p][k]);
    cur = std::move(next);
  }
  return cur;
}

SVec Moduli::unit() const { return pure(std::vector<Vec>(m_, t_->H.counit)); }

SVec Moduli::basis(std::int64_t i) const { return SVec{{i, t_->H.one_scalar()}}; }

SVec Moduli::embed(int pos, const Vec& phi) const {
  if (pos < 0 || pos >= m_) throw BadSlot("slot position out of range");
  std::vector<Vec> phis(m_, t_->H.counit);
  phis[pos] = phi;
  return pure(phis);
}

SVec Moduli::letter(int pos, int f) const { return embed(pos, t_->H.basis(f)); }

SVec Moduli::mul_letter(const SVec& x, int pos, int f) const {
  const auto& T = *t_;
  // key = idx * d + current letter
  SVec state;
  for (const auto& [idx, c] : x) sadd(state, idx * d_ + f, c);
  for (int t = m_ - 1; t > pos; --t) {
    const bool ex = kind_at(pos) == SlotKind::B && t == pos + 1;
    const auto& table = ex ? T.exch : T.cross;
    SVec next;
    for (const auto& [key, c] : state) {
      const std::int64_t idx = key / d_;
      const int let = static_cast<int>(key % d_);
      const int a = digit(idx, t);
      const std::int64_t base = idx - a * pw_[t];
      for (const auto& s : table[a * d_ + let]) sadd(next, (base + s.hi * pw_[t]) * d_ + s.lo, c * s.c);
    }
    state = std::move(next);
  }
  SVec out;
  for (const auto& [key, c] : state) {
    const std::int64_t idx = key / d_;
    const int let = static_cast<int>(key % d_);
    const int a = digit(idx, pos);
    const std::int64_t base = idx - a * pw_[pos];
    for (const auto& s : T.mult01[a * d_ + let]) sadd(out, base + s.k * pw_[pos], c * s.c);
  }
  return out;
}

SVec Moduli::mul(const SVec& x, const SVec& y) const {
  SVec out;
  for (const auto& [idx, c] : y) {
    SVec z = x;
    for (int p = 0; p < m_ && !z.empty(); ++p) z = mul_letter(z, p, digit(idx, p));
    saxpy(out, c, z);
  }
  return out;
}

SVec Moduli::coad(const Vec& h, const SVec& x) const {
  const auto& ops = t_->coad_ops;
  SVec delta = t_->H.iterated_coproduct(h, m_);
  SVec out;
  for (const auto& [xi, xc] : x)
    for (const auto& [ti, tc] : delta) {
      SVec cur{{0, xc * tc}};
      for (int p = 0; p < m_; ++p) {
        SVec next;
        const int hp = static_cast<int>(ti / pw_[p] % d_);
        for (const auto& [acc, c] : cur)
          for (const auto& [k, v] : ops[hp].col(digit(xi, p))) sadd(next, acc * d_ + k, c * v);
        cur = std::move(next);
      }
      for (const auto& [k, c] : cur) sadd(out, k, c);
    }
  return out;
}

// ---------------------------------------------------------------------------
// explicit formulas

Vec loop_product(const HopfAlgebra& H, const QuasitriangularData& R, const Vec& phi, const Vec& psi) {
  auto rs = r_terms(R.R, H.dim);
  Vec out = H.zero_elt();
  for (const auto& r1 : rs)
    for (const auto& r2 : rs) {
      // (R2_2 S(R1_2) |> phi) * (R2_1 |> psi <| R1_1)
      Vec l = H.mul(H.basis(r2.t), H.S(H.basis(r1.t)));
      Vec a = coregular(H, Side::left, l, phi);
      Vec b = coregular(H, Side::left, H.basis(r2.s), coregular(H, Side::right, H.basis(r1.s), psi));
      axpy(out, r1.c * r2.c, star(H, a, b));
    }
  return out;
}

SVec handle_product(const HopfAlgebra& H, const QuasitriangularData& R, const SVec& x, const SVec& y) {
  const int d = H.dim;
  auto rs = r_terms(R.R, d);
  SVec out;
  for (const auto& [xi, xc] : x) {
    Vec beta = H.basis(static_cast<int>(xi / d)), alpha = H.basis(static_cast<int>(xi % d));
    for (const auto& [yi, yc] : y) {
      Vec beta2 = H.basis(static_cast<int>(yi / d)), alpha2 = H.basis(static_cast<int>(yi % d));
      // middle terms: (R4_2 R3_1 |> beta' <| R1_1 R2_1) (x) (R3_2 S(R1_2) |> alpha <| R2_2 R4_1)
      SVec mid;
      for (const auto& r1 : rs)
        for (const auto& r2 : rs)
          for (const auto& r3 : rs)
            for (const auto& r4 : rs) {
              Vec lb = H.mul(H.basis(r4.t), H.basis(r3.s));
              Vec rb = H.mul(H.basis(r1.s), H.basis(r2.s));
              Vec la = H.mul(H.basis(r3.t), H.S(H.basis(r1.t)));
              Vec ra = H.mul(H.basis(r2.t), H.basis(r4.s));
              Vec u = coregular(H, Side::left, lb, coregular(H, Side::right, rb, beta2));
              Vec w = coregular(H, Side::left, la, coregular(H, Side::right, ra, alpha));
              Cyclotomic c = r1.c * r2.c * r3.c * r4.c;
              for (int i = 0; i < d; ++i) {
                if (u[i].is_zero()) continue;
                for (int j = 0; j < d; ++j)
                  if (!w[j].is_zero()) sadd(mid, static_cast<Pair>(i) * d + j, c * u[i] * w[j]);
              }
            }
      for (const auto& [mi, mc] : mid) {
        Vec b = loop_product(H, R, beta, H.basis(static_cast<int>(mi / d)));
        Vec a = loop_product(H, R, H.basis(static_cast<int>(mi % d)), alpha2);
        Cyclotomic c = xc * yc * mc;
        for (int i = 0; i < d; ++i) {
          if (b[i].is_zero()) continue;
          for (int j = 0; j < d; ++j)
            if (!a[j].is_zero()) sadd(out, static_cast<Pair>(i) * d + j, c * b[i] * a[j]);
        }
      }
    }
  }
  return out;
}

ModuliElement graph_product(const Moduli& L, const ModuliElement& x, const ModuliElement& y) {
  if (!(x.sig == L.sig()) || !(y.sig == L.sig()))
    throw SignatureMismatch("graph_product: operands do not match the algebra signature");
  return {L.sig(), L.mul(x.coeffs, y.coeffs)};
}

ModuliElement embed(const Moduli& L, Slot slot, const Vec& phi) {
  return {L.sig(), L.embed(L.position(slot), phi)};
}

ModuliElement coad(const Moduli& L, const Vec& h, const ModuliElement& x) {
  if (!(x.sig == L.sig())) throw SignatureMismatch("coad: element does not match the algebra signature");
  return {L.sig(), L.coad(h, x.coeffs)};
}

LinearMap coad_map(const Moduli& L, const Vec& h) {
  const int n = static_cast<int>(L.dim());
  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i) cols.push_back(L.to_dense(L.coad(h, L.basis(i))));
  return LinearMap::from_columns(cols, n, L.order());
}

Subspace invariants(const Moduli& L) {
  const HopfAlgebra& H = L.H();
  const int n = static_cast<int>(L.dim()), order = L.order();
  // restrict successively: K_0 = L, K_{i+1} = kernel of (coad(g_i) - eps(g_i)) on K_i
  std::vector<Vec> K;
  for (int i = 0; i < n; ++i) K.push_back(unit_vec(n, i, order));
  for (int g : algebra_generators(H)) {
    const Cyclotomic e = H.counit[g];
    std::vector<Vec> images;
    for (const auto& k : K) {
      Vec v = L.to_dense(L.coad(H.basis(g), to_sparse(k)));
      axpy(v, -e, k);
      images.push_back(v);
    }
    // columns images[j]; solve sum t_j images[j] = 0
    const int m = static_cast<int>(K.size());
    std::vector<Vec> rows(n, zero_vec(m, order));
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < n; ++r) rows[r][j] = images[j][r];
    std::vector<Vec> ker = kernel_rows(rows, m, order);
    std::vector<Vec> K2;
    for (const auto& t : ker) {
      Vec v = zero_vec(n, order);
      for (int j = 0; j < m; ++j)
        if (!t[j].is_zero()) axpy(v, t[j], K[j]);
      K2.push_back(v);
    }
    K = std::move(K2);
    if (K.empty()) break;
  }
  return span(K, n, order);
}

std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, Cyclotomic>> product_table(const Moduli& L) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, Cyclotomic>> out;
  for (std::int64_t i = 0; i < L.dim(); ++i) {
    SVec ei = L.basis(i);
    for (std::int64_t j = 0; j < L.dim(); ++j)
      for (const auto& [k, c] : L.mul(ei, L.basis(j))) out.emplace_back(i, j, k, c);
  }
  return out;
}

namespace {

SVec scaled_sum(const std::vector<SVec>& table, const SVec& coeffs, std::int64_t stride, std::int64_t fixed,
                bool fixed_first) {
  SVec out;
  for (const auto& [t, c] : coeffs) saxpy(out, c, table[fixed_first ? fixed * stride + t : t * stride + fixed]);
  return out;
}

}  // namespace

Report check_associativity(const Moduli& L, std::optional<int> samples, unsigned seed) {
  Report rep;
  const std::int64_t n = L.dim();
  const SVec one = L.unit();
  bool unit_ok = true;
  std::vector<long> uw;
  for (std::int64_t i = 0; i < n && unit_ok; ++i) {
    SVec e = L.basis(i);
    if (L.mul(one, e) != e || L.mul(e, one) != e) {
      unit_ok = false;
      uw = {static_cast<long>(i)};
    }
  }
  rep.add("unit", unit_ok, uw);
  bool ok = true;
  std::vector<long> w;
  if (!samples) {
    std::vector<SVec> table(n * n);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j) table[i * n + j] = L.mul(L.basis(i), L.basis(j));
    for (std::int64_t i = 0; i < n && ok; ++i)
      for (std::int64_t j = 0; j < n && ok; ++j)
        for (std::int64_t k = 0; k < n && ok; ++k) {
          SVec lhs = scaled_sum(table, table[i * n + j], n, k, false);
          SVec rhs = scaled_sum(table, table[j * n + k], n, i, true);
          if (lhs != rhs) {
            ok = false;
            w = {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)};
          }
        }
    rep.add("associativity", ok, w, "exhaustive over " + std::to_string(n * n * n) + " triples");
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
    for (int s = 0; s < *samples && ok; ++s) {
      std::int64_t i = pick(rng), j = pick(rng), k = pick(rng);
      SVec x = L.basis(i), y = L.basis(j), z = L.basis(k);
      if (L.mul(L.mul(x, y), z) != L.mul(x, L.mul(y, z))) {
        ok = false;
        w = {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)};
      }
    }
    rep.add("associativity", ok, w, "random basis triples: " + std::to_string(*samples));
  }
  return rep;
}

Report check_module_algebra(const Moduli& L, std::optional<int> samples, unsigned seed) {
  Report rep;
  const HopfAlgebra& H = L.H();
  const std::int64_t n = L.dim();
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
  std::vector<std::vector<SVec>> coads(H.dim);
  auto coad_basis = [&](int h, std::int64_t i) -> const SVec& {
    auto& v = coads[h];
    if (v.empty()) {
      v.resize(n);
      for (std::int64_t k = 0; k < n; ++k) v[k] = L.coad(H.basis(h), L.basis(k));
    }
    return v[i];
  };
  for (int h = 0; h < H.dim && ok; ++h)
    for (const auto& [i, j] : pairs) {
      SVec lhs;
      for (const auto& [k, c] : L.mul(L.basis(i), L.basis(j))) saxpy(lhs, c, coad_basis(h, k));
      SVec rhs;
      for (const auto& t : H.coprod_terms(h)) saxpy(rhs, t.c, L.mul(coad_basis(t.a, i), coad_basis(t.b, j)));
      if (lhs != rhs) {
        ok = false;
        w = {h, static_cast<long>(i), static_cast<long>(j)};
        break;
      }
    }
  rep.add("module_algebra", ok, w);
  return rep;
}

// ---------------------------------------------------------------------------
// L (x) H^{(x)k}

LHElement lh_one(const Moduli& L, int k) {
  LHElement x;
  x.k = k;
  SVec one = L.H().tensor_one(k);
  for (const auto& [b, c] : L.unit()) {
    SVec v;
    saxpy(v, c, one);
    x.terms[b] = v;
  }
  return x;
}

LHElement lh_add(const LHElement& x, const LHElement& y, const Cyclotomic& c) {
  LHElement r = x;
  for (const auto& [b, v] : y.terms) {
    SVec& t = r.terms[b];
    saxpy(t, c, v);
    if (t.empty()) r.terms.erase(b);
  }
  return r;
}

bool lh_equal(const LHElement& x, const LHElement& y) { return x.terms == y.terms; }

LHElement lh_mul(const Moduli& L, const LHElement& x, const LHElement& y) {
  const HopfAlgebra& H = L.H();
  const int k = x.k;
  // regroup x by its H-part
  std::map<std::int64_t, SVec> byh;
  for (const auto& [b, v] : x.terms)
    for (const auto& [h, c] : v) sadd(byh[h], b, c);
  LHElement out;
  out.k = k;
  for (const auto& [h, xl] : byh) {
    SVec hv{{h, H.one_scalar()}};
    for (const auto& [g, yv] : y.terms) {
      SVec prod = L.mul(xl, L.basis(g));
      if (prod.empty()) continue;
      SVec hp = H.tensor_mul(hv, yv, k);
      for (const auto& [b, c] : prod) {
        SVec& t = out.terms[b];
        saxpy(t, c, hp);
      }
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second.empty() ? out.terms.erase(it) : ++it;
  return out;
}

LHElement lh_left_h(const Moduli& L, const Vec& h, const LHElement& x) {
  LHElement out;
  out.k = x.k;
  SVec hv = to_sparse(h);
  for (const auto& [b, v] : x.terms) {
    SVec t = L.H().tensor_mul(hv, v, x.k);
    if (!t.empty()) out.terms[b] = t;
  }
  return out;
}

LHElement holonomy_letter_at(const Moduli& L, int pos, bool inverse) {
  const int d = L.d();
  LHElement out;
  out.k = 1;
  auto add = [&](int f, int h, const Cyclotomic& c) {
    for (const auto& [b, v] : L.letter(pos, f)) {
      SVec& t = out.terms[b];
      sadd(t, h, c * v);
    }
  };
  if (!inverse) {
    for (int a = 0; a < d; ++a) add(a, a, L.H().one_scalar());
  } else {
    const Mat& z = L.tables().loop_inverse();
    for (int k = 0; k < d; ++k)
      for (int h = 0; h < d; ++h)
        if (!z[k][h].is_zero()) add(k, h, z[k][h]);
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second.empty() ? out.terms.erase(it) : ++it;
  return out;
}

LHElement holonomy_letter(const Moduli& L, Slot slot, bool inverse) {
  return holonomy_letter_at(L, L.position(slot), inverse);
}

LMatrix lh_in_rep(const LHElement& x, const Representation& V) {
  const int n = V.dim_v;
  LMatrix m(n, std::vector<SVec>(n));
  for (const auto& [b, v] : x.terms)
    for (const auto& [h, c] : v) {
      const Mat& r = V.mats[h];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!r[i][j].is_zero()) sadd(m[i][j], b, c * r[i][j]);
    }
  return m;
}

LMatrix lmatrix_mul(const Moduli& L, const LMatrix& a, const LMatrix& b) {
  const size_t n = a.size(), p = b.empty() ? 0 : b[0].size();
  LMatrix m(n, std::vector<SVec>(p));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].empty()) continue;
      for (size_t j = 0; j < p; ++j)
        if (!b[k][j].empty()) saxpy(m[i][j], L.H().one_scalar(), L.mul(a[i][k], b[k][j]));
    }
  return m;
}

HolonomyMatrix holonomy_matrix(const Moduli& L, const Representation& V, Slot slot) {
  HolonomyMatrix hm;
  hm.rep = &V;
  hm.slot = slot;
  hm.entries = lh_in_rep(holonomy_letter(L, slot, false), V);
  hm.inverse = lh_in_rep(holonomy_letter(L, slot, true), V);
  return hm;
}

// ---------------------------------------------------------------------------
// matrix relations

namespace {

using LHH = std::map<std::int64_t, SVec>;

void lhh_add(LHH& acc, const SVec& l, const SVec& hh, const Cyclotomic& c) {
  for (const auto& [b, v] : l) {
    SVec& t = acc[b];
    saxpy(t, c * v, hh);
  }
}

// compare in L (x) H (x) H, then through rho_V (x) rho_W
void compare(Report& rep, const std::string& name, const LHH& lhs, const LHH& rhs, const HopfAlgebra& H,
             const Representation& V, const Representation& W) {
  LHH diff = lhs;
  for (const auto& [b, v] : rhs) {
    SVec& t = diff[b];
    saxpy(t, Cyclotomic(H.order(), -1), v);
  }
  const int d = H.dim, dv = V.dim_v, dw = W.dim_v;
  for (const auto& [b, v] : diff) {
    if (v.empty()) continue;
    Mat m = mat_zero(dv * dw, dv * dw, H.order());
    for (const auto& [idx, c] : v)
      m = mat_add(m, mat_scale(mat_kron(V.mats[idx / d], W.mats[idx % d]), c));
    for (int i = 0; i < dv * dw; ++i)
      for (int j = 0; j < dv * dw; ++j)
        if (!m[i][j].is_zero()) {
          rep.add(name, false, {static_cast<long>(b), i, j},
                  "relation fails in the chosen representations at coefficient e_" + std::to_string(b));
          return;
        }
  }
  rep.add(name, true);
}

std::string slot_name(const Moduli& L, int pos) {
  const int g = L.sig().g;
  if (pos < 2 * g) return std::string(pos % 2 ? "A(" : "B(") + std::to_string(pos / 2 + 1) + ")";
  return "M(" + std::to_string(pos - g + 1) + ")";
}

int handle_of(const Moduli& L, int pos) { return pos < 2 * L.sig().g ? pos / 2 : pos - L.sig().g; }

}  // namespace

Report check_matrix_relations(const Moduli& L, const Representation& V, const Representation& W) {
  Report rep;
  const HopfAlgebra& H = L.H();
  const int d = H.dim, m = L.slots();
  const Vec one = H.one();
  auto mul2 = [&](const SVec& a, const SVec& b) { return H.tensor_mul(a, b, 2); };
  const SVec R = L.R().R, Rinv = L.R().R_inv, Rp = H.flip2(R), Rpinv = H.flip2(L.R().R_inv);
  std::vector<SVec> e1(d), e2(d);  // e_a (x) 1, 1 (x) e_a
  for (int a = 0; a < d; ++a) {
    e1[a] = H.pure2(H.basis(a), one);
    e2[a] = H.pure2(one, H.basis(a));
  }
  std::map<std::pair<std::int64_t, std::int64_t>, SVec> memo;
  auto lprod = [&](int p, int a, int q, int b) -> const SVec& {
    auto key = std::make_pair(static_cast<std::int64_t>(p) * d + a, static_cast<std::int64_t>(q) * d + b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo[key] = L.mul(L.letter(p, a), L.letter(q, b));
  };
  const Cyclotomic unit_c = H.one_scalar();

  for (int p = 0; p < m; ++p) {
    // fusion: X^{V(x)W} = X_1 R' X_2 R'^{-1}
    LHH lhs, rhs;
    for (int a = 0; a < d; ++a) lhh_add(lhs, L.letter(p, a), H.coproduct(H.basis(a)), unit_c);
    for (int a = 0; a < d; ++a) {
      SVec left = mul2(e1[a], Rp);
      for (int b = 0; b < d; ++b) lhh_add(rhs, lprod(p, a, p, b), mul2(mul2(left, e2[b]), Rpinv), unit_c);
    }
    compare(rep, "fusion " + slot_name(L, p), lhs, rhs, H, V, W);
    // reflection: R X_1 R' X_2 = X_2 R X_1 R'
    LHH l2, r2;
    for (int a = 0; a < d; ++a) {
      SVec left = mul2(mul2(R, e1[a]), Rp);
      SVec right = mul2(e1[a], Rp);
      for (int b = 0; b < d; ++b) {
        lhh_add(l2, lprod(p, a, p, b), mul2(left, e2[b]), unit_c);
        lhh_add(r2, lprod(p, b, p, a), mul2(mul2(e2[b], R), right), unit_c);
      }
    }
    compare(rep, "reflection " + slot_name(L, p), l2, r2, H, V, W);
  }
  for (int i = 0; i < L.sig().g; ++i) {
    // exchange: R B_1 R' A_2 = A_2 R B_1 R^{-1}
    const int pb = 2 * i, pa = 2 * i + 1;
    LHH lhs, rhs;
    for (int a = 0; a < d; ++a) {
      SVec left = mul2(mul2(R, e1[a]), Rp);
      SVec right = mul2(mul2(R, e1[a]), Rinv);
      for (int b = 0; b < d; ++b) {
        lhh_add(lhs, lprod(pb, a, pa, b), mul2(left, e2[b]), unit_c);
        lhh_add(rhs, lprod(pa, b, pb, a), mul2(e2[b], right), unit_c);
      }
    }
    compare(rep, "exchange " + std::to_string(i + 1), lhs, rhs, H, V, W);
  }
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      if (handle_of(L, p) == handle_of(L, q)) continue;
      // R X_1 R^{-1} Y_2 = Y_2 R X_1 R^{-1}
      LHH lhs, rhs;
      for (int a = 0; a < d; ++a) {
        SVec mid = mul2(mul2(R, e1[a]), Rinv);
        for (int b = 0; b < d; ++b) {
          lhh_add(lhs, lprod(p, a, q, b), mul2(mid, e2[b]), unit_c);
          lhh_add(rhs, lprod(q, b, p, a), mul2(e2[b], mid), unit_c);
        }
      }
      compare(rep, "cross " + slot_name(L, p) + "," + slot_name(L, q), lhs, rhs, H, V, W);
    }
  return rep;
}

}  // namespace qmod
