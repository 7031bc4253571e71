#include "qmod/linalg.hpp"

#include <algorithm>

namespace qmod {

Vec zero_vec(int n, int order) { return Vec(n, Cyclotomic(order)); }

Vec unit_vec(int n, int i, int order) {
  Vec v = zero_vec(n, order);
  v[i] = Cyclotomic(order, 1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& axpy(Vec& y, const Cyclotomic& a, const Vec& x) {
  if (a.is_zero()) return y;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(a, x[i]);
  return y;
}

Vec scaled(const Vec& x, const Cyclotomic& a) {
  Vec r = x;
  for (auto& e : r) e *= a;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

void sadd(SVec& v, std::int64_t k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

void saxpy(SVec& y, const Cyclotomic& a, const SVec& x) {
  if (a.is_zero()) return;
  for (const auto& [k, c] : x) sadd(y, k, a * c);
}

SVec to_sparse(const Vec& v) {
  SVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace(static_cast<std::int64_t>(i), v[i]);
  return s;
}

Vec to_dense(const SVec& v, int n, int order) {
  Vec r = zero_vec(n, order);
  for (const auto& [k, c] : v) r[k] = c;
  return r;
}

// ---------------------------------------------------------------------------
// Tensor

Tensor::Tensor(std::vector<int> s, int o) : shape(std::move(s)), order(o) {}

std::int64_t Tensor::size() const {
  std::int64_t n = 1;
  for (int d : shape) n *= d;
  return n;
}

void Tensor::check_index(const std::vector<int>& idx) const {
  if (idx.size() != shape.size()) throw Error("tensor index rank mismatch");
  for (size_t i = 0; i < idx.size(); ++i)
    if (idx[i] < 0 || idx[i] >= shape[i]) throw Error("tensor index out of range");
}

Cyclotomic Tensor::get(const std::vector<int>& idx) const {
  check_index(idx);
  auto it = entries.find(idx);
  return it == entries.end() ? Cyclotomic(order) : it->second;
}

void Tensor::set(const std::vector<int>& idx, const Cyclotomic& v) {
  check_index(idx);
  if (v.is_zero())
    entries.erase(idx);
  else
    entries[idx] = v;
}

void Tensor::add(const std::vector<int>& idx, const Cyclotomic& v) {
  check_index(idx);
  if (v.is_zero()) return;
  auto it = entries.find(idx);
  if (it == entries.end()) {
    entries.emplace(idx, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) entries.erase(it);
}

std::int64_t Tensor::flat_index(const std::vector<int>& idx) const {
  std::int64_t f = 0;
  for (size_t i = 0; i < idx.size(); ++i) f = f * shape[i] + idx[i];
  return f;
}

std::vector<int> Tensor::multi_index(std::int64_t flat) const {
  std::vector<int> idx(shape.size());
  for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(flat % shape[i]);
    flat /= shape[i];
  }
  return idx;
}

Vec Tensor::to_dense() const {
  Vec v = zero_vec(static_cast<int>(size()), order);
  for (const auto& [k, c] : entries) v[flat_index(k)] = c;
  return v;
}

SVec Tensor::to_sparse() const {
  SVec v;
  for (const auto& [k, c] : entries) v.emplace(flat_index(k), c);
  return v;
}

Tensor Tensor::from_dense(const std::vector<int>& shape, int order, const Vec& v) {
  Tensor t(shape, order);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.entries.emplace(t.multi_index(static_cast<std::int64_t>(i)), v[i]);
  return t;
}

Tensor Tensor::from_sparse(const std::vector<int>& shape, int order, const SVec& v) {
  Tensor t(shape, order);
  for (const auto& [k, c] : v)
    if (!c.is_zero()) t.entries.emplace(t.multi_index(k), c);
  return t;
}

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(int codomain, int domain, int order)
    : domain_dim(domain), codomain_dim(codomain), matrix({codomain, domain}, order) {}

LinearMap LinearMap::from_rows(const std::vector<Vec>& rows, int domain, int order) {
  LinearMap m(static_cast<int>(rows.size()), domain, order);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < domain; ++j)
      if (!rows[i][j].is_zero()) m.matrix.entries.emplace(std::vector<int>{static_cast<int>(i), j}, rows[i][j]);
  return m;
}

LinearMap LinearMap::from_columns(const std::vector<Vec>& cols, int codomain, int order) {
  LinearMap m(codomain, static_cast<int>(cols.size()), order);
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < codomain; ++i)
      if (!cols[j][i].is_zero()) m.matrix.entries.emplace(std::vector<int>{i, static_cast<int>(j)}, cols[j][i]);
  return m;
}

std::vector<Vec> LinearMap::rows() const {
  std::vector<Vec> r(codomain_dim, zero_vec(domain_dim, order()));
  for (const auto& [k, c] : matrix.entries) r[k[0]][k[1]] = c;
  return r;
}

Vec LinearMap::apply(const Vec& x) const {
  Vec y = zero_vec(codomain_dim, order());
  for (const auto& [k, c] : matrix.entries)
    if (!x[k[1]].is_zero()) y[k[0]].add_product(c, x[k[1]]);
  return y;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct Echelon {
  std::vector<Vec> rows;  // first `rank` rows are the echelon rows
  std::vector<int> pivcols;
};

// Bareiss elimination; division by the previous pivot is exact in the
// coefficient ring generated by the entries.
Echelon bareiss(std::vector<Vec> a, int ncols, int order) {
  const int m = static_cast<int>(a.size());
  Echelon e;
  Cyclotomic prev(order, 1);
  int r = 0;
  for (int c = 0; c < ncols && r < m; ++c) {
    int p = r;
    while (p < m && a[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const Cyclotomic piv = a[r][c];
    Cyclotomic prev_inv = prev.inverse();
    for (int i = r + 1; i < m; ++i) {
      const Cyclotomic f = a[i][c];
      for (int j = c + 1; j < ncols; ++j) {
        if (f.is_zero() && a[i][j].is_zero()) continue;
        Cyclotomic t = piv * a[i][j];
        if (!f.is_zero() && !a[r][j].is_zero()) t -= f * a[r][j];
        if (!prev.is_one()) t *= prev_inv;
        a[i][j] = std::move(t);
      }
      a[i][c] = Cyclotomic(order);
    }
    prev = piv;
    e.pivcols.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

}  // namespace

std::vector<Vec> kernel_rows(const std::vector<Vec>& rows, int ncols, int order) {
  Echelon e = bareiss(rows, ncols, order);
  const int r = static_cast<int>(e.pivcols.size());
  std::vector<char> is_piv(ncols, 0);
  for (int c : e.pivcols) is_piv[c] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec x = zero_vec(ncols, order);
    x[f] = Cyclotomic(order, 1);
    for (int i = r - 1; i >= 0; --i) {
      const int pc = e.pivcols[i];
      Cyclotomic s(order);
      for (int j = pc + 1; j < ncols; ++j)
        if (!x[j].is_zero() && !e.rows[i][j].is_zero()) s.add_product(e.rows[i][j], x[j]);
      if (!s.is_zero()) x[pc] = -s / e.rows[i][pc];
    }
    out.push_back(std::move(x));
  }
  return out;
}

int rank_rows(const std::vector<Vec>& rows, int ncols, int order) {
  return static_cast<int>(bareiss(rows, ncols, order).pivcols.size());
}

std::optional<Vec> solve_rows(const std::vector<Vec>& rows, const Vec& b, int ncols, int order) {
  std::vector<Vec> aug = rows;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = bareiss(aug, ncols + 1, order);
  if (!e.pivcols.empty() && e.pivcols.back() == ncols) return std::nullopt;
  Vec x = zero_vec(ncols, order);
  for (int i = static_cast<int>(e.pivcols.size()) - 1; i >= 0; --i) {
    const int pc = e.pivcols[i];
    Cyclotomic s = e.rows[i][ncols];
    for (int j = pc + 1; j < ncols; ++j)
      if (!x[j].is_zero() && !e.rows[i][j].is_zero()) s -= e.rows[i][j] * x[j];
    x[pc] = s / e.rows[i][pc];
  }
  return x;
}

std::vector<Tensor> kernel(const LinearMap& m) {
  std::vector<Tensor> out;
  for (const auto& v : kernel_rows(m.rows(), m.domain_dim, m.order()))
    out.push_back(Tensor::from_dense({m.domain_dim}, m.order(), v));
  return out;
}

int rank(const LinearMap& m) { return rank_rows(m.rows(), m.domain_dim, m.order()); }

int nullity(const LinearMap& m) { return m.domain_dim - rank(m); }

// ---------------------------------------------------------------------------
// Subspace

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Cyclotomic c = r[piv_[i]];
    if (c.is_zero()) continue;
    axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  int p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  Cyclotomic inv = r[p].inverse();
  if (!inv.is_one())
    for (auto& x : r) x *= inv;
  for (auto& b : basis_) {
    const Cyclotomic c = b[p];
    if (!c.is_zero()) axpy(b, -c, r);
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  piv_.insert(piv_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& b : o.basis())
    if (!contains(b)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec c = zero_vec(dim(), order_);
  for (int i = 0; i < dim(); ++i) c[i] = v[piv_[i]];
  Vec r = v;
  for (int i = 0; i < dim(); ++i) axpy(r, -c[i], basis_[i]);
  if (!is_zero(r)) return std::nullopt;
  return c;
}

Subspace span(const std::vector<Vec>& vs, int ambient, int order) {
  Subspace s(ambient, order);
  for (const auto& v : vs) s.add(v);
  return s;
}

Subspace full_space(int ambient, int order) {
  Subspace s(ambient, order);
  for (int i = 0; i < ambient; ++i) s.add(unit_vec(ambient, i, order));
  return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  for (const auto& v : b.basis()) s.add(v);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  Subspace out(a.ambient(), a.order());
  const int da = a.dim(), db = b.dim(), n = a.ambient();
  if (da == 0 || db == 0) return out;
  // sum x_i a_i - sum y_j b_j = 0
  std::vector<Vec> rows(n, zero_vec(da + db, a.order()));
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < n; ++k) rows[k][i] = a.basis()[i][k];
  for (int j = 0; j < db; ++j)
    for (int k = 0; k < n; ++k) rows[k][da + j] = -b.basis()[j][k];
  for (const auto& z : kernel_rows(rows, da + db, a.order())) {
    Vec v = zero_vec(n, a.order());
    for (int i = 0; i < da; ++i) axpy(v, z[i], a.basis()[i]);
    out.add(v);
  }
  return out;
}

Subspace span_closure(const std::vector<Vec>& gens, const MulOracle& mul, const Vec& unit) {
  const int order = unit.empty() ? 1 : unit[0].order();
  Subspace s(static_cast<int>(unit.size()), order);
  s.add(unit);
  for (const auto& g : gens) s.add(g);
  std::vector<Vec> gen_basis = s.basis();
  // multiply new elements by generators until no growth
  std::vector<Vec> frontier = s.basis();
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& g : gen_basis) {
        Vec p = mul(x, g);
        if (s.add(p)) next.push_back(p);
        Vec q = mul(g, x);
        if (s.add(q)) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return s;
}

Subspace left_ideal_closure(const std::vector<Vec>& gens, const MulOracle& mul,
                            const std::vector<Vec>& ambient_basis) {
  const int n = ambient_basis.empty() ? 0 : static_cast<int>(ambient_basis[0].size());
  const int order = n ? ambient_basis[0][0].order() : 1;
  Subspace s(n, order);
  std::vector<Vec> frontier;
  for (const auto& g : gens)
    if (s.add(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& a : ambient_basis) {
        Vec p = mul(a, x);
        if (s.add(p)) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace qmod
