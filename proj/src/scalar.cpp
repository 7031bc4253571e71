#include "qmod/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace qmod {

namespace {

using QPoly = std::vector<mpq_class>;

struct Field {
  int n = 1;
  int phi = 1;
  std::vector<mpz_class> cyclo;
  std::vector<QPoly> red;  // zeta^k reduced, k < red.size()
};

std::vector<mpz_class> zpoly_divexact(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  std::vector<mpz_class> q(da - db + 1);
  for (int i = da - db; i >= 0; --i) {
    mpz_class c = a[i + db] / b[db];
    q[i] = c;
    for (int j = 0; j <= db; ++j) a[i + j] -= c * b[j];
  }
  return q;
}

std::vector<mpz_class> compute_cyclo(int n);

const std::vector<mpz_class>& cyclo_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto p = compute_cyclo(n);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

std::vector<mpz_class> compute_cyclo(int n) {
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = zpoly_divexact(p, cyclo_cached(d));
  return p;
}

const Field& field_slow(int n);

const Field& field(int n) {
  thread_local int last_n = 0;
  thread_local const Field* last = nullptr;
  if (n == last_n) return *last;
  last = &field_slow(n);
  last_n = n;
  return *last;
}

const Field& field_slow(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->n = n;
  f->cyclo = compute_cyclo(n);
  f->phi = static_cast<int>(f->cyclo.size()) - 1;
  int len = std::max(n, 2 * f->phi);
  f->red.assign(len, QPoly(f->phi, 0));
  for (int k = 0; k < len; ++k) {
    if (k < f->phi) {
      f->red[k][k] = 1;
      continue;
    }
    // x^k = x * x^(k-1), with x^phi = -sum c_i x^i
    const QPoly& prev = f->red[k - 1];
    QPoly& cur = f->red[k];
    mpq_class top = prev[f->phi - 1];
    for (int i = f->phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < f->phi; ++i) cur[i] -= top * mpq_class(f->cyclo[i]);
  }
  return *cache.emplace(n, std::move(f)).first->second;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod m over Q, m monic-ish
QPoly qpoly_mod(QPoly p, const QPoly& m) {
  trim(p);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(p.size()) - 1 >= dm && !p.empty()) {
    int dp = static_cast<int>(p.size()) - 1;
    mpq_class c = p[dp] / m[dm];
    for (int j = 0; j <= dm; ++j) p[dp - dm + j] -= c * m[j];
    trim(p);
  }
  return p;
}

void qpoly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  q.assign(da >= db ? da - db + 1 : 0, 0);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    int d = static_cast<int>(a.size()) - 1;
    mpq_class c = a[d] / b[db];
    q[d - db] = c;
    for (int j = 0; j <= db; ++j) a[d - db + j] -= c * b[j];
    trim(a);
  }
  r = a;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

long mod_pos(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
  int r = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) { return field(n).cyclo; }

Cyclotomic::Cyclotomic() : n_(1), c_(1, 0) {}

Cyclotomic::Cyclotomic(int order) : n_(order) {
  if (order < 1) throw Error("cyclotomic order must be positive");
  c_.assign(field(order).phi, 0);
}

Cyclotomic::Cyclotomic(int order, const mpq_class& r) : Cyclotomic(order) {
  c_[0] = r;
  c_[0].canonicalize();
}

Cyclotomic Cyclotomic::zeta_power(int order, long k, const mpq_class& c) {
  const Field& f = field(order);
  Cyclotomic z(order);
  const QPoly& p = f.red[mod_pos(k, order)];
  for (int i = 0; i < f.phi; ++i) z.c_[i] = c * p[i];
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<mpq_class> coeffs) {
  Cyclotomic z(order);
  const Field& f = field(order);
  if (static_cast<int>(coeffs.size()) <= f.phi) {
    for (size_t i = 0; i < coeffs.size(); ++i) {
      z.c_[i] = coeffs[i];
      z.c_[i].canonicalize();
    }
    return z;
  }
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) z += zeta_power(order, static_cast<long>(i), coeffs[i]);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

void Cyclotomic::check(const Cyclotomic& b) const {
  if (n_ != b.n_)
    throw OrderMismatch("order mismatch: " + std::to_string(n_) + " vs " + std::to_string(b.n_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  check(b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
  check(b);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  check(a);
  check(b);
  const int phi = degree();
  if (phi == 1) {
    c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  const Field& f = field(n_);
  std::vector<mpq_class> conv(2 * phi - 1, 0);
  bool any = false;
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
      any = true;
    }
  }
  if (!any) return;
  for (int k = 0; k < phi; ++k) c_[k] += conv[k];
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k] == 0) continue;
    const QPoly& r = f.red[k];
    for (int i = 0; i < phi; ++i)
      if (r[i] != 0) c_[i] += conv[k] * r[i];
  }
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check(b);
  Cyclotomic r(a.n_);
  r.add_product(a, b);
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  *this = *this * b;
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero");
  const int phi = degree();
  if (phi == 1) return Cyclotomic(n_, 1 / c_[0]);
  const Field& f = field(n_);
  QPoly m(f.cyclo.begin(), f.cyclo.end());
  QPoly a = c_;
  trim(a);
  // extended Euclid: s*a + t*m = gcd
  QPoly r0 = m, r1 = a, s0 = {}, s1 = {1};
  while (!r1.empty() && r1.size() > 1) {
    QPoly q, r;
    qpoly_divmod(r0, r1, q, r);
    QPoly s = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  if (r1.empty()) throw DivisionByZero("element not invertible");
  mpq_class c = 1 / r1[0];
  QPoly inv = qpoly_mod(s1, m);
  Cyclotomic res(n_);
  for (size_t i = 0; i < inv.size(); ++i) res.c_[i] = inv[i] * c;
  return res;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) {
  check(b);
  *this = *this * b.inverse();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw Error("bad op");
}

Cyclotomic embed_order(const Cyclotomic& a, int M) {
  if (M < 1 || M % a.order() != 0)
    throw NotDivisible(std::to_string(a.order()) + " does not divide " + std::to_string(M));
  long step = M / a.order();
  Cyclotomic r(M);
  for (int i = 0; i < a.degree(); ++i)
    if (a.coeffs()[i] != 0) r += Cyclotomic::zeta_power(M, step * i, a.coeffs()[i]);
  return r;
}

Cyclotomic restrict_order(const Cyclotomic& a, int N) {
  int M = a.order();
  if (N < 1 || M % N != 0)
    throw NotDivisible(std::to_string(N) + " does not divide " + std::to_string(M));
  int phiN = euler_phi(N), phiM = a.degree();
  // columns: images of zeta_N^i; solve sum x_i col_i = a
  std::vector<std::vector<mpq_class>> mat(phiM, std::vector<mpq_class>(phiN + 1, 0));
  for (int i = 0; i < phiN; ++i) {
    Cyclotomic img = embed_order(Cyclotomic::zeta_power(N, i), M);
    for (int r = 0; r < phiM; ++r) mat[r][i] = img.coeffs()[r];
  }
  for (int r = 0; r < phiM; ++r) mat[r][phiN] = a.coeffs()[r];
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < phiN && row < phiM; ++col) {
    int p = row;
    while (p < phiM && mat[p][col] == 0) ++p;
    if (p == phiM) continue;
    std::swap(mat[p], mat[row]);
    mpq_class inv = 1 / mat[row][col];
    for (auto& x : mat[row]) x *= inv;
    for (int r = 0; r < phiM; ++r) {
      if (r == row || mat[r][col] == 0) continue;
      mpq_class c = mat[r][col];
      for (int k = col; k <= phiN; ++k) mat[r][k] -= c * mat[row][k];
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int r = row; r < phiM; ++r)
    if (mat[r][phiN] != 0) throw NotDivisible("element does not lie in Q(zeta_" + std::to_string(N) + ")");
  std::vector<mpq_class> x(phiN, 0);
  for (int r = 0; r < row; ++r) x[pivcol[r]] = mat[r][phiN];
  return Cyclotomic::from_coeffs(N, x);
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (int k = 0; k < degree(); ++k) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    out += a.get_str();
    if (k > 0) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(const std::string& text, int order) {
  Cyclotomic acc(order);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad scalar literal '" + text + "': " + why);
  };
  auto read_int = [&]() -> std::string {
    size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(s, i - s);
  };
  skip();
  if (i == text.size()) throw fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected + or -");
    }
    first = false;
    mpq_class coeff = 1;
    bool have_num = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string p = read_int();
      std::string q = "1";
      skip();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        q = read_int();
        if (q.empty()) throw fail("missing denominator");
        if (mpz_class(q) == 0) throw fail("zero denominator");
      }
      coeff = mpq_class(mpz_class(p), mpz_class(q));
      coeff.canonicalize();
      have_num = true;
      skip();
    }
    long k = 0;
    bool have_z = false;
    if (have_num && i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i >= text.size() || text[i] != 'z') throw fail("expected z after *");
    }
    if (i < text.size() && text[i] == 'z') {
      ++i;
      have_z = true;
      k = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        int ks = 1;
        if (i < text.size() && text[i] == '-') {
          ks = -1;
          ++i;
        }
        std::string e = read_int();
        if (e.empty()) throw fail("missing exponent");
        k = ks * std::stol(e);
      }
    }
    if (!have_num && !have_z) throw fail("expected number or z");
    acc += zeta_power(order, k, sign * coeff);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.to_string(); }

}  // namespace qmod
