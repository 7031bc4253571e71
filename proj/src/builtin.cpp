#include <cstdlib>
#include <sstream>

#include "qmod/hopf.hpp"

namespace qmod {

namespace {

struct Generator {
  SVec coproduct;
  Vec antipode;
  Cyclotomic counit;
};

// Fill comult, antipode and counit from generator data, given that basis
// element b equals the ordered product of generators words[b].
void extend_from_generators(HopfAlgebra& H, const std::vector<Generator>& gens,
                            const std::vector<std::vector<int>>& words) {
  const int n = H.dim, order = H.order();
  H.comult = Tensor({n, n, n}, order);
  H.counit = zero_vec(n, order);
  H.antipode = LinearMap(n, n, order);
  H.finalize();
  for (int b = 0; b < n; ++b) {
    SVec d = H.tensor_one(2);
    Vec s = H.one();
    Cyclotomic e(order, 1);
    for (int g : words[b]) {
      d = H.tensor_mul(d, gens[g].coproduct, 2);
      s = H.mul(gens[g].antipode, s);
      e *= gens[g].counit;
    }
    for (const auto& [idx, c] : d) H.comult.set({b, static_cast<int>(idx / n), static_cast<int>(idx % n)}, c);
    for (int i = 0; i < n; ++i)
      if (!s[i].is_zero()) H.antipode.matrix.set({i, b}, s[i]);
    H.counit[b] = e;
  }
  H.finalize();
}

// zeta_m^k inside Q(zeta_order), m | order or m <= 2
Cyclotomic root_of_unity(int order, int m, long k) {
  if (m <= 2) {
    long r = ((k % m) + m) % m;
    return Cyclotomic(order, (m == 2 && r == 1) ? -1 : 1);
  }
  return Cyclotomic::zeta_power(order, k * (order / m));
}

int field_for(int m) { return m <= 2 ? 1 : m; }

Representation one_dim_rep(const std::string& name, const Vec& values) {
  Representation r;
  r.name = name;
  r.dim_v = 1;
  for (const auto& v : values) r.mats.push_back(Mat{Vec{v}});
  return r;
}

void attach_ribbon(Algebra& A) {
  if (A.R) {
    auto cands = find_ribbon_element(A.H, *A.R);
    // prefer the candidate with trivial pivot
    for (const auto& c : cands)
      if (c.pivot == A.H.one()) {
        A.ribbon = c;
        break;
      }
    if (!A.ribbon && !cands.empty()) A.ribbon = cands.front();
  }
  A.pivot = A.ribbon ? std::optional<Vec>(A.ribbon->pivot) : find_pivotal(A.H, A.grouplikes);
}

void require_quasitriangular(const Algebra& A) {
  if (!A.R) return;
  Report r = verify_quasitriangular(A.H, *A.R);
  if (r.pass()) return;
  std::string failed;
  for (const auto& c : r.checks)
    if (!c.pass) failed += " " + c.name;
  throw Error("builtin " + A.name + ": attached R-matrix failed:" + failed);
}

}  // namespace

Algebra group_algebra(int n, bool bicharacter) {
  if (n < 1) throw BadParams("group_algebra: order must be positive");
  const int order = field_for(n);
  Algebra A;
  A.name = "group_algebra(" + std::to_string(n) + (bicharacter ? ")" : ",trivial)");
  HopfAlgebra& H = A.H;
  H.dim = n;
  H.scalar_order = order;
  H.mult = Tensor({n, n, n}, order);
  H.comult = Tensor({n, n, n}, order);
  H.antipode = LinearMap(n, n, order);
  H.counit = zero_vec(n, order);
  H.unit = unit_vec(n, 0, order);
  for (int i = 0; i < n; ++i) {
    H.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) H.mult.set({i, j, (i + j) % n}, Cyclotomic(order, 1));
    H.comult.set({i, i, i}, Cyclotomic(order, 1));
    H.antipode.matrix.set({(n - i) % n, i}, Cyclotomic(order, 1));
    H.counit[i] = Cyclotomic(order, 1);
  }
  H.finalize();
  for (int i = 0; i < n; ++i) A.grouplikes.push_back(H.basis(i));
  QuasitriangularData Q;
  if (!bicharacter) {
    Q.R[0] = Cyclotomic(order, 1);
    Q.R_inv[0] = Cyclotomic(order, 1);
  } else {
    // idempotents e_a = (1/n) sum_k zeta^{-ak} g^k, R = sum zeta^{ab} e_a (x) e_b
    std::vector<Vec> e(n, H.zero_elt());
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) e[a][k] = root_of_unity(order, n, -static_cast<long>(a) * k) * Cyclotomic(order, mpq_class(1, n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        SVec t = H.pure2(e[a], e[b]);
        saxpy(Q.R, root_of_unity(order, n, static_cast<long>(a) * b), t);
        saxpy(Q.R_inv, root_of_unity(order, n, -static_cast<long>(a) * b), t);
      }
  }
  A.R = Q;
  for (int j = 0; j < n; ++j) {
    Vec vals = zero_vec(n, order);
    for (int k = 0; k < n; ++k) vals[k] = root_of_unity(order, n, static_cast<long>(j) * k);
    A.reps.push_back(one_dim_rep("chi" + std::to_string(j), vals));
  }
  require_quasitriangular(A);
  attach_ribbon(A);
  return A;
}

Algebra taft(int p) {
  if (p < 2) throw BadParams("taft: p must be at least 2");
  const int order = field_for(p), n = p * p;
  Algebra A;
  A.name = p == 2 ? "sweedler" : "taft(" + std::to_string(p) + ")";
  HopfAlgebra& H = A.H;
  H.dim = n;
  H.scalar_order = order;
  // basis g^a x^b at index a + p b; x g = zeta^{-1} g x
  auto id = [p](int a, int b) { return a + p * b; };
  H.mult = Tensor({n, n, n}, order);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (b + d >= p) continue;
          H.mult.set({id(a, b), id(c, d), id((a + c) % p, b + d)}, root_of_unity(order, p, -static_cast<long>(b) * c));
        }
  H.unit = unit_vec(n, 0, order);
  for (int b = 0; b < p; ++b)
    for (int a = 0; a < p; ++a) {
      std::string s;
      if (a) s += a == 1 ? "g" : "g^" + std::to_string(a);
      if (b) s += b == 1 ? "x" : "x^" + std::to_string(b);
      H.basis_names.push_back(s.empty() ? "1" : s);
    }
  // reorder names to index order a + p b
  {
    std::vector<std::string> names(n);
    for (int b = 0; b < p; ++b)
      for (int a = 0; a < p; ++a) names[id(a, b)] = H.basis_names[b * p + a];
    H.basis_names = names;
  }
  H.comult = Tensor({n, n, n}, order);
  H.antipode = LinearMap(n, n, order);
  H.counit = zero_vec(n, order);
  H.finalize();
  Generator g, x;
  g.coproduct = H.pure2(H.basis(id(1 % p, 0)), H.basis(id(1 % p, 0)));
  g.antipode = H.basis(id(p - 1, 0));
  g.counit = Cyclotomic(order, 1);
  x.coproduct = H.pure2(H.basis(id(0, 1)), H.one());
  saxpy(x.coproduct, Cyclotomic(order, 1), H.pure2(H.basis(id(1, 0)), H.basis(id(0, 1))));
  x.antipode = scaled(H.mul(H.basis(id(p - 1, 0)), H.basis(id(0, 1))), Cyclotomic(order, -1));
  x.counit = Cyclotomic(order);
  std::vector<std::vector<int>> words(n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      std::vector<int> w(a, 0);
      w.insert(w.end(), b, 1);
      words[id(a, b)] = w;
    }
  extend_from_generators(H, {g, x}, words);
  for (int a = 0; a < p; ++a) A.grouplikes.push_back(H.basis(id(a, 0)));
  for (int j = 0; j < p; ++j) {
    Vec vals = zero_vec(n, order);
    for (int a = 0; a < p; ++a) vals[id(a, 0)] = root_of_unity(order, p, static_cast<long>(j) * a);
    A.reps.push_back(one_dim_rep(p == 2 ? (j ? "chi-" : "chi+") : "chi" + std::to_string(j), vals));
  }
  A.pivot = find_pivotal(A.H, A.grouplikes);
  return A;
}

Algebra sweedler() {
  Algebra A = taft(2);
  HopfAlgebra& H = A.H;
  const int order = H.order();
  // R_alpha with alpha = 1
  QuasitriangularData Q;
  const Cyclotomic h(order, mpq_class(1, 2));
  Vec one = H.one(), gg = H.basis(1), xx = H.basis(2), gx = H.basis(3);
  saxpy(Q.R, h, H.pure2(one, one));
  saxpy(Q.R, h, H.pure2(one, gg));
  saxpy(Q.R, h, H.pure2(gg, one));
  saxpy(Q.R, -h, H.pure2(gg, gg));
  saxpy(Q.R, h, H.pure2(xx, xx));
  saxpy(Q.R, -h, H.pure2(xx, gx));
  saxpy(Q.R, h, H.pure2(gx, gx));
  saxpy(Q.R, h, H.pure2(gx, xx));
  auto inv = invert_element2(H, Q.R);
  if (!inv) throw Error("sweedler: R not invertible");
  Q.R_inv = *inv;
  A.R = Q;
  require_quasitriangular(A);
  attach_ribbon(A);
  return A;
}


Algebra drinfeld_double_of(const Algebra& A) {
  auto [D, Q] = drinfeld_double(A.H);
  Algebra out;
  out.name = "double(" + A.name + ")";
  out.H = D;
  out.R = Q;
  const int n = A.H.dim;
  // characters f (x) a -> f(gamma) chi(a), kept when multiplicative
  int gi = 0;
  for (const auto& gamma : A.grouplikes) {
    for (const auto& chi : A.reps) {
      if (chi.dim_v != 1) continue;
      Vec vals = zero_vec(n * n, D.order());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vals[i * n + j] = gamma[i] * chi.mats[j][0][0];
      Representation r = one_dim_rep(chi.name + "@" + std::to_string(gi), vals);
      if (verify_representation(D, r).pass()) out.reps.push_back(r);
    }
    ++gi;
  }
  // grouplikes psi (x) gamma, psi a character of A viewed in A*
  for (const auto& chi : A.reps) {
    if (chi.dim_v != 1) continue;
    for (const auto& gamma : A.grouplikes) {
      Vec w = zero_vec(n * n, D.order());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i * n + j] = chi.mats[i][0][0] * gamma[j];
      if (D.coproduct(w) == D.pure2(w, w)) out.grouplikes.push_back(w);
    }
  }
  require_quasitriangular(out);
  attach_ribbon(out);
  return out;
}

Algebra restricted_sl2(int p) {
  if (p < 2) throw BadParams("restricted_sl2: p must be at least 2");
  const int order = 4 * p, n = 2 * p * p * p, kp = 2 * p;
  Algebra A;
  A.name = "restricted_sl2(" + std::to_string(p) + ")";
  HopfAlgebra& H = A.H;
  H.dim = n;
  H.scalar_order = order;
  // basis E^a F^b K^c at ((a p) + b) 2p + c; q = zeta_{4p}^2
  auto id = [p, kp](int a, int b, int c) { return (a * p + b) * kp + ((c % kp) + kp) % kp; };
  auto q = [order](long k) { return Cyclotomic::zeta_power(order, 2 * k); };
  const Cyclotomic one(order, 1);
  const Cyclotomic qdiff_inv = (q(1) - q(-1)).inverse();
  using Elt = std::map<int, Cyclotomic>;
  auto addto = [](Elt& e, int k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = e.find(k);
    if (it == e.end())
      e.emplace(k, c);
    else {
      it->second += c;
      if (it->second.is_zero()) e.erase(it);
    }
  };
  auto decode = [p, kp](int i, int& a, int& b, int& c) {
    c = i % kp;
    b = (i / kp) % p;
    a = i / (kp * p);
  };
  // left multiplication by a generator: 0 = E, 1 = F, 2 = K
  auto left_gen = [&](int gen, const Elt& x) {
    Elt r;
    for (const auto& [i, coef] : x) {
      int a, b, c;
      decode(i, a, b, c);
      if (gen == 0) {
        if (a + 1 < p) addto(r, id(a + 1, b, c), coef);
      } else if (gen == 2) {
        addto(r, id(a, b, c + 1), coef * q(2 * (a - b)));
      } else {
        if (b + 1 < p) addto(r, id(a, b + 1, c), coef);
        if (a > 0) {
          // F E^a = E^a F - E^{a-1} (alpha K - beta K^-1) / (q - q^-1)
          Cyclotomic alpha(order), beta(order);
          for (int m = 0; m < a; ++m) {
            alpha += q(2 * m);
            beta += q(-2 * m);
          }
          addto(r, id(a - 1, b, c + 1), -coef * alpha * q(-2 * b) * qdiff_inv);
          addto(r, id(a - 1, b, c - 1), coef * beta * q(2 * b) * qdiff_inv);
        }
      }
    }
    return r;
  };
  H.mult = Tensor({n, n, n}, order);
  for (int i = 0; i < n; ++i) {
    int a, b, c;
    decode(i, a, b, c);
    for (int j = 0; j < n; ++j) {
      Elt x{{j, one}};
      for (int t = 0; t < c; ++t) x = left_gen(2, x);
      for (int t = 0; t < b; ++t) x = left_gen(1, x);
      for (int t = 0; t < a; ++t) x = left_gen(0, x);
      for (const auto& [k, coef] : x) H.mult.set({i, j, k}, coef);
    }
  }
  H.unit = unit_vec(n, 0, order);
  for (int i = 0; i < n; ++i) {
    int a, b, c;
    decode(i, a, b, c);
    std::string s;
    if (a) s += a == 1 ? "E" : "E^" + std::to_string(a);
    if (b) s += b == 1 ? "F" : "F^" + std::to_string(b);
    if (c) s += c == 1 ? "K" : "K^" + std::to_string(c);
    H.basis_names.push_back(s.empty() ? "1" : s);
  }
  H.comult = Tensor({n, n, n}, order);
  H.antipode = LinearMap(n, n, order);
  H.counit = zero_vec(n, order);
  H.finalize();
  const Vec E = H.basis(id(1, 0, 0)), F = H.basis(id(0, 1, 0)), K = H.basis(id(0, 0, 1)),
            Ki = H.basis(id(0, 0, -1)), I = H.one();
  Generator gE, gF, gK;
  gE.coproduct = H.pure2(E, K);
  saxpy(gE.coproduct, one, H.pure2(I, E));
  gE.antipode = scaled(H.mul(E, Ki), -one);
  gE.counit = Cyclotomic(order);
  gF.coproduct = H.pure2(F, I);
  saxpy(gF.coproduct, one, H.pure2(Ki, F));
  gF.antipode = scaled(H.mul(K, F), -one);
  gF.counit = Cyclotomic(order);
  gK.coproduct = H.pure2(K, K);
  gK.antipode = Ki;
  gK.counit = one;
  std::vector<std::vector<int>> words(n);
  for (int i = 0; i < n; ++i) {
    int a, b, c;
    decode(i, a, b, c);
    std::vector<int> w(a, 0);
    w.insert(w.end(), b, 1);
    w.insert(w.end(), c, 2);
    words[i] = w;
  }
  extend_from_generators(H, {gE, gF, gK}, words);
  for (int c = 0; c < kp; ++c) A.grouplikes.push_back(H.basis(id(0, 0, c)));

  // Gauss-sum Cartan factor: eigenvalue zeta_{4p}^{lm} on K-weights q^l, q^m, l, m in [0, 2p)
  SVec RK;
  const Cyclotomic norm(order, mpq_class(1, kp * kp));
  for (int a = 0; a < kp; ++a)
    for (int b = 0; b < kp; ++b) {
      Cyclotomic c(order);
      for (int l = 0; l < kp; ++l)
        for (int m = 0; m < kp; ++m) c += Cyclotomic::zeta_power(order, static_cast<long>(l) * m - 2L * a * l - 2L * b * m);
      c *= norm;
      sadd(RK, static_cast<std::int64_t>(id(0, 0, a)) * n + id(0, 0, b), c);
    }
  // quasi-R part: sum_m (q - q^-1)^m / [m]! q^{m(m-1)/2} E^m (x) F^m
  SVec Theta;
  {
    Cyclotomic fact(order, 1);
    Cyclotomic qd = q(1) - q(-1);
    Cyclotomic pw(order, 1);
    for (int m = 0; m < p; ++m) {
      if (m > 0) {
        fact *= (q(m) - q(-m)) * qdiff_inv;
        pw *= qd;
      }
      // q^{m(m-1)/2} = zeta_{4p}^{m(m-1)}
      Cyclotomic c = pw / fact * Cyclotomic::zeta_power(order, static_cast<long>(m) * (m - 1));
      sadd(Theta, static_cast<std::int64_t>(id(m, 0, 0)) * n + id(0, m, 0), c);
    }
  }
  QuasitriangularData Q;
  Q.R = H.tensor_mul(RK, Theta, 2);
  auto inv = invert_element2(H, Q.R);
  if (inv) Q.R_inv = *inv;
  A.R = Q;
  A.R_unverified = true;

  // simple modules X^{+-}_s: K v_i = +- q^{s-1-2i} v_i, F v_i = v_{i+1}, E v_i = +- [i][s-i] v_{i-1}
  auto qint = [&](int k) { return (q(k) - q(-k)) * qdiff_inv; };
  for (int sign : {1, -1})
    for (int s = 1; s <= p; ++s) {
      Mat mE = mat_zero(s, s, order), mF = mat_zero(s, s, order), mK = mat_zero(s, s, order);
      for (int i = 0; i < s; ++i) {
        mK[i][i] = q(s - 1 - 2 * i) * Cyclotomic(order, sign);
        if (i + 1 < s) mF[i + 1][i] = one;
        if (i > 0) mE[i - 1][i] = qint(i) * qint(s - i) * Cyclotomic(order, sign);
      }
      Representation r;
      r.name = std::string("X") + (sign > 0 ? "+" : "-") + std::to_string(s);
      r.dim_v = s;
      for (int i = 0; i < n; ++i) {
        int a, b, c;
        decode(i, a, b, c);
        Mat m = mat_identity(s, order);
        for (int t = 0; t < a; ++t) m = mat_mul(m, mE);
        for (int t = 0; t < b; ++t) m = mat_mul(m, mF);
        for (int t = 0; t < c; ++t) m = mat_mul(m, mK);
        r.mats.push_back(m);
      }
      A.reps.push_back(r);
    }
  A.pivot = find_pivotal(A.H, A.grouplikes);
  return A;
}

Algebra builtin(const std::string& key) {
  std::vector<std::string> parts;
  {
    std::stringstream ss(key);
    std::string t;
    while (std::getline(ss, t, ':')) parts.push_back(t);
  }
  if (parts.empty()) throw UnknownBuiltin("empty builtin name");
  auto int_at = [&](size_t i) {
    if (i >= parts.size()) throw BadParams("builtin " + key + ": missing parameter");
    char* end = nullptr;
    long v = std::strtol(parts[i].c_str(), &end, 10);
    if (*end != 0 || v < 1 || v > 64) throw BadParams("builtin " + key + ": bad integer parameter");
    return static_cast<int>(v);
  };
  const std::string& name = parts[0];
  if (name == "group_algebra") {
    int n = int_at(1);
    bool bich = true;
    if (parts.size() > 2) {
      if (parts[2] == "trivial")
        bich = false;
      else if (parts[2] != "bicharacter")
        throw BadParams("group_algebra: unknown R choice " + parts[2]);
    }
    return group_algebra(n, bich);
  }
  if (name == "sweedler") return sweedler();
  if (name == "taft") return taft(int_at(1));
  if (name == "restricted_sl2") return restricted_sl2(int_at(1));
  if (name == "double" || name == "drinfeld_double_of") {
    std::string rest = key.substr(key.find(':') == std::string::npos ? key.size() : key.find(':') + 1);
    if (rest.empty()) throw BadParams("double: missing inner builtin");
    return drinfeld_double_of(builtin(rest));
  }
  throw UnknownBuiltin("unknown builtin: " + name);
}

}  // namespace qmod
