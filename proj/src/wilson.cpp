#include "qmod/wilson.hpp"

#include <sstream>

namespace qmod {

LoopWord parse_word(const std::string& text) {
  LoopWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    Letter l{};
    switch (tok[0]) {
      case 'a': l.gen = Generator::a; break;
      case 'b': l.gen = Generator::b; break;
      case 'm': l.gen = Generator::m; break;
      default: throw ParseError("bad word token '" + tok + "'");
    }
    size_t pos = 1;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == 1) throw ParseError("missing index in '" + tok + "'");
    l.index = std::stoi(tok.substr(1, pos - 1));
    l.exponent = 1;
    std::string rest = tok.substr(pos);
    if (rest == "^-1") l.exponent = -1;
    else if (!rest.empty() && rest != "^1") throw ParseError("bad exponent in '" + tok + "'");
    w.letters.push_back(l);
  }
  return w;
}

std::string format_word(const LoopWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::a ? 'a' : l.gen == Generator::b ? 'b' : 'm';
    out += std::to_string(l.index);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

namespace {

Slot slot_of(const Moduli& L, const Letter& l) {
  const Signature s = L.sig();
  if (l.gen == Generator::m) {
    if (l.index < s.g + 1 || l.index > s.g + s.n)
      throw BadIndex("m" + std::to_string(l.index) + " needs g+1 <= j <= g+n");
    return {SlotKind::M, l.index};
  }
  if (l.index < 1 || l.index > s.g)
    throw BadIndex(std::string(l.gen == Generator::a ? "a" : "b") + std::to_string(l.index) + " needs 1 <= i <= g");
  return {l.gen == Generator::a ? SlotKind::A : SlotKind::B, l.index};
}

bool is_commutator(const std::vector<Letter>& ls, size_t p) {
  if (p + 4 > ls.size()) return false;
  const int i = ls[p].index;
  auto is = [&](size_t k, Generator g, int e) { return ls[k].gen == g && ls[k].index == i && ls[k].exponent == e; };
  return is(p, Generator::b, 1) && is(p + 1, Generator::a, -1) && is(p + 2, Generator::b, -1) && is(p + 3, Generator::a, 1);
}

}  // namespace

LHElement holonomy(const Moduli& L, const Algebra& A, const LoopWord& w) {
  const auto& ls = w.letters;
  for (const auto& l : ls) slot_of(L, l);
  LHElement out = lh_one(L);
  for (size_t p = 0; p < ls.size();) {
    if (is_commutator(ls, p)) {
      if (!A.ribbon) throw MissingRibbon("commutator subword needs the ribbon element v");
      LHElement c = lh_one(L);
      for (size_t k = p; k < p + 4; ++k) c = lh_mul(L, c, holonomy_letter(L, slot_of(L, ls[k]), ls[k].exponent < 0));
      c = lh_left_h(L, A.H.mul(A.ribbon->v, A.ribbon->v), c);
      out = lh_mul(L, out, c);
      p += 4;
    } else {
      out = lh_mul(L, out, holonomy_letter(L, slot_of(L, ls[p]), ls[p].exponent < 0));
      ++p;
    }
  }
  return out;
}

LMatrix holonomy_matrix(const Moduli& L, const Algebra& A, const LoopWord& w, const Representation& V) {
  return lh_in_rep(holonomy(L, A, w), V);
}

SVec wilson_loop(const Moduli& L, const Algebra& A, const LoopWord& w, const Representation& V) {
  if (!A.pivot) throw MissingRibbon("no pivotal element for the quantum trace");
  const HopfAlgebra& H = A.H;
  std::vector<Cyclotomic> tr(H.dim);
  for (int h = 0; h < H.dim; ++h) {
    Mat m = V.rho(H.mul(*A.pivot, H.basis(h)));
    Cyclotomic t(H.order());
    for (int i = 0; i < V.dim_v; ++i) t += m[i][i];
    tr[h] = t;
  }
  SVec out;
  for (const auto& [b, v] : holonomy(L, A, w).terms) {
    Cyclotomic c(H.order());
    for (const auto& [h, x] : v) c += x * tr[h];
    if (!c.is_zero()) out[b] = c;
  }
  return out;
}

bool is_invariant(const Moduli& L, const SVec& x) {
  const HopfAlgebra& H = L.H();
  for (int h = 0; h < H.dim; ++h) {
    SVec y = L.coad(H.basis(h), x), ex;
    saxpy(ex, H.counit[h], x);
    if (y != ex) return false;
  }
  return true;
}

std::vector<LoopWord> image_words(Signature sig) {
  std::vector<LoopWord> out;
  for (int i = 1; i <= sig.g; ++i)
    for (Generator g : {Generator::a, Generator::b})
      for (int e : {1, -1}) out.push_back({{{g, i, e}}});
  for (int j = sig.g + 1; j <= sig.g + sig.n; ++j)
    for (int e : {1, -1}) out.push_back({{{Generator::m, j, e}}});
  for (int i = 1; i <= sig.g; ++i) {
    out.push_back({{{Generator::a, i, 1}, {Generator::b, i, 1}}});
    out.push_back({{{Generator::b, i, 1}, {Generator::a, i, 1}}});
  }
  return out;
}

Subspace wilson_image(const Moduli& L, const Algebra& A, const std::vector<const Representation*>& colors) {
  std::vector<Vec> gens;
  for (const auto* V : colors)
    for (const auto& w : image_words(L.sig())) gens.push_back(L.to_dense(wilson_loop(L, A, w, *V)));
  MulOracle mul = [&L](const Vec& x, const Vec& y) { return L.to_dense(L.mul(to_sparse(x), to_sparse(y))); };
  return span_closure(gens, mul, L.to_dense(L.unit()));
}

std::vector<const Representation*> all_colors(const Algebra& A, std::vector<Representation>& storage) {
  storage.clear();
  storage.reserve(2);
  storage.push_back(trivial_representation(A.H));
  storage.back().name = "trivial";
  storage.push_back(regular_representation(A.H));
  storage.back().name = "regular";
  std::vector<const Representation*> out{&storage[0], &storage[1]};
  for (const auto& r : A.reps) out.push_back(&r);
  return out;
}

const Representation* find_color(const Algebra& A, const std::string& name, std::vector<Representation>& storage) {
  if (const Representation* r = A.find_rep(name)) return r;
  for (const auto* r : all_colors(A, storage))
    if (r->name == name) return r;
  return nullptr;
}

}  // namespace qmod
