#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmod/wilson.hpp"

using namespace qmod;

namespace {

LoopWord random_word(std::mt19937& rng, Signature sig) {
  LoopWord w;
  const int len = 1 + rng() % 5;
  for (int k = 0; k < len; ++k) {
    const int r = rng() % sig.slots();
    Letter l{};
    if (r < 2 * sig.g) {
      l.gen = r % 2 ? Generator::a : Generator::b;
      l.index = r / 2 + 1;
    } else {
      l.gen = Generator::m;
      l.index = sig.g + (r - 2 * sig.g) + 1;
    }
    l.exponent = rng() % 2 ? 1 : -1;
    w.letters.push_back(l);
  }
  return w;
}

}  // namespace

TEST_CASE("word parsing") {
  LoopWord w = parse_word("a1 b1^-1  m2^1 b12");
  REQUIRE(w.letters.size() == 4);
  CHECK(w.letters[0].gen == Generator::a);
  CHECK(w.letters[1].exponent == -1);
  CHECK(w.letters[2].gen == Generator::m);
  CHECK(w.letters[2].exponent == 1);
  CHECK(w.letters[3].index == 12);
  CHECK(format_word(w) == "a1 b1^-1 m2 b12");
  CHECK(format_word(parse_word(format_word(w))) == format_word(w));
  CHECK(parse_word("").letters.empty());
  for (const char* bad : {"x1", "a", "a1^2", "b1^-", "m1-1", "a1b1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_word(bad), ParseError);
  }
}

TEST_CASE("bad generator indices") {
  Algebra A = builtin("double:group_algebra:2");
  Moduli L = make_moduli(A, {1, 1});
  for (const char* bad : {"a2", "b0", "m1", "m3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(holonomy(L, A, parse_word(bad)), BadIndex);
  }
  CHECK_NOTHROW(holonomy(L, A, parse_word("a1 b1 m2")));
}

TEST_CASE("holonomies multiply along the word") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {1, 1});
  CHECK(lh_equal(holonomy(L, A, parse_word("")), lh_one(L)));
  CHECK(lh_equal(holonomy(L, A, parse_word("m2")), holonomy_letter(L, {SlotKind::M, 2})));
  CHECK(lh_equal(holonomy(L, A, parse_word("a1 a1^-1")), lh_one(L)));
  CHECK(lh_equal(holonomy(L, A, parse_word("a1 m2^-1")),
                 lh_mul(L, holonomy(L, A, parse_word("a1")), holonomy(L, A, parse_word("m2^-1")))));
  // the commutator subword carries v^2
  LHElement bare = lh_one(L);
  for (const char* t : {"b1", "a1^-1", "b1^-1", "a1"}) bare = lh_mul(L, bare, holonomy(L, A, parse_word(t)));
  LHElement c = holonomy(L, A, parse_word("b1 a1^-1 b1^-1 a1"));
  CHECK(lh_equal(c, lh_left_h(L, A.H.mul(A.ribbon->v, A.ribbon->v), bare)));
}

TEST_CASE("commutator needs a ribbon element") {
  Algebra D = builtin("double:sweedler");
  Moduli L = make_moduli(D, {1, 0});
  CHECK_THROWS_AS(holonomy(L, D, parse_word("b1 a1^-1 b1^-1 a1")), MissingRibbon);
  CHECK_NOTHROW(holonomy(L, D, parse_word("a1 b1")));
}

TEST_CASE("trivial color gives the counit") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {1, 1});
  std::vector<Representation> st;
  const Representation* triv = find_color(A, "trivial", st);
  REQUIRE(triv);
  CHECK(wilson_loop(L, A, parse_word(""), *triv) == L.unit());
}

TEST_CASE("Wilson loops are invariant") {
  std::mt19937 rng(29);
  for (const char* s : {"group_algebra:3", "sweedler", "double:group_algebra:2"}) {
    CAPTURE(s);
    Algebra A = builtin(s);
    std::vector<Representation> st;
    auto colors = all_colors(A, st);
    for (Signature sig : {Signature{0, 1}, Signature{1, 0}, Signature{0, 2}}) {
      Moduli L = make_moduli(A, sig);
      for (int t = 0; t < 12; ++t) {
        LoopWord w = random_word(rng, sig);
        const Representation* V = colors[rng() % colors.size()];
        CAPTURE(format_word(w));
        CAPTURE(V->name);
        CHECK(is_invariant(L, wilson_loop(L, A, w, *V)));
      }
      for (const auto& w : image_words(sig))
        for (const auto* V : colors) CHECK(is_invariant(L, wilson_loop(L, A, w, *V)));
    }
  }
}

TEST_CASE("a non-invariant element is detected") {
  Algebra A = builtin("sweedler");
  Moduli L = make_moduli(A, {0, 1});
  bool some = false;
  for (std::int64_t i = 0; i < L.dim(); ++i) some = some || !is_invariant(L, L.basis(i));
  CHECK(some);
  CHECK(is_invariant(L, L.unit()));
}

TEST_CASE("Wilson image") {
  Algebra A = builtin("double:group_algebra:2");
  Moduli L = make_moduli(A, {0, 1});
  std::vector<Representation> st;
  std::vector<const Representation*> simples;
  for (const auto& r : A.reps) simples.push_back(&r);
  Subspace im = wilson_image(L, A, simples), inv = invariants(L);
  CHECK(im == inv);
  CHECK(im.dim() == 4);
  Moduli S = make_moduli(builtin("sweedler"), {1, 1});
  Algebra Sw = builtin("sweedler");
  Subspace ims = wilson_image(S, Sw, all_colors(Sw, st));
  CHECK(invariants(S).contains(ims));
}

TEST_CASE("image words") {
  auto w = image_words({1, 1});
  CHECK(!w.empty());
  bool has_inverse = false;
  for (const auto& x : w)
    for (const auto& l : x.letters) has_inverse = has_inverse || l.exponent < 0;
  CHECK(has_inverse);
  CHECK(image_words({0, 0}).empty());
}

TEST_CASE("colors") {
  Algebra A = builtin("double:group_algebra:2");
  std::vector<Representation> st;
  auto cs = all_colors(A, st);
  CHECK(cs.size() == A.reps.size() + 2);
  CHECK(find_color(A, "regular", st));
  CHECK(find_color(A, "chi1@1", st));
  CHECK(!find_color(A, "nope", st));
}
