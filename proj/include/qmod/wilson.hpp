// Holonomies of free-group words and their quantum traces.
#pragma once

#include <string>
#include <vector>

#include "qmod/reduction.hpp"

namespace qmod {

struct BadIndex : Error {
  using Error::Error;
};

enum class Generator { a, b, m };

struct Letter {
  Generator gen;
  int index;
  int exponent;  // +1 or -1
};

struct LoopWord {
  std::vector<Letter> letters;
};

// whitespace-separated tokens: a1 b1^-1 m2
LoopWord parse_word(const std::string& text);  // throws ParseError
std::string format_word(const LoopWord& w);

// ordered product of the letter holonomies in L (x) H; each subword b_i a_i^-1 b_i^-1 a_i
// gets the factor 1 (x) v^2 on its left
LHElement holonomy(const Moduli& L, const Algebra& A, const LoopWord& w);  // BadIndex, MissingRibbon
LMatrix holonomy_matrix(const Moduli& L, const Algebra& A, const LoopWord& w, const Representation& V);

// sum_k (g_V Hol(w))^k_k, g the pivotal element
SVec wilson_loop(const Moduli& L, const Algebra& A, const LoopWord& w, const Representation& V);
bool is_invariant(const Moduli& L, const SVec& x);

std::vector<LoopWord> image_words(Signature sig);
// subalgebra generated by the loops of image_words over the given colors
Subspace wilson_image(const Moduli& L, const Algebra& A, const std::vector<const Representation*>& colors);

// regular, trivial and the attached representations
std::vector<const Representation*> all_colors(const Algebra& A, std::vector<Representation>& storage);
const Representation* find_color(const Algebra& A, const std::string& name, std::vector<Representation>& storage);

}  // namespace qmod
