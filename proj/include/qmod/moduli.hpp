// Graph algebras L_{g,n}(H) = (H*)^{(x)(2g+n)} with the twisted product.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "qmod/dual.hpp"

namespace qmod {

struct MissingRMatrix : Error {
  using Error::Error;
};
struct SignatureMismatch : Error {
  using Error::Error;
};
struct BadSlot : Error {
  using Error::Error;
};
struct NotInvertible : Error {
  using Error::Error;
};

struct Signature {
  int g = 0, n = 0;
  int slots() const { return 2 * g + n; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class SlotKind { A, B, M };

// A(i), B(i) for 1 <= i <= g; M(j) for g+1 <= j <= g+n
struct Slot {
  SlotKind kind;
  int index;
};

struct ModuliElement {
  Signature sig;
  SVec coeffs;
};

// x_hi(f^a) x_lo(f^b) = sum c x_lo(f^lo) x_hi(f^hi)
struct SwapTerm {
  int lo, hi;
  Cyclotomic c;
};

// Structure tables of the loop algebra and of the two reordering rules.
// They depend on (H, R) only and are shared by all signatures.
struct LoopTables {
  HopfAlgebra H;
  QuasitriangularData R;
  std::unique_ptr<Coregular> cor;
  std::vector<std::vector<Term>> mult01;     // [a*d+b]
  std::vector<std::vector<SwapTerm>> exch;   // [a*d+b]: A-letter f^a times B-letter f^b
  std::vector<std::vector<SwapTerm>> cross;  // [a*d+b]: later slot f^a times earlier slot f^b
  std::vector<SparseOp> coad_ops;            // coad(e_h) on H*

  // inverse of sum_a f^a (x) e_a in L_{0,1} (x) H: coefficient [k][h] of f^k (x) e_h
  const Mat& loop_inverse() const;

 private:
  mutable std::once_flag inv_once_;
  mutable Mat inv_;
};

// Builds the tables, reading and writing $QMODULI_CACHE_DIR when set.
std::shared_ptr<const LoopTables> make_loop_tables(const HopfAlgebra& H, const QuasitriangularData& R);
std::shared_ptr<const LoopTables> make_loop_tables(const Algebra& A);

class Moduli {
 public:
  Moduli(std::shared_ptr<const LoopTables> t, Signature sig);
  Moduli(const Algebra& A, Signature sig) : Moduli(make_loop_tables(A), sig) {}

  const HopfAlgebra& H() const { return t_->H; }
  const QuasitriangularData& R() const { return t_->R; }
  const Coregular& cor() const { return *t_->cor; }
  const LoopTables& tables() const { return *t_; }
  std::shared_ptr<const LoopTables> tables_ptr() const { return t_; }
  Signature sig() const { return sig_; }
  int slots() const { return m_; }
  int d() const { return d_; }
  std::int64_t dim() const { return dim_; }
  int order() const { return t_->H.order(); }

  SlotKind kind_at(int pos) const;
  int position(Slot s) const;  // throws BadSlot
  int digit(std::int64_t idx, int pos) const { return static_cast<int>(idx / pw_[pos] % d_); }

  SVec unit() const;
  SVec basis(std::int64_t i) const;
  // pure tensor of one functional per slot
  SVec pure(const std::vector<Vec>& phis) const;
  // phi in slot pos, eps elsewhere
  SVec embed(int pos, const Vec& phi) const;
  SVec letter(int pos, int f) const;

  SVec mul_letter(const SVec& x, int pos, int f) const;
  SVec mul(const SVec& x, const SVec& y) const;
  SVec coad(const Vec& h, const SVec& x) const;
  Vec to_dense(const SVec& x) const { return qmod::to_dense(x, static_cast<int>(dim_), order()); }

 private:
  std::shared_ptr<const LoopTables> t_;
  Signature sig_;
  int m_, d_;
  std::int64_t dim_;
  std::vector<std::int64_t> pw_;  // weight of each slot in the flat index
};

Moduli make_moduli(const Algebra& A, Signature sig);  // throws MissingRMatrix

// Direct evaluation of the explicit product formulas, kept independent of the tables.
Vec loop_product(const HopfAlgebra& H, const QuasitriangularData& R, const Vec& phi, const Vec& psi);
// x, y over (H*)^{(x)2} = B-slot (x) A-slot, flat index b*d+a
SVec handle_product(const HopfAlgebra& H, const QuasitriangularData& R, const SVec& x, const SVec& y);
ModuliElement graph_product(const Moduli& L, const ModuliElement& x, const ModuliElement& y);
ModuliElement embed(const Moduli& L, Slot slot, const Vec& phi);
ModuliElement coad(const Moduli& L, const Vec& h, const ModuliElement& x);

// kernel of x -> coad(h)(x) - eps(h) x over algebra generators h
Subspace invariants(const Moduli& L);
LinearMap coad_map(const Moduli& L, const Vec& h);

// Unit laws plus (xy)z = x(yz): exhaustive when samples is empty, else random basis triples.
Report check_associativity(const Moduli& L, std::optional<int> samples = std::nullopt,
                           unsigned seed = 1);
// coad(h)(xy) = sum coad(h1)(x) coad(h2)(y), over basis h and the given pairs
Report check_module_algebra(const Moduli& L, std::optional<int> samples = std::nullopt,
                            unsigned seed = 1);
// all basis products (i, j, k, c) with e_i e_j = sum c e_k
std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, Cyclotomic>> product_table(const Moduli& L);

// ---------------------------------------------------------------------------
// holonomy matrices, realized in L (x) H^{(x)k} before choosing a representation

// sum over beta of e_beta (x) terms[beta], terms over H^{(x)k}
struct LHElement {
  int k = 1;
  std::map<std::int64_t, SVec> terms;
};

LHElement lh_one(const Moduli& L, int k = 1);
LHElement lh_mul(const Moduli& L, const LHElement& x, const LHElement& y);
LHElement lh_add(const LHElement& x, const LHElement& y, const Cyclotomic& c);
// (1 (x) h) x
LHElement lh_left_h(const Moduli& L, const Vec& h, const LHElement& x);
bool lh_equal(const LHElement& x, const LHElement& y);

// sum_a i_slot(f^a) (x) e_a, or its inverse
LHElement holonomy_letter(const Moduli& L, Slot slot, bool inverse = false);
LHElement holonomy_letter_at(const Moduli& L, int pos, bool inverse = false);

using LMatrix = std::vector<std::vector<SVec>>;
LMatrix lh_in_rep(const LHElement& x, const Representation& V);
LMatrix lmatrix_mul(const Moduli& L, const LMatrix& a, const LMatrix& b);

struct HolonomyMatrix {
  const Representation* rep = nullptr;
  Slot slot;
  LMatrix entries, inverse;
};
HolonomyMatrix holonomy_matrix(const Moduli& L, const Representation& V, Slot slot);

// Fusion, exchange, cross and reflection relations, checked in L (x) H (x) H and
// then in End(V) (x) End(W) for any nonzero difference.
Report check_matrix_relations(const Moduli& L, const Representation& V, const Representation& W);

}  // namespace qmod
