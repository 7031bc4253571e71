// Quantum moment map, the ideal I_eps and the quantum reduction at eps.
#pragma once

#include <optional>

#include "qmod/alekseev.hpp"

namespace qmod {

struct MissingRibbon : Error {
  using Error::Error;
};
struct NotInjective : Error {
  using Error::Error;
};
struct NotInHPrime : Error {
  using Error::Error;
};
struct NotSemisimple : Error {
  using Error::Error;
};

struct MomentSubalgebra {
  Subspace image;  // H' = im(Phi_{0,1}) in H
  Mat section;     // [a][k]: coefficient of f^a in Phi_{0,1}^{-1}(e_k)
  Report checks;   // subalgebra, right coideal, ad-stable
};
// throws NotInjective
MomentSubalgebra moment_subalgebra(const HopfAlgebra& H, const QuasitriangularData& R);

// C(i) = v^2 B(i) A(i)^-1 B(i)^-1 A(i) and C = C(1)...C(g) M(g+1)...M(g+n), in L (x) H
struct BoundaryElements {
  std::vector<LHElement> handles;
  LHElement total;
};
BoundaryElements boundary_elements(const Moduli& L, const std::optional<RibbonData>& ribbon, bool drop_v2 = false);

struct BoundaryMatrix {
  const Representation* rep = nullptr;
  std::vector<LMatrix> Ci;
  LMatrix C;
};
BoundaryMatrix boundary_matrices(const Moduli& L, const std::optional<RibbonData>& ribbon, const Representation& V,
                                 bool drop_v2 = false);
// fusion and reflection relations of each C(i) and of C, checked in L (x) H (x) H
Report check_boundary_relations(const Moduli& L, const std::optional<RibbonData>& ribbon);

class MomentMap {
 public:
  MomentMap(const Moduli& L, const std::optional<RibbonData>& ribbon, bool drop_v2 = false);

  const Moduli& moduli() const { return *L_; }
  const MomentSubalgebra& subalgebra() const { return sub_; }
  // (id (x) f^k)(C)
  const SVec& psi(int k) const { return psi_[k]; }
  SVec operator()(const Vec& hp) const;  // throws NotInHPrime
  SVec of_basis(int k) const;
  const BoundaryElements& boundary() const { return C_; }

 private:
  const Moduli* L_;
  MomentSubalgebra sub_;
  BoundaryElements C_;
  std::vector<SVec> psi_;
};

SVec mu(const Moduli& L, const std::optional<RibbonData>& ribbon, const Vec& hp);

// mu(h') a = sum (h'_2 . a) mu(h'_1) with h . a = coad(S^-1(h))(a); plus multiplicativity,
// equivariance and h . a = sum mu(h_2) a mu(S^-1(h_1)).
Report check_qmm(const MomentMap& m, std::optional<int> samples = std::nullopt, unsigned seed = 1);

struct IdealReport {
  Subspace ideal;
  std::vector<Vec> generators;
  bool coad_stable = false;
  bool tensor_square_redundant = false;
};
IdealReport ideal_epsilon(const MomentMap& m);

struct QuantumReduction {
  int dim_L = 0, dim_invariants = 0, dim_ideal = 0, dim_reduced = 0, dim_kernel = 0;
  Subspace invariants;        // L^H
  Subspace ideal;             // I_eps
  Subspace kernel;            // I_eps cap L^H
  std::vector<Vec> reduced;   // invariant representatives in L of a basis of (L/I)^H
  // structure constants of the reduced product in the basis above: [a][b] -> coordinates
  std::vector<std::vector<Vec>> table;
  bool well_defined = false;  // i y in I for i in I, y a representative
  bool closed = false;        // products of representatives stay invariant modulo I
  Mat pi;                     // columns: pi(basis of L^H) in reduced coordinates
  int rank_pi = 0;
  bool surjective = false;
  bool semisimple = false;
  std::optional<bool> kernel_is_reynolds_image;
  std::vector<std::string> failed_hypotheses;
};
QuantumReduction quantum_reduction(const MomentMap& m);

// Lambda / eps(Lambda) for a two-sided integral, throws NotSemisimple
Vec normalized_integral(const HopfAlgebra& H);
SVec reynolds(const Moduli& L, const SVec& x);
// r(r(x)) = r(x), r(xy) = x r(y), r(yx) = r(y) x for invariant x
Report check_reynolds(const Moduli& L);

}  // namespace qmod
