// Heisenberg doubles and the Alekseev morphisms into them.
#pragma once

#include <map>
#include <memory>
#include <utility>

#include "qmod/moduli.hpp"

namespace qmod {

struct QhUnavailable : Error {
  using Error::Error;
};

// H(H*) = H* (x) H, flat index phi*d + x
using HeisenbergElement = SVec;
// HH(H*) = H* (x) H (x) H, flat index (phi*d + x)*d + y
using TwoSidedElement = SVec;

HeisenbergElement heis_product(const HopfAlgebra& H, const HeisenbergElement& x, const HeisenbergElement& y);
TwoSidedElement twosided_product(const HopfAlgebra& H, const TwoSidedElement& x, const TwoSidedElement& y);
HeisenbergElement heis_pure(const HopfAlgebra& H, const Vec& phi, const Vec& x);
TwoSidedElement twosided_pure(const HopfAlgebra& H, const Vec& phi, const Vec& x, const Vec& y);
// phi # x  ->  phi # (x (x) 1)
TwoSidedElement heis_to_twosided(const HopfAlgebra& H, const HeisenbergElement& x);

// phi#(x(x)y) |> psi = phi * (x |> psi <| S^-1(y))
Vec heis_rep(const HopfAlgebra& H, const TwoSidedElement& x, const Vec& psi);
// matrix of heis_rep on H*, columns indexed by the dual basis
Mat heis_rep_matrix(const HopfAlgebra& H, const TwoSidedElement& x);
Mat heis_rep_matrix_h(const HopfAlgebra& H, const HeisenbergElement& x);
// (phi#x) . h = sum S(h2) |> phi <| h3 # S(h1) x h4
HeisenbergElement heis_right_action(const HopfAlgebra& H, const HeisenbergElement& x, const Vec& h);

// (phi (x) id)(R R')
Vec phi01(const HopfAlgebra& H, const QuasitriangularData& R, const Vec& phi);
// x over L_{1,0} with flat index b*d+a
HeisenbergElement phi10(const HopfAlgebra& H, const QuasitriangularData& R, const SVec& x);

enum class Variant { general, findim };

// (HH)^{(x)g} (x) H^{(x)n} for general, (H(H*))^{(x)g} (x) H^{(x)n} for findim.
// Factor 0 is the most significant digit of the flat index.
class Target {
 public:
  Target(const HopfAlgebra& H, Signature sig, Variant v);

  Signature sig() const { return sig_; }
  Variant variant() const { return var_; }
  std::int64_t dim() const { return dim_; }
  int factors() const { return static_cast<int>(fdim_.size()); }
  int factor_dim(int f) const { return fdim_[f]; }
  int order() const { return H_->order(); }

  SVec one() const;
  SVec mul(const SVec& x, const SVec& y) const;
  // x in the factors [from, factors()) placed after unit factors
  SVec pad_front(const SVec& x, int from) const;

  // h~ in handle factor (general) or Q_h (findim)
  const SVec& tilde(int h) const;
  // D_{g',n'}(h) over the last g' handles and the last n' punctures, as an
  // element of those factors only
  SVec D_tail(const Vec& h, int handles, int punctures) const;
  // product in one handle factor
  SVec handle_mul(const SVec& x, const SVec& y) const;
  // plain h in a handle factor
  SVec handle_h(const Vec& h) const;

 private:
  const HopfAlgebra* H_;
  Signature sig_;
  Variant var_;
  std::int64_t dim_;
  std::vector<int> fdim_;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, SVec> handle_memo_;
  mutable std::vector<SVec> tilde_;
  mutable std::vector<HeisenbergElement> q_;

  const SVec& handle_basis_mul(std::int64_t i, std::int64_t j) const;
  SVec factor_mul(int f, std::int64_t i, std::int64_t j) const;
};

// Q_h for all basis h: rho(Q_h) psi = psi <| S^-1(h) in the Heisenberg representation
std::vector<HeisenbergElement> q_elements(const HopfAlgebra& H);

// sum h~_1 h_2 (x) ... (x) h_{2g+n}; D_{0,0}(h) = eps(h)
SVec dgn(const Target& T, const Vec& h);

class AlekseevMap {
 public:
  AlekseevMap(const Moduli& L, Variant v);

  const Moduli& source() const { return *L_; }
  const Target& target() const { return T_; }
  SVec apply_basis(std::int64_t i) const;
  SVec apply(const SVec& x) const;
  // image of j_k(x) for a handle k (1-based) and basis x of L_{1,0}
  const SVec& handle_generator(int k, int x) const;
  // image of j_{g+l}(f^a)
  const SVec& puncture_generator(int l, int a) const;

 private:
  const Moduli* L_;
  Target T_;
  std::vector<std::vector<SVec>> hgen_, pgen_;
};

SVec phign(const Moduli& L, const SVec& x, Variant v);

struct InjectivityReport {
  int rank = 0;
  std::int64_t dim = 0;
  bool injective = false;
};
InjectivityReport injectivity_report(const Moduli& L, Variant v = Variant::general);

// Phi(xy) = Phi(x)Phi(y) on basis pairs and Phi(1) = 1
Report check_phign_morphism(const Moduli& L, Variant v, std::optional<int> samples = std::nullopt,
                            unsigned seed = 1);
// D(h) Phi(x) = sum Phi(coad(S^-1(h2)) x) D(h1) over basis h and basis x of L
Report check_dgn_commutation(const Moduli& L, Variant v);
// general and findim agree after mapping each handle factor to End(H*)
Report check_variants_agree(const Moduli& L);
// algebra map and coad/ad^r equivariance of Phi_{0,1}, Phi_{1,0}
Report check_phi01(const HopfAlgebra& H, const QuasitriangularData& R);
Report check_phi10(const Moduli& L10);

}  // namespace qmod
