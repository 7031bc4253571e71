// Finite-dimensional Hopf algebras by structure constants.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmod/linalg.hpp"
#include "qmod/report.hpp"

namespace qmod {

using Mat = std::vector<Vec>;  // dense, row-major

Mat mat_zero(int r, int c, int order);
Mat mat_identity(int n, int order);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Cyclotomic& c);
Mat mat_kron(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
std::optional<Mat> mat_inverse(const Mat& a);
bool mat_is_zero(const Mat& a);

struct Term {
  int k;
  Cyclotomic c;
};
struct Term2 {
  int a, b;
  Cyclotomic c;
};

class HopfAlgebra {
 public:
  int dim = 0;
  int scalar_order = 1;
  Tensor mult;      // [n,n,n]: e_i e_j = sum_k mult[i,j,k] e_k
  Tensor comult;    // [n,n,n]: D(e_i) = sum comult[i,j,k] e_j (x) e_k
  Vec counit;
  LinearMap antipode;
  Vec unit;
  std::vector<std::string> basis_names;

  HopfAlgebra() = default;
  // Rebuild cached sparse tables after editing the tensors above.
  void finalize();

  int order() const { return scalar_order; }
  Cyclotomic zero() const { return Cyclotomic(scalar_order); }
  Cyclotomic one_scalar() const { return Cyclotomic(scalar_order, 1); }
  Vec zero_elt() const { return zero_vec(dim, scalar_order); }
  Vec basis(int i) const { return unit_vec(dim, i, scalar_order); }
  const Vec& one() const { return unit; }
  std::string name_of(int i) const;

  const std::vector<Term>& prod_terms(int i, int j) const { return mt_[i * dim + j]; }
  const std::vector<Term2>& coprod_terms(int i) const { return ct_[i]; }
  const Mat& S_matrix() const { return S_; }
  const Mat& Sinv_matrix() const { return Sinv_; }
  bool has_invertible_antipode() const { return !Sinv_.empty(); }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul3(const Vec& x, const Vec& y, const Vec& z) const { return mul(mul(x, y), z); }
  Vec S(const Vec& x) const;
  Vec Sinv(const Vec& x) const;
  Cyclotomic eps(const Vec& x) const;
  // coproduct into H(x)H, flat index a*dim+b
  SVec coproduct(const Vec& x) const;
  // iterated coproduct into H^{(x)k}, k >= 1; k = 0 gives eps(x) at index 0
  SVec iterated_coproduct(const Vec& x, int k) const;

  // H^{(x)k} algebra product, slotwise
  SVec tensor_mul(const SVec& x, const SVec& y, int k) const;
  SVec tensor_one(int k) const;
  // element of H^{(x)2} as (first, second) leg decomposition helpers
  SVec pure2(const Vec& a, const Vec& b) const;
  SVec flip2(const SVec& x) const;
  // left/right multiplication matrices
  Mat left_mult_matrix(const Vec& h) const;
  Mat right_mult_matrix(const Vec& h) const;

 private:
  std::vector<std::vector<Term>> mt_;
  std::vector<std::vector<Term2>> ct_;
  Mat S_, Sinv_;
};

// Tensor-power index helpers (base dim, k slots, slot 0 most significant).
std::int64_t ipow(std::int64_t b, int k);
std::vector<int> split_index(std::int64_t flat, int base, int k);
std::int64_t join_index(const std::vector<int>& idx, int base);

struct QuasitriangularData {
  SVec R;      // over H(x)H
  SVec R_inv;  // over H(x)H
};

struct RibbonData {
  Vec v, v_inv, u, pivot;
};

struct Representation {
  std::string name;
  int dim_v = 0;
  std::vector<Mat> mats;  // one per basis element of H

  Mat rho(const Vec& h) const;
};

// Algebra plus attached data, as carried by files and builtins.
struct Algebra {
  std::string name;
  HopfAlgebra H;
  std::optional<QuasitriangularData> R;
  bool R_unverified = false;
  std::optional<RibbonData> ribbon;
  std::vector<Representation> reps;
  std::vector<Vec> grouplikes;  // known grouplike elements, if any
  // g with S^2(h) = g h g^-1; from the ribbon data when present
  std::optional<Vec> pivot;

  const Representation* find_rep(const std::string& name) const;
};

Report verify_hopf(const HopfAlgebra& H);
Report verify_quasitriangular(const HopfAlgebra& H, const QuasitriangularData& R);
Report verify_ribbon(const HopfAlgebra& H, const QuasitriangularData& R, const RibbonData& v);
Report verify_representation(const HopfAlgebra& H, const Representation& rep);

// u = sum S(R2) R1
Vec drinfeld_element(const HopfAlgebra& H, const QuasitriangularData& R);
// x^{-1} by a linear solve, nullopt if not invertible
std::optional<Vec> invert_element(const HopfAlgebra& H, const Vec& x);
// inverse of an element of H(x)H
std::optional<SVec> invert_element2(const HopfAlgebra& H, const SVec& x);
std::vector<RibbonData> find_ribbon_element(const HopfAlgebra& H, const QuasitriangularData& R);
// first grouplike w in the list with S^2(h) = w h w^-1 for all h
std::optional<Vec> find_pivotal(const HopfAlgebra& H, const std::vector<Vec>& grouplikes);
Subspace center(const HopfAlgebra& H);
// two-sided integral candidates: h L = eps(h) L
Subspace left_integrals(const HopfAlgebra& H);
// a small set of algebra generators, chosen greedily from the basis
std::vector<int> algebra_generators(const HopfAlgebra& H);

std::pair<HopfAlgebra, QuasitriangularData> drinfeld_double(const HopfAlgebra& A);
Representation regular_representation(const HopfAlgebra& H);
Representation trivial_representation(const HopfAlgebra& H);
Representation tensor_representation(const HopfAlgebra& H, const Representation& V,
                                      const Representation& W);

struct UnknownBuiltin : Error {
  using Error::Error;
};
struct BadParams : Error {
  using Error::Error;
};

// names: group_algebra, sweedler, taft, drinfeld_double_of, restricted_sl2
// keys: "group_algebra:3", "group_algebra:2:trivial", "sweedler",
// "taft:3", "double:sweedler", "double:group_algebra:2", "restricted_sl2:2"
Algebra builtin(const std::string& key);
Algebra group_algebra(int n, bool bicharacter);
Algebra sweedler();
Algebra taft(int p);
Algebra drinfeld_double_of(const Algebra& A);
Algebra restricted_sl2(int p);

}  // namespace qmod
