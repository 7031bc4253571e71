// The dual Hopf algebra H*, matrix coefficients and coregular actions.
#pragma once

#include <utility>
#include <vector>

#include "qmod/hopf.hpp"

namespace qmod {

struct IndexOutOfRange : Error {
  using Error::Error;
};

// Column-sparse square operator on coefficient vectors.
struct SparseOp {
  int n = 0;
  std::vector<std::vector<std::pair<int, Cyclotomic>>> cols;

  static SparseOp from_mat(const Mat& m);
  Vec apply(const Vec& x) const;
  const std::vector<std::pair<int, Cyclotomic>>& col(int j) const { return cols[j]; }
};

struct DualAlgebra {
  const HopfAlgebra* base = nullptr;
  HopfAlgebra structure;
};

// mult = transpose of comult, comult = transpose of mult, unit = counit,
// counit = evaluation at the unit, antipode = transpose of antipode.
DualAlgebra dual_algebra(const HopfAlgebra& H);

// h -> rho(h)[i][j] in the dual basis
Vec matrix_coefficient(const Representation& rep, int i, int j);

enum class Side { left, right };

// left:  (h |> phi)(x) = phi(x h)
// right: (phi <| h)(x) = phi(h x)
Vec coregular(const HopfAlgebra& H, Side side, const Vec& h, const Vec& phi);
// (phi * psi)(x) = (phi (x) psi)(Delta x)
Vec star(const HopfAlgebra& H, const Vec& phi, const Vec& psi);
// coad(h)(phi) = sum S(h2) |> phi <| h1
Vec coad01(const HopfAlgebra& H, const Vec& h, const Vec& phi);
// ad^r(h)(x) = sum S(h1) x h2
Vec adjoint_right(const HopfAlgebra& H, const Vec& h, const Vec& x);

// Matrices of the actions of basis elements, cached.
class Coregular {
 public:
  explicit Coregular(const HopfAlgebra& H);

  const HopfAlgebra& algebra() const { return *H_; }
  const Mat& left(int h) const { return left_[h]; }
  const Mat& right(int h) const { return right_[h]; }
  const Mat& coad(int h) const { return coad_[h]; }
  Mat left_of(const Vec& h) const { return combine(left_, h); }
  Mat right_of(const Vec& h) const { return combine(right_, h); }
  Mat coad_of(const Vec& h) const { return combine(coad_, h); }

 private:
  const HopfAlgebra* H_;
  std::vector<Mat> left_, right_, coad_;
  Mat combine(const std::vector<Mat>& ms, const Vec& h) const;
};

}  // namespace qmod
