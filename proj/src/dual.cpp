#include "qmod/dual.hpp"

namespace qmod {

SparseOp SparseOp::from_mat(const Mat& m) {
  SparseOp op;
  op.n = static_cast<int>(m.size());
  op.cols.assign(op.n, {});
  for (int i = 0; i < op.n; ++i)
    for (int j = 0; j < op.n; ++j)
      if (!m[i][j].is_zero()) op.cols[j].push_back({i, m[i][j]});
  return op;
}

Vec SparseOp::apply(const Vec& x) const {
  const int order = x.empty() ? 1 : x[0].order();
  Vec r = zero_vec(n, order);
  for (int j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [i, c] : cols[j]) r[i].add_product(c, x[j]);
  }
  return r;
}

DualAlgebra dual_algebra(const HopfAlgebra& H) {
  const int n = H.dim, order = H.order();
  DualAlgebra D;
  D.base = &H;
  HopfAlgebra& S = D.structure;
  S.dim = n;
  S.scalar_order = order;
  S.mult = Tensor({n, n, n}, order);
  S.comult = Tensor({n, n, n}, order);
  for (const auto& [idx, c] : H.comult.entries) S.mult.set({idx[1], idx[2], idx[0]}, c);
  for (const auto& [idx, c] : H.mult.entries) S.comult.set({idx[2], idx[0], idx[1]}, c);
  S.unit = H.counit;
  S.counit = H.unit;
  S.antipode = LinearMap(n, n, order);
  for (const auto& [idx, c] : H.antipode.matrix.entries) S.antipode.matrix.set({idx[1], idx[0]}, c);
  for (int i = 0; i < n; ++i) S.basis_names.push_back("f^" + H.name_of(i));
  S.finalize();
  return D;
}

Vec matrix_coefficient(const Representation& rep, int i, int j) {
  if (i < 0 || j < 0 || i >= rep.dim_v || j >= rep.dim_v)
    throw IndexOutOfRange("matrix coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside a representation of dimension " + std::to_string(rep.dim_v));
  Vec f;
  for (const auto& m : rep.mats) f.push_back(m[i][j]);
  return f;
}

Vec coregular(const HopfAlgebra& H, Side side, const Vec& h, const Vec& phi) {
  Vec r = H.zero_elt();
  for (int b = 0; b < H.dim; ++b) {
    if (h[b].is_zero()) continue;
    for (int x = 0; x < H.dim; ++x) {
      const auto& terms = side == Side::left ? H.prod_terms(x, b) : H.prod_terms(b, x);
      for (const auto& t : terms)
        if (!phi[t.k].is_zero()) r[x].add_product(h[b] * t.c, phi[t.k]);
    }
  }
  return r;
}

Vec star(const HopfAlgebra& H, const Vec& phi, const Vec& psi) {
  Vec r = H.zero_elt();
  for (int x = 0; x < H.dim; ++x)
    for (const auto& t : H.coprod_terms(x))
      if (!phi[t.a].is_zero() && !psi[t.b].is_zero()) r[x].add_product(t.c, phi[t.a] * psi[t.b]);
  return r;
}

Vec coad01(const HopfAlgebra& H, const Vec& h, const Vec& phi) {
  Vec r = H.zero_elt();
  for (const auto& [idx, c] : H.coproduct(h)) {
    const int a = static_cast<int>(idx / H.dim), b = static_cast<int>(idx % H.dim);
    Vec t = coregular(H, Side::left, H.S(H.basis(b)), coregular(H, Side::right, H.basis(a), phi));
    axpy(r, c, t);
  }
  return r;
}

Vec adjoint_right(const HopfAlgebra& H, const Vec& h, const Vec& x) {
  Vec r = H.zero_elt();
  for (const auto& [idx, c] : H.coproduct(h)) {
    const int a = static_cast<int>(idx / H.dim), b = static_cast<int>(idx % H.dim);
    axpy(r, c, H.mul3(H.S(H.basis(a)), x, H.basis(b)));
  }
  return r;
}

Coregular::Coregular(const HopfAlgebra& H) : H_(&H) {
  const int n = H.dim, order = H.order();
  left_.assign(n, mat_zero(n, n, order));
  right_.assign(n, mat_zero(n, n, order));
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b) {
      for (const auto& t : H.prod_terms(x, b)) left_[b][x][t.k] += t.c;
      for (const auto& t : H.prod_terms(b, x)) right_[b][x][t.k] += t.c;
    }
  coad_.assign(n, mat_zero(n, n, order));
  for (int h = 0; h < n; ++h)
    for (const auto& t : H.coprod_terms(h)) {
      Mat m = mat_mul(left_of(H.S(H.basis(t.b))), right_[t.a]);
      coad_[h] = mat_add(coad_[h], mat_scale(m, t.c));
    }
}

Mat Coregular::combine(const std::vector<Mat>& ms, const Vec& h) const {
  Mat m = mat_zero(H_->dim, H_->dim, H_->order());
  for (int b = 0; b < H_->dim; ++b)
    if (!h[b].is_zero()) m = mat_add(m, mat_scale(ms[b], h[b]));
  return m;
}

}  // namespace qmod
