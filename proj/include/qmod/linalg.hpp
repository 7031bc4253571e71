// Sparse tensors and exact linear algebra over Cyclotomic.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qmod/scalar.hpp"

namespace qmod {

using Vec = std::vector<Cyclotomic>;
using SVec = std::map<std::int64_t, Cyclotomic>;

Vec zero_vec(int n, int order);
Vec unit_vec(int n, int i, int order);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Cyclotomic& a, const Vec& x);  // y += a x
Vec scaled(const Vec& x, const Cyclotomic& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

// accumulate into a sparse vector, dropping zeros
void sadd(SVec& v, std::int64_t k, const Cyclotomic& c);
void saxpy(SVec& y, const Cyclotomic& a, const SVec& x);
SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, int n, int order);

struct Tensor {
  std::vector<int> shape;
  int order = 1;
  std::map<std::vector<int>, Cyclotomic> entries;

  Tensor() = default;
  Tensor(std::vector<int> shape, int order);

  std::int64_t size() const;
  Cyclotomic get(const std::vector<int>& idx) const;
  void set(const std::vector<int>& idx, const Cyclotomic& v);
  void add(const std::vector<int>& idx, const Cyclotomic& v);

  std::int64_t flat_index(const std::vector<int>& idx) const;
  std::vector<int> multi_index(std::int64_t flat) const;
  Vec to_dense() const;
  SVec to_sparse() const;
  static Tensor from_dense(const std::vector<int>& shape, int order, const Vec& v);
  static Tensor from_sparse(const std::vector<int>& shape, int order, const SVec& v);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape == b.shape && a.order == b.order && a.entries == b.entries;
  }

 private:
  void check_index(const std::vector<int>& idx) const;
};

struct LinearMap {
  int domain_dim = 0;
  int codomain_dim = 0;
  Tensor matrix;  // shape [codomain, domain]

  LinearMap() = default;
  LinearMap(int codomain, int domain, int order);
  static LinearMap from_rows(const std::vector<Vec>& rows, int domain, int order);
  static LinearMap from_columns(const std::vector<Vec>& cols, int codomain, int order);
  int order() const { return matrix.order; }
  std::vector<Vec> rows() const;
  Vec apply(const Vec& x) const;
};

// Dense row operations. All pivoting is deterministic (first nonzero).
std::vector<Vec> kernel_rows(const std::vector<Vec>& rows, int ncols, int order);
int rank_rows(const std::vector<Vec>& rows, int ncols, int order);
// x with A x = b, A given by rows; nullopt when inconsistent.
std::optional<Vec> solve_rows(const std::vector<Vec>& rows, const Vec& b, int ncols, int order);

std::vector<Tensor> kernel(const LinearMap& m);
int rank(const LinearMap& m);
int nullity(const LinearMap& m);

// Subspace kept in fully reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, int order) : n_(ambient), order_(order) {}

  int ambient() const { return n_; }
  int order() const { return order_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return piv_; }

  // true if v enlarged the subspace
  bool add(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& o) const;
  // coefficients of v in basis(), nullopt if v is outside
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  int n_ = 0;
  int order_ = 1;
  std::vector<Vec> basis_;
  std::vector<int> piv_;
};

Subspace span(const std::vector<Vec>& vs, int ambient, int order);
Subspace full_space(int ambient, int order);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

using MulOracle = std::function<Vec(const Vec&, const Vec&)>;

// Smallest subspace containing gens and unit, closed under mul.
Subspace span_closure(const std::vector<Vec>& gens, const MulOracle& mul, const Vec& unit);
// Span of { a g : a in ambient_basis, g in gens }, closed under left multiplication.
Subspace left_ideal_closure(const std::vector<Vec>& gens, const MulOracle& mul,
                            const std::vector<Vec>& ambient_basis);

}  // namespace qmod
