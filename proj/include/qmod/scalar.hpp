// Exact arithmetic in cyclotomic fields Q(zeta_N).
#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct NotDivisible : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Euler phi.
int euler_phi(int n);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

class Cyclotomic {
 public:
  Cyclotomic();                      // 0 in Q
  explicit Cyclotomic(int order);    // 0 in Q(zeta_order)
  Cyclotomic(int order, const mpq_class& r);
  Cyclotomic(int order, long r) : Cyclotomic(order, mpq_class(r)) {}

  // c * zeta^k, any integer k.
  static Cyclotomic zeta_power(int order, long k, const mpq_class& c = 1);
  static Cyclotomic from_coeffs(int order, std::vector<mpq_class> coeffs);
  static Cyclotomic parse(const std::string& text, int order);

  int order() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);
  Cyclotomic inverse() const;

  // this += a * b
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  // total order on coefficient vectors, only for use as container keys
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  int n_;
  std::vector<mpq_class> c_;
  void check(const Cyclotomic& b) const;
};

enum class ArithOp { add, sub, mul, div };
Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op);

// zeta_N -> zeta_M^(M/N); N must divide M.
Cyclotomic embed_order(const Cyclotomic& a, int M);
// Inverse of embed_order: the preimage of a in Q(zeta_N), N | a.order().
// Throws NotDivisible if N does not divide the order or a is not in the subfield.
Cyclotomic restrict_order(const Cyclotomic& a, int N);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

}  // namespace qmod
