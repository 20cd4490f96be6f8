#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmagic/bigint.hpp"

namespace qmagic {

/// Polynomial over the integers.  Index i holds the coefficient of X^i.
/// Canonical form never has a trailing zero coefficient; the zero polynomial
/// is the empty sequence (degree -1).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly constant(BigInt v);
  static IntPoly monomial(int degree, BigInt coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  /// Coefficient of X^i; zero beyond the degree.
  BigInt coeff(int i) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

/// Quotient and remainder of num by a monic divisor, exact over Z.
std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den);

/// The l-th cyclotomic polynomial: monic, degree phi(l), computed by exact
/// long division of X^l - 1 by the product of the lower-order factors.
/// Throws std::invalid_argument for l = 0.
IntPoly cyclotomic_poly(int l);

/// Euler totient, by trial-division factorization.
int euler_phi(int l);

/// Exact element of Z[q], q a primitive l-th root of unity, stored canonically
/// as phi(l) coefficients of powers q^0 .. q^{phi(l)-1} (reduced mod Phi_l).
/// Two values of the same order are equal iff their coefficients are.
/// Immutable in spirit: all operations return fresh values; the in-place
/// accumulators exist for the exact matrix kernels.
class CycInt {
 public:
  static CycInt zero(int l);
  static CycInt from_int(int l, BigInt v);

  int order() const { return l_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;

  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt operator-() const;
  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.l_ == b.l_ && a.c_ == b.c_;
  }

  /// this += a
  void add_assign(const CycInt& a);
  /// this += a * q^k  (the hot path of the exact matrix products)
  void add_mul_root(const CycInt& a, int k);

  std::string to_string() const;

 private:
  CycInt(int l, std::vector<BigInt> c) : l_(l), c_(std::move(c)) {}
  int l_ = 0;
  std::vector<BigInt> c_;

  friend CycInt cyc_reduce(int l, const IntPoly& p);
  friend CycInt cyc_root_power(int l, long k);
  friend std::complex<double> cyc_to_complex(const CycInt& a);
};

/// Canonical image of p in Z[q]: the remainder of p modulo Phi_l.
CycInt cyc_reduce(int l, const IntPoly& p);

/// Canonical representation of q^(k mod l); k may be negative.
CycInt cyc_root_power(int l, long k);

/// Evaluate at q = exp(2*pi*i/l) in double precision.  Absolute error is
/// below 1e-12 per unit of coefficient magnitude for l <= 64.
std::complex<double> cyc_to_complex(const CycInt& a);

inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }

}  // namespace qmagic
