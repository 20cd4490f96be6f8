#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "qmagic/cyclotomic.hpp"

using namespace qmagic;

namespace {

IntPoly poly_from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

// Totient by direct coprimality count, independent of the library's
// factorization route.
int phi_naive(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k) {
    int a = k, b = m;
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

// Gaussian binomial [m k]_q as an integer polynomial, via the q-Pascal
// recurrence [m k] = [m-1 k-1] + q^k [m-1 k].
IntPoly q_binomial(int m, int k) {
  if (k < 0 || k > m) return IntPoly();
  if (k == 0 || k == m) return IntPoly::constant(1);
  return q_binomial(m - 1, k - 1) + IntPoly::monomial(k) * q_binomial(m - 1, k);
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("IntPoly canonical form and ring operations") {
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly().is_zero());
  CHECK(poly_from_ints({0, 0}).is_zero());  // trailing zeros trim away
  CHECK(IntPoly::constant(5).degree() == 0);
  CHECK(IntPoly::monomial(3).degree() == 3);
  CHECK(IntPoly::monomial(3).coeff(3) == 1);
  CHECK(IntPoly::monomial(3).coeff(7) == 0);

  const IntPoly xp1 = poly_from_ints({1, 1});
  const IntPoly xm1 = poly_from_ints({-1, 1});
  CHECK(xp1 * xm1 == poly_from_ints({-1, 0, 1}));
  CHECK(xp1 + xm1 == poly_from_ints({0, 2}));
  CHECK((xp1 - xp1).is_zero());
}

TEST_CASE("poly_divmod reconstructs the dividend") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly num = random_poly(rng, 12);
    IntPoly den = random_poly(rng, 5);
    // Force the divisor monic and nonconstant.
    std::vector<BigInt> dc(den.coeffs());
    dc.resize(std::max<size_t>(dc.size(), 2));
    dc.back() = 1;
    den = IntPoly(std::move(dc));

    auto [quot, rem] = poly_divmod(num, den);
    CHECK(quot * den + rem == num);
    CHECK(rem.degree() < den.degree());
  }
}

TEST_CASE("cyclotomic polynomials match frozen small cases") {
  CHECK(cyclotomic_poly(1) == poly_from_ints({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly_from_ints({1, 1}));
  CHECK(cyclotomic_poly(3) == poly_from_ints({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == poly_from_ints({1, 0, 1}));
  CHECK(cyclotomic_poly(5) == poly_from_ints({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(6) == poly_from_ints({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == poly_from_ints({1, 0, -1, 0, 1}));

  CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_poly(-3), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomial structure theorems") {
  // Degree is the totient.
  for (int l = 1; l <= 64; ++l) CHECK(cyclotomic_poly(l).degree() == phi_naive(l));

  // Product over divisors telescopes to X^l - 1.
  for (int l = 1; l <= 64; ++l) {
    IntPoly prod = IntPoly::constant(1);
    for (int d = 1; d <= l; ++d)
      if (l % d == 0) prod = prod * cyclotomic_poly(d);
    CHECK(prod == IntPoly::monomial(l) - IntPoly::constant(1));
  }

  // Prime powers: Phi_{p^k}(X) = Phi_p(X^{p^(k-1)}).
  for (int p : {2, 3, 5}) {
    for (int pk = p * p; pk <= 128; pk *= p) {
      const IntPoly base = cyclotomic_poly(p);
      const int step = pk / p;
      std::vector<BigInt> lifted(static_cast<size_t>(base.degree() * step) + 1);
      for (int i = 0; i <= base.degree(); ++i) lifted[static_cast<size_t>(i * step)] = base.coeff(i);
      CHECK(cyclotomic_poly(pk) == IntPoly(std::move(lifted)));
    }
  }

  // First order with a coefficient outside {0, +-1}.
  CHECK(cyclotomic_poly(105).coeff(7) == -2);
}

TEST_CASE("euler_phi agrees with the coprimality count") {
  for (int l = 1; l <= 200; ++l) CHECK(euler_phi(l) == phi_naive(l));
}

TEST_CASE("cyc_reduce is canonical modulo Phi_l") {
  for (int l = 2; l <= 12; ++l) {
    CHECK(cyc_reduce(l, cyclotomic_poly(l)).is_zero());
    CHECK(cyc_reduce(l, IntPoly::monomial(l) - IntPoly::constant(1)).is_zero());
    // Exponent folding: X^(l+2) and X^2 have the same image.
    CHECK(cyc_reduce(l, IntPoly::monomial(l + 2)) == cyc_reduce(l, IntPoly::monomial(2)));
    // Geometric sum: 1 + q + ... + q^(l-1) = 0 for l >= 2.
    std::vector<BigInt> ones(static_cast<size_t>(l), 1);
    CHECK(cyc_reduce(l, IntPoly(std::move(ones))).is_zero());
  }
  // Canonical width is phi(l).
  CHECK(cyc_reduce(6, IntPoly::monomial(4)).coeffs().size() == 2);
}

TEST_CASE("cyc_reduce is a ring homomorphism") {
  std::mt19937_64 rng(99);
  for (int l : {2, 3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      IntPoly a = random_poly(rng, 15);
      IntPoly b = random_poly(rng, 15);
      CHECK(cyc_reduce(l, a + b) == cyc_reduce(l, a) + cyc_reduce(l, b));
      CHECK(cyc_reduce(l, a * b) == cyc_reduce(l, a) * cyc_reduce(l, b));
    }
  }
}

TEST_CASE("Gaussian binomials [l k]_q vanish at a primitive l-th root") {
  // The engine behind the collapse identity (a+b)^l = a^l + b^l.
  CHECK(q_binomial(2, 1) == poly_from_ints({1, 1}));
  CHECK(q_binomial(4, 2) == poly_from_ints({1, 1, 2, 1, 1}));
  for (int l = 2; l <= 12; ++l) {
    for (int k = 1; k < l; ++k) CHECK(cyc_reduce(l, q_binomial(l, k)).is_zero());
    // Boundary cases stay 1.
    CHECK(cyc_reduce(l, q_binomial(l, 0)) == CycInt::from_int(l, 1));
    CHECK(cyc_reduce(l, q_binomial(l, l)) == CycInt::from_int(l, 1));
  }
}

TEST_CASE("root powers fold modulo l") {
  for (int l = 2; l <= 12; ++l) {
    CHECK(cyc_root_power(l, 0) == CycInt::from_int(l, 1));
    CHECK(cyc_root_power(l, l) == CycInt::from_int(l, 1));
    CHECK(cyc_root_power(l, -1) == cyc_root_power(l, l - 1));
    for (int k = 0; k < l; ++k)
      CHECK(cyc_root_power(l, k) * cyc_root_power(l, l - k) == CycInt::from_int(l, 1));
  }
}

TEST_CASE("CycInt arithmetic basics") {
  const CycInt two = CycInt::from_int(5, 2);
  const CycInt three = CycInt::from_int(5, 3);
  CHECK(two + three == CycInt::from_int(5, 5));
  CHECK(two * three == CycInt::from_int(5, 6));
  CHECK((two - two).is_zero());
  CHECK(-two == CycInt::from_int(5, -2));
  CHECK(CycInt::zero(5).is_zero());
  CHECK_FALSE(two.is_zero());

  CycInt acc = CycInt::zero(5);
  acc.add_assign(two);
  acc.add_mul_root(three, 2);  // acc = 2 + 3 q^2
  CHECK(acc == two + three * cyc_root_power(5, 2));

  // Exponents outside [0, l) fold mod l, including negative ones.
  CycInt neg = CycInt::zero(5);
  neg.add_mul_root(three, -3);
  CHECK(neg == three * cyc_root_power(5, 2));
  CycInt big = CycInt::zero(5);
  big.add_mul_root(three, 12);
  CHECK(big == three * cyc_root_power(5, 2));

  CHECK_THROWS_AS(CycInt::from_int(3, 1) + CycInt::from_int(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(CycInt::from_int(3, 1) * CycInt::from_int(4, 1), std::invalid_argument);
}

TEST_CASE("frozen identity q + q^5 = 1 at order 6") {
  CHECK(cyc_root_power(6, 1) + cyc_root_power(6, 5) == CycInt::from_int(6, 1));
}

TEST_CASE("numeric evaluation sits on the unit circle") {
  for (int l : {2, 3, 4, 6, 7, 12, 64}) {
    const std::complex<double> q = cyc_to_complex(cyc_root_power(l, 1));
    const std::complex<double> want = std::polar(1.0, 2.0 * std::numbers::pi / l);
    CHECK(std::abs(q - want) < 1e-12);
    for (int k = 0; k < l; ++k)
      CHECK(std::abs(std::abs(cyc_to_complex(cyc_root_power(l, k))) - 1.0) < 1e-12);
  }
  CHECK(std::abs(cyc_to_complex(CycInt::from_int(6, 7)) - std::complex<double>(7.0, 0.0)) < 1e-12);
}

TEST_CASE("to_string renders zero and integers") {
  CHECK(CycInt::zero(4).to_string() == "0");
  CHECK_FALSE(CycInt::from_int(4, 3).to_string().empty());
}
