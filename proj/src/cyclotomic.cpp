#include "qmagic/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qmagic {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
  std::vector<BigInt> c;
  if (v != 0) c.push_back(std::move(v));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(int degree, BigInt coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<BigInt> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return IntPoly(std::move(c));
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& v = c_[static_cast<size_t>(i)];
    if (v == 0) continue;
    BigInt av = v < 0 ? BigInt(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (av != 1 || i == 0) os << av.str();
    if (i > 0) {
      if (av != 1) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
  if (den.coeffs().back() != 1)
    throw std::invalid_argument("poly_divmod: divisor must be monic");
  std::vector<BigInt> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPoly(), num};
  std::vector<BigInt> quot(static_cast<size_t>(num.degree() - dd) + 1);
  for (int i = num.degree(); i >= dd; --i) {
    BigInt f = rem[static_cast<size_t>(i)];
    if (f == 0) continue;
    quot[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= f * den.coeff(j);
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly cyclotomic_poly(int l) {
  if (l <= 0) throw std::invalid_argument("cyclotomic_poly: l must be positive");
  // X^l - 1 = product of Phi_d over divisors d of l.
  std::vector<BigInt> xl(static_cast<size_t>(l) + 1);
  xl[0] = -1;
  xl.back() = 1;
  IntPoly num{std::move(xl)};
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    auto [q, r] = poly_divmod(num, cyclotomic_poly(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
    num = std::move(q);
  }
  return num;
}

int euler_phi(int l) {
  if (l <= 0) throw std::invalid_argument("euler_phi: l must be positive");
  int result = l;
  int m = l;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Cached per-order data: Phi_l and the canonical form of every power
// q^0 .. q^{l-1} as a row of small integers of length phi(l).
struct RingTable {
  int l = 0;
  int phi = 0;
  std::vector<std::vector<long>> power;  // power[e][j], 0 <= e < l

  explicit RingTable(int l_in) : l(l_in) {
    IntPoly phi_poly = cyclotomic_poly(l);
    phi = phi_poly.degree();
    power.resize(static_cast<size_t>(l));
    for (int e = 0; e < l; ++e) {
      auto [q, r] = poly_divmod(IntPoly::monomial(e), phi_poly);
      (void)q;
      std::vector<long>& row = power[static_cast<size_t>(e)];
      row.assign(static_cast<size_t>(phi), 0);
      for (int j = 0; j <= r.degree(); ++j) {
        BigInt v = r.coeff(j);
        if (v < std::numeric_limits<long>::min() || v > std::numeric_limits<long>::max())
          throw std::overflow_error("RingTable: power coefficient out of range");
        row[static_cast<size_t>(j)] = v.convert_to<long>();
      }
    }
  }
};

const RingTable& ring(int l) {
  if (l < 2) throw std::invalid_argument("CycInt: order must be >= 2");
  static std::mutex mu;
  static std::map<int, RingTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, RingTable(l)).first;
  return it->second;
}

void check_same_order(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("CycInt: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

CycInt CycInt::zero(int l) {
  const RingTable& t = ring(l);
  return CycInt(l, std::vector<BigInt>(static_cast<size_t>(t.phi)));
}

CycInt CycInt::from_int(int l, BigInt v) {
  CycInt z = zero(l);
  z.c_[0] = std::move(v);
  return z;
}

bool CycInt::is_zero() const {
  for (const BigInt& v : c_)
    if (v != 0) return false;
  return true;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  check_same_order(a, b);
  CycInt out = a;
  out.add_assign(b);
  return out;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  check_same_order(a, b);
  CycInt out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (BigInt& v : out.c_) v = -v;
  return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  check_same_order(a, b);
  const RingTable& t = ring(a.l_);
  const int phi = t.phi;
  // Raw convolution, then fold exponents with X^l = 1 and the power table.
  std::vector<BigInt> prod(static_cast<size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[static_cast<size_t>(j)] == 0) continue;
      prod[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
  }
  CycInt out = CycInt::zero(a.l_);
  for (int e = 0; e < 2 * phi - 1; ++e) {
    const BigInt& v = prod[static_cast<size_t>(e)];
    if (v == 0) continue;
    const std::vector<long>& row = t.power[static_cast<size_t>(e % t.l)];
    for (int j = 0; j < phi; ++j)
      if (row[static_cast<size_t>(j)] != 0) out.c_[static_cast<size_t>(j)] += v * row[static_cast<size_t>(j)];
  }
  return out;
}

void CycInt::add_assign(const CycInt& a) {
  check_same_order(*this, a);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += a.c_[i];
}

void CycInt::add_mul_root(const CycInt& a, int k) {
  check_same_order(*this, a);
  const RingTable& t = ring(l_);
  const int phi = t.phi;
  int e = k % t.l;
  if (e < 0) e += t.l;
  for (int i = 0; i < phi; ++i) {
    const BigInt& v = a.c_[static_cast<size_t>(i)];
    if (v == 0) continue;
    const std::vector<long>& row = t.power[static_cast<size_t>((i + e) % t.l)];
    for (int j = 0; j < phi; ++j) {
      long m = row[static_cast<size_t>(j)];
      if (m == 0) continue;
      if (m == 1)
        c_[static_cast<size_t>(j)] += v;
      else if (m == -1)
        c_[static_cast<size_t>(j)] -= v;
      else
        c_[static_cast<size_t>(j)] += v * m;
    }
  }
}

CycInt cyc_reduce(int l, const IntPoly& p) {
  const RingTable& t = ring(l);
  CycInt out = CycInt::zero(l);
  for (int e = 0; e <= p.degree(); ++e) {
    BigInt v = p.coeff(e);
    if (v == 0) continue;
    const std::vector<long>& row = t.power[static_cast<size_t>(e % l)];
    for (int j = 0; j < t.phi; ++j)
      if (row[static_cast<size_t>(j)] != 0)
        out.c_[static_cast<size_t>(j)] += v * row[static_cast<size_t>(j)];
  }
  return out;
}

CycInt cyc_root_power(int l, long k) {
  const RingTable& t = ring(l);
  long e = k % l;
  if (e < 0) e += l;
  CycInt out = CycInt::zero(l);
  const std::vector<long>& row = t.power[static_cast<size_t>(e)];
  for (int j = 0; j < t.phi; ++j) out.c_[static_cast<size_t>(j)] = row[static_cast<size_t>(j)];
  return out;
}

std::complex<double> cyc_to_complex(const CycInt& a) {
  std::complex<double> acc(0.0, 0.0);
  const double step = 2.0 * std::numbers::pi / a.l_;
  for (size_t j = 0; j < a.c_.size(); ++j) {
    if (a.c_[j] == 0) continue;
    double v = a.c_[j].convert_to<double>();
    acc += v * std::polar(1.0, step * static_cast<double>(j));
  }
  return acc;
}

std::string CycInt::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    const BigInt& v = c_[j];
    if (v == 0) continue;
    BigInt av = v < 0 ? BigInt(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (av != 1 || j == 0) os << av.str();
    if (j > 0) {
      if (av != 1) os << "*";
      os << "q";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace qmagic
