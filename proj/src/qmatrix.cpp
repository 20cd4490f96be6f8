#include "qmagic/qmatrix.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qmagic {

namespace {

void check_orders(int a, int b) {
  if (a != b)
    throw std::invalid_argument("matrix order mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}

void check_dims(long a, long b) {
  if (a != b)
    throw std::invalid_argument("matrix dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}

// Per-column view of a sparse matrix: list of (row, exponent) per column.
std::vector<std::vector<RootMatrix::Entry>> columns_of(const RootMatrix& a) {
  std::vector<std::vector<RootMatrix::Entry>> cols(static_cast<size_t>(a.dim()));
  for (long r = 0; r < a.dim(); ++r)
    for (const auto& [c, k] : a.row(r)) cols[static_cast<size_t>(c)].emplace_back(r, k);
  return cols;
}

long checked_power(int l, int n, long limit) {
  long d = 1;
  for (int i = 0; i < n; ++i) {
    if (d > limit / l)
      throw ResourceLimitError("dimension l^n = " + std::to_string(l) + "^" + std::to_string(n) +
                               " exceeds limit " + std::to_string(limit));
    d *= l;
  }
  return d;
}

}  // namespace

RootMatrix::RootMatrix(int order, long dim) : l_(order), dim_(dim) {
  if (order < 2) throw std::invalid_argument("RootMatrix: order must be >= 2");
  if (dim < 1) throw std::invalid_argument("RootMatrix: dimension must be >= 1");
  rows_.resize(static_cast<size_t>(dim));
}

void RootMatrix::set(long r, long c, int exponent) {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    throw std::invalid_argument("RootMatrix::set: index out of range");
  int k = exponent % l_;
  if (k < 0) k += l_;
  auto& row = rows_[static_cast<size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, long col) { return e.first < col; });
  if (it != row.end() && it->first == c)
    it->second = k;
  else
    row.insert(it, {c, k});
}

RootEntry RootMatrix::at(long r, long c) const {
  const auto& row = rows_[static_cast<size_t>(r)];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, long col) { return e.first < col; });
  if (it != row.end() && it->first == c) return RootEntry::root(l_, it->second);
  return RootEntry::zero();
}

long RootMatrix::nonzeros() const {
  long n = 0;
  for (const auto& row : rows_) n += static_cast<long>(row.size());
  return n;
}

std::string RootMatrix::dump() const {
  std::ostringstream os;
  os << "l=" << l_ << " dim=" << dim_ << "\n";
  for (long r = 0; r < dim_; ++r)
    for (const auto& [c, k] : rows_[static_cast<size_t>(r)]) os << r << " " << c << " " << k << "\n";
  return os.str();
}

RootMatrix build_x(int l) {
  RootMatrix m(l, l);
  for (int i = 0; i < l; ++i) m.set(i, i, i);
  return m;
}

RootMatrix build_y(int l) {
  RootMatrix m(l, l);
  for (int i = 0; i < l; ++i) m.set(i, (i + 1) % l, 0);
  return m;
}

RootMatrix root_identity(int l, long dim) {
  RootMatrix m(l, dim);
  for (long i = 0; i < dim; ++i) m.set(i, i, 0);
  return m;
}

RootMatrix kron(const RootMatrix& a, const RootMatrix& b) {
  check_orders(a.order(), b.order());
  const long da = a.dim(), db = b.dim();
  RootMatrix out(a.order(), da * db);
  for (long i = 0; i < da; ++i) {
    for (const auto& [j, ka] : a.row(i)) {
      for (long r = 0; r < db; ++r)
        for (const auto& [s, kb] : b.row(r)) out.set(i * db + r, j * db + s, ka + kb);
    }
  }
  return out;
}

RootMatrix tilde_lift(const RootMatrix& a) {
  const int l = a.order();
  const long d = a.dim();
  RootMatrix out(l, l * d);
  // x (x) a: diagonal block i scaled by q^i.
  for (long i = 0; i < l; ++i)
    for (long r = 0; r < d; ++r)
      for (const auto& [c, k] : a.row(r)) out.set(i * d + r, i * d + c, static_cast<int>(i) + k);
  // y (x) Id: identity in block (i, i+1 mod l).
  for (long i = 0; i < l; ++i)
    for (long r = 0; r < d; ++r) out.set(i * d + r, ((i + 1) % l) * d + r, 0);
  return out;
}

RootMatrix build_B(int l, int n, long dim_limit) {
  if (l < 2) throw std::invalid_argument("build_B: l must be >= 2");
  if (n < 1) throw std::invalid_argument("build_B: n must be >= 1");
  checked_power(l, n, dim_limit);
  RootMatrix b = build_y(l);
  for (int i = 2; i <= n; ++i) b = tilde_lift(b);
  return b;
}

CycMatrix::CycMatrix(int order, long dim)
    : l_(order), dim_(dim), e_(static_cast<size_t>(dim) * static_cast<size_t>(dim), CycInt::zero(order)) {
  if (dim < 1) throw std::invalid_argument("CycMatrix: dimension must be >= 1");
}

CycMatrix CycMatrix::from_root(const RootMatrix& a) {
  CycMatrix out(a.order(), a.dim());
  for (long r = 0; r < a.dim(); ++r)
    for (const auto& [c, k] : a.row(r)) out.at(r, c) = cyc_root_power(a.order(), k);
  return out;
}

CycMatrix CycMatrix::scaled_identity(int order, long dim, BigInt scale) {
  CycMatrix out(order, dim);
  CycInt v = CycInt::from_int(order, std::move(scale));
  for (long i = 0; i < dim; ++i) out.at(i, i) = v;
  return out;
}

CycInt CycMatrix::trace() const {
  CycInt t = CycInt::zero(l_);
  for (long i = 0; i < dim_; ++i) t.add_assign(at(i, i));
  return t;
}

CycMatrix mat_mul_exact(const CycMatrix& a, const RootMatrix& b) {
  check_orders(a.order(), b.order());
  check_dims(a.dim(), b.dim());
  const long d = a.dim();
  auto cols = columns_of(b);
  CycMatrix out(a.order(), d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c) {
      CycInt& acc = out.at(r, c);
      for (const auto& [i, k] : cols[static_cast<size_t>(c)]) acc.add_mul_root(a.at(r, i), k);
    }
  return out;
}

CycMatrix mat_mul_exact(const RootMatrix& a, const RootMatrix& b) {
  return mat_mul_exact(CycMatrix::from_root(a), b);
}

CycMatrix mat_mul_exact(const RootMatrix& a, const CycMatrix& b) {
  check_orders(a.order(), b.order());
  check_dims(a.dim(), b.dim());
  const long d = a.dim();
  CycMatrix out(a.order(), d);
  for (long r = 0; r < d; ++r)
    for (const auto& [i, k] : a.row(r))
      for (long c = 0; c < d; ++c) out.at(r, c).add_mul_root(b.at(i, c), k);
  return out;
}

CycMatrix mat_mul_exact(const CycMatrix& a, const CycMatrix& b) {
  check_orders(a.order(), b.order());
  check_dims(a.dim(), b.dim());
  const long d = a.dim();
  CycMatrix out(a.order(), d);
  for (long r = 0; r < d; ++r)
    for (long i = 0; i < d; ++i) {
      const CycInt& v = a.at(r, i);
      if (v.is_zero()) continue;
      for (long c = 0; c < d; ++c) {
        const CycInt& w = b.at(i, c);
        if (w.is_zero()) continue;
        out.at(r, c).add_assign(v * w);
      }
    }
  return out;
}

CycMatrix mat_pow_exact(const RootMatrix& a, int e) {
  if (e < 1) throw std::invalid_argument("mat_pow_exact: exponent must be >= 1");
  CycMatrix p = CycMatrix::from_root(a);
  for (int i = 1; i < e; ++i) p = mat_mul_exact(p, a);
  return p;
}

CycMatrix scalar_mul(const CycInt& c, const CycMatrix& a) {
  if (c.order() != a.order()) throw std::invalid_argument("scalar_mul: order mismatch");
  CycMatrix out(a.order(), a.dim());
  for (long r = 0; r < a.dim(); ++r)
    for (long j = 0; j < a.dim(); ++j) out.at(r, j) = c * a.at(r, j);
  return out;
}

IdentityReport verify_power_identity(int l, int n, long dim_limit) {
  const auto t0 = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.l = l;
  rep.n = n;
  RootMatrix b = build_B(l, n, dim_limit);
  rep.dim = b.dim();
  rep.root_multiplies =
      static_cast<std::uint64_t>(b.dim()) * static_cast<std::uint64_t>(b.dim()) *
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(l - 1);
  CycMatrix p = mat_pow_exact(b, l);
  const CycInt want_diag = CycInt::from_int(l, n);
  const CycInt want_off = CycInt::zero(l);
  rep.pass = true;
  for (long r = 0; r < rep.dim && rep.pass; ++r)
    for (long c = 0; c < rep.dim; ++c) {
      const CycInt& want = (r == c) ? want_diag : want_off;
      if (p.at(r, c) == want) continue;
      rep.pass = false;
      rep.has_discrepancy = true;
      rep.bad_row = r;
      rep.bad_col = c;
      rep.got = p.at(r, c).to_string();
      rep.expected = want.to_string();
      break;
    }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

PatternMatrix abs_pattern(const RootMatrix& a) {
  PatternMatrix p(a.dim());
  for (long r = 0; r < a.dim(); ++r)
    for (const auto& [c, k] : a.row(r)) {
      (void)k;
      p.set(r, c);
    }
  return p;
}

}  // namespace qmagic
