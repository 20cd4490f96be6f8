#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmagic/cyclotomic.hpp"
#include "qmagic/errors.hpp"

namespace qmagic {

/// Default cap on matrix dimension (l^n) for the exact operations.
inline constexpr long kDefaultDimLimit = 4096;

/// A matrix entry that is either zero or a root of unity q^k.
class RootEntry {
 public:
  static RootEntry zero() { return RootEntry(); }
  static RootEntry root(int l, int k) {
    RootEntry e;
    int r = k % l;
    e.exp_ = r < 0 ? r + l : r;
    return e;
  }
  bool is_zero() const { return !exp_.has_value(); }
  int exponent() const { return *exp_; }

 private:
  std::optional<int> exp_;
};

/// Sparse square matrix whose nonzero entries are l-th roots of unity,
/// stored row-major as sorted (column, exponent) pairs.  At most one entry
/// per cell; exponents are kept reduced mod l.
class RootMatrix {
 public:
  using Entry = std::pair<long, int>;  // (column, exponent)

  RootMatrix(int order, long dim);

  int order() const { return l_; }
  long dim() const { return dim_; }
  /// Insert or overwrite the entry at (r, c) with q^exponent.
  void set(long r, long c, int exponent);
  RootEntry at(long r, long c) const;
  const std::vector<Entry>& row(long r) const { return rows_[static_cast<size_t>(r)]; }
  long nonzeros() const;

  friend bool operator==(const RootMatrix& a, const RootMatrix& b) {
    return a.l_ == b.l_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

  /// Text dump: header "l=<l> dim=<d>" then one "row col exponent" line per
  /// nonzero, sorted by (row, col).
  std::string dump() const;

 private:
  int l_;
  long dim_;
  std::vector<std::vector<Entry>> rows_;
};

/// Diagonal matrix diag(q^0, ..., q^{l-1}).
RootMatrix build_x(int l);

/// Cycle permutation matrix: entry (i, j) = 1 iff j = i+1 mod l.
RootMatrix build_y(int l);

/// Identity of the given dimension as a RootMatrix (diagonal of q^0).
RootMatrix root_identity(int l, long dim);

/// Kronecker product; the entry at ((i*db+r), (j*db+s)) carries exponent
/// (k_a + k_b) mod l.  Orders must match.
RootMatrix kron(const RootMatrix& a, const RootMatrix& b);

/// The lift A -> x (x) A + y (x) Id.  The two summands occupy disjoint blocks
/// (diagonal vs off-diagonal), so the sum stays a RootMatrix.
RootMatrix tilde_lift(const RootMatrix& a);

/// The recursive family: B_1 = y, B_n = tilde(B_{n-1}); an l^n-by-l^n matrix
/// with exactly n roots of unity per row and per column.
/// Throws ResourceLimitError when l^n exceeds dim_limit.
RootMatrix build_B(int l, int n, long dim_limit = kDefaultDimLimit);

/// Dense square matrix of exact cyclotomic integers; holds products whose
/// entries leave the zero-or-root set.
class CycMatrix {
 public:
  CycMatrix(int order, long dim);

  static CycMatrix from_root(const RootMatrix& a);
  static CycMatrix scaled_identity(int order, long dim, BigInt scale);

  int order() const { return l_; }
  long dim() const { return dim_; }
  CycInt& at(long r, long c) { return e_[static_cast<size_t>(r * dim_ + c)]; }
  const CycInt& at(long r, long c) const { return e_[static_cast<size_t>(r * dim_ + c)]; }
  CycInt trace() const;

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.l_ == b.l_ && a.dim_ == b.dim_ && a.e_ == b.e_;
  }

 private:
  int l_;
  long dim_;
  std::vector<CycInt> e_;
};

CycMatrix mat_mul_exact(const RootMatrix& a, const RootMatrix& b);
CycMatrix mat_mul_exact(const CycMatrix& a, const RootMatrix& b);
CycMatrix mat_mul_exact(const RootMatrix& a, const CycMatrix& b);
CycMatrix mat_mul_exact(const CycMatrix& a, const CycMatrix& b);

/// a^e by repeated multiplication, e >= 1.
CycMatrix mat_pow_exact(const RootMatrix& a, int e);

CycMatrix scalar_mul(const CycInt& c, const CycMatrix& a);

/// Outcome of checking B_n^l = n * Id exactly.
struct IdentityReport {
  int l = 0;
  int n = 0;
  long dim = 0;
  bool pass = false;
  bool has_discrepancy = false;
  long bad_row = -1;
  long bad_col = -1;
  std::string got;       // entry found at the first discrepancy
  std::string expected;  // entry required there
  std::uint64_t root_multiplies = 0;
  double elapsed_ms = 0.0;
};

/// Compute B_n^l exactly and compare with n * Id entry by entry.
IdentityReport verify_power_identity(int l, int n, long dim_limit = kDefaultDimLimit);

/// Dense 0/1 pattern; shared between the matrix and graph views.
struct PatternMatrix {
  long dim = 0;
  std::vector<std::uint8_t> bits;  // row-major

  PatternMatrix() = default;
  explicit PatternMatrix(long d) : dim(d), bits(static_cast<size_t>(d) * static_cast<size_t>(d)) {}
  std::uint8_t at(long r, long c) const { return bits[static_cast<size_t>(r * dim + c)]; }
  void set(long r, long c) { bits[static_cast<size_t>(r * dim + c)] = 1; }
  friend bool operator==(const PatternMatrix& a, const PatternMatrix& b) = default;
};

/// Same support as a, with every nonzero replaced by 1.
PatternMatrix abs_pattern(const RootMatrix& a);

}  // namespace qmagic
