#include "qmagic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qmagic {

namespace {

struct Echelon {
  CMatrix u;                    // row echelon form
  std::vector<long> pivot_cols;
};

// Row echelon form with partial pivoting on maximum modulus.  Columns whose
// best pivot is at or below tol * (largest entry modulus of the input) are
// left pivot-free.
Echelon eliminate(CMatrix m, double tol) {
  const long rows = m.rows(), cols = m.cols();
  double scale = 0.0;
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) scale = std::max(scale, std::abs(m(i, j)));
  const double threshold = tol * scale;

  Echelon e;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long p = r;
    double best = std::abs(m(r, c));
    for (long i = r + 1; i < rows; ++i) {
      double v = std::abs(m(i, c));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > threshold) || best == 0.0) continue;  // pivot-free column
    if (p != r) m.row(p).swap(m.row(r));
    for (long i = r + 1; i < rows; ++i) {
      std::complex<double> f = m(i, c) / m(r, c);
      if (f != 0.0) m.row(i) -= f * m.row(r);
      m(i, c) = 0.0;
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.u = std::move(m);
  return e;
}

}  // namespace

CMatrix to_numeric(const RootMatrix& a) {
  const int l = a.order();
  std::vector<std::complex<double>> roots(static_cast<size_t>(l));
  for (int k = 0; k < l; ++k) roots[static_cast<size_t>(k)] = cyc_to_complex(cyc_root_power(l, k));
  CMatrix m = CMatrix::Zero(a.dim(), a.dim());
  for (long r = 0; r < a.dim(); ++r)
    for (const auto& [c, k] : a.row(r)) m(r, c) = roots[static_cast<size_t>(k)];
  return m;
}

long gauss_rank(const CMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("gauss_rank: tol must be positive");
  return static_cast<long>(eliminate(m, tol).pivot_cols.size());
}

CMatrix null_space(const CMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("null_space: tol must be positive");
  const long cols = m.cols();
  Echelon e = eliminate(m, tol);
  const long rank = static_cast<long>(e.pivot_cols.size());
  const long nullity = cols - rank;
  if (nullity == 0) return CMatrix(cols, 0);

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (long c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  CMatrix basis(cols, nullity);
  long out = 0;
  for (long f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    CVector x = CVector::Zero(cols);
    x(f) = 1.0;
    // Back substitution over the pivot rows of the echelon form.
    for (long i = rank - 1; i >= 0; --i) {
      const long pc = e.pivot_cols[static_cast<size_t>(i)];
      std::complex<double> acc(0.0, 0.0);
      for (long c = pc + 1; c < cols; ++c) acc += e.u(i, c) * x(c);
      x(pc) = -acc / e.u(i, pc);
    }
    basis.col(out++) = x;
  }
  // Orthonormalize.
  Eigen::HouseholderQR<CMatrix> qr(basis);
  CMatrix q = qr.householderQ() * CMatrix::Identity(cols, nullity);
  return q;
}

SpectralReport eigen_multiplicities(int l, int n, double tol, long dim_limit, int threads) {
  if (threads < 0) throw std::invalid_argument("eigen_multiplicities: threads must be >= 0");
  SpectralReport rep;
  rep.l = l;
  rep.n = n;
  rep.tol = tol;
  RootMatrix b = build_B(l, n, dim_limit);
  rep.dim = b.dim();
  rep.root = std::pow(static_cast<double>(n), 1.0 / l);
  const CMatrix bn = to_numeric(b);
  const long expect = rep.dim / l;  // l^(n-1)

  if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, l);
  std::vector<long> nullities(static_cast<size_t>(l), 0);
  auto work = [&](int first) {
    for (int k = first; k < l; k += threads) {
      std::complex<double> lambda =
          rep.root * std::polar(1.0, 2.0 * std::numbers::pi * k / l);
      CMatrix shifted = bn - lambda * CMatrix::Identity(rep.dim, rep.dim);
      nullities[static_cast<size_t>(k)] = rep.dim - gauss_rank(shifted, tol);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  rep.nullities = std::move(nullities);
  rep.has_large_multiplicity = false;
  rep.equal_split = true;
  for (long nullity : rep.nullities) {
    rep.nullity_sum += nullity;
    if (nullity >= expect) rep.has_large_multiplicity = true;
    if (nullity != expect) rep.equal_split = false;
  }
  rep.sum_matches_dim = (rep.nullity_sum == rep.dim);
  return rep;
}

std::optional<EigenWitness> intersection_witness(int l, int n, const VertexSubset& s,
                                                 double tol, long dim_limit) {
  if (s.size() < 1) throw std::invalid_argument("intersection_witness: subset must be nonempty");
  RootMatrix b = build_B(l, n, dim_limit);
  if (s.universe() != b.dim())
    throw std::invalid_argument("intersection_witness: subset universe mismatch");
  const long dim = b.dim();
  const double root = std::pow(static_cast<double>(n), 1.0 / l);
  const std::complex<double> lambda(root, 0.0);

  const CMatrix bn = to_numeric(b);
  CMatrix shifted = bn - lambda * CMatrix::Identity(dim, dim);
  CMatrix null_basis = null_space(shifted, tol);  // dim x m
  const long m = null_basis.cols();
  if (m == 0) return std::nullopt;

  const std::vector<long> members = s.to_indices();
  std::vector<long> complement;
  complement.reserve(static_cast<size_t>(dim - s.size()));
  for (long v = 0; v < dim; ++v)
    if (!s.contains(v)) complement.push_back(v);

  CVector combo;
  if (complement.empty()) {
    combo = CVector::Zero(m);
    combo(0) = 1.0;
  } else {
    CMatrix restricted(static_cast<long>(complement.size()), m);
    for (size_t i = 0; i < complement.size(); ++i)
      restricted.row(static_cast<long>(i)) = null_basis.row(complement[i]);
    CMatrix k = null_space(restricted, tol);
    if (k.cols() == 0) return std::nullopt;
    combo = k.col(0);
  }

  CVector full = null_basis * combo;
  CVector onset(static_cast<long>(members.size()));
  for (size_t i = 0; i < members.size(); ++i) onset(static_cast<long>(i)) = full(members[i]);
  const double norm = onset.norm();
  if (!(norm > tol)) return std::nullopt;
  onset /= norm;

  // Residual against the S x S minor.
  CMatrix minor(static_cast<long>(members.size()), static_cast<long>(members.size()));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) minor(static_cast<long>(i), static_cast<long>(j)) = bn(members[i], members[j]);
  EigenWitness w;
  w.lambda = lambda;
  w.vector = onset;
  w.residual = (minor * onset - lambda * onset).norm();
  return w;
}

NormBound minor_norm_bound(int l, int n, const VertexSubset& s, long dim_limit) {
  if (s.size() < 1) throw std::invalid_argument("minor_norm_bound: subset must be nonempty");
  RootMatrix b = build_B(l, n, dim_limit);
  if (s.universe() != b.dim())
    throw std::invalid_argument("minor_norm_bound: subset universe mismatch");
  NormBound nb;
  std::vector<int> col_count(static_cast<size_t>(b.dim()), 0);
  for (long r = 0; r < b.dim(); ++r) {
    if (!s.contains(r)) continue;
    int row_count = 0;
    for (const auto& [c, k] : b.row(r)) {
      (void)k;
      if (s.contains(c)) {
        ++row_count;
        ++col_count[static_cast<size_t>(c)];
      }
    }
    nb.max_row = std::max(nb.max_row, row_count);
  }
  for (long c = 0; c < b.dim(); ++c) nb.max_col = std::max(nb.max_col, col_count[static_cast<size_t>(c)]);
  return nb;
}

}  // namespace qmagic
