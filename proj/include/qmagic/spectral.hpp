#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "qmagic/cyclegraph.hpp"
#include "qmagic/qmatrix.hpp"

namespace qmagic {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultRankTol = 1e-8;

/// Dense numeric image of a root matrix; every nonzero has modulus 1 within
/// 1e-12.
CMatrix to_numeric(const RootMatrix& a);

/// Numeric rank by Gaussian elimination with partial pivoting on maximum
/// modulus.  A pivot whose modulus is at most tol times the largest entry
/// modulus of the input is treated as zero.  rank + nullity = cols.
long gauss_rank(const CMatrix& m, double tol);

/// Orthonormal basis of the null space (columns), same pivot rule as
/// gauss_rank.  A zero-dimensional null space gives a cols-by-0 matrix.
CMatrix null_space(const CMatrix& m, double tol);

/// Per-eigenvalue nullity report for B_n; eigenvalue k is q^k * n^(1/l) with
/// the real positive root.
struct SpectralReport {
  int l = 0;
  int n = 0;
  long dim = 0;
  double root = 0.0;  // n^(1/l)
  double tol = 0.0;
  std::vector<long> nullities;       // indexed by k
  long nullity_sum = 0;
  bool sum_matches_dim = false;      // nullities add up to l^n
  bool has_large_multiplicity = false;  // some nullity >= l^(n-1)
  bool equal_split = false;          // every nullity == l^(n-1)
};

/// threads = 0 picks hardware concurrency; the per-eigenvalue eliminations are
/// independent, so the report does not depend on the thread count.
SpectralReport eigen_multiplicities(int l, int n, double tol = kDefaultRankTol,
                                    long dim_limit = kDefaultDimLimit, int threads = 1);

/// Certificate that the lambda-eigenspace of B_n meets the span of s: a unit
/// vector supported on s with small minor residual.
struct EigenWitness {
  std::complex<double> lambda;
  CVector vector;   // unit norm, length |s|, indexed by ascending members of s
  double residual;  // || B_S v - lambda v ||_2
};

/// With lambda = n^(1/l) real positive: searches the lambda-null space of
/// B_n - lambda I for a combination vanishing on the complement of s.
/// Returns nothing when no such combination exists within tolerance.
std::optional<EigenWitness> intersection_witness(int l, int n, const VertexSubset& s,
                                                 double tol = kDefaultRankTol,
                                                 long dim_limit = kDefaultDimLimit);

/// Maximum row and column l1-norms of the S x S minor of B_n.  All nonzeros
/// have modulus 1, so both norms are exact nonzero counts.
struct NormBound {
  int max_row = 0;
  int max_col = 0;
};

NormBound minor_norm_bound(int l, int n, const VertexSubset& s,
                           long dim_limit = kDefaultDimLimit);

}  // namespace qmagic
