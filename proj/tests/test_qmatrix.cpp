#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qmagic/qmatrix.hpp"
#include "test_util.hpp"

using namespace qmagic;
using qmagic::testutil::random_root_matrix;

namespace {

long row_count(const RootMatrix& a, long r) { return static_cast<long>(a.row(r).size()); }

long col_count(const RootMatrix& a, long c) {
  long count = 0;
  for (long r = 0; r < a.dim(); ++r)
    if (!a.at(r, c).is_zero()) ++count;
  return count;
}

}  // namespace

TEST_CASE("RootMatrix storage semantics") {
  RootMatrix a(4, 3);
  CHECK(a.nonzeros() == 0);
  CHECK(a.at(0, 0).is_zero());

  a.set(0, 2, 1);
  a.set(0, 1, 3);
  a.set(2, 0, 6);  // exponents fold mod l
  CHECK(a.nonzeros() == 3);
  CHECK(a.at(0, 2).exponent() == 1);
  CHECK(a.at(2, 0).exponent() == 2);
  CHECK(a.row(0) == std::vector<RootMatrix::Entry>{{1, 3}, {2, 1}});  // sorted by column

  a.set(0, 2, 3);  // overwrite, not duplicate
  CHECK(a.nonzeros() == 3);
  CHECK(a.at(0, 2).exponent() == 3);
}

TEST_CASE("generators x and y have the frozen shapes") {
  for (int l = 2; l <= 6; ++l) {
    const RootMatrix x = build_x(l);
    const RootMatrix y = build_y(l);
    CHECK(x.nonzeros() == l);
    CHECK(y.nonzeros() == l);
    for (long i = 0; i < l; ++i) {
      CHECK(x.at(i, i).exponent() == i);
      CHECK(y.at(i, (i + 1) % l).exponent() == 0);
    }
  }
  CHECK(root_identity(3, 4).nonzeros() == 4);
  CHECK(root_identity(3, 4).at(2, 2).exponent() == 0);
}

TEST_CASE("Kronecker product places exponent sums blockwise") {
  const RootMatrix k = kron(build_x(2), build_y(2));
  RootMatrix want(2, 4);
  want.set(0, 1, 0);
  want.set(1, 0, 0);
  want.set(2, 3, 1);
  want.set(3, 2, 1);
  CHECK(k == want);

  CHECK(kron(build_x(3), build_y(3)).dim() == 9);
  CHECK_THROWS_AS(kron(build_x(2), build_x(3)), std::invalid_argument);
}

TEST_CASE("q-commutation: x y = q^(l-1) y x exactly") {
  for (int l = 2; l <= 16; ++l) {
    const RootMatrix x = build_x(l);
    const RootMatrix y = build_y(l);
    const CycMatrix lhs = mat_mul_exact(x, y);
    const CycMatrix rhs = scalar_mul(cyc_root_power(l, l - 1), mat_mul_exact(y, x));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generators are l-th roots of the identity") {
  for (int l = 2; l <= 8; ++l) {
    const CycMatrix id = CycMatrix::scaled_identity(l, l, 1);
    CHECK(mat_pow_exact(build_x(l), l) == id);
    CHECK(mat_pow_exact(build_y(l), l) == id);
  }
}

TEST_CASE("collapse: (x + y)^l = 2 I") {
  // x is diagonal and y strictly off-diagonal, so the sum stays a RootMatrix.
  for (int l = 2; l <= 6; ++l) {
    RootMatrix u = build_x(l);
    for (long i = 0; i < l; ++i) u.set(i, (i + 1) % l, 0);
    CHECK(mat_pow_exact(u, l) == CycMatrix::scaled_identity(l, l, 2));
  }
}

TEST_CASE("lift identity: tilde(A)^l = Id_l (x) (A^l + Id_m) for random A") {
  std::mt19937_64 rng(7021);
  for (int l : {2, 3}) {
    for (long m : {2L, 3L}) {
      for (int trial = 0; trial < 5; ++trial) {
        const RootMatrix a = random_root_matrix(l, m, 0.6, rng);
        const CycMatrix got = mat_pow_exact(tilde_lift(a), l);
        const CycMatrix al = mat_pow_exact(a, l);
        CycMatrix want(l, l * m);
        for (int b = 0; b < l; ++b)
          for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) {
              CycInt v = al.at(i, j);
              if (i == j) v = v + CycInt::from_int(l, 1);
              want.at(b * m + i, b * m + j) = v;
            }
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("the four exact product kernels agree") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 5; ++trial) {
    const RootMatrix a = random_root_matrix(3, 6, 0.4, rng);
    const RootMatrix b = random_root_matrix(3, 6, 0.4, rng);
    const CycMatrix ad = CycMatrix::from_root(a);
    const CycMatrix bd = CycMatrix::from_root(b);
    const CycMatrix want = mat_mul_exact(a, b);
    CHECK(mat_mul_exact(ad, b) == want);
    CHECK(mat_mul_exact(a, bd) == want);
    CHECK(mat_mul_exact(ad, bd) == want);
  }
  CHECK_THROWS_AS(mat_mul_exact(build_x(2), build_x(3)), std::invalid_argument);
}

TEST_CASE("mat_pow_exact composes multiplication") {
  std::mt19937_64 rng(88);
  const RootMatrix a = random_root_matrix(4, 5, 0.5, rng);
  CHECK(mat_pow_exact(a, 1) == CycMatrix::from_root(a));
  CHECK(mat_pow_exact(a, 3) == mat_mul_exact(mat_pow_exact(a, 2), CycMatrix::from_root(a)));
  CHECK_THROWS_AS(mat_pow_exact(a, 0), std::invalid_argument);
}

TEST_CASE("B_n recursion, shape, and sparsity") {
  for (int l : {2, 3, 5}) {
    CHECK(build_B(l, 1) == build_y(l));
    for (int n = 2; n <= 3; ++n) {
      long dim = 1;
      for (int i = 0; i < n; ++i) dim *= l;
      if (dim > kDefaultDimLimit) break;
      const RootMatrix b = build_B(l, n);
      CHECK(b.dim() == dim);
      CHECK(b.order() == l);
      CHECK(b.nonzeros() == n * dim);
      CHECK(b == tilde_lift(build_B(l, n - 1)));
      for (long r = 0; r < dim; ++r) CHECK(row_count(b, r) == n);
      for (long c = 0; c < dim; ++c) CHECK(col_count(b, c) == n);
    }
  }
}

TEST_CASE("B_2 at l=2 matches the frozen dump") {
  CHECK(build_B(2, 2).dump() ==
        "l=2 dim=4\n"
        "0 1 0\n"
        "0 2 0\n"
        "1 0 0\n"
        "1 3 0\n"
        "2 0 0\n"
        "2 3 1\n"
        "3 1 0\n"
        "3 2 1\n");
}

TEST_CASE("power identity B_n^l = n I") {
  for (auto [l, n] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{5, 1}, std::pair{6, 1}}) {
    const IdentityReport rep = verify_power_identity(l, n);
    CHECK(rep.pass);
    CHECK_FALSE(rep.has_discrepancy);
    CHECK(rep.l == l);
    CHECK(rep.n == n);
    CHECK(rep.root_multiplies > 0);
    CHECK(rep.elapsed_ms >= 0.0);
  }
}

TEST_CASE("a corrupted B no longer satisfies the identity") {
  RootMatrix b = build_B(2, 2);
  b.set(0, 1, 1);  // flip one sign
  const CycMatrix p = mat_pow_exact(b, 2);
  CHECK_FALSE(p == CycMatrix::scaled_identity(2, 4, 2));
}

TEST_CASE("powers of B below l have zero trace") {
  // Eigenvalues q^k n^(1/l) split evenly, so tr(B^j) = 0 unless l | j.
  for (auto [l, n] : {std::pair{3, 2}, std::pair{4, 2}}) {
    const RootMatrix b = build_B(l, n);
    for (int j = 1; j < l; ++j) CHECK(mat_pow_exact(b, j).trace().is_zero());
    CHECK(mat_pow_exact(b, l).trace() == CycInt::from_int(l, n * b.dim()));
  }
}

TEST_CASE("dimension cap is enforced and adjustable") {
  CHECK_THROWS_AS(build_B(2, 13), ResourceLimitError);
  CHECK(build_B(2, 13, 10000).dim() == 8192);
}

TEST_CASE("abs_pattern keeps exactly the support") {
  const RootMatrix b = build_B(2, 2);
  const PatternMatrix p = abs_pattern(b);
  long ones = 0;
  for (long r = 0; r < p.dim; ++r)
    for (long c = 0; c < p.dim; ++c)
      if (p.at(r, c)) {
        ++ones;
        CHECK_FALSE(b.at(r, c).is_zero());
      }
  CHECK(ones == b.nonzeros());
}

TEST_CASE("scaled identity trace") {
  CHECK(CycMatrix::scaled_identity(3, 4, 5).trace() == CycInt::from_int(3, 20));
  CHECK(CycMatrix(3, 2).trace().is_zero());
}
