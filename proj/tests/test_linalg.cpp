#include "doctest.h"
#include "lbss/linalg.hpp"

#include <random>

using namespace lbss;

namespace {

constexpr unsigned P = 3;

Mat<PLocal> from_ints(std::initializer_list<std::initializer_list<long>> rows, unsigned p = P) {
  Mat<PLocal> m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = PLocal(v, p);
    ++i;
  }
  return m;
}

// Determinant by cofactor expansion over Q; small matrices only.
mpq_class det(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    mpq_class term = a[0][j] * det(minor);
    total += (j % 2 == 0) ? term : mpq_class(-term);
  }
  return total;
}

int val(const mpq_class& q, unsigned p) {
  if (q == 0) return kInfiniteValuation;
  return PLocal(q, p).valuation();
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Elementary divisor exponents from minimal valuations of k x k minors.
std::vector<int> minor_exponents(const Mat<PLocal>& A, unsigned p) {
  std::vector<int> out;
  int prev = 0;
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  for (int k = 1; k <= std::min(m, n); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(m, k, 0, cur, rs);
    subsets(n, k, 0, cur, cs);
    int best = kInfiniteValuation;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<mpq_class>> sub(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[static_cast<std::size_t>(i)].push_back(A(r[i], c[j]).value());
        best = std::min(best, val(det(sub), p));
      }
    if (best == kInfiniteValuation) break;
    out.push_back(best - prev);
    prev = best;
  }
  return out;
}

void check_smith(const Mat<PLocal>& A, unsigned p) {
  auto sf = snf(A, p);
  CHECK(sf.U * A * sf.V == sf.D);
  CHECK(sf.U * sf.U_inv == identity<PLocal>(A.rows(), p));
  CHECK(sf.V * sf.V_inv == identity<PLocal>(A.cols(), p));
  for (Eigen::Index i = 0; i < sf.D.rows(); ++i)
    for (Eigen::Index j = 0; j < sf.D.cols(); ++j) {
      if (i == j && i < sf.rank())
        CHECK(sf.D(i, j) == PLocal::power_of_prime(p, sf.exponents[static_cast<std::size_t>(i)]));
      else
        CHECK(sf.D(i, j).is_zero());
    }
  CHECK(std::is_sorted(sf.exponents.begin(), sf.exponents.end()));
  CHECK(sf.exponents == minor_exponents(A, p));
}

}  // namespace

TEST_CASE("smith form: worked cases") {
  CHECK(snf(from_ints({{0, 0}, {0, 0}}), P).exponents.empty());
  CHECK(snf(from_ints({{1, 0}, {0, 1}}), P).exponents == std::vector<int>{0, 0});
  auto sf = snf(from_ints({{3, 0}, {0, 1}}), P);
  CHECK(sf.exponents == std::vector<int>{0, 1});
  check_smith(from_ints({{3, 0}, {0, 1}}), P);
  check_smith(from_ints({{6, 9, 27}, {2, 0, 3}}), P);
  check_smith(from_ints({{9, 18}, {27, 3}, {0, 81}}), P);
}

TEST_CASE("smith form agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(7);
  for (unsigned p : {3u, 5u}) {
    std::uniform_int_distribution<int> shape(1, 4), entry(-30, 30), pw(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
      int m = shape(rng), n = shape(rng);
      Mat<PLocal> A(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          long v = entry(rng);
          for (int e = pw(rng); e > 0; --e) v *= p;
          A(i, j) = (trial % 3 == 0) ? PLocal(mpz_class(v), mpz_class(trial % 2 ? 2 : 7), p)
                                     : PLocal(v, p);
        }
      check_smith(A, p);
    }
  }
}

TEST_CASE("kernel, image and solve") {
  auto K = kernel_basis<PLocal>(from_ints({{3, 0}}), P);
  REQUIRE(K.cols() == 1);
  CHECK(K(0, 0).is_zero());
  CHECK(K(1, 0).is_unit());

  Mat<PLocal> A = from_ints({{3}});
  Vec<PLocal> b(1);
  b(0) = PLocal(1, P);
  CHECK_FALSE(solve<PLocal>(A, b, P).has_value());
  b(0) = PLocal(6, P);
  auto x = solve<PLocal>(A, b, P);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == PLocal(2, P));

  Vec<PLocal> bad(2);
  bad << PLocal(1, P), PLocal(1, P);
  CHECK_THROWS_AS(solve<PLocal>(A, bad, P), std::invalid_argument);

  Mat<PLocal> B = from_ints({{1, 2}, {2, 4}, {0, 3}});
  auto im = image_basis<PLocal>(B, P);
  CHECK(im.cols() == 2);
  auto inv = inverse<PLocal>(from_ints({{2, 1}, {1, 1}}), P);
  CHECK(inv * from_ints({{2, 1}, {1, 1}}) == identity<PLocal>(2, P));
  CHECK_THROWS_AS(inverse<PLocal>(from_ints({{3, 0}, {0, 1}}), P), RingError);
}

TEST_CASE("F_p elimination") {
  Mat<Fp> A(2, 3);
  A << Fp(1, 5), Fp(2, 5), Fp(3, 5), Fp(0, 5), Fp(1, 5), Fp(1, 5);
  auto sf = smith_form<Fp>(A, 5);
  CHECK(sf.rank() == 2);
  CHECK(sf.U * A * sf.V == sf.D);
  CHECK(reduce(from_ints({{3, 1}}))(0, 0).is_zero());
}

TEST_CASE("independent rows preserve the kernel") {
  Mat<PLocal> A = from_ints({{1, 2, 3}, {2, 4, 6}, {0, 3, 9}, {1, 5, 12}});
  auto R = independent_rows<PLocal>(A, P);
  CHECK(R.rows() == 2);
  auto K = kernel_basis<PLocal>(A, P);
  CHECK(is_zero(Mat<PLocal>(R * K)));
  CHECK(kernel_basis<PLocal>(R, P).cols() == K.cols());
}

TEST_CASE("scalars") {
  CHECK_THROWS_AS(PLocal(1, 3) / PLocal(3, 3), RingError);
  CHECK(PLocal::parse("-5/2", 3).reduce() == Fp(-5 * 2, 3));
  CHECK_THROWS_AS(PLocal::parse("1/3", 3), RingError);
  CHECK_THROWS_AS(PLocal::parse("x", 3), RingError);
  CHECK(PLocal::parse("18/5", 3).valuation() == 2);
  CHECK(Fp(2, 5).inverse() == Fp(3, 5));
  CHECK(Fp(4, 5).centered() == -1);
  CHECK_THROWS_AS(PLocal(1, 3) + PLocal(1, 5), RingError);
}

namespace {

// Fraction-free (Bareiss) elimination over Z; returns the rank over Q.
int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

TEST_CASE("solve and kernel against a fraction-free oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  const unsigned p = 3;
  int solvable = 0, unsolvable = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<mpq_class>> a(5, std::vector<mpq_class>(5));
    std::vector<std::vector<mpz_class>> az(5, std::vector<mpz_class>(5));
    Mat<PLocal> A(5, 5);
    Vec<PLocal> b(5);
    std::vector<mpq_class> bq(5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        long v = entry(rng);
        if (trial % 2 && j == 4) v = 0;  // force some singular instances
        a[i][j] = v;
        az[i][j] = v;
        A(i, j) = PLocal(v, p);
      }
      long bv = entry(rng);
      bq[static_cast<std::size_t>(i)] = bv;
      b(i) = PLocal(bv, p);
    }
    int rk = bareiss_rank(az);
    auto K = kernel_basis<PLocal>(A, p);
    CHECK(K.cols() == 5 - rk);
    CHECK(is_zero(Mat<PLocal>(A * K)));
    CHECK(rank<Fp>(reduce(K), p) == K.cols());  // saturated
    if (rk == 5) {
      // Cramer's rule over Q.
      mpq_class D = det(a);
      bool integral = true;
      for (int j = 0; j < 5; ++j) {
        auto aj = a;
        for (int i = 0; i < 5; ++i) aj[i][j] = bq[static_cast<std::size_t>(i)];
        mpq_class xj = det(aj) / D;
        if (xj.get_den() % p == 0) integral = false;
      }
      auto x = solve<PLocal>(A, b, p);
      CHECK(x.has_value() == integral);
      if (x) CHECK(A * *x == b);
      (integral ? solvable : unsolvable)++;
    }
  }
  CHECK(solvable > 0);
  CHECK(unsolvable > 0);
}

TEST_CASE("F_p rank plus nullity") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Mat<Fp> A(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) A(i, j) = Fp(trial % 4 == 0 && i == 3 ? 0 : entry(rng), 5);
    CHECK(rank<Fp>(A, 5) + kernel_basis<Fp>(A, 5).cols() == 6);
  }
  Mat<Fp> A(1, 1);
  A(0, 0) = Fp(3, 3);
  Vec<Fp> b(1);
  b(0) = Fp(1, 3);
  CHECK_FALSE(solve<Fp>(A, b, 3).has_value());
}

TEST_CASE("rank of the reduction counts unit exponents") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 30; ++trial) {
    Mat<PLocal> A(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) = PLocal(entry(rng) * (j == 0 ? 3 : 1), 3);
    auto sf = snf(A, 3);
    long units = std::count(sf.exponents.begin(), sf.exponents.end(), 0);
    CHECK(rank<Fp>(reduce(A), 3) == units);
  }
}
