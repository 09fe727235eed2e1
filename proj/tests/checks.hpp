#pragma once

// Chain-level Bockstein oracle shared by the unit tests and the acceptance run.
// Pages are computed as subquotients Z^r / B^r of Z_(p)-lattices, independently
// of the decomposition used by the library; failures come back as strings.

#include "lbss/bss.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lbss::testing {

// Lower-triangular column echelon of the generators; zero columns dropped.
inline Mat<PLocal> column_echelon(Mat<PLocal> g) {
  const Eigen::Index m = g.rows();
  Eigen::Index c = 0;
  for (Eigen::Index row = 0; row < m && c < g.cols(); ++row) {
    Eigen::Index best = -1;
    int bv = kInfiniteValuation;
    for (Eigen::Index j = c; j < g.cols(); ++j)
      if (!g(row, j).is_zero() && g(row, j).valuation() < bv) {
        bv = g(row, j).valuation();
        best = j;
      }
    if (best < 0) continue;
    g.col(c).swap(g.col(best));
    for (Eigen::Index j = c + 1; j < g.cols(); ++j) {
      if (g(row, j).is_zero()) continue;
      PLocal f = g(row, j) / g(row, c);
      g.col(j) -= f * g.col(c);
    }
    ++c;
  }
  return g.leftCols(c);
}

// Kernel lattice of M via column echelon of [M; I], eliminating on the first rows only.
inline Mat<PLocal> kernel_lattice(const Mat<PLocal>& M, unsigned p) {
  const Eigen::Index m = M.rows(), n = M.cols();
  Mat<PLocal> aug(m + n, n);
  aug.topRows(m) = M;
  aug.bottomRows(n) = identity<PLocal>(n, p);
  Eigen::Index c = 0;
  for (Eigen::Index row = 0; row < m && c < n; ++row) {
    Eigen::Index best = -1;
    int bv = kInfiniteValuation;
    for (Eigen::Index j = c; j < n; ++j)
      if (!aug(row, j).is_zero() && aug(row, j).valuation() < bv) {
        bv = aug(row, j).valuation();
        best = j;
      }
    if (best < 0) continue;
    aug.col(c).swap(aug.col(best));
    for (Eigen::Index j = c + 1; j < n; ++j) {
      if (aug(row, j).is_zero()) continue;
      PLocal f = aug(row, j) / aug(row, c);
      aug.col(j) -= f * aug.col(c);
    }
    ++c;
  }
  return aug.bottomRows(n).rightCols(n - c);
}

// log_p of the index of a full-rank lattice; -1 if the generators are not of full rank.
inline int log_index(const Mat<PLocal>& basis) {
  Mat<PLocal> e = column_echelon(basis);
  if (e.cols() != e.rows()) return -1;
  int v = 0;
  for (Eigen::Index i = 0; i < e.rows(); ++i) v += e(i, i).valuation();
  return v;
}

inline bool in_lattice(const Mat<PLocal>& gens, const Vec<PLocal>& x) {
  Mat<PLocal> e = column_echelon(gens);
  Vec<PLocal> r = x;
  Eigen::Index c = 0;
  for (Eigen::Index row = 0; row < r.rows(); ++row) {
    if (c < e.cols() && !e(row, c).is_zero()) {
      if (!r(row).is_zero()) {
        if (r(row).valuation() < e(row, c).valuation()) return false;
        r -= (r(row) / e(row, c)) * e.col(c);
      }
      ++c;
    } else if (!r(row).is_zero()) {
      return false;
    }
  }
  return true;
}

inline Mat<PLocal> hcat(const Mat<PLocal>& a, const Mat<PLocal>& b) {
  Mat<PLocal> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

// Z^r_n = {c : d c in p^r C_{n-1}}; Z^0 = C.
inline Mat<PLocal> cycles_mod(const ChainComplex<PLocal>& c, int r, int n) {
  const unsigned p = c.prime();
  const int dim = c.basis().rank(n);
  if (r == 0 || n == 0) return identity<PLocal>(dim, p);
  Mat<PLocal> d = c.d(n);
  Mat<PLocal> pr = PLocal::power_of_prime(p, r) * identity<PLocal>(d.rows(), p);
  Mat<PLocal> k = kernel_lattice(hcat(d, Mat<PLocal>(-pr)), p);
  Mat<PLocal> gens = k.topRows(dim);
  return column_echelon(hcat(gens, Mat<PLocal>(PLocal::power_of_prime(p, r) * identity<PLocal>(dim, p))));
}

// B^r_n = p Z^{r-1}_n + p^{1-r} d Z^{r-1}_{n+1}.
inline Mat<PLocal> boundaries_mod(const ChainComplex<PLocal>& c, int r, int n) {
  const unsigned p = c.prime();
  Mat<PLocal> gens = PLocal(p, p) * cycles_mod(c, r - 1, n);
  if (n + 1 <= c.top() && c.basis().rank(n + 1) > 0) {
    Mat<PLocal> z = cycles_mod(c, r - 1, n + 1);
    Mat<PLocal> dz = c.d(n + 1) * z;
    PLocal scale = PLocal::power_of_prime(p, r - 1);
    for (Eigen::Index i = 0; i < dz.rows(); ++i)
      for (Eigen::Index j = 0; j < dz.cols(); ++j) dz(i, j) /= scale;
    gens = hcat(gens, dz);
  }
  return gens;
}

inline int oracle_dim(const ChainComplex<PLocal>& c, int r, int n) {
  if (c.basis().rank(n) == 0) return 0;
  return log_index(boundaries_mod(c, r, n)) - log_index(cycles_mod(c, r, n));
}

// dim H_n(C (x) F_p) from ranks of the reduced differentials.
inline int mod_p_dim(const ChainComplex<PLocal>& c, int n) {
  const unsigned p = c.prime();
  auto rk = [&](int m) {
    if (m < 1 || m > c.top() || c.basis().rank(m) == 0 || c.basis().rank(m - 1) == 0) return 0;
    return rank<Fp>(reduce(c.d(m)), p);
  };
  return c.basis().rank(n) - rk(n) - rk(n + 1);
}

/// Every disagreement between bockstein_pages and the subquotient oracle on pages 1..r_max.
inline std::vector<std::string> bss_oracle_mismatches(const ChainComplex<PLocal>& c, int r_max) {
  std::vector<std::string> out;
  auto fail = [&](int r, int n, const std::string& what) {
    out.push_back("page " + std::to_string(r) + ", degree " + std::to_string(n) + ": " + what);
  };
  auto bss = bockstein_pages(c, r_max);
  const unsigned p = c.prime();
  auto h = homology(c);
  for (int r = 1; r <= r_max; ++r) {
    const auto& page = bss.page(r);
    for (int n = 0; n <= bss.window(); ++n) {
      if (page.dim(n) != oracle_dim(c, r, n)) fail(r, n, "dimension differs from Z^r/B^r");
      if (r == 1 && page.dim(n) != mod_p_dim(c, n)) fail(r, n, "dim E^1 differs from mod-p homology");
      if (c.basis().rank(n) == 0) continue;
      // Representatives survive and, with B^r_n, generate Z^r_n.
      Mat<PLocal> gens = boundaries_mod(c, r, n);
      for (const auto& cls : page.classes[n]) {
        if (!bss.survives(r, n, cls.representative)) fail(r, n, "representative does not survive");
        if (n > 0 && !in_lattice(PLocal::power_of_prime(p, r) * identity<PLocal>(c.basis().rank(n - 1), p),
                                 Vec<PLocal>(c.d(n) * cls.representative)))
          fail(r, n, "representative is not in Z^r");
        gens = hcat(gens, cls.representative);
      }
      if (log_index(gens) != log_index(cycles_mod(c, r, n))) fail(r, n, "representatives do not span Z^r/B^r");
      if (n == 0) continue;
      // beta^r(y) = [d(y)/p^r]: the difference with the claimed image lies in B^r.
      Mat<Fp> beta = page.beta.block(n);
      for (int i = 0; i < page.dim(n); ++i) {
        Vec<PLocal> dy = c.d(n) * page.classes[n][i].representative;
        PLocal scale = PLocal::power_of_prime(p, r);
        for (Eigen::Index t = 0; t < dy.rows(); ++t) dy(t) /= scale;
        Vec<PLocal> claimed = zero_vector<PLocal>(c.basis().rank(n - 1));
        for (int j = 0; j < page.dim(n - 1); ++j)
          claimed += PLocal(beta(j, i).value(), p) * page.classes[n - 1][j].representative;
        if (!in_lattice(boundaries_mod(c, r, n - 1), Vec<PLocal>(dy - claimed))) fail(r, n, "beta^r differs from [d y / p^r]");
      }
      if (n >= 2 && !is_zero(Mat<Fp>(page.beta.block(n - 1) * page.beta.block(n)))) fail(r, n, "beta o beta != 0");
      if (r < r_max && n + 1 <= bss.window()) {
        int ker = page.dim(n) - rank<Fp>(page.beta.block(n), p);
        int im = rank<Fp>(page.beta.block(n + 1), p);
        if (bss.page(r + 1).dim(n) != ker - im) fail(r, n, "next page is not ker/im");
      }
    }
    // Pairs on page r in degrees (n+1, n) count torsion summands Z/p^r in H_n.
    for (int n = 0; n + 1 <= bss.window(); ++n) {
      int pairs = rank<Fp>(page.beta.block(n + 1), p);
      int count = static_cast<int>(std::count(h.at(n).torsion.begin(), h.at(n).torsion.end(), r));
      if (pairs != count) fail(r, n, "beta pairs differ from torsion count");
    }
  }
  if (bss.stable_page())
    for (int n = 0; n <= bss.window(); ++n)
      if (bss.page(*bss.stable_page()).dim(n) != h.at(n).betti) fail(*bss.stable_page(), n, "stable page differs from free rank");
  return out;
}

}  // namespace lbss::testing
