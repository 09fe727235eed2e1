#pragma once

// Exact dense linear algebra over Z_(p) and F_p.
//
// Everything is driven by one elimination routine that pivots on an entry of
// minimal p-adic valuation. Over F_p every nonzero entry has valuation 0 and
// the routine degenerates to Gauss-Jordan elimination; over Z_(p) it produces
// the Smith normal form, because Z_(p) is a local PID whose ideals are (p^k).

#include "lbss/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lbss {

/// U * A * V == S, with U, V invertible and S = diag(p^k_1, ..., p^k_r, 0, ...).
template <ExactScalar S>
struct SmithForm {
  Mat<S> U, D, V;
  Mat<S> U_inv, V_inv;
  /// k_i for the nonzero diagonal entries, non-decreasing.
  std::vector<int> exponents;
  int rank() const { return static_cast<int>(exponents.size()); }
};

namespace detail {

inline std::size_t pivot_size(const PLocal& x) {
  return mpz_sizeinbase(x.value().get_num_mpz_t(), 2) + mpz_sizeinbase(x.value().get_den_mpz_t(), 2);
}
inline std::size_t pivot_size(const Fp&) { return 0; }

template <ExactScalar S>
void swap_rows(Mat<S>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}
template <ExactScalar S>
void swap_cols(Mat<S>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

/// row(dst) += f * row(src), skipping zeros.
template <ExactScalar S>
void add_row(Mat<S>& m, Eigen::Index dst, Eigen::Index src, const S& f) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (!m(src, j).is_zero()) m(dst, j) += f * m(src, j);
}
template <ExactScalar S>
void add_col(Mat<S>& m, Eigen::Index dst, Eigen::Index src, const S& f) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) += f * m(i, src);
}

template <ExactScalar S>
S power_of_prime(unsigned p, int k) {
  if constexpr (std::is_same_v<S, PLocal>) {
    return PLocal::power_of_prime(p, k);
  } else {
    return k == 0 ? scalar<S>(1, p) : scalar<S>(0, p);
  }
}

}  // namespace detail

/// Smith normal form with both transformation matrices and their inverses.
template <ExactScalar S>
SmithForm<S> smith_form(const Mat<S>& A, unsigned p) {
  const Eigen::Index m = A.rows(), n = A.cols();
  SmithForm<S> out;
  out.D = with_prime<S>(A, p);
  out.U = identity<S>(m, p);
  out.U_inv = identity<S>(m, p);
  out.V = identity<S>(n, p);
  out.V_inv = identity<S>(n, p);
  Mat<S>& D = out.D;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    Eigen::Index pi = -1, pj = -1;
    int best_v = kInfiniteValuation;
    std::size_t best_size = 0;
    for (Eigen::Index j = t; j < n; ++j)
      for (Eigen::Index i = t; i < m; ++i) {
        if (D(i, j).is_zero()) continue;
        int v = valuation(D(i, j));
        std::size_t sz = detail::pivot_size(D(i, j));
        if (v < best_v || (v == best_v && sz < best_size)) {
          best_v = v;
          best_size = sz;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;

    detail::swap_rows(D, t, pi);
    detail::swap_rows(out.U, t, pi);
    detail::swap_cols(out.U_inv, t, pi);
    detail::swap_cols(D, t, pj);
    detail::swap_cols(out.V, t, pj);
    detail::swap_rows(out.V_inv, t, pj);

    // Normalize the pivot to p^k.
    S unit = D(t, t).unit_part();
    S unit_inv = scalar<S>(1, p) / unit;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!D(t, j).is_zero()) D(t, j) *= unit_inv;
    for (Eigen::Index j = 0; j < m; ++j)
      if (!out.U(t, j).is_zero()) out.U(t, j) *= unit_inv;
    for (Eigen::Index i = 0; i < m; ++i)
      if (!out.U_inv(i, t).is_zero()) out.U_inv(i, t) *= unit;

    const S pivot = D(t, t);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == t || D(i, t).is_zero()) continue;
      S f = D(i, t) / pivot;
      detail::add_row(D, i, t, S(-f));
      detail::add_row(out.U, i, t, S(-f));
      detail::add_col(out.U_inv, t, i, f);
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == t || D(t, j).is_zero()) continue;
      S f = D(t, j) / pivot;
      detail::add_col(D, j, t, S(-f));
      detail::add_col(out.V, j, t, S(-f));
      detail::add_row(out.V_inv, t, j, f);
    }
    out.exponents.push_back(best_v);
  }
  return out;
}

/// Smith normal form over Z_(p); U*A*V == D with unimodular U, V.
inline SmithForm<PLocal> snf(const Mat<PLocal>& A, unsigned p) { return smith_form<PLocal>(A, p); }

template <ExactScalar S>
int rank(const Mat<S>& A, unsigned p) {
  return smith_form<S>(A, p).rank();
}

/// Columns form a basis of ker A; over Z_(p) the kernel is saturated.
template <ExactScalar S>
Mat<S> kernel_basis(const Mat<S>& A, unsigned p) {
  auto sf = smith_form<S>(A, p);
  const Eigen::Index r = sf.rank();
  return sf.V.rightCols(A.cols() - r);
}

/// Columns form a basis of im A (saturated image is NOT returned over Z_(p)).
template <ExactScalar S>
Mat<S> image_basis(const Mat<S>& A, unsigned p) {
  auto sf = smith_form<S>(A, p);
  const Eigen::Index r = sf.rank();
  // A*V = U^{-1} D; the first r columns of A*V span the image.
  Mat<S> AV = with_prime<S>(A, p) * sf.V;
  return AV.leftCols(r);
}

/// Exact solution of A x = b, or nullopt when b is not in the image over the ring.
template <ExactScalar S>
std::optional<Vec<S>> solve(const Mat<S>& A, const Vec<S>& b, unsigned p) {
  if (A.rows() != b.rows())
    throw std::invalid_argument("solve: " + std::to_string(A.rows()) + " rows but right-hand side of length " +
                                std::to_string(b.rows()));
  auto sf = smith_form<S>(A, p);
  Vec<S> c = sf.U * with_prime<S>(b, p);
  Vec<S> y = zero_vector<S>(A.cols());
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    if (i < sf.rank()) {
      if (!c(i).is_zero() && valuation(c(i)) < sf.exponents[i]) return std::nullopt;
      y(i) = c(i) / detail::power_of_prime<S>(p, sf.exponents[i]);
    } else if (!c(i).is_zero()) {
      return std::nullopt;
    }
  }
  return Vec<S>(sf.V * y);
}

/// Inverse of a matrix that is invertible over the ring.
template <ExactScalar S>
Mat<S> inverse(const Mat<S>& A, unsigned p) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  auto sf = smith_form<S>(A, p);
  if (sf.rank() != A.rows()) throw RingError("matrix is singular");
  for (int k : sf.exponents)
    if (k != 0) throw RingError("matrix is not invertible over Z_(p)");
  return sf.V * sf.U;
}

/// Rows of the result span the same row module as the rows of A and are
/// linearly independent. Only row operations that are invertible over the
/// ring are used, so kernels are preserved exactly.
template <ExactScalar S>
Mat<S> independent_rows(Mat<S> A, unsigned p) {
  const Eigen::Index m = A.rows(), n = A.cols();
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < n && r < m; ++j) {
    Eigen::Index best = -1;
    int best_v = kInfiniteValuation;
    for (Eigen::Index i = r; i < m; ++i) {
      if (A(i, j).is_zero()) continue;
      int v = valuation(A(i, j));
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best < 0) continue;
    detail::swap_rows(A, r, best);
    const S pivot = A(r, j);
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (A(i, j).is_zero()) continue;
      S f = A(i, j) / pivot;
      detail::add_row(A, i, r, S(-f));
    }
    ++r;
  }
  (void)p;
  return A.topRows(r);
}

}  // namespace lbss
