#include "lbss/graded.hpp"

#include <algorithm>

namespace lbss {

GradedBasis::GradedBasis(int top) : top_(top), names_(static_cast<std::size_t>(std::max(top, -1) + 1)) {
  if (top < 0) throw std::invalid_argument("negative top degree");
}

int GradedBasis::rank(int n) const {
  if (n < 0 || n > top_) return 0;
  return static_cast<int>(names_[static_cast<std::size_t>(n)].size());
}

int GradedBasis::total_rank() const {
  int t = 0;
  for (const auto& v : names_) t += static_cast<int>(v.size());
  return t;
}

const std::vector<std::string>& GradedBasis::names(int n) const {
  static const std::vector<std::string> empty;
  if (n < 0 || n > top_) return empty;
  return names_[static_cast<std::size_t>(n)];
}

int GradedBasis::index_of(int n, const std::string& name) const {
  const auto& v = names(n);
  auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

void GradedBasis::add(int degree, std::string name) {
  if (degree < 0 || degree > top_)
    throw std::out_of_range("degree " + std::to_string(degree) + " outside [0, " + std::to_string(top_) + "]");
  if (index_of(degree, name) >= 0) throw std::invalid_argument("duplicate basis element " + name);
  names_[static_cast<std::size_t>(degree)].push_back(std::move(name));
}

GradedBasis suspend(const GradedBasis& m, bool* truncated) {
  GradedBasis out(m.top());
  bool lost = false;
  for (int n = 0; n <= m.top(); ++n)
    for (const auto& x : m.names(n)) {
      if (n + 1 > m.top())
        lost = true;
      else
        out.add(n + 1, "s" + x);
    }
  if (truncated) *truncated = lost;
  return out;
}

GradedBasis dual_basis(const GradedBasis& m) {
  GradedBasis out(m.top());
  for (int n = 0; n <= m.top(); ++n)
    for (const auto& x : m.names(n)) out.add(n, x + "^#");
  return out;
}

ChainComplex<Fp> reduce(const ChainComplex<PLocal>& c) {
  GradedMap<Fp> d(c.basis(), c.basis(), c.shift(), c.prime());
  for (int n = 0; n <= c.top(); ++n) {
    int m = n + c.shift();
    if (m < 0 || m > c.top()) continue;
    d.set_block(n, with_prime<Fp>(reduce(c.d(n)), c.prime()));
  }
  return ChainComplex<Fp>(c.basis(), std::move(d));
}

const HomologyGroup& HomologySummary::at(int n) const {
  if (n < 0 || n > window_)
    throw std::out_of_range("degree " + std::to_string(n) + " is outside the trusted window [0, " +
                            std::to_string(window_) + "]; raise the top degree to see it");
  return groups_[static_cast<std::size_t>(n)];
}

namespace {

template <ExactScalar S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out = zeros<S>(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

}  // namespace

template <ExactScalar S>
Decomposition<S> decompose(const ChainComplex<S>& c) {
  const int N = c.top(), sigma = c.shift();
  const unsigned p = c.prime();
  const auto deg = [](int n) { return static_cast<std::size_t>(n); };

  // Stage 1: split each C_n as Y_n (+) K_n with K_n = ker d_n.
  std::vector<Mat<S>> V(deg(N + 1)), V_inv(deg(N + 1));
  std::vector<int> y_dim(deg(N + 1), 0);
  for (int n = 0; n <= N; ++n) {
    int m = n + sigma, r = c.basis().rank(n);
    if (m >= 0 && m <= N) {
      auto sf = smith_form<S>(c.d(n), p);
      V[deg(n)] = sf.V;
      V_inv[deg(n)] = sf.V_inv;
      y_dim[deg(n)] = sf.rank();
    } else {
      V[deg(n)] = identity<S>(r, p);
      V_inv[deg(n)] = identity<S>(r, p);
    }
  }

  // Stage 2: d restricted to Y_m lands in K_{m+sigma}; diagonalize it there.
  Decomposition<S> out;
  out.top = N;
  out.shift = sigma;
  out.p = p;
  std::vector<Mat<S>> W(deg(N + 1)), W_inv(deg(N + 1)), Ut(deg(N + 1)), Ut_inv(deg(N + 1));
  std::vector<std::vector<int>> exps(deg(N + 1));
  for (int n = 0; n <= N; ++n) {
    int k = c.basis().rank(n) - y_dim[deg(n)];
    Ut[deg(n)] = identity<S>(k, p);
    Ut_inv[deg(n)] = identity<S>(k, p);
    W[deg(n)] = identity<S>(y_dim[deg(n)], p);
    W_inv[deg(n)] = identity<S>(y_dim[deg(n)], p);
  }
  for (int m = 0; m <= N; ++m) {
    int n = m + sigma;
    if (n < 0 || n > N || y_dim[deg(m)] == 0) continue;
    const int y = y_dim[deg(m)], yn = y_dim[deg(n)];
    const int k = c.basis().rank(n) - yn;
    Mat<S> coords = V_inv[deg(n)] * c.d(m) * V[deg(m)].leftCols(y);
    if (!is_zero(coords.topRows(yn))) throw ComplexError("d o d != 0 near degree " + std::to_string(m));
    Mat<S> M = coords.bottomRows(k);
    auto sf = smith_form<S>(M, p);
    if (sf.rank() != y) throw ComplexError("internal: differential not injective on a complement");
    W[deg(m)] = sf.V;
    W_inv[deg(m)] = sf.V_inv;
    Ut[deg(n)] = sf.U;
    Ut_inv[deg(n)] = sf.U_inv;
    exps[deg(m)] = sf.exponents;
  }

  out.basis.resize(deg(N + 1));
  out.basis_inv.resize(deg(N + 1));
  out.slots.resize(deg(N + 1));
  for (int n = 0; n <= N; ++n) {
    out.basis[deg(n)] = V[deg(n)] * block_diag<S>(W[deg(n)], Ut_inv[deg(n)]);
    out.basis_inv[deg(n)] = block_diag<S>(W_inv[deg(n)], Ut[deg(n)]) * V_inv[deg(n)];
    out.slots[deg(n)].assign(deg(c.basis().rank(n)), BasisSlot{});
  }
  for (int m = 0; m <= N; ++m) {
    int n = m + sigma;
    for (int i = 0; i < static_cast<int>(exps[deg(m)].size()); ++i) {
      ElementaryPiece piece{m, i, n, y_dim[deg(n)] + i, exps[deg(m)][deg(i)]};
      int id = static_cast<int>(out.pieces.size());
      out.pieces.push_back(piece);
      out.slots[deg(m)][deg(piece.source_slot)] = {BasisRole::Source, id};
      out.slots[deg(n)][deg(piece.target_slot)] = {BasisRole::Target, id};
    }
  }
  return out;
}

template <ExactScalar S>
HomologySummary homology_of(const Decomposition<S>& dec) {
  const int window = dec.top - 1;
  std::vector<HomologyGroup> groups(static_cast<std::size_t>(std::max(window, -1) + 1));
  for (int n = 0; n <= window; ++n) {
    auto& g = groups[static_cast<std::size_t>(n)];
    for (const auto& s : dec.slots[static_cast<std::size_t>(n)]) {
      if (s.role == BasisRole::Free) ++g.betti;
      if (s.role == BasisRole::Target) {
        int k = dec.pieces[static_cast<std::size_t>(s.piece)].exponent;
        if (k == 0) continue;
        if constexpr (std::is_same_v<S, PLocal>) g.torsion.push_back(k);
      }
    }
    std::sort(g.torsion.begin(), g.torsion.end());
  }
  return HomologySummary(window, std::move(groups));
}

std::vector<int> mod_p_homology_dims(const ChainComplex<Fp>& c) {
  std::vector<int> ranks(static_cast<std::size_t>(c.top() + 1), 0);
  for (int n = 0; n <= c.top(); ++n) {
    int m = n + c.shift();
    if (m >= 0 && m <= c.top()) ranks[static_cast<std::size_t>(n)] = rank<Fp>(c.d(n), c.prime());
  }
  std::vector<int> out;
  for (int n = 0; n < c.top(); ++n) {
    int in = n - c.shift();
    int incoming = (in >= 0 && in <= c.top()) ? ranks[static_cast<std::size_t>(in)] : 0;
    out.push_back(c.basis().rank(n) - ranks[static_cast<std::size_t>(n)] - incoming);
  }
  return out;
}

std::vector<int> mod_p_homology_dims(const ChainComplex<PLocal>& c) { return mod_p_homology_dims(reduce(c)); }

template Decomposition<PLocal> decompose(const ChainComplex<PLocal>&);
template Decomposition<Fp> decompose(const ChainComplex<Fp>&);
template HomologySummary homology_of(const Decomposition<PLocal>&);
template HomologySummary homology_of(const Decomposition<Fp>&);

}  // namespace lbss
