#include "lbss/cce.hpp"

#include "lbss/linalg.hpp"

#include <stdexcept>

namespace lbss {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

// ---------------------------------------------------------------- LambdaAlgebra

template <ExactScalar S>
LambdaAlgebra<S>::LambdaAlgebra(std::vector<std::string> names, std::vector<int> degrees, int top, unsigned p)
    : p_(p), names_(std::move(names)), basis_(top) {
  if (names_.size() != degrees.size()) throw std::invalid_argument("one degree per generator name required");
  mb_ = MonomialBasis(std::move(degrees), top);
  for (int n = 0; n <= top; ++n)
    for (const auto& m : mb_.monomials(n)) basis_.add(n, name(m));
}

template <ExactScalar S>
std::string LambdaAlgebra<S>::name(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ".";
    out += names_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <ExactScalar S>
Element<S> LambdaAlgebra<S>::one() const {
  Element<S> e;
  e[mb_.unit()] = scalar<S>(1, p_);
  return e;
}

template <ExactScalar S>
Element<S> LambdaAlgebra<S>::generator(int i) const {
  Element<S> e;
  e[mb_.generator(i)] = scalar<S>(1, p_);
  return e;
}

template <ExactScalar S>
Element<S> LambdaAlgebra<S>::basis_element(int n, int k) const {
  Element<S> e;
  e[monomials(n).at(ix(k))] = scalar<S>(1, p_);
  return e;
}

template <ExactScalar S>
Element<S> LambdaAlgebra<S>::element(int n, const Vec<S>& c) const {
  Element<S> e;
  const auto& ms = monomials(n);
  for (std::size_t k = 0; k < ms.size(); ++k) add_to(e, ms[k], c(static_cast<Eigen::Index>(k)));
  return e;
}

template <ExactScalar S>
Vec<S> LambdaAlgebra<S>::coords(const Element<S>& u, int n) const {
  Vec<S> v = with_prime<S>(zero_vector<S>(dim(n)), p_);
  for (const auto& [m, c] : u) {
    if (degree(m) != n) throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(n));
    v(mb_.index(m)) = c;
  }
  return v;
}

template <ExactScalar S>
Element<S> LambdaAlgebra<S>::multiply(const Element<S>& a, const Element<S>& b) const {
  Element<S> out;
  const auto& deg = mb_.generator_degrees();
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (degree(ma) + degree(mb) > top()) continue;
      Monomial m(ma.size(), 0);
      bool vanishes = false;
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = ma[i] + mb[i];
        if (is_odd(deg[i]) && m[i] > 1) vanishes = true;
      }
      if (vanishes) continue;
      add_to(out, m, S(scalar<S>(product_sign(deg, ma, mb), p_) * ca * cb));
    }
  return out;
}

template <ExactScalar S>
GradedMap<S> LambdaAlgebra<S>::extend(const LambdaAlgebra<S>& target, const std::vector<Element<S>>& images) const {
  if (static_cast<int>(images.size()) != generators()) throw std::invalid_argument("one image per generator required");
  for (int i = 0; i < generators(); ++i)
    for (const auto& [m, c] : images[ix(i)])
      if (target.degree(m) != mb_.generator_degree(i))
        throw std::invalid_argument("image of " + names_[ix(i)] + " is not homogeneous of degree " +
                                    std::to_string(mb_.generator_degree(i)));
  const int top = std::min(this->top(), target.top());
  GradedMap<S> out(basis_, target.basis(), 0, p_);
  for (int n = 0; n <= top; ++n) {
    Mat<S> block = with_prime<S>(zeros<S>(target.dim(n), dim(n)), p_);
    for (int k = 0; k < dim(n); ++k) {
      const Monomial& m = monomials(n)[ix(k)];
      Element<S> img = target.one();
      for (int i = 0; i < generators() && !img.empty(); ++i)
        for (int e = 0; e < m[ix(i)]; ++e) img = target.multiply(img, images[ix(i)]);
      block.col(k) = target.coords(img, n);
    }
    out.set_block(n, block);
  }
  return out;
}

template <ExactScalar S>
GradedMap<S> LambdaAlgebra<S>::derivation(const std::vector<Element<S>>& images, int shift) const {
  if (static_cast<int>(images.size()) != generators()) throw std::invalid_argument("one image per generator required");
  for (int i = 0; i < generators(); ++i)
    for (const auto& [m, c] : images[ix(i)])
      if (degree(m) != mb_.generator_degree(i) + shift)
        throw std::invalid_argument("derivation image of " + names_[ix(i)] + " has the wrong degree");
  // d(v_a m') = d(v_a) m' + (-1)^{shift |v_a|} v_a d(m'), v_a the first letter of the monomial.
  std::map<Monomial, Element<S>> memo;
  memo[mb_.unit()] = {};
  auto d_of = [&](auto&& self, const Monomial& m) -> const Element<S>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int a = 0;
    while (m[ix(a)] == 0) ++a;
    Monomial rest = m;
    --rest[ix(a)];
    Element<S> rest_e;
    rest_e[rest] = scalar<S>(1, p_);
    Element<S> out = multiply(images[ix(a)], rest_e);
    add_to(out, multiply(generator(a), self(self, rest)),
           koszul<S>(static_cast<long>(shift) * mb_.generator_degree(a), p_));
    return memo[m] = std::move(out);
  };
  GradedMap<S> out(basis_, basis_, shift, p_);
  for (int n = 0; n <= top(); ++n) {
    const int t = n + shift;
    if (t < 0 || t > top()) continue;
    Mat<S> block = with_prime<S>(zeros<S>(dim(t), dim(n)), p_);
    for (int k = 0; k < dim(n); ++k) block.col(k) = coords(d_of(d_of, monomials(n)[ix(k)]), t);
    out.set_block(n, block);
  }
  return out;
}

// ---------------------------------------------------------------- CochainAlgebra

template <ExactScalar S>
CochainAlgebra<S>::CochainAlgebra(LambdaAlgebra<S> A, std::vector<Element<S>> d_generators)
    : A_(std::move(A)), dgen_(std::move(d_generators)) {
  d_ = A_.derivation(dgen_, 1);
  const unsigned p = A_.prime();
  for (int n = 0; n + 2 <= A_.top(); ++n) {
    Mat<S> dd = d_.block(n + 1) * d_.block(n);
    for (int k = 0; k < dd.cols(); ++k)
      for (int r = 0; r < dd.rows(); ++r)
        if (!dd(r, k).is_zero())
          throw ComplexError("d^2 != 0 on " + A_.name(A_.monomials(n)[ix(k)]) + ": d^2 = " +
                             render<S>(with_prime<S>(Vec<S>(dd.col(k)), p), A_.basis().names(n + 2)));
  }
}

template <ExactScalar S>
Element<S> CochainAlgebra<S>::differential(const Element<S>& u) const {
  std::map<int, Element<S>> parts;
  for (const auto& [m, c] : u) parts[A_.degree(m)][m] = c;
  Element<S> out;
  for (const auto& [n, part] : parts) {
    if (n + 1 > A_.top()) continue;
    add_to(out, A_.element(n + 1, d_.block(n) * A_.coords(part, n)), scalar<S>(1, A_.prime()));
  }
  return out;
}

template <ExactScalar S>
ChainComplex<S> CochainAlgebra<S>::complex() const {
  std::map<int, Mat<S>> blocks;
  for (int n = 0; n < A_.top(); ++n) blocks[n] = d_.block(n);
  return make_complex<S>(A_.basis(), 1, A_.prime(), blocks);
}

// ---------------------------------------------------------------- C*(L), C_*(L)

namespace {

template <ExactScalar S>
LambdaAlgebra<S> lambda_of(const DgLie<S>& L, int top) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 0; i < L.size(); ++i) {
    names.push_back("s" + L.generator(i).name + "#");
    degrees.push_back(L.degree(i) + 1);
  }
  return LambdaAlgebra<S>(names, degrees, top, L.prime());
}

template <ExactScalar S>
GammaAlgebra<S> gamma_of(const DgLie<S>& L, int top) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 0; i < L.size(); ++i) {
    names.push_back("s" + L.generator(i).name);
    degrees.push_back(L.degree(i) + 1);
  }
  return GammaAlgebra<S>(names, degrees, top, L.prime());
}

}  // namespace

template <ExactScalar S>
CceCochains<S> cochains(const DgLie<S>& L, int top) {
  for (int i = 0; i < L.size(); ++i)
    if (L.degree(i) < 1) throw std::invalid_argument("cochains need a connected Lie algebra");
  const unsigned p = L.prime();
  LambdaAlgebra<S> A = lambda_of(L, top);
  GammaAlgebra<S> G = gamma_of(L, top);
  const auto& deg = A.monomial_basis().generator_degrees();
  const int m = L.size();
  std::vector<Element<S>> lin(ix(m)), quad(ix(m));
  for (int i = 0; i < m; ++i) {
    // <d0 v_i, s x_j> = (-1)^{|v_i|} <v_i, s dx_j>
    for (int j = 0; j < m; ++j) {
      S c = L.differential(j)(i);
      if (!c.is_zero()) add_to(lin[ix(i)], A.monomial_basis().generator(j), S(koszul<S>(deg[ix(i)], p) * c));
    }
    // <d1 v_i, s x_a . s x_b> = (-1)^{|s x_b|} <v_i, s[x_a, x_b]>, solved against the pairing.
    const int n = deg[ix(i)] + 1;
    if (n > top) continue;
    Vec<S> rhs = with_prime<S>(zero_vector<S>(G.dim(n)), p);
    bool any = false;
    for (int g = 0; g < G.dim(n); ++g) {
      const Monomial& mono = G.monomials(n)[ix(g)];
      if (G.monomial_basis().length(mono) != 2) continue;
      std::vector<int> letters = G.monomial_basis().letters(mono);
      const int a = letters[0], b = letters[1];
      S value = koszul<S>(deg[ix(b)], p) * L.bracket(a, b)(i);
      if (a == b) value = value / scalar<S>(2, p);  // s x_a . s x_a = 2 gamma^2(s x_a)
      rhs(g) = value;
      any = any || !value.is_zero();
    }
    if (!any) continue;
    Mat<S> P = lambda_gamma_pairing(A.monomial_basis(), G, n);
    auto c = solve<S>(Mat<S>(P.transpose()), rhs, p);
    if (!c) throw ComplexError("pairing is degenerate in degree " + std::to_string(n));
    quad[ix(i)] = A.element(n, *c);
  }
  GradedMap<S> d0 = A.derivation(lin, 1), d1 = A.derivation(quad, 1);
  std::vector<Element<S>> total(ix(m));
  for (int i = 0; i < m; ++i) {
    total[ix(i)] = lin[ix(i)];
    add_to(total[ix(i)], quad[ix(i)], scalar<S>(1, p));
  }
  return CceCochains<S>{CochainAlgebra<S>(A, total), std::move(d0), std::move(d1)};
}

template <ExactScalar S>
CceChains<S> chains(const DgLie<S>& L, int top) {
  const unsigned p = L.prime();
  // One degree of headroom so that d on Lambda^top is known.
  CceCochains<S> C = cochains(L, top + 1);
  const LambdaAlgebra<S>& A = C.algebra.algebra();
  GammaAlgebra<S> G = gamma_of(L, top);
  std::vector<Mat<S>> P, Pinv;
  for (int n = 0; n <= top; ++n) {
    P.push_back(lambda_gamma_pairing(A.monomial_basis(), G, n));
    Pinv.push_back(inverse<S>(P.back(), p));
  }
  auto transpose_of = [&](const GradedMap<S>& d) {
    GradedMap<S> out(G.basis(), G.basis(), -1, p);
    for (int n = 0; n < top; ++n) {
      // partial: Gamma_{n+1} -> Gamma_n with <d l, g> = (-1)^{n+1} <l, partial g>, l in Lambda_n
      Mat<S> block = koszul<S>(n + 1, p) * Pinv[ix(n)] * Mat<S>(d.block(n).transpose()) * P[ix(n + 1)];
      out.set_block(n + 1, with_prime<S>(block, p));
    }
    return out;
  };
  GradedMap<S> d0 = transpose_of(C.d0), d1 = transpose_of(C.d1);
  std::map<int, Mat<S>> blocks;
  for (int n = 1; n <= top; ++n) blocks[n] = d0.block(n) + d1.block(n);
  ChainComplex<S> complex = make_complex<S>(G.basis(), -1, p, blocks);
  return CceChains<S>{std::move(G), std::move(d0), std::move(d1), std::move(complex)};
}

// ---------------------------------------------------------------- quasi-isomorphisms

template <ExactScalar S>
QuasiIsoVerdict verify_quasi_iso(const CochainAlgebra<S>& source, const CochainAlgebra<S>& target,
                                 const std::vector<Element<S>>& images, int window) {
  const auto& A = source.algebra();
  const auto& B = target.algebra();
  const unsigned p = A.prime();
  if (A.top() < window + 2 || B.top() < window + 1)
    throw std::invalid_argument("verify_quasi_iso through degree " + std::to_string(window) +
                                " needs source top >= " + std::to_string(window + 2) + " and target top >= " +
                                std::to_string(window + 1));
  QuasiIsoVerdict v;
  if (static_cast<int>(images.size()) != A.generators()) throw std::invalid_argument("one image per generator required");
  for (int i = 0; i < A.generators(); ++i)
    for (const auto& [m, c] : images[ix(i)])
      if (B.degree(m) != A.monomial_basis().generator_degree(i)) {
        v.witness = "image of " + A.generator_names()[ix(i)] + " has degree " + std::to_string(B.degree(m)) +
                    ", expected " + std::to_string(A.monomial_basis().generator_degree(i));
        return v;
      }
  GradedMap<S> m = A.extend(B, images);
  for (int n = 0; n <= window; ++n) {
    Mat<S> defect = m.block(n + 1) * source.d().block(n) - target.d().block(n) * m.block(n);
    for (int k = 0; k < defect.cols(); ++k)
      if (!is_zero(Vec<S>(defect.col(k)))) {
        v.witness = "dm != md on " + A.name(A.monomials(n)[ix(k)]);
        return v;
      }
  }
  v.cochain_map = true;
  // Cone, reindexed so that C_k = S^k (+) T^{k-1}; D(a, b) = (-da, ma + db).
  const int top = window + 2;
  GradedBasis basis(top);
  for (int k = 0; k <= top; ++k) {
    for (const auto& s : A.basis().names(k)) basis.add(k, "s:" + s);
    if (k >= 1)
      for (const auto& t : B.basis().names(k - 1)) basis.add(k, "t:" + t);
  }
  std::map<int, Mat<S>> blocks;
  for (int k = 0; k < top; ++k) {
    const int sa = A.dim(k), tb = B.dim(k - 1), sa1 = A.dim(k + 1), tb1 = B.dim(k);
    Mat<S> D = with_prime<S>(zeros<S>(sa1 + tb1, sa + tb), p);
    D.topLeftCorner(sa1, sa) = -source.d().block(k);
    D.bottomLeftCorner(tb1, sa) = m.block(k);
    if (k >= 1) D.bottomRightCorner(tb1, tb) = target.d().block(k - 1);
    blocks[k] = D;
  }
  HomologySummary H = homology(make_complex<S>(basis, 1, p, blocks));
  for (int k = 0; k <= window + 1; ++k) {
    const HomologyGroup& h = H.at(k);
    if (h.betti != 0 || !h.torsion.empty()) {
      v.witness = "mapping cone has homology in degree " + std::to_string(k) + ": H^" + std::to_string(k - 1) +
                  "(m) is not onto or H^" + std::to_string(k) + "(m) is not injective";
      return v;
    }
  }
  v.ok = true;
  return v;
}

#define LBSS_INSTANTIATE(S)                                                   \
  template class LambdaAlgebra<S>;                                            \
  template class CochainAlgebra<S>;                                           \
  template CceCochains<S> cochains(const DgLie<S>&, int);                     \
  template CceChains<S> chains(const DgLie<S>&, int);                         \
  template QuasiIsoVerdict verify_quasi_iso(const CochainAlgebra<S>&, const CochainAlgebra<S>&, \
                                            const std::vector<Element<S>>&, int);

LBSS_INSTANTIATE(PLocal)
LBSS_INSTANTIATE(Fp)

}  // namespace lbss
