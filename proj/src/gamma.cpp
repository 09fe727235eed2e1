#include "lbss/gamma.hpp"

#include <stdexcept>

namespace lbss {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

template <ExactScalar S>
S binomial(int n, int k, unsigned p) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return scalar<S>(b, p);
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

template <ExactScalar S>
S power(const S& c, int k, unsigned p) {
  S out = scalar<S>(1, p);
  for (int i = 0; i < k; ++i) out *= c;
  return out;
}

template <ExactScalar S>
Element<S> unit_element(int generators, unsigned p) {
  Element<S> e;
  e[Monomial(ix(generators), 0)] = scalar<S>(1, p);
  return e;
}

template <ExactScalar S>
Element<S> difference(const Element<S>& a, const Element<S>& b, unsigned p) {
  Element<S> d = a;
  add_to(d, b, scalar<S>(-1, p));
  return d;
}

}  // namespace

template <ExactScalar S>
TensorElement<S> shuffle_product(const std::vector<int>& degrees, const TensorElement<S>& a,
                                 const TensorElement<S>& b, unsigned p) {
  TensorElement<S> out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      const int i = static_cast<int>(u.size()), j = static_cast<int>(v.size());
      // Items 0..i-1 are the letters of u, i..i+j-1 those of v.
      std::vector<int> item_degrees;
      for (int x : u) item_degrees.push_back(degrees[ix(x)]);
      for (int x : v) item_degrees.push_back(degrees[ix(x)]);
      std::vector<int> order;
      auto rec = [&](auto&& self, int taken_u, int taken_v) -> void {
        if (taken_u == i && taken_v == j) {
          Word w;
          for (int item : order) w.push_back(item < i ? u[ix(item)] : v[ix(item - i)]);
          add_to(out, w, S(scalar<S>(permutation_sign(item_degrees, order), p) * cu * cv));
          return;
        }
        if (taken_u < i) {
          order.push_back(taken_u);
          self(self, taken_u + 1, taken_v);
          order.pop_back();
        }
        if (taken_v < j) {
          order.push_back(i + taken_v);
          self(self, taken_u, taken_v + 1);
          order.pop_back();
        }
      };
      rec(rec, 0, 0);
    }
  return out;
}

std::vector<std::pair<Word, Word>> deconcatenate(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t k = 0; k <= w.size(); ++k)
    out.emplace_back(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                     Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
  return out;
}

int interleaving_sign(const std::vector<int>& v_degrees, const std::vector<int>& w_degrees) {
  if (v_degrees.size() != w_degrees.size()) throw std::invalid_argument("interleaving needs equal lengths");
  const int k = static_cast<int>(v_degrees.size());
  std::vector<int> degrees = v_degrees;
  degrees.insert(degrees.end(), w_degrees.begin(), w_degrees.end());
  std::vector<int> order;
  for (int i = 0; i < k; ++i) {
    order.push_back(i);
    order.push_back(k + i);
  }
  return permutation_sign(degrees, order);
}

int tensor_pairing(const Word& v, const Word& w, const std::vector<int>& degrees) {
  if (v != w) return 0;
  std::vector<int> d;
  for (int x : v) d.push_back(degrees[ix(x)]);
  return interleaving_sign(d, d);
}

// ---------------------------------------------------------------- GammaAlgebra

template <ExactScalar S>
GammaAlgebra<S>::GammaAlgebra(std::vector<std::string> names, std::vector<int> degrees, int top, unsigned p)
    : p_(p), names_(std::move(names)), basis_(top) {
  if (names_.size() != degrees.size()) throw std::invalid_argument("one degree per generator name required");
  mb_ = MonomialBasis(std::move(degrees), top);
  for (int n = 0; n <= top; ++n)
    for (const auto& m : mb_.monomials(n)) basis_.add(n, name(m));
}

template <ExactScalar S>
std::string GammaAlgebra<S>::name(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ".";
    out += names_[i];
    if (m[i] > 1) out += "^[" + std::to_string(m[i]) + "]";
  }
  return out.empty() ? "1" : out;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::one() const {
  return unit_element<S>(mb_.generators(), p_);
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::generator(int i) const {
  Element<S> e;
  e[mb_.generator(i)] = scalar<S>(1, p_);
  return e;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::basis_element(int n, int k) const {
  Element<S> e;
  e[monomials(n).at(ix(k))] = scalar<S>(1, p_);
  return e;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::element(int n, const Vec<S>& c) const {
  Element<S> e;
  const auto& ms = monomials(n);
  for (std::size_t k = 0; k < ms.size(); ++k) add_to(e, ms[k], c(static_cast<Eigen::Index>(k)));
  return e;
}

template <ExactScalar S>
Vec<S> GammaAlgebra<S>::coords(const Element<S>& u, int n) const {
  Vec<S> v = with_prime<S>(zero_vector<S>(dim(n)), p_);
  for (const auto& [m, c] : u) {
    if (degree(m) != n) throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(n));
    v(mb_.index(m)) = c;
  }
  return v;
}

template <ExactScalar S>
int GammaAlgebra<S>::degree(const Element<S>& u) const {
  if (u.empty()) throw std::invalid_argument("zero has no degree");
  int n = degree(u.begin()->first);
  for (const auto& [m, c] : u)
    if (degree(m) != n) throw std::invalid_argument("element is not homogeneous");
  return n;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::multiply(const Element<S>& a, const Element<S>& b) const {
  Element<S> out;
  const auto& deg = mb_.generator_degrees();
  const int g = mb_.generators();
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (degree(ma) + degree(mb) > top()) continue;
      Monomial m(ix(g), 0);
      S coeff = ca * cb;
      bool vanishes = false;
      for (int i = 0; i < g && !vanishes; ++i) {
        m[ix(i)] = ma[ix(i)] + mb[ix(i)];
        if (is_odd(deg[ix(i)]) && m[ix(i)] > 1) vanishes = true;
        else if (ma[ix(i)] && mb[ix(i)]) coeff *= binomial<S>(m[ix(i)], ma[ix(i)], p_);
      }
      if (vanishes) continue;
      coeff *= scalar<S>(product_sign(deg, ma, mb), p_);
      add_to(out, m, coeff);
    }
  return out;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::monomial_power(const Monomial& m, int k) const {
  Element<S> out;
  if (k == 0) return one();
  if (k == 1) {
    out[m] = scalar<S>(1, p_);
    return out;
  }
  const auto& deg = mb_.generator_degrees();
  std::vector<int> factors;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (is_odd(deg[i])) return out;  // x^2 = 0 for the odd factor x
    factors.push_back(static_cast<int>(i));
  }
  if (factors.empty()) throw std::invalid_argument("divided powers of the unit are undefined");
  // gamma^k(x_1...x_s) = x_1^k ... x_{s-1}^k gamma^k(x_s), with x_i = gamma^{k_i}(v_i).
  mpz_class num = 1, den = 1;
  Monomial r(m.size(), 0);
  for (std::size_t t = 0; t < factors.size(); ++t) {
    const int i = factors[t], ki = m[ix(i)];
    num *= factorial(k * ki);
    for (int e = 0; e < k; ++e) den *= factorial(ki);
    if (t + 1 == factors.size()) den *= factorial(k);
    r[ix(i)] = k * ki;
  }
  out[r] = scalar<S>(mpz_class(num / den), p_);
  return out;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::divided_power(const Element<S>& a, int k) const {
  if (k < 0) throw std::invalid_argument("negative divided power");
  if (k == 0) return one();
  if (a.empty()) return {};
  const int n = degree(a);
  if (n == 0 || is_odd(n)) throw std::invalid_argument("divided powers need positive even degree");
  if (k * n > top()) throw std::out_of_range("gamma^" + std::to_string(k) + " lies above the truncation");
  // P[j] = gamma^j of the partial sum; gamma^j(u + c m) = sum_l gamma^l(u) c^{j-l} gamma^{j-l}(m).
  std::vector<Element<S>> P(ix(k + 1));
  P[0] = one();
  for (const auto& [m, c] : a) {
    std::vector<Element<S>> Q(ix(k + 1));
    for (int e = 0; e <= k; ++e) {
      Element<S> pe = monomial_power(m, e);
      if (pe.empty()) continue;
      pe = scaled(pe, power(c, e, p_));
      for (int l = 0; l + e <= k; ++l)
        if (!P[ix(l)].empty()) add_to(Q[ix(l + e)], multiply(P[ix(l)], pe), scalar<S>(1, p_));
    }
    P = std::move(Q);
  }
  return P[ix(k)];
}

template <ExactScalar S>
TensorElement<S> GammaAlgebra<S>::to_tensor(const Element<S>& u) const {
  TensorElement<S> out;
  for (const auto& [m, c] : u) {
    TensorElement<S> t;
    t[Word{}] = scalar<S>(1, p_);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      TensorElement<S> block;
      block[Word(ix(m[i]), static_cast<int>(i))] = scalar<S>(1, p_);
      t = shuffle_product(mb_.generator_degrees(), t, block, p_);
    }
    add_to(out, t, c);
  }
  return out;
}

template <ExactScalar S>
Element<S> GammaAlgebra<S>::apply(const GradedMap<S>& f, const Element<S>& u, const GammaAlgebra<S>& target) const {
  std::map<int, Element<S>> parts;
  for (const auto& [m, c] : u) parts[degree(m)][m] = c;
  Element<S> out;
  for (const auto& [n, part] : parts) {
    if (n + f.shift() < 0 || n + f.shift() > target.top()) continue;
    add_to(out, target.element(n + f.shift(), f.block(n) * coords(part, n)), scalar<S>(1, p_));
  }
  return out;
}

// ---------------------------------------------------------------- predicates

template <ExactScalar S>
GammaVerdict is_gamma_morphism(const GammaAlgebra<S>& source, const GammaAlgebra<S>& target, const GradedMap<S>& f) {
  if (f.shift() != 0) throw std::invalid_argument("a Gamma-morphism preserves degree");
  const unsigned p = source.prime();
  const int top = std::min(source.top(), target.top());
  if (!difference(source.apply(f, source.one(), target), target.one(), p).empty())
    return {false, "f(1) != 1", "1", 0};
  for (int n = 2; 2 * n <= top; n += 2)
    for (const auto& m : source.monomials(n)) {
      Element<S> x;
      x[m] = scalar<S>(1, p);
      Element<S> fx = source.apply(f, x, target);
      for (int k = 2; k * n <= top; ++k) {
        Element<S> lhs = source.apply(f, source.divided_power(x, k), target);
        Element<S> rhs = target.divided_power(fx, k);
        if (!difference(lhs, rhs, p).empty()) {
          std::string a = source.name(m);
          return {false, "f(gamma^" + std::to_string(k) + "(" + a + ")) != gamma^" + std::to_string(k) + "(f(" + a + "))",
                  a, k};
        }
      }
    }
  for (int i = 1; i <= top; ++i)
    for (int j = 1; i + j <= top; ++j)
      for (const auto& ma : source.monomials(i))
        for (const auto& mb : source.monomials(j)) {
          Element<S> a, b;
          a[ma] = scalar<S>(1, p);
          b[mb] = scalar<S>(1, p);
          Element<S> lhs = source.apply(f, source.multiply(a, b), target);
          Element<S> rhs = target.multiply(source.apply(f, a, target), source.apply(f, b, target));
          if (!difference(lhs, rhs, p).empty())
            return {false, "f(" + source.name(ma) + "*" + source.name(mb) + ") != f(" + source.name(ma) + ")*f(" +
                               source.name(mb) + ")",
                    source.name(ma) + "*" + source.name(mb), 0};
        }
  return {};
}

template <ExactScalar S>
GammaVerdict is_gamma_derivation(const GammaAlgebra<S>& A, const GradedMap<S>& theta) {
  const unsigned p = A.prime();
  const int d = theta.shift(), top = A.top();
  auto in_range = [&](int n) { return n >= 0 && n <= top; };
  for (int n = 2; 2 * n <= top; n += 2)
    for (const auto& m : A.monomials(n)) {
      Element<S> x;
      x[m] = scalar<S>(1, p);
      Element<S> tx = A.apply(theta, x, A);
      for (int k = 2; k * n <= top && k * n + d <= top; ++k) {
        if (!in_range(k * n + d)) continue;
        Element<S> lhs = A.apply(theta, A.divided_power(x, k), A);
        Element<S> rhs = A.multiply(tx, A.divided_power(x, k - 1));
        if (!difference(lhs, rhs, p).empty()) {
          std::string a = A.name(m);
          return {false,
                  "theta(gamma^" + std::to_string(k) + "(" + a + ")) != theta(" + a + ")*gamma^" + std::to_string(k - 1) +
                      "(" + a + ")",
                  a, k};
        }
      }
    }
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j) {
      if (!in_range(i + j + d)) continue;
      for (const auto& ma : A.monomials(i))
        for (const auto& mb : A.monomials(j)) {
          Element<S> a, b;
          a[ma] = scalar<S>(1, p);
          b[mb] = scalar<S>(1, p);
          Element<S> lhs = A.apply(theta, A.multiply(a, b), A);
          Element<S> rhs = A.multiply(A.apply(theta, a, A), b);
          add_to(rhs, A.multiply(a, A.apply(theta, b, A)), koszul<S>(static_cast<long>(d) * i, p));
          if (!difference(lhs, rhs, p).empty())
            return {false, "Leibniz rule fails on " + A.name(ma) + "*" + A.name(mb), A.name(ma) + "*" + A.name(mb), 0};
        }
    }
  return {};
}

template <ExactScalar S>
GradedMap<S> gamma_extension(const GammaAlgebra<S>& source, const GammaAlgebra<S>& target, const Mat<S>& on_generators) {
  const auto& sm = source.monomial_basis();
  const auto& tm = target.monomial_basis();
  if (on_generators.rows() != tm.generators() || on_generators.cols() != sm.generators())
    throw std::invalid_argument("generator matrix has the wrong shape");
  const unsigned p = source.prime();
  std::vector<Element<S>> images(ix(sm.generators()));
  for (int j = 0; j < sm.generators(); ++j)
    for (int i = 0; i < tm.generators(); ++i) {
      if (on_generators(i, j).is_zero()) continue;
      if (tm.generator_degree(i) != sm.generator_degree(j))
        throw std::invalid_argument("generator map does not preserve degree");
      add_to(images[ix(j)], tm.generator(i), S(on_generators(i, j)));
    }
  const int top = std::min(source.top(), target.top());
  GradedMap<S> out(source.basis(), target.basis(), 0, p);
  for (int n = 0; n <= top; ++n) {
    Mat<S> block = with_prime<S>(zeros<S>(target.dim(n), source.dim(n)), p);
    for (int k = 0; k < source.dim(n); ++k) {
      const Monomial& m = source.monomials(n)[ix(k)];
      Element<S> img = target.one();
      for (int j = 0; j < sm.generators() && !img.empty(); ++j)
        if (m[ix(j)]) img = target.multiply(img, target.divided_power(images[ix(j)], m[ix(j)]));
      block.col(k) = target.coords(img, n);
    }
    out.set_block(n, block);
  }
  return out;
}

template <ExactScalar S>
Mat<S> lambda_gamma_pairing(const MonomialBasis& lambda, const GammaAlgebra<S>& gamma, int n) {
  if (lambda.generator_degrees() != gamma.monomial_basis().generator_degrees())
    throw std::invalid_argument("pairing needs dual generating sets with matching degrees");
  const unsigned p = gamma.prime();
  const auto& deg = lambda.generator_degrees();
  Mat<S> out = with_prime<S>(zeros<S>(lambda.dim(n), gamma.dim(n)), p);
  for (int c = 0; c < gamma.dim(n); ++c) {
    TensorElement<S> t = gamma.to_tensor(gamma.basis_element(n, c));
    for (int r = 0; r < lambda.dim(n); ++r) {
      Word lift = lambda.letters(lambda.monomials(n)[ix(r)]);
      for (const auto& [w, coeff] : t) {
        int s = tensor_pairing(lift, w, deg);
        if (s) out(r, c) += scalar<S>(s, p) * coeff;
      }
    }
  }
  return out;
}

#define LBSS_INSTANTIATE(S)                                                                                  \
  template class GammaAlgebra<S>;                                                                            \
  template TensorElement<S> shuffle_product(const std::vector<int>&, const TensorElement<S>&,                \
                                            const TensorElement<S>&, unsigned);                              \
  template GammaVerdict is_gamma_morphism(const GammaAlgebra<S>&, const GammaAlgebra<S>&, const GradedMap<S>&); \
  template GammaVerdict is_gamma_derivation(const GammaAlgebra<S>&, const GradedMap<S>&);                     \
  template GradedMap<S> gamma_extension(const GammaAlgebra<S>&, const GammaAlgebra<S>&, const Mat<S>&);        \
  template Mat<S> lambda_gamma_pairing(const MonomialBasis&, const GammaAlgebra<S>&, int);

LBSS_INSTANTIATE(PLocal)
LBSS_INSTANTIATE(Fp)

}  // namespace lbss
