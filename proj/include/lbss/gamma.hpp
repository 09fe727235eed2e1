#pragma once

// Tensor coalgebra T_C(V) with the shuffle product, the free divided-powers
// algebra Gamma(V) inside it, Gamma-morphism / Gamma-derivation predicates and
// the pairing of Lambda V (or TV) against Gamma(V^#) (or T_C(V^#)).

#include "lbss/graded.hpp"
#include "lbss/monomial.hpp"

#include <optional>

namespace lbss {

/// Word [v_1|...|v_k] as generator indices.
using Word = std::vector<int>;

/// Same representation as Element, so add_to and scaled apply.
template <ExactScalar S>
using TensorElement = std::map<Word, S>;

/// Signed sum over all (|a|,|b|)-shuffles; `degrees` are the generator degrees.
template <ExactScalar S>
TensorElement<S> shuffle_product(const std::vector<int>& degrees, const TensorElement<S>& a,
                                 const TensorElement<S>& b, unsigned p);

/// All splittings w = u|v, including empty ends.
std::vector<std::pair<Word, Word>> deconcatenate(const Word& w);

/// Sign of v_1..v_k w_1..w_k -> v_1 w_1 ... v_k w_k; degrees of the v's and w's.
int interleaving_sign(const std::vector<int>& v_degrees, const std::vector<int>& w_degrees);

/// <v_1 (x) ... (x) v_k, [w_1|...|w_k]> for dual bases (index i of V pairs with index i of W).
int tensor_pairing(const Word& v, const Word& w, const std::vector<int>& degrees);

/// Free divided-powers algebra on generators of positive degree, truncated at top.
/// Basis: gamma^{k_1}(v_1)...gamma^{k_s}(v_s), k_i <= 1 for odd v_i.
template <ExactScalar S>
class GammaAlgebra {
 public:
  GammaAlgebra(std::vector<std::string> names, std::vector<int> degrees, int top, unsigned p);

  unsigned prime() const { return p_; }
  int top() const { return mb_.top(); }
  const MonomialBasis& monomial_basis() const { return mb_; }
  const GradedBasis& basis() const { return basis_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  int dim(int n) const { return mb_.dim(n); }
  const std::vector<Monomial>& monomials(int n) const { return mb_.monomials(n); }
  int degree(const Monomial& m) const { return mb_.degree(m); }
  std::string name(const Monomial& m) const;

  Element<S> one() const;
  Element<S> generator(int i) const;
  Element<S> basis_element(int n, int k) const;
  Element<S> element(int n, const Vec<S>& coords) const;
  Vec<S> coords(const Element<S>& u, int n) const;
  /// Degree of a nonzero homogeneous element; throws otherwise.
  int degree(const Element<S>& u) const;

  /// Product, dropping terms above top.
  Element<S> multiply(const Element<S>& a, const Element<S>& b) const;
  /// gamma^k(a) for homogeneous a of positive even degree with k|a| <= top.
  Element<S> divided_power(const Element<S>& a, int k) const;
  /// The inclusion Gamma(V) -> T_C(V).
  TensorElement<S> to_tensor(const Element<S>& u) const;
  /// Image of a graded map (given as per-degree blocks) on an element.
  Element<S> apply(const GradedMap<S>& f, const Element<S>& u, const GammaAlgebra<S>& target) const;

 private:
  Element<S> monomial_power(const Monomial& m, int k) const;

  unsigned p_;
  std::vector<std::string> names_;
  MonomialBasis mb_;
  GradedBasis basis_;
};

struct GammaVerdict {
  bool ok = true;
  /// Human-readable failure description.
  std::string witness;
  /// Basis element a and exponent k of a failing divided-power identity (k = 0 for
  /// failures of multiplicativity or the Leibniz rule).
  std::string element;
  int k = 0;
};

/// f(xy) = f(x)f(y), f(1) = 1 and f(gamma^k a) = gamma^k f(a) on basis elements.
/// Basis elements suffice: axioms 2 and 5 propagate both identities to all elements.
template <ExactScalar S>
GammaVerdict is_gamma_morphism(const GammaAlgebra<S>& source, const GammaAlgebra<S>& target, const GradedMap<S>& f);

/// Leibniz rule with the Koszul sign of theta's degree, and
/// theta(gamma^k a) = theta(a) gamma^{k-1}(a) on basis elements.
template <ExactScalar S>
GammaVerdict is_gamma_derivation(const GammaAlgebra<S>& A, const GradedMap<S>& theta);

/// The unique Gamma-morphism extending a degree-preserving linear map on
/// generators; column j of `on_generators` is the image of source generator j.
template <ExactScalar S>
GradedMap<S> gamma_extension(const GammaAlgebra<S>& source, const GammaAlgebra<S>& target, const Mat<S>& on_generators);

/// Matrix of <Lambda V_n, Gamma(V^#)_n>: row = Lambda monomial, column = Gamma basis element.
/// Both sides must use the same ordered generator degrees.
template <ExactScalar S>
Mat<S> lambda_gamma_pairing(const MonomialBasis& lambda, const GammaAlgebra<S>& gamma, int n);

extern template class GammaAlgebra<PLocal>;
extern template class GammaAlgebra<Fp>;

}  // namespace lbss
