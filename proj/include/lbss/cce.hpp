#pragma once

// Free graded-commutative algebras Lambda V with derivation differentials, the
// cochain algebra C*(L) = (Lambda V, d0 + d1) with V = (sL)^#, the chains
// (Gamma(sL), d0^T + d1^T) and a mapping-cone quasi-isomorphism check.

#include "lbss/gamma.hpp"
#include "lbss/lie.hpp"

namespace lbss {

/// Lambda V truncated at top; basis x_1^{k_1}...x_s^{k_s}, k_i <= 1 for odd x_i.
template <ExactScalar S>
class LambdaAlgebra {
 public:
  LambdaAlgebra(std::vector<std::string> names, std::vector<int> degrees, int top, unsigned p);

  unsigned prime() const { return p_; }
  int top() const { return mb_.top(); }
  const MonomialBasis& monomial_basis() const { return mb_; }
  const GradedBasis& basis() const { return basis_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  int generators() const { return mb_.generators(); }
  int dim(int n) const { return mb_.dim(n); }
  const std::vector<Monomial>& monomials(int n) const { return mb_.monomials(n); }
  int degree(const Monomial& m) const { return mb_.degree(m); }
  std::string name(const Monomial& m) const;

  Element<S> one() const;
  Element<S> generator(int i) const;
  Element<S> basis_element(int n, int k) const;
  Element<S> element(int n, const Vec<S>& coords) const;
  Vec<S> coords(const Element<S>& u, int n) const;

  Element<S> multiply(const Element<S>& a, const Element<S>& b) const;

  /// Algebra map to `target` sending generator i to images[i]; blocks up to the smaller top.
  GradedMap<S> extend(const LambdaAlgebra<S>& target, const std::vector<Element<S>>& images) const;
  /// Derivation of degree `shift` extending generator images (with Koszul signs).
  GradedMap<S> derivation(const std::vector<Element<S>>& images, int shift) const;

 private:
  unsigned p_;
  std::vector<std::string> names_;
  MonomialBasis mb_;
  GradedBasis basis_;
};

/// (Lambda V, d) with d a degree +1 derivation given on generators.
template <ExactScalar S>
class CochainAlgebra {
 public:
  /// Throws ComplexError naming a basis monomial if d^2 != 0 within the window.
  CochainAlgebra(LambdaAlgebra<S> A, std::vector<Element<S>> d_generators);

  const LambdaAlgebra<S>& algebra() const { return A_; }
  const std::vector<Element<S>>& d_generators() const { return dgen_; }
  const GradedMap<S>& d() const { return d_; }
  Element<S> differential(const Element<S>& u) const;
  ChainComplex<S> complex() const;

 private:
  LambdaAlgebra<S> A_;
  std::vector<Element<S>> dgen_;
  GradedMap<S> d_;
};

template <ExactScalar S>
struct CceCochains {
  CochainAlgebra<S> algebra;
  /// Linear and quadratic parts as derivations of Lambda V.
  GradedMap<S> d0, d1;
};

/// Generator i of V is dual to s x_i and named "s<x_i>#".
template <ExactScalar S>
CceCochains<S> cochains(const DgLie<S>& L, int top);

template <ExactScalar S>
struct CceChains {
  GammaAlgebra<S> gamma;
  GradedMap<S> partial0, partial1;
  ChainComplex<S> complex;
};

/// <d l, g> = (-1)^{|l|+1} <l, partial g> under the Lambda/Gamma pairing.
template <ExactScalar S>
CceChains<S> chains(const DgLie<S>& L, int top);

struct QuasiIsoVerdict {
  bool ok = false;
  bool cochain_map = false;
  std::string witness;
};

/// m is given on generators of `source` and extended multiplicatively. Checks
/// dm = md through degree window+1 and that H(m) is an isomorphism in degrees
/// <= window (mapping cone acyclic). Needs source.top >= window+2, target.top >= window+1.
template <ExactScalar S>
QuasiIsoVerdict verify_quasi_iso(const CochainAlgebra<S>& source, const CochainAlgebra<S>& target,
                                 const std::vector<Element<S>>& images, int window);

extern template class LambdaAlgebra<PLocal>;
extern template class LambdaAlgebra<Fp>;
extern template class CochainAlgebra<PLocal>;
extern template class CochainAlgebra<Fp>;

}  // namespace lbss
