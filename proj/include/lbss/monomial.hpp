#pragma once

// Exponent-vector monomials over an ordered, positively graded generating set.
// Shared by PBW bases of UL, free commutative algebras and free divided-power
// algebras, which all have "x_1^{k_1}...x_s^{k_s}, k_i <= 1 for odd x_i" as basis.

#include "lbss/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace lbss {

using Monomial = std::vector<int>;

template <ExactScalar S>
using Element = std::map<Monomial, S>;

template <ExactScalar S>
void add_to(Element<S>& acc, const Monomial& m, const S& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

/// acc += c * x
template <ExactScalar S>
void add_to(Element<S>& acc, const Element<S>& x, const S& c) {
  for (const auto& [m, v] : x) add_to(acc, m, S(c * v));
}

template <ExactScalar S>
Element<S> scaled(const Element<S>& x, const S& c) {
  Element<S> out;
  add_to(out, x, c);
  return out;
}

inline bool is_odd(long d) { return d % 2 != 0; }

class MonomialBasis {
 public:
  MonomialBasis() = default;
  /// Generator degrees must be positive; generators above top never appear.
  MonomialBasis(std::vector<int> degrees, int top);

  int top() const { return top_; }
  int generators() const { return static_cast<int>(degrees_.size()); }
  int generator_degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& generator_degrees() const { return degrees_; }

  int dim(int n) const;
  const std::vector<Monomial>& monomials(int n) const;
  int degree(const Monomial& m) const;
  int length(const Monomial& m) const;
  bool contains(const Monomial& m) const { return index_.count(m) > 0; }
  /// Index within its degree; throws std::out_of_range outside the window.
  int index(const Monomial& m) const;
  Monomial unit() const { return Monomial(degrees_.size(), 0); }
  Monomial generator(int i) const;

  /// Factors in order, each repeated by its exponent.
  std::vector<int> letters(const Monomial& m) const;

 private:
  std::vector<int> degrees_;
  int top_ = 0;
  std::vector<std::vector<Monomial>> monomials_;
  std::map<Monomial, int> index_;
};

/// Koszul sign of reordering homogeneous items: items appear in `order`
/// (a permutation of 0..k-1 listing which original item sits at each
/// position); counted by adjacent transpositions of odd-odd pairs.
int permutation_sign(const std::vector<int>& degrees, const std::vector<int>& order);

/// Sign of reordering the factors of a, followed by those of b, into generator
/// order (a_1 b_1 a_2 b_2 ...); a factor x_i^{k} has degree k|x_i|.
int product_sign(const std::vector<int>& degrees, const Monomial& a, const Monomial& b);

}  // namespace lbss
