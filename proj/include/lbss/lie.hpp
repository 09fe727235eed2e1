#pragma once

// Differential graded Lie algebras given by a finite basis with structure
// constants, and their universal enveloping algebras in the PBW basis.

#include "lbss/graded.hpp"
#include "lbss/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lbss {

struct LieGenerator {
  std::string name;
  int degree = 1;
};

/// Basis elements x_0..x_{m-1} with [x_i, x_j] and dx_i given as coordinate vectors.
template <ExactScalar S>
class DgLie {
 public:
  explicit DgLie(unsigned p) : p_(p) {}

  /// Returns the index of the new basis element.
  int add_generator(std::string name, int degree);
  void set_bracket(int i, int j, Vec<S> value);
  void set_differential(int i, Vec<S> value);

  unsigned prime() const { return p_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const LieGenerator& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return generator(i).degree; }
  int index_of(const std::string& name) const;
  bool has_bracket(int i, int j) const { return bracket_.count({i, j}) > 0; }

  /// Stored structure constants; zero where nothing was set.
  Vec<S> bracket(int i, int j) const;
  Vec<S> differential(int i) const;
  /// Bilinear extension on coordinate vectors.
  Vec<S> bracket(const Vec<S>& a, const Vec<S>& b) const;
  Vec<S> differential(const Vec<S>& a) const;
  Vec<S> unit_vector(int i) const;
  bool is_abelian() const;

  /// Fills missing [x_j, x_i] from [x_i, x_j] by graded antisymmetry.
  void complete_antisymmetry();

  /// (L, d) as a chain complex truncated at top.
  ChainComplex<S> complex(int top) const;
  GradedBasis basis(int top) const;

 private:
  unsigned p_;
  std::vector<LieGenerator> gens_;
  std::map<std::pair<int, int>, Vec<S>> bracket_;
  std::map<int, Vec<S>> d_;
};

DgLie<Fp> reduce(const DgLie<PLocal>& L);

struct Violation {
  std::string identity;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks connectivity, homogeneity, antisymmetry, Jacobi, [x,[x,x]] = 0 for
/// odd x, d a derivation of degree -1, and dd = 0 on all basis tuples.
template <ExactScalar S>
ValidationReport validate(const DgLie<S>& L);

/// UL in the PBW basis, truncated to degrees 0..top.
template <ExactScalar S>
struct MatrixEntry {
  Eigen::Index row, col;
  S value;
};

template <ExactScalar S>
class PbwAlgebra {
 public:
  PbwAlgebra(DgLie<S> L, int top);

  const DgLie<S>& lie() const { return L_; }
  int top() const { return top_; }
  unsigned prime() const { return L_.prime(); }
  /// Some Lie basis element has degree above top and never appears.
  bool truncated() const { return truncated_; }

  const GradedBasis& basis() const { return basis_; }
  const MonomialBasis& monomial_basis() const { return mb_; }
  int dim(int n) const { return mb_.dim(n); }
  const std::vector<Monomial>& monomials(int n) const { return mb_.monomials(n); }
  int degree(const Monomial& m) const { return mb_.degree(m); }
  /// (degree, index) of a basis monomial.
  std::pair<int, int> locate(const Monomial& m) const;
  std::string name(const Monomial& m) const;

  Monomial unit() const { return Monomial(static_cast<std::size_t>(L_.size()), 0); }
  Element<S> one() const;
  /// Element of UL from a coordinate vector on the Lie basis.
  Element<S> from_lie(const Vec<S>& v) const;
  Element<S> generator(int i) const { return from_lie(L_.unit_vector(i)); }
  Element<S> element(int n, const Vec<S>& coords) const;
  Vec<S> coords(const Element<S>& u, int n) const;

  /// Product, dropping terms above top.
  Element<S> multiply(const Element<S>& a, const Element<S>& b) const;
  Element<S> power(const Element<S>& a, int k) const;
  /// Graded commutator [a, b] = ab - (-1)^{|a||b|} ba for homogeneous a, b.
  Element<S> commutator(const Element<S>& a, int deg_a, const Element<S>& b, int deg_b) const;
  Element<S> differential(const Element<S>& u) const;

  /// UL_a (x) UL_b -> UL_{a+b}; column i*dim(b)+j is the product of basis elements i, j.
  Mat<S> product_matrix(int a, int b) const;
  /// UL_n -> UL_{n-1}.
  Mat<S> differential_matrix(int n) const;
  ChainComplex<S> complex() const;
  /// Component UL_{a+b} -> UL_a (x) UL_b of the coproduct; row i*dim(b)+j.
  Mat<S> coproduct(int a, int b) const;
  /// The same matrix as a list of entries (repeated positions add up).
  std::vector<MatrixEntry<S>> coproduct_entries(int a, int b) const;
  /// Matrix of u -> Delta(u) - u(x)1 - 1(x)u on UL_n, with rows over all splits a+b=n, 0<a<n.
  Mat<S> reduced_coproduct(int n) const;
  /// Columns form a basis of the primitives in degree n (saturated over Z_(p)).
  Mat<S> primitives(int n) const;
  /// Image of L_n in UL_n (coordinates of the Lie basis elements of degree n).
  Mat<S> lie_part(int n) const;

 private:
  const Element<S>& times_generator(const Monomial& m, int j) const;
  Element<S> times_lie(const Element<S>& a, const Vec<S>& v) const;

  DgLie<S> L_;
  int top_;
  bool truncated_ = false;
  MonomialBasis mb_;
  GradedBasis basis_;
  mutable std::map<std::pair<Monomial, int>, Element<S>> cache_;
};

/// Algebra map UL_1 -> UL_2 determined by generator images; truncated at the
/// smaller top. Images must be homogeneous of the generator's degree.
template <ExactScalar S>
GradedMap<S> extend_algebra_map(const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                                const std::vector<Element<S>>& images);

/// First relation [x_i, x_j] that the generator images fail to respect, if any.
template <ExactScalar S>
std::optional<std::string> relation_defect(const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                                           const std::vector<Element<S>>& images);

/// Hilbert series of UL predicted by PBW: product of 1/(1-t^d) over even and
/// (1+t^d) over odd basis elements, coefficients up to top.
std::vector<long> pbw_hilbert_series(const std::vector<int>& degrees, int top);

extern template class DgLie<PLocal>;
extern template class DgLie<Fp>;
extern template class PbwAlgebra<PLocal>;
extern template class PbwAlgebra<Fp>;

}  // namespace lbss
