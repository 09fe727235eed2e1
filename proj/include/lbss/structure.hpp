#pragma once

// Hopf morphisms of enveloping algebras and the two Lie-type detectors (direct
// matrix check vs divided powers on the dual), Hopf structure on Bockstein
// pages of UL, and the page-wise consistency checks for the Lie structure.

#include "lbss/bss.hpp"
#include "lbss/gamma.hpp"
#include "lbss/lie.hpp"

namespace lbss {

// ---------------------------------------------------------------- duality

/// Gamma(L^#) on generators "x#" of degree |x|; its basis matches the PBW basis of UL.
template <ExactScalar S>
GammaAlgebra<S> dual_gamma(const PbwAlgebra<S>& U, int top = -1);

/// Gamma(L^#)_n -> (UL)^#_n in dual-basis coordinates: g -> <-, g>.
template <ExactScalar S>
Mat<S> psi(const PbwAlgebra<S>& U, const GammaAlgebra<S>& G, int n);

/// f^# transported to Gamma coordinates: Gamma(L_tgt^#) -> Gamma(L_src^#).
template <ExactScalar S>
GradedMap<S> gamma_dual(const GradedMap<S>& f, const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                        const GammaAlgebra<S>& gamma_source, const GammaAlgebra<S>& gamma_target);

// ---------------------------------------------------------------- morphisms

template <ExactScalar S>
struct HopfMorphism {
  PbwAlgebra<S> source, target;
  std::vector<Element<S>> images;
  GradedMap<S> map;
};

/// First degree split where (f (x) f) Delta != Delta f, if any.
template <ExactScalar S>
std::optional<std::string> coalgebra_defect(const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                                            const GradedMap<S>& f);

/// Extends generator images to an algebra map and checks it is a Hopf morphism
/// within the common window; throws std::invalid_argument otherwise.
template <ExactScalar S>
HopfMorphism<S> hopf_morphism(PbwAlgebra<S> source, PbwAlgebra<S> target, std::vector<Element<S>> images);

struct CriterionVerdict {
  /// Direct matrix check (phi(L1) in L2, resp. d(L) in L).
  bool direct = true;
  std::string direct_witness;
  /// The dual check on Gamma(L^#).
  GammaVerdict dual;
  bool agree() const { return direct == dual.ok; }
};

template <ExactScalar S>
CriterionVerdict is_lie_type(const HopfMorphism<S>& phi);

/// Derivation of UL of degree `shift` with the given generator images; throws
/// std::invalid_argument if the images are inhomogeneous or break a relation [x_i, x_j].
template <ExactScalar S>
GradedMap<S> extend_derivation(const PbwAlgebra<S>& U, const std::vector<Element<S>>& images, int shift);

/// d: UL -> UL of degree -1 must be a coderivation (throws std::invalid_argument otherwise).
template <ExactScalar S>
CriterionVerdict differential_restricts_to_lie(const PbwAlgebra<S>& U, const GradedMap<S>& d);

/// Coordinates of u on PBW monomials of length != 1, rendered; empty if u lies in L.
template <ExactScalar S>
std::string outside_lie(const PbwAlgebra<S>& U, const Vec<S>& u, int n);

// ---------------------------------------------------------------- pages

/// Product, coproduct and beta^r on page r of the BSS of U(L, d), induced by representatives.
class PageAlgebra {
 public:
  PageAlgebra(const PbwAlgebra<PLocal>& U, const BssResult& bss, int r);

  int r() const { return r_; }
  int window() const { return bss_->window(); }
  unsigned prime() const { return bss_->prime(); }
  const SpectralPage& page() const { return bss_->page(r_); }
  int dim(int n) const { return page().dim(n); }
  std::string name(int n, int k) const;

  /// E_a (x) E_b -> E_{a+b}, column i*dim(b)+j; a+b <= window.
  const Mat<Fp>& product(int a, int b) const;
  /// E_{a+b} -> E_a (x) E_b, row i*dim(b)+j.
  const Mat<Fp>& coproduct(int a, int b) const;
  Mat<Fp> beta(int n) const { return page().beta.block(n); }

  Vec<Fp> multiply(int a, const Vec<Fp>& x, int b, const Vec<Fp>& y) const;
  Vec<Fp> power(int a, const Vec<Fp>& x, int k) const;
  /// Columns span the primitives of E^r_n.
  Mat<Fp> primitives(int n) const;

  /// First failure of beta(xy) = beta(x)y + (-1)^{|x|} x beta(y) on basis classes.
  std::optional<std::string> beta_leibniz_defect() const;
  /// First failure of Delta beta = (beta (x) 1 + 1 (x) beta) Delta.
  std::optional<std::string> beta_coleibniz_defect() const;

 private:
  Mat<Fp> compute_coproduct(int a, int b) const;
  /// Reduced rows of the decomposition inverse at the live slots of page r.
  const Mat<Fp>& live_rows(int n) const;
  /// Reduced class representatives as columns.
  const Mat<Fp>& representatives(int n) const;

  const PbwAlgebra<PLocal>* U_;
  const BssResult* bss_;
  int r_;
  mutable std::map<std::pair<int, int>, Mat<Fp>> product_, coproduct_;
  mutable std::map<int, Mat<Fp>> live_, reps_;
};

struct PageCheck {
  int r = 1;
  bool closed_under_beta = true;  // (a)
  bool hilbert_matches = true;    // (b)
  bool image_primitive = true;    // (c)
  std::vector<int> page_dims, primitive_dims, lie_dims, predicted_dims;
  std::vector<std::string> failures;
  bool ok() const { return closed_under_beta && hilbert_matches && image_primitive; }
};

struct Theorem3Report {
  int window = 0;
  std::vector<PageCheck> pages;
  bool ok() const;
};

/// Checks on pages 1..r_max of the BSS of UL truncated at top:
/// (a) P(E^r) is closed under beta^r; (b) the Hilbert series of E^r equals the
/// PBW series of the Lie part of P(E^r) (primitives modulo p-th powers);
/// (c) the image of E^r(L) -> E^r(UL) consists of primitives.
Theorem3Report verify_theorem3(const DgLie<PLocal>& L, int top, int r_max);

/// The inclusion L -> UL as a chain map of the truncated complexes.
GradedMap<PLocal> lie_inclusion(const PbwAlgebra<PLocal>& U);

extern template struct HopfMorphism<PLocal>;
extern template struct HopfMorphism<Fp>;

}  // namespace lbss
