#pragma once

// Finite-type free graded modules, graded maps and chain complexes, all
// truncated to a degree window [0, top]. Homology is read off from a
// decomposition of the complex into elementary two-term pieces.

#include "lbss/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbss {

/// Raised when a complex or map violates its defining identities.
class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-degree ordered basis names for degrees 0..top.
class GradedBasis {
 public:
  GradedBasis() : GradedBasis(0) {}
  explicit GradedBasis(int top);

  int top() const { return top_; }
  int rank(int n) const;
  int total_rank() const;
  const std::vector<std::string>& names(int n) const;
  /// Index of `name` in degree n, or -1.
  int index_of(int n, const std::string& name) const;

  /// Appends a basis element; throws on duplicates or out-of-window degrees.
  void add(int degree, std::string name);

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

 private:
  int top_;
  std::vector<std::vector<std::string>> names_;
};

/// (sM)_i = M_{i-1}. Elements pushed past `top` are dropped; `truncated`
/// reports whether that happened.
GradedBasis suspend(const GradedBasis& m, bool* truncated = nullptr);

/// Basis of M^#, indexed by upper degree: (M^#)^n is dual to M_n.
GradedBasis dual_basis(const GradedBasis& m);

/// Linear combination of basis names, e.g. "2*e.f - f^3".
template <ExactScalar S>
std::string render(const Vec<S>& v, const std::vector<std::string>& names) {
  std::string out;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    if (v(i).is_zero()) continue;
    std::string c = to_string(v(i));
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (c != "1") out += c + "*";
    out += names[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

/// Homogeneous map of degree `shift`; block(n) sends source_n to target_{n+shift}.
template <ExactScalar S>
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedBasis source, GradedBasis target, int shift, unsigned p)
      : source_(std::move(source)), target_(std::move(target)), shift_(shift), p_(p) {}

  const GradedBasis& source() const { return source_; }
  const GradedBasis& target() const { return target_; }
  int shift() const { return shift_; }
  unsigned prime() const { return p_; }

  /// Missing blocks are zero.
  Mat<S> block(int n) const {
    auto it = blocks_.find(n);
    if (it != blocks_.end()) return it->second;
    return zeros<S>(target_.rank(n + shift_), source_.rank(n));
  }

  void set_block(int n, Mat<S> m) {
    if (m.rows() != target_.rank(n + shift_) || m.cols() != source_.rank(n))
      throw std::invalid_argument("block at degree " + std::to_string(n) + " has shape " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                  std::to_string(target_.rank(n + shift_)) + "x" +
                                  std::to_string(source_.rank(n)));
    blocks_[n] = std::move(m);
  }

  Vec<S> apply(int n, const Vec<S>& v) const { return block(n) * v; }

 private:
  GradedBasis source_, target_;
  int shift_ = 0;
  unsigned p_ = 0;
  std::map<int, Mat<S>> blocks_;
};

/// g o f.
template <ExactScalar S>
GradedMap<S> compose(const GradedMap<S>& g, const GradedMap<S>& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: bases do not match");
  GradedMap<S> out(f.source(), g.target(), f.shift() + g.shift(), f.prime());
  for (int n = 0; n <= f.source().top(); ++n) {
    int m = n + f.shift();
    if (m < 0 || m > g.source().top() || m + g.shift() < 0 || m + g.shift() > g.target().top()) continue;
    out.set_block(n, g.block(m) * f.block(n));
  }
  return out;
}

/// Transpose with the Koszul sign (f^# xi)(x) = (-1)^{|f||xi|} xi(f x).
/// The result is indexed by upper degree and has degree -shift there.
template <ExactScalar S>
GradedMap<S> dualize(const GradedMap<S>& f) {
  GradedMap<S> out(dual_basis(f.target()), dual_basis(f.source()), -f.shift(), f.prime());
  for (int n = 0; n <= f.source().top(); ++n) {
    int m = n + f.shift();
    if (m < 0 || m > f.target().top()) continue;
    Mat<S> t = f.block(n).transpose();
    out.set_block(m, koszul<S>(static_cast<long>(f.shift()) * m, f.prime()) * t);
  }
  return out;
}

/// Sign of the canonical identification M_n -> (M^#)^#_n, x -> (xi -> (-1)^{|x||xi|} xi(x)).
inline int double_dual_sign(int n) { return n % 2 == 0 ? 1 : -1; }

/// Free graded module with a differential of degree -1 (chains) or +1 (cochains).
template <ExactScalar S>
class ChainComplex {
 public:
  ChainComplex(GradedBasis basis, GradedMap<S> d) : basis_(std::move(basis)), d_(std::move(d)) {
    if (d_.shift() != -1 && d_.shift() != 1) throw ComplexError("differential must have degree +1 or -1");
    if (!(d_.source() == basis_) || !(d_.target() == basis_))
      throw ComplexError("differential does not act on the complex's basis");
    for (int n = 0; n <= top(); ++n) {
      int m = n + shift(), k = m + shift();
      if (k < 0 || k > top() || m < 0 || m > top()) continue;
      if (!is_zero(Mat<S>(d_.block(m) * d_.block(n))))
        throw ComplexError("d o d != 0 starting in degree " + std::to_string(n));
    }
  }

  const GradedBasis& basis() const { return basis_; }
  const GradedMap<S>& differential() const { return d_; }
  int top() const { return basis_.top(); }
  int shift() const { return d_.shift(); }
  unsigned prime() const { return d_.prime(); }
  /// Degrees whose homology is fully determined by the window.
  int window() const { return top() - 1; }
  Mat<S> d(int n) const { return d_.block(n); }

 private:
  GradedBasis basis_;
  GradedMap<S> d_;
};

/// Build a complex from a list of per-degree blocks of d.
template <ExactScalar S>
ChainComplex<S> make_complex(const GradedBasis& basis, int shift, unsigned p, const std::map<int, Mat<S>>& blocks) {
  GradedMap<S> d(basis, basis, shift, p);
  for (const auto& [n, m] : blocks) d.set_block(n, m);
  return ChainComplex<S>(basis, std::move(d));
}

ChainComplex<Fp> reduce(const ChainComplex<PLocal>& c);

/// Sends d_n to the dual complex, (d^#) on upper degrees.
template <ExactScalar S>
ChainComplex<S> dual_complex(const ChainComplex<S>& c) {
  GradedMap<S> d = dualize(c.differential());
  return ChainComplex<S>(d.source(), d);
}

enum class BasisRole { Free, Source, Target };

/// One column of the decomposed basis.
struct BasisSlot {
  BasisRole role = BasisRole::Free;
  int piece = -1;
};

/// 0 -> Z_(p) --(p^exponent)--> Z_(p) -> 0, from source_degree to target_degree.
struct ElementaryPiece {
  int source_degree = 0, source_slot = 0;
  int target_degree = 0, target_slot = 0;
  int exponent = 0;
};

/// Change of basis exhibiting a complex as a sum of free and elementary pieces.
template <ExactScalar S>
struct Decomposition {
  int top = 0, shift = -1;
  unsigned p = 0;
  /// basis[n] has the new basis vectors of degree n as columns (original coordinates).
  std::vector<Mat<S>> basis, basis_inv;
  std::vector<std::vector<BasisSlot>> slots;
  std::vector<ElementaryPiece> pieces;

  /// basis_inv[n+shift] * d_n * basis[n]; a partial permutation matrix scaled by p^k.
  Mat<S> elementary_block(const ChainComplex<S>& c, int n) const {
    int m = n + shift;
    if (m < 0 || m > top) return zeros<S>(0, c.basis().rank(n));
    return basis_inv[m] * c.d(n) * basis[n];
  }
};

template <ExactScalar S>
Decomposition<S> decompose(const ChainComplex<S>& c);

struct HomologyGroup {
  int betti = 0;
  /// Exponents k >= 1 of the cyclic summands Z/p^k.
  std::vector<int> torsion;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

class HomologySummary {
 public:
  HomologySummary(int window, std::vector<HomologyGroup> groups) : window_(window), groups_(std::move(groups)) {}
  int window() const { return window_; }
  /// Throws std::out_of_range outside the trust window.
  const HomologyGroup& at(int n) const;

 private:
  int window_;
  std::vector<HomologyGroup> groups_;
};

template <ExactScalar S>
HomologySummary homology_of(const Decomposition<S>& dec);

template <ExactScalar S>
HomologySummary homology(const ChainComplex<S>& c) {
  return homology_of(decompose(c));
}

/// dim over F_p of H_n(C (x) F_p), by rank counting on reduced matrices.
std::vector<int> mod_p_homology_dims(const ChainComplex<PLocal>& c);
std::vector<int> mod_p_homology_dims(const ChainComplex<Fp>& c);

extern template Decomposition<PLocal> decompose(const ChainComplex<PLocal>&);
extern template Decomposition<Fp> decompose(const ChainComplex<Fp>&);
extern template HomologySummary homology_of(const Decomposition<PLocal>&);
extern template HomologySummary homology_of(const Decomposition<Fp>&);

}  // namespace lbss
