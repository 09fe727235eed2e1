#pragma once

// Mod-p homology Bockstein spectral sequence of a free chain complex over
// Z_(p), read off from an elementary decomposition.
//
// With E^1 = H(C (x) F_p): a free piece gives a permanent class, and a
// piece Z_(p) --p^k--> Z_(p) with k >= 1 gives a pair of classes (y, x)
// that lives on pages 1..k with beta^k(y) = x.

#include "lbss/graded.hpp"

#include <optional>

namespace lbss {

struct PageClass {
  std::string name;
  /// Column of the decomposed basis this class comes from.
  int slot = 0;
  Vec<PLocal> representative;
};

struct SpectralPage {
  int r = 1;
  int window = 0;
  unsigned p = 0;
  /// classes[n] for n = 0..window, ordered by name.
  std::vector<std::vector<PageClass>> classes;
  /// beta^r as a degree -1 map on the class bases.
  GradedMap<Fp> beta;

  int dim(int n) const;
  GradedBasis basis() const;
};

class BssResult {
 public:
  BssResult(ChainComplex<PLocal> complex, int r_max);

  const ChainComplex<PLocal>& complex() const { return complex_; }
  const Decomposition<PLocal>& decomposition() const { return dec_; }
  int r_max() const { return r_max_; }
  int window() const { return window_; }
  unsigned prime() const { return complex_.prime(); }

  const std::vector<SpectralPage>& pages() const { return pages_; }
  /// 1-based page index.
  const SpectralPage& page(int r) const;

  /// Largest exponent among pieces visible in the window (0 if none).
  int max_exponent() const { return max_exponent_; }
  /// First page from which nothing changes; always max_exponent() + 1.
  int stable_from() const { return max_exponent_ + 1; }
  /// stable_from() when it is among the computed pages.
  std::optional<int> stable_page() const;

  /// Is c in Z^r_n, i.e. d(c) in p^r C?
  bool survives(int r, int n, const Vec<PLocal>& c) const;
  /// Coordinates of [c]_r in page(r).classes[n]; throws if c does not survive.
  Vec<Fp> class_of(int r, int n, const Vec<PLocal>& c) const;
  /// Slots of degree n that carry classes on page r, in class order.
  const std::vector<int>& live_slots(int r, int n) const;

  /// Exponent of the piece through a slot; -1 for free slots.
  int slot_exponent(int n, int slot) const;

 private:
  ChainComplex<PLocal> complex_;
  Decomposition<PLocal> dec_;
  int r_max_, window_, max_exponent_ = 0;
  std::vector<SpectralPage> pages_;
  std::vector<std::vector<std::vector<int>>> live_;
};

/// Throws std::invalid_argument when r_max < 1.
BssResult bockstein_pages(const ChainComplex<PLocal>& c, int r_max);

/// E^r(f) for r = 1..min(r_max); throws ComplexError naming the degree if f
/// does not commute with the differentials.
std::vector<GradedMap<Fp>> bss_of_morphism(const GradedMap<PLocal>& f, const BssResult& source,
                                           const BssResult& target);

/// Checks d_T f = f d_S in every degree of the window; returns the first bad degree.
std::optional<int> chain_map_defect(const GradedMap<PLocal>& f, const ChainComplex<PLocal>& source,
                                    const ChainComplex<PLocal>& target);

}  // namespace lbss
