#pragma once

// Built-in DGLs and maps: the abelian pair (e, f) with df = p^k e, the
// three-generator variant with an extra even class, and the perturbed Hopf
// automorphism of UL_ab(a, b, c).

#include "lbss/cce.hpp"
#include "lbss/structure.hpp"

namespace lbss {

/// L_ab(e, f), |e| = 2n-1, |f| = 2n, df = coefficient * e.
template <ExactScalar S>
DgLie<S> abelian_pair(unsigned p, int n, long coefficient);

/// L_ab(e, f, g), |e| = 2n-1, |f| = |g| = 2, df = p e (requires n = 1 for homogeneity).
DgLie<PLocal> example2_lie(unsigned p, int n);

/// L_ab(a, b, c) over F_p, |a| = 2np-1, |b| = 2np, |c| = 2n.
DgLie<Fp> example2_target(unsigned p, int n);

/// a -> a, b -> b + c^p, c -> c on UL_ab(a, b, c).
HopfMorphism<Fp> example2_automorphism(unsigned p, int n, int top);

/// (Lambda(x1, y1), 0) with |x1| = 2np, |y1| = 2np+1, the cochains of
/// abelian_pair(p, n, 1), and the images x1 -> x^p, y1 -> x^{p-1} y; sized for
/// verify_quasi_iso at `window`.
template <ExactScalar S>
struct Prop61Model {
  CochainAlgebra<S> source, target;
  std::vector<Element<S>> images;
};

template <ExactScalar S>
Prop61Model<S> prop61_model(unsigned p, int n, int window);

}  // namespace lbss
