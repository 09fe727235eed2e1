#include "lbss/examples.hpp"

namespace lbss {

template <ExactScalar S>
DgLie<S> abelian_pair(unsigned p, int n, long coefficient) {
  DgLie<S> L(p);
  L.add_generator("e", 2 * n - 1);
  L.add_generator("f", 2 * n);
  if (coefficient != 0) {
    Vec<S> v = with_prime<S>(zero_vector<S>(2), p);
    v(0) = scalar<S>(coefficient, p);
    L.set_differential(1, v);
  }
  return L;
}

DgLie<PLocal> example2_lie(unsigned p, int n) {
  if (n != 1) throw std::invalid_argument("df = pe is homogeneous only for n = 1");
  DgLie<PLocal> L(p);
  L.add_generator("e", 1);
  L.add_generator("f", 2);
  L.add_generator("g", 2);
  Vec<PLocal> v = with_prime<PLocal>(zero_vector<PLocal>(3), p);
  v(0) = PLocal(static_cast<long>(p), p);
  L.set_differential(1, v);
  return L;
}

DgLie<Fp> example2_target(unsigned p, int n) {
  const int q = 2 * n * static_cast<int>(p);
  DgLie<Fp> L(p);
  L.add_generator("a", q - 1);
  L.add_generator("b", q);
  L.add_generator("c", 2 * n);
  return L;
}

HopfMorphism<Fp> example2_automorphism(unsigned p, int n, int top) {
  PbwAlgebra<Fp> U(example2_target(p, n), top);
  Element<Fp> b = U.generator(1);
  add_to(b, U.power(U.generator(2), static_cast<int>(p)), Fp(1, p));
  return hopf_morphism(U, U, {U.generator(0), b, U.generator(2)});
}

template <ExactScalar S>
Prop61Model<S> prop61_model(unsigned p, int n, int window) {
  const int q = 2 * n * static_cast<int>(p);
  CochainAlgebra<S> target = cochains(abelian_pair<S>(p, n, 1), window + 1).algebra;
  LambdaAlgebra<S> M({"x1", "y1"}, {q, q + 1}, window + 2, p);
  CochainAlgebra<S> source(M, {Element<S>{}, Element<S>{}});
  const auto& B = target.algebra();
  Element<S> x = B.generator(0), y = B.generator(1);
  Element<S> xp = B.one();
  for (unsigned i = 1; i < p; ++i) xp = B.multiply(xp, x);
  std::vector<Element<S>> images{B.multiply(xp, x), B.multiply(xp, y)};
  return {std::move(source), std::move(target), std::move(images)};
}

template DgLie<PLocal> abelian_pair(unsigned, int, long);
template DgLie<Fp> abelian_pair(unsigned, int, long);
template Prop61Model<PLocal> prop61_model(unsigned, int, int);
template Prop61Model<Fp> prop61_model(unsigned, int, int);

}  // namespace lbss
