#include "doctest.h"
#include "lbss/lie.hpp"

#include <random>

using namespace lbss;

namespace {

constexpr unsigned P = 3;

Vec<PLocal> vec(const DgLie<PLocal>& L, std::initializer_list<std::pair<const char*, long>> terms) {
  Vec<PLocal> v = with_prime<PLocal>(zero_vector<PLocal>(L.size()), L.prime());
  for (auto [name, c] : terms) v(L.index_of(name)) += PLocal(c, L.prime());
  return v;
}

DgLie<PLocal> example1(unsigned p, int n) {
  DgLie<PLocal> L(p);
  L.add_generator("e", 2 * n - 1);
  L.add_generator("f", 2 * n);
  L.set_differential(1, vec(L, {{"e", static_cast<long>(p)}}));
  return L;
}

// x, y even of degree 2 with [x,y] = z central; a odd with [a,a] = 2w, w central;
// u odd of degree 3 with [a,u] = t of degree 4, central. d u = 3 w... kept zero for validity.
DgLie<PLocal> nonabelian(unsigned p) {
  DgLie<PLocal> L(p);
  L.add_generator("a", 1);
  L.add_generator("x", 2);
  L.add_generator("y", 2);
  L.add_generator("w", 2);
  L.add_generator("u", 3);
  L.add_generator("z", 4);
  L.add_generator("t", 4);
  L.set_bracket(1, 2, vec(L, {{"z", 1}}));
  L.set_bracket(0, 0, vec(L, {{"w", 2}}));
  L.set_bracket(0, 4, vec(L, {{"t", 1}}));
  L.complete_antisymmetry();
  return L;
}

// Enumerate admissible exponent vectors by brute force over a box.
std::vector<int> brute_dims(const std::vector<int>& degrees, int top) {
  std::vector<int> dims(static_cast<std::size_t>(top + 1), 0);
  std::vector<int> e(degrees.size(), 0);
  while (true) {
    int deg = 0;
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i] * degrees[i];
      if (degrees[i] % 2 && e[i] > 1) ok = false;
    }
    if (ok && deg <= top) ++dims[static_cast<std::size_t>(deg)];
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > top) e[i++] = 0;
    if (i == e.size()) break;
  }
  return dims;
}

template <ExactScalar S>
Element<S> basis_element(const PbwAlgebra<S>& U, int n, int k) {
  Element<S> x;
  x[U.monomials(n)[static_cast<std::size_t>(k)]] = scalar<S>(1, U.prime());
  return x;
}

template <ExactScalar S>
Element<S> sum(Element<S> a, const Element<S>& b, const S& c) {
  for (const auto& [m, v] : b) add_to(a, m, S(c * v));
  return a;
}

// Delta(u) as a list of (deg_left, idx_left, deg_right, idx_right, coeff).
struct TensorTerm {
  int a, i, b, j;
  PLocal c;
};

std::vector<TensorTerm> delta(const PbwAlgebra<PLocal>& U, int n, const Vec<PLocal>& u) {
  std::vector<TensorTerm> out;
  for (int a = 0; a <= n; ++a) {
    Vec<PLocal> v = U.coproduct(a, n - a) * u;
    for (int i = 0; i < U.dim(a); ++i)
      for (int j = 0; j < U.dim(n - a); ++j) {
        auto c = v(i * U.dim(n - a) + j);
        if (!c.is_zero()) out.push_back({a, i, n - a, j, c});
      }
  }
  return out;
}

}  // namespace

TEST_CASE("validate") {
  DgLie<PLocal> ab(P);
  ab.add_generator("e", 1);
  ab.add_generator("f", 2);
  CHECK(validate(ab).ok());

  auto ex1 = example1(P, 1);
  CHECK(validate(ex1).ok());
  CHECK(validate(nonabelian(P)).ok());

  auto bad = nonabelian(P);
  bad.set_bracket(2, 1, vec(bad, {{"z", 1}}));  // should be -z
  auto report = validate(bad);
  CHECK_FALSE(report.ok());
  bool saw = false;
  for (const auto& v : report.violations) saw |= v.identity == "graded antisymmetry";
  CHECK(saw);

  DgLie<PLocal> not_derivation = nonabelian(P);
  not_derivation.set_differential(1, vec(not_derivation, {{"a", 1}}));  // d x = a breaks d[x,y] = dz
  CHECK_FALSE(validate(not_derivation).ok());

  DgLie<PLocal> zero_degree(P);
  zero_degree.add_generator("q", 0);
  CHECK_FALSE(validate(zero_degree).ok());

  DgLie<PLocal> dd(P);
  dd.add_generator("a", 1);
  dd.add_generator("b", 2);
  dd.add_generator("c", 3);
  dd.set_differential(2, vec(dd, {{"b", 1}}));
  dd.set_differential(1, vec(dd, {{"a", 1}}));
  auto r = validate(dd);
  CHECK_FALSE(r.ok());
  CHECK(r.violations.back().identity == "dd = 0");
}

TEST_CASE("PBW dimensions") {
  auto U = PbwAlgebra<PLocal>(example1(P, 1), 12);
  auto brute = brute_dims({1, 2}, 12);
  auto series = pbw_hilbert_series({1, 2}, 12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(U.dim(n) == brute[n]);
    CHECK(U.dim(n) == series[n]);
    CHECK(U.dim(n) == 1);  // Lambda(e) (x) Z[f] with |e| = 1, |f| = 2
  }
  std::vector<int> degs = {1, 2, 2, 2, 3, 4, 4};
  PbwAlgebra<PLocal> V(nonabelian(P), 9);
  auto b2 = brute_dims(degs, 9);
  auto s2 = pbw_hilbert_series(degs, 9);
  for (int n = 0; n <= 9; ++n) {
    CHECK(V.dim(n) == b2[n]);
    CHECK(V.dim(n) == s2[n]);
  }
  CHECK_FALSE(V.truncated());
  CHECK(PbwAlgebra<PLocal>(nonabelian(P), 3).truncated());
}

TEST_CASE("abelian UL: polynomial on even, exterior on odd") {
  DgLie<PLocal> L(P);
  L.add_generator("f", 2);
  L.add_generator("e", 3);
  PbwAlgebra<PLocal> U(L, 12);
  auto f = U.generator(0), e = U.generator(1);
  CHECK(U.multiply(e, e).empty());
  CHECK(U.dim(8) == 1);
  CHECK(U.name(U.monomials(8)[0]) == "f^4");
  CHECK(U.multiply(e, f) == U.multiply(f, e));
}

TEST_CASE("straightening in a non-abelian UL") {
  PbwAlgebra<PLocal> U(nonabelian(P), 10);
  const auto& L = U.lie();
  auto g = [&](const char* n) { return U.generator(L.index_of(n)); };
  // a^2 = [a,a]/2 = w.
  CHECK(U.multiply(g("a"), g("a")) == g("w"));
  // y x = x y - z.
  CHECK(U.multiply(g("y"), g("x")) == sum(U.multiply(g("x"), g("y")), g("z"), PLocal(-1, P)));
  // u a = -a u + t for odd a, u.
  CHECK(U.multiply(g("u"), g("a")) == sum(sum(Element<PLocal>{}, U.multiply(g("a"), g("u")), PLocal(-1, P)), g("t"), PLocal(1, P)));
  // Defining relations hold for every pair.
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j) {
      auto lhs = U.commutator(U.generator(i), L.degree(i), U.generator(j), L.degree(j));
      CHECK(lhs == U.from_lie(L.bracket(i, j)));
    }
  // Associativity on all basis triples with total degree <= 8.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 7; ++b)
      for (int c = 1; a + b + c <= 8; ++c)
        for (int i = 0; i < U.dim(a); ++i)
          for (int j = 0; j < U.dim(b); ++j)
            for (int k = 0; k < U.dim(c); ++k) {
              auto x = basis_element(U, a, i), y = basis_element(U, b, j), z = basis_element(U, c, k);
              CHECK(U.multiply(U.multiply(x, y), z) == U.multiply(x, U.multiply(y, z)));
            }
}

TEST_CASE("differential on UL") {
  auto U = PbwAlgebra<PLocal>(example1(P, 1), 12);
  // d f^k = k p e f^{k-1}.
  for (int k = 1; k <= 6; ++k) {
    Mat<PLocal> d = U.differential_matrix(2 * k);
    REQUIRE(d.rows() == 1);
    CHECK(d(0, 0) == PLocal(static_cast<long>(k) * P, P));
  }
  auto C = U.complex();
  CHECK(C.shift() == -1);

  // Derivation property and dd = 0 on a non-abelian DGL with nonzero d.
  DgLie<PLocal> L(P);
  L.add_generator("a", 1);
  L.add_generator("b", 2);
  L.add_generator("x", 3);
  L.add_generator("y", 4);
  L.add_generator("c", 3);
  L.add_generator("q", 5);
  L.set_differential(1, vec(L, {{"a", 3}}));       // d b = 3a
  L.set_differential(3, vec(L, {{"x", 1}}));       // d y = x
  L.set_bracket(1, 1, vec(L, {}));
  L.set_bracket(0, 1, vec(L, {{"c", 1}}));         // [a,b] = c
  L.set_bracket(1, 4, vec(L, {{"q", 1}}));         // [b,c] = q
  L.set_bracket(0, 0, vec(L, {{"b", 0}}));
  // d[a,b] = [da,b] - [a,db] = -3[a,a] = 0, so dc = 0; d[b,c] = [db,c] + [b,dc] = 3[a,c] = 0.
  L.complete_antisymmetry();
  REQUIRE(validate(L).ok());
  PbwAlgebra<PLocal> V(L, 9);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 9; ++b)
      for (int i = 0; i < V.dim(a); ++i)
        for (int j = 0; j < V.dim(b); ++j) {
          auto x = basis_element(V, a, i), y = basis_element(V, b, j);
          auto lhs = V.differential(V.multiply(x, y));
          auto rhs = sum(V.multiply(V.differential(x), y), V.multiply(x, V.differential(y)), koszul<PLocal>(a, P));
          CHECK(lhs == rhs);
        }
  for (int n = 2; n <= 9; ++n) CHECK(is_zero(Mat<PLocal>(V.differential_matrix(n - 1) * V.differential_matrix(n))));
}

TEST_CASE("coproduct: binomial oracle, counit, coassociativity, multiplicativity") {
  DgLie<PLocal> L(P);
  L.add_generator("f", 2);
  PbwAlgebra<PLocal> U(L, 16);
  for (int k = 0; k <= 8; ++k)
    for (int j = 0; j <= k; ++j) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), k, j);
      CHECK(U.coproduct(2 * j, 2 * (k - j))(0, 0) == PLocal(mpq_class(b), P));
    }

  PbwAlgebra<PLocal> V(nonabelian(P), 8);
  for (int n = 0; n <= 8; ++n) {
    // Counit: the (0,n) and (n,0) components are the identity.
    CHECK(V.coproduct(0, n) == identity<PLocal>(V.dim(n), P));
    CHECK(V.coproduct(n, 0) == identity<PLocal>(V.dim(n), P));
    // Coassociativity: (Delta (x) 1) Delta = (1 (x) Delta) Delta componentwise.
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        int c = n - a - b;
        Mat<PLocal> lhs = zeros<PLocal>(static_cast<Eigen::Index>(V.dim(a)) * V.dim(b) * V.dim(c), V.dim(n));
        Mat<PLocal> rhs = lhs;
        Mat<PLocal> d_ab_c = V.coproduct(a + b, c), d_a_bc = V.coproduct(a, b + c);
        Mat<PLocal> d_a_b = V.coproduct(a, b), d_b_c = V.coproduct(b, c);
        for (int col = 0; col < V.dim(n); ++col) {
          for (int u = 0; u < V.dim(a + b); ++u)
            for (int w = 0; w < V.dim(c); ++w) {
              PLocal x = d_ab_c(u * V.dim(c) + w, col);
              if (x.is_zero()) continue;
              for (int i = 0; i < V.dim(a); ++i)
                for (int j = 0; j < V.dim(b); ++j)
                  lhs((i * V.dim(b) + j) * V.dim(c) + w, col) += x * d_a_b(i * V.dim(b) + j, u);
            }
          for (int i = 0; i < V.dim(a); ++i)
            for (int v = 0; v < V.dim(b + c); ++v) {
              PLocal x = d_a_bc(i * V.dim(b + c) + v, col);
              if (x.is_zero()) continue;
              for (int j = 0; j < V.dim(b); ++j)
                for (int w = 0; w < V.dim(c); ++w)
                  rhs((i * V.dim(b) + j) * V.dim(c) + w, col) += x * d_b_c(j * V.dim(c) + w, v);
            }
        }
        CHECK(lhs == rhs);
      }
  }
  // Delta(xy) = Delta(x) Delta(y) with the Koszul sign on the middle swap.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; a + b <= 8; ++b)
      for (int i = 0; i < V.dim(a); ++i)
        for (int j = 0; j < V.dim(b); ++j) {
          auto x = basis_element(V, a, i), y = basis_element(V, b, j);
          Vec<PLocal> xy = V.coords(V.multiply(x, y), a + b);
          std::map<std::tuple<int, int, int>, PLocal> lhs, rhs;
          for (const auto& t : delta(V, a + b, xy)) lhs[{t.a, t.i, t.j}] = t.c;
          for (const auto& s : delta(V, a, V.coords(x, a)))
            for (const auto& t : delta(V, b, V.coords(y, b))) {
              PLocal sign = koszul<PLocal>(static_cast<long>(s.b) * t.a, P);
              auto left = V.multiply(basis_element(V, s.a, s.i), basis_element(V, t.a, t.i));
              auto right = V.multiply(basis_element(V, s.b, s.j), basis_element(V, t.b, t.j));
              for (const auto& [ml, cl] : left)
                for (const auto& [mr, cr] : right) {
                  auto [dl, il] = V.locate(ml);
                  auto [dr, ir] = V.locate(mr);
                  (void)dr;
                  auto& slot = rhs[{dl, il, ir}];
                  slot = slot + sign * s.c * t.c * cl * cr;
                }
            }
          for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("primitives") {
  DgLie<Fp> L(P);
  L.add_generator("f", 2);
  PbwAlgebra<Fp> U(L, 20);
  CHECK(U.primitives(2).cols() == 1);
  CHECK(U.primitives(4).cols() == 0);   // f^2 is not primitive
  CHECK(U.primitives(6).cols() == 1);   // f^3 is, over F_3
  CHECK(U.primitives(18).cols() == 1);  // f^9
  CHECK(U.primitives(12).cols() == 0);

  DgLie<PLocal> LZ(P);
  LZ.add_generator("f", 2);
  PbwAlgebra<PLocal> UZ(LZ, 12);
  CHECK(UZ.primitives(6).cols() == 0);  // over Z_(p), f^p is not primitive

  PbwAlgebra<PLocal> V(nonabelian(P), 8);
  for (int n = 1; n <= 8; ++n) {
    Mat<PLocal> prim = V.primitives(n);
    Mat<PLocal> lie = V.lie_part(n);
    CHECK(prim.cols() == lie.cols());  // characteristic-zero-like: P = L over Z_(p)
    CHECK(is_zero(Mat<PLocal>(V.reduced_coproduct(n) * lie)));
  }
  CHECK(V.primitives(1).cols() == 1);
}

TEST_CASE("U is functorial") {
  // phi: L1 -> L2 and psi: L2 -> L3 abelian, given on generators.
  auto make = [](std::vector<std::pair<std::string, int>> gens) {
    DgLie<PLocal> L(P);
    for (auto& [n, d] : gens) L.add_generator(n, d);
    return L;
  };
  auto L1 = make({{"a", 2}, {"b", 3}});
  auto L2 = make({{"c", 2}, {"d", 2}, {"e", 3}});
  auto L3 = make({{"g", 2}, {"h", 3}});
  PbwAlgebra<PLocal> U1(L1, 10), U2(L2, 10), U3(L3, 10);
  std::vector<Element<PLocal>> phi = {sum(U2.generator(0), U2.generator(1), PLocal(2, P)), U2.generator(2)};
  std::vector<Element<PLocal>> psi = {U3.generator(0), sum(Element<PLocal>{}, U3.generator(0), PLocal(-1, P)),
                                      sum(Element<PLocal>{}, U3.generator(1), PLocal(5, P))};
  std::vector<Element<PLocal>> composite;
  for (const auto& img : phi) {
    Element<PLocal> out;
    for (const auto& [m, c] : img) {
      int i = static_cast<int>(std::find(m.begin(), m.end(), 1) - m.begin());
      out = sum(out, psi[static_cast<std::size_t>(i)], c);
    }
    composite.push_back(out);
  }
  CHECK_FALSE(relation_defect(U1, U2, phi).has_value());
  auto Uphi = extend_algebra_map(U1, U2, phi);
  auto Upsi = extend_algebra_map(U2, U3, psi);
  auto Ucomp = extend_algebra_map(U1, U3, composite);
  for (int n = 0; n <= 10; ++n) CHECK(Ucomp.block(n) == Mat<PLocal>(Upsi.block(n) * Uphi.block(n)));

  // Sending x, y to non-commuting images breaks [x,y] = z.
  PbwAlgebra<PLocal> V(nonabelian(P), 6);
  const auto& L = V.lie();
  std::vector<Element<PLocal>> images;
  for (int i = 0; i < L.size(); ++i) images.push_back(V.generator(i));
  images[static_cast<std::size_t>(L.index_of("z"))] = Element<PLocal>{};
  CHECK(relation_defect(V, V, images).has_value());
}
