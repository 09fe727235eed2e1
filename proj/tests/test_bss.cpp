#include "doctest.h"
#include "lbss/bss.hpp"
#include "checks.hpp"
#include "support.hpp"

using namespace lbss;

namespace {

void check_against_oracle(const ChainComplex<PLocal>& c, int r_max) {
  auto mismatches = testing::bss_oracle_mismatches(c, r_max);
  CHECK_MESSAGE(mismatches.empty(), (mismatches.empty() ? "" : mismatches.front()));
}

ChainComplex<PLocal> two_term(unsigned p, int exponent, int lower, int top) {
  GradedBasis b(top);
  b.add(lower + 1, "y");
  b.add(lower, "x");
  Mat<PLocal> d(1, 1);
  d(0, 0) = PLocal::power_of_prime(p, exponent);
  return make_complex<PLocal>(b, -1, p, {{lower + 1, d}});
}

}  // namespace

TEST_CASE("zero differential: E^1 = E^infinity") {
  GradedBasis b(4);
  b.add(1, "a");
  b.add(2, "b");
  b.add(2, "c");
  auto c = make_complex<PLocal>(b, -1, 3, {});
  auto bss = bockstein_pages(c, 3);
  for (int r = 1; r <= 3; ++r) {
    CHECK(bss.page(r).dim(2) == 2);
    for (int n = 1; n <= bss.window(); ++n) CHECK(is_zero(bss.page(r).beta.block(n)));
  }
  CHECK(bss.stable_page() == 1);
  CHECK_THROWS_AS(bockstein_pages(c, 0), std::invalid_argument);
}

TEST_CASE("multiplication by p collapses after page one") {
  auto c = two_term(3, 1, 1, 4);
  auto bss = bockstein_pages(c, 3);
  CHECK(bss.page(1).dim(2) == 1);
  CHECK(bss.page(1).dim(1) == 1);
  CHECK(bss.page(1).beta.block(2)(0, 0) == Fp(1, 3));
  CHECK(bss.page(2).dim(1) == 0);
  CHECK(bss.page(2).dim(2) == 0);
  CHECK(bss.stable_page() == 2);
  check_against_oracle(c, 3);
}

TEST_CASE("multiplication by p^2: beta^1 = 0, beta^2 pairs, E^3 = 0") {
  auto c = two_term(3, 2, 3, 6);
  auto bss = bockstein_pages(c, 3);
  CHECK(is_zero(bss.page(1).beta.block(4)));
  CHECK(bss.page(2).beta.block(4)(0, 0) == Fp(1, 3));
  CHECK(bss.page(3).dim(3) == 0);
  CHECK(bss.page(3).dim(4) == 0);
  check_against_oracle(c, 3);
}

TEST_CASE("structural pages agree with the subquotient oracle") {
  std::mt19937 rng(515);
  for (unsigned p : {3u, 5u})
    for (int trial = 0; trial < 30; ++trial) {
      auto planted = testing::planted_complex(4, p, 4, 3, rng);
      REQUIRE(planted.complex.basis().total_rank() <= 13);
      check_against_oracle(planted.complex, 4);
    }
}

TEST_CASE("morphisms") {
  std::mt19937 rng(8);
  auto planted = testing::planted_complex(5, 3, 5, 2, rng);
  const auto& c = planted.complex;
  auto bss = bockstein_pages(c, 3);
  GradedMap<PLocal> id(c.basis(), c.basis(), 0, 3), times_p(c.basis(), c.basis(), 0, 3);
  for (int n = 0; n <= c.top(); ++n) {
    id.set_block(n, identity<PLocal>(c.basis().rank(n), 3));
    times_p.set_block(n, PLocal(3, 3) * identity<PLocal>(c.basis().rank(n), 3));
  }
  auto e_id = bss_of_morphism(id, bss, bss);
  auto e_p = bss_of_morphism(times_p, bss, bss);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= bss.window(); ++n) {
      CHECK(e_id[r - 1].block(n) == identity<Fp>(bss.page(r).dim(n), 3));
      CHECK(is_zero(e_p[r - 1].block(n)));
    }

  // Functoriality on a random chain automorphism built from the decomposition.
  const auto& dec = bss.decomposition();
  GradedMap<PLocal> g(c.basis(), c.basis(), 0, 3);
  std::uniform_int_distribution<int> unit(1, 2);
  for (int n = 0; n <= c.top(); ++n) {
    Mat<PLocal> scale = identity<PLocal>(c.basis().rank(n), 3);
    g.set_block(n, dec.basis[n] * scale * dec.basis_inv[n]);
  }
  for (const auto& piece : dec.pieces) {
    // Scale each elementary piece by a unit on both ends.
    PLocal u(unit(rng) == 1 ? 1 : -1, 3);
    for (int side = 0; side < 2; ++side) {
      int n = side == 0 ? piece.source_degree : piece.target_degree;
      int s = side == 0 ? piece.source_slot : piece.target_slot;
      Mat<PLocal> scale = identity<PLocal>(c.basis().rank(n), 3);
      scale(s, s) = u;
      g.set_block(n, Mat<PLocal>(dec.basis[n] * scale * dec.basis_inv[n] * g.block(n)));
    }
  }
  auto gg = compose(g, g);
  auto e_g = bss_of_morphism(g, bss, bss);
  auto e_gg = bss_of_morphism(gg, bss, bss);
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= bss.window(); ++n) CHECK(e_gg[r - 1].block(n) == Mat<Fp>(e_g[r - 1].block(n) * e_g[r - 1].block(n)));

  // A non-chain map is rejected with its degree.
  GradedMap<PLocal> bad(c.basis(), c.basis(), 0, 3);
  for (int n = 0; n <= c.top(); ++n) bad.set_block(n, identity<PLocal>(c.basis().rank(n), 3));
  bool found = false;
  for (int n = 1; n <= c.top() && !found; ++n)
    if (c.basis().rank(n) > 0 && !is_zero(c.d(n))) {
      bad.set_block(n, zeros<PLocal>(c.basis().rank(n), c.basis().rank(n)));
      found = true;
    }
  if (found) CHECK_THROWS_AS(bss_of_morphism(bad, bss, bss), ComplexError);
}
