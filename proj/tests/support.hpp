#pragma once

// Random instance generators shared by the unit tests.

#include "lbss/graded.hpp"

#include <random>

namespace lbss::testing {

inline Mat<PLocal> random_unimodular(int n, unsigned p, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Mat<PLocal> m = identity<PLocal>(n, p);
  for (int step = 0; step < 3 * n; ++step) {
    std::uniform_int_distribution<int> idx(0, std::max(n - 1, 0));
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    m.row(i) += PLocal(entry(rng), p) * m.row(j);
  }
  return m;
}

struct PlantedPiece {
  int upper;  // the piece spans (upper, upper - 1)
  int exponent;
};

/// Chain complex (degree -1) built from free and elementary pieces, then
/// conjugated by random unimodular matrices in each degree.
struct PlantedComplex {
  ChainComplex<PLocal> complex;
  std::vector<int> free_per_degree;
  std::vector<PlantedPiece> pieces;
};

inline PlantedComplex planted_complex(int top, unsigned p, int max_pieces, int max_exp, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, max_pieces), deg(1, top), ex(0, max_exp), fr(0, 1);
  std::vector<int> free(static_cast<std::size_t>(top + 1));
  for (auto& f : free) f = fr(rng);
  std::vector<PlantedPiece> pieces;
  for (int i = count(rng); i > 0; --i) pieces.push_back({deg(rng), ex(rng)});

  GradedBasis basis(top);
  std::vector<int> dim(static_cast<std::size_t>(top + 1), 0);
  std::vector<std::vector<std::pair<int, int>>> slots(static_cast<std::size_t>(pieces.size()));
  std::vector<int> src(pieces.size()), tgt(pieces.size());
  for (int n = 0; n <= top; ++n)
    for (int i = 0; i < free[static_cast<std::size_t>(n)]; ++i) basis.add(n, "z" + std::to_string(n) + "_" + std::to_string(dim[static_cast<std::size_t>(n)]++));
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    int u = pieces[k].upper;
    src[k] = dim[static_cast<std::size_t>(u)]++;
    basis.add(u, "y" + std::to_string(k));
    tgt[k] = dim[static_cast<std::size_t>(u - 1)]++;
    basis.add(u - 1, "x" + std::to_string(k));
  }
  std::vector<Mat<PLocal>> change(static_cast<std::size_t>(top + 1)), change_inv(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    change[static_cast<std::size_t>(n)] = random_unimodular(basis.rank(n), p, rng);
    change_inv[static_cast<std::size_t>(n)] = inverse<PLocal>(change[static_cast<std::size_t>(n)], p);
  }
  std::map<int, Mat<PLocal>> blocks;
  for (int n = 1; n <= top; ++n) {
    Mat<PLocal> d = zeros<PLocal>(basis.rank(n - 1), basis.rank(n));
    for (std::size_t k = 0; k < pieces.size(); ++k)
      if (pieces[k].upper == n) d(tgt[k], src[k]) = PLocal::power_of_prime(p, pieces[k].exponent);
    blocks[n] = Mat<PLocal>(change[static_cast<std::size_t>(n - 1)] * d * change_inv[static_cast<std::size_t>(n)]);
  }
  return {make_complex<PLocal>(basis, -1, p, blocks), free, pieces};
}

}  // namespace lbss::testing
