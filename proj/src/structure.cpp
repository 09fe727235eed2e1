#include "lbss/structure.hpp"

#include <algorithm>

namespace lbss {

namespace {

std::size_t ix(int n) { return static_cast<std::size_t>(n); }

template <ExactScalar S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <ExactScalar S>
Vec<S> kron(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> out(a.rows() * b.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) out.segment(i * b.rows(), b.rows()) = a(i) * b;
  return out;
}

// Is every column of m in the column span of base (over a field)?
bool in_span(const Mat<Fp>& base, const Mat<Fp>& m, unsigned p) {
  if (m.cols() == 0) return true;
  Mat<Fp> both(base.rows(), base.cols() + m.cols());
  both << base, m;
  return rank(both, p) == rank(base, p);
}

}  // namespace

template <ExactScalar S>
GammaAlgebra<S> dual_gamma(const PbwAlgebra<S>& U, int top) {
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 0; i < U.lie().size(); ++i) {
    names.push_back(U.lie().generator(i).name + "#");
    degrees.push_back(U.lie().degree(i));
  }
  return GammaAlgebra<S>(names, degrees, top < 0 ? U.top() : top, U.prime());
}

template <ExactScalar S>
Mat<S> psi(const PbwAlgebra<S>& U, const GammaAlgebra<S>& G, int n) {
  return lambda_gamma_pairing(U.monomial_basis(), G, n);
}

template <ExactScalar S>
GradedMap<S> gamma_dual(const GradedMap<S>& f, const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                        const GammaAlgebra<S>& gamma_source, const GammaAlgebra<S>& gamma_target) {
  const unsigned p = f.prime();
  const int s = f.shift();
  GradedMap<S> fd = dualize(f);
  GradedMap<S> out(gamma_target.basis(), gamma_source.basis(), -s, p);
  for (int m = 0; m <= gamma_target.top(); ++m) {
    int n = m - s;
    if (n < 0 || n > gamma_source.top() || m > f.target().top() || n > f.source().top()) continue;
    Mat<S> back = inverse<S>(psi(source, gamma_source, n), p);
    out.set_block(m, back * fd.block(m) * psi(target, gamma_target, m));
  }
  return out;
}

template <ExactScalar S>
std::optional<std::string> coalgebra_defect(const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                                            const GradedMap<S>& f) {
  const int top = std::min(source.top(), target.top());
  if (f.block(0) != identity<S>(1, f.prime())) return "f(1) != 1";
  for (int n = 2; n <= top; ++n)
    for (int a = 1; a < n; ++a) {
      const int b = n - a;
      if (target.coproduct(a, b) * f.block(n) != kron<S>(f.block(a), f.block(b)) * source.coproduct(a, b))
        return "Delta f != (f (x) f) Delta in bidegree (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  return std::nullopt;
}

template <ExactScalar S>
HopfMorphism<S> hopf_morphism(PbwAlgebra<S> source, PbwAlgebra<S> target, std::vector<Element<S>> images) {
  if (source.prime() != target.prime()) throw std::invalid_argument("source and target have different primes");
  if (auto bad = relation_defect(source, target, images)) throw std::invalid_argument("not an algebra map: " + *bad);
  GradedMap<S> f = extend_algebra_map(source, target, images);
  if (auto bad = coalgebra_defect(source, target, f)) throw std::invalid_argument("not a coalgebra map: " + *bad);
  return {std::move(source), std::move(target), std::move(images), std::move(f)};
}

template <ExactScalar S>
std::string outside_lie(const PbwAlgebra<S>& U, const Vec<S>& u, int n) {
  std::string out;
  const auto& mons = U.monomials(n);
  for (int k = 0; k < U.dim(n); ++k) {
    if (u(k).is_zero() || U.monomial_basis().length(mons[ix(k)]) == 1) continue;
    if (!out.empty()) out += " + ";
    out += to_string(u(k)) + "*" + U.name(mons[ix(k)]);
  }
  return out;
}

template <ExactScalar S>
CriterionVerdict is_lie_type(const HopfMorphism<S>& phi) {
  CriterionVerdict v;
  const auto& L = phi.source.lie();
  const int top = std::min(phi.source.top(), phi.target.top());
  for (int i = 0; i < L.size() && v.direct; ++i) {
    const int n = L.degree(i);
    if (n > top) continue;
    std::string bad = outside_lie(phi.target, phi.target.coords(phi.images[ix(i)], n), n);
    if (!bad.empty()) {
      v.direct = false;
      v.direct_witness = "phi(" + L.generator(i).name + ") has components " + bad + " outside L";
    }
  }
  GammaAlgebra<S> gs = dual_gamma(phi.source, top), gt = dual_gamma(phi.target, top);
  v.dual = is_gamma_morphism(gt, gs, gamma_dual(phi.map, phi.source, phi.target, gs, gt));
  return v;
}

template <ExactScalar S>
GradedMap<S> extend_derivation(const PbwAlgebra<S>& U, const std::vector<Element<S>>& images, int shift) {
  const auto& L = U.lie();
  const unsigned p = U.prime();
  if (static_cast<int>(images.size()) != L.size()) throw std::invalid_argument("one image per generator required");
  for (int i = 0; i < L.size(); ++i)
    for (const auto& [m, c] : images[ix(i)])
      if (U.degree(m) != L.degree(i) + shift)
        throw std::invalid_argument("image of " + L.generator(i).name + " is not homogeneous of degree " +
                                    std::to_string(L.degree(i) + shift));
  auto apply = [&](const Monomial& m) {
    Element<S> out;
    std::vector<int> seq = U.monomial_basis().letters(m);
    Monomial prefix = U.unit();
    int prefix_degree = 0;
    for (std::size_t l = 0; l < seq.size(); ++l) {
      Monomial suffix = U.unit();
      for (std::size_t r = l + 1; r < seq.size(); ++r) ++suffix[ix(seq[r])];
      Element<S> left{{prefix, koszul<S>(static_cast<long>(shift) * prefix_degree, p)}};
      Element<S> right{{suffix, scalar<S>(1, p)}};
      add_to(out, U.multiply(U.multiply(left, images[ix(seq[l])]), right), scalar<S>(1, p));
      ++prefix[ix(seq[l])];
      prefix_degree += L.degree(seq[l]);
    }
    return out;
  };
  auto on_lie = [&](const Vec<S>& v) {
    Element<S> out;
    for (int k = 0; k < L.size(); ++k)
      if (!v(k).is_zero()) add_to(out, images[ix(k)], v(k));
    return out;
  };
  for (int i = 0; i < L.size(); ++i)
    for (int j = i; j < L.size(); ++j) {
      const int di = L.degree(i), dj = L.degree(j);
      if (di + dj + std::max(shift, 0) > U.top()) continue;
      // D[x_i, x_j] computed on the commutator and through the bracket
      Element<S> lhs;
      add_to(lhs, U.multiply(images[ix(i)], U.generator(j)), scalar<S>(1, p));
      add_to(lhs, U.multiply(U.generator(i), images[ix(j)]), koszul<S>(static_cast<long>(shift) * di, p));
      add_to(lhs, U.multiply(images[ix(j)], U.generator(i)), S(-koszul<S>(static_cast<long>(di) * dj, p)));
      add_to(lhs, U.multiply(U.generator(j), images[ix(i)]),
             S(-koszul<S>(static_cast<long>(di) * dj + static_cast<long>(shift) * dj, p)));
      if (lhs != on_lie(L.bracket(i, j)))
        throw std::invalid_argument("derivation does not respect [" + L.generator(i).name + ", " +
                                    L.generator(j).name + "]");
    }
  GradedMap<S> out(U.basis(), U.basis(), shift, p);
  for (int n = 0; n <= U.top(); ++n) {
    if (n + shift < 0 || n + shift > U.top()) continue;
    Mat<S> block = with_prime<S>(zeros<S>(U.dim(n + shift), U.dim(n)), p);
    for (int k = 0; k < U.dim(n); ++k) block.col(k) = U.coords(apply(U.monomials(n)[ix(k)]), n + shift);
    out.set_block(n, block);
  }
  return out;
}

template <ExactScalar S>
CriterionVerdict differential_restricts_to_lie(const PbwAlgebra<S>& U, const GradedMap<S>& d) {
  if (d.shift() != -1) throw std::invalid_argument("differential must have degree -1");
  const unsigned p = U.prime();
  for (int n = 1; n <= U.top(); ++n)
    for (int a = 0; a < n; ++a) {
      const int b = n - 1 - a;
      Mat<S> lhs = U.coproduct(a, b) * d.block(n);
      Mat<S> rhs = kron<S>(d.block(a + 1), identity<S>(U.dim(b), p)) * U.coproduct(a + 1, b) +
                   koszul<S>(a, p) * kron<S>(identity<S>(U.dim(a), p), d.block(b + 1)) * U.coproduct(a, b + 1);
      if (lhs != rhs)
        throw std::invalid_argument("not a coderivation in bidegree (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
  CriterionVerdict v;
  const auto& L = U.lie();
  for (int i = 0; i < L.size() && v.direct; ++i) {
    const int n = L.degree(i);
    if (n > U.top()) continue;
    Vec<S> dx = d.block(n).col(U.locate(U.monomial_basis().generator(i)).second);
    std::string bad = outside_lie(U, dx, n - 1);
    if (!bad.empty()) {
      v.direct = false;
      v.direct_witness = "d(" + L.generator(i).name + ") has components " + bad + " outside L";
    }
  }
  GammaAlgebra<S> g = dual_gamma(U, U.top());
  v.dual = is_gamma_derivation(g, gamma_dual(d, U, U, g, g));
  return v;
}

// ---------------------------------------------------------------- pages

PageAlgebra::PageAlgebra(const PbwAlgebra<PLocal>& U, const BssResult& bss, int r) : U_(&U), bss_(&bss), r_(r) {
  bss.page(r);
  if (bss.complex().top() > U.top()) throw std::invalid_argument("spectral sequence is not the one of this algebra");
}

std::string PageAlgebra::name(int n, int k) const { return page().classes[ix(n)][ix(k)].name; }

// Decomposition bases are unimodular and representatives integral, so page
// coordinates can be read off after reducing everything mod p.
const Mat<Fp>& PageAlgebra::live_rows(int n) const {
  if (auto it = live_.find(n); it != live_.end()) return it->second;
  const auto& slots = bss_->live_slots(r_, n);
  Mat<Fp> inv = reduce(with_prime<PLocal>(bss_->decomposition().basis_inv[ix(n)], prime()));
  Mat<Fp> out = with_prime<Fp>(zeros<Fp>(static_cast<Eigen::Index>(slots.size()), inv.cols()), prime());
  for (std::size_t i = 0; i < slots.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = inv.row(slots[i]);
  return live_.emplace(n, std::move(out)).first->second;
}

const Mat<Fp>& PageAlgebra::representatives(int n) const {
  if (auto it = reps_.find(n); it != reps_.end()) return it->second;
  const auto& cls = page().classes[ix(n)];
  Mat<Fp> out = with_prime<Fp>(zeros<Fp>(U_->dim(n), dim(n)), prime());
  for (int k = 0; k < dim(n); ++k) out.col(k) = reduce(with_prime<PLocal>(Mat<PLocal>(cls[ix(k)].representative), prime()));
  return reps_.emplace(n, std::move(out)).first->second;
}

const Mat<Fp>& PageAlgebra::product(int a, int b) const {
  auto key = std::make_pair(a, b);
  if (auto it = product_.find(key); it != product_.end()) return it->second;
  if (a < 0 || b < 0 || a + b > window()) throw std::out_of_range("product leaves the window");
  Mat<Fp> mult = reduce(with_prime<PLocal>(U_->product_matrix(a, b), prime()));
  Mat<Fp> out = live_rows(a + b) * mult * kron<Fp>(representatives(a), representatives(b));
  return product_.emplace(key, std::move(out)).first->second;
}

Mat<Fp> PageAlgebra::compute_coproduct(int a, int b) const {
  if (a < 0 || b < 0 || a + b > window()) throw std::out_of_range("coproduct leaves the window");
  using RowMajor = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const unsigned p = prime();
  const Mat<Fp>& reps = representatives(a + b);
  const Eigen::Index da = U_->dim(a), db = U_->dim(b), classes = dim(a + b);
  Mat<Fp> images = with_prime<Fp>(zeros<Fp>(da * db, classes), p);
  for (const auto& e : U_->coproduct_entries(a, b)) {
    Fp c = e.value.with_prime(p).reduce();
    images.row(e.row) += c * reps.row(e.col);
  }
  // class of sum w_ij u_i (x) u_j: A W B^T read at the live slots
  const Mat<Fp>& A = live_rows(a);
  const Mat<Fp>& B = live_rows(b);
  Mat<Fp> out = with_prime<Fp>(zeros<Fp>(A.rows() * B.rows(), classes), p);
  for (Eigen::Index k = 0; k < classes; ++k) {
    Eigen::Map<const RowMajor> w(images.col(k).data(), da, db);
    RowMajor t = A * w * B.transpose();
    out.col(k) = Eigen::Map<const Vec<Fp>>(t.data(), t.size());
  }
  return out;
}

const Mat<Fp>& PageAlgebra::coproduct(int a, int b) const {
  auto key = std::make_pair(a, b);
  if (auto it = coproduct_.find(key); it != coproduct_.end()) return it->second;
  return coproduct_.emplace(key, compute_coproduct(a, b)).first->second;
}

Vec<Fp> PageAlgebra::multiply(int a, const Vec<Fp>& x, int b, const Vec<Fp>& y) const {
  return product(a, b) * kron<Fp>(x, y);
}

Vec<Fp> PageAlgebra::power(int a, const Vec<Fp>& x, int k) const {
  if (k < 1) throw std::invalid_argument("power needs k >= 1");
  Vec<Fp> out = x;
  for (int i = 1; i < k; ++i) out = multiply(a * i, out, a, x);
  return out;
}

Mat<Fp> PageAlgebra::primitives(int n) const {
  const unsigned p = prime();
  if (n < 1) return with_prime<Fp>(zeros<Fp>(dim(std::max(n, 0)), 0), p);
  // one split at a time; the full stack is too large at desk-scale windows
  Mat<Fp> k = identity<Fp>(dim(n), p);
  for (int a = 1; a < n && k.cols() > 0; ++a) {
    if (dim(a) == 0 || dim(n - a) == 0) continue;
    Mat<Fp> c = coproduct_.count({a, n - a}) ? coproduct(a, n - a) : compute_coproduct(a, n - a);
    k = k * kernel_basis<Fp>(Mat<Fp>(c * k), p);
  }
  return k;
}

std::optional<std::string> PageAlgebra::beta_leibniz_defect() const {
  const unsigned p = prime();
  for (int n = 1; n <= window(); ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      Mat<Fp> lhs = beta(n) * product(a, b);
      Mat<Fp> rhs = with_prime<Fp>(zeros<Fp>(dim(n - 1), dim(a) * dim(b)), p);
      if (a >= 1) rhs += product(a - 1, b) * kron<Fp>(beta(a), identity<Fp>(dim(b), p));
      if (b >= 1) rhs += koszul<Fp>(a, p) * product(a, b - 1) * kron<Fp>(identity<Fp>(dim(a), p), beta(b));
      if (lhs != rhs)
        return "beta(xy) != beta(x)y +- x beta(y) for |x| = " + std::to_string(a) + ", |y| = " + std::to_string(b);
    }
  return std::nullopt;
}

std::optional<std::string> PageAlgebra::beta_coleibniz_defect() const {
  const unsigned p = prime();
  for (int n = 1; n <= window(); ++n)
    for (int a = 0; a < n; ++a) {
      const int b = n - 1 - a;
      Mat<Fp> lhs = coproduct(a, b) * beta(n);
      Mat<Fp> rhs = kron<Fp>(beta(a + 1), identity<Fp>(dim(b), p)) * coproduct(a + 1, b) +
                    koszul<Fp>(a, p) * kron<Fp>(identity<Fp>(dim(a), p), beta(b + 1)) * coproduct(a, b + 1);
      if (lhs != rhs)
        return "Delta beta != (beta (x) 1 + 1 (x) beta) Delta in bidegree (" + std::to_string(a) + "," +
               std::to_string(b) + ")";
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- Lie structure on pages

GradedMap<PLocal> lie_inclusion(const PbwAlgebra<PLocal>& U) {
  GradedBasis lb = U.lie().basis(U.top());
  GradedMap<PLocal> out(lb, U.basis(), 0, U.prime());
  for (int n = 1; n <= U.top(); ++n) out.set_block(n, U.lie_part(n));
  return out;
}

bool Theorem3Report::ok() const {
  return std::all_of(pages.begin(), pages.end(), [](const PageCheck& c) { return c.ok(); });
}

Theorem3Report verify_theorem3(const DgLie<PLocal>& L, int top, int r_max) {
  PbwAlgebra<PLocal> U(L, top);
  BssResult bu(U.complex(), r_max);
  BssResult bl(L.complex(top), r_max);
  auto inclusion = bss_of_morphism(lie_inclusion(U), bl, bu);
  const unsigned p = L.prime();
  const int W = bu.window();

  Theorem3Report report;
  report.window = W;
  for (int r = 1; r <= r_max; ++r) {
    PageAlgebra E(U, bu, r);
    PageCheck c;
    c.r = r;
    std::vector<Mat<Fp>> prim;
    for (int n = 0; n <= W; ++n) {
      prim.push_back(E.primitives(n));
      c.page_dims.push_back(E.dim(n));
      c.primitive_dims.push_back(static_cast<int>(prim.back().cols()));
    }

    for (int n = 1; n <= W; ++n)
      if (!in_span(prim[ix(n - 1)], Mat<Fp>(E.beta(n) * prim[ix(n)]), p)) {
        c.closed_under_beta = false;
        c.failures.push_back("beta^" + std::to_string(r) + " of a primitive in degree " + std::to_string(n) +
                             " is not primitive");
      }

    std::vector<int> generators;
    for (int n = 0; n <= W; ++n) {
      int ell = c.primitive_dims[ix(n)];
      if (n % static_cast<int>(p) == 0 && (n / static_cast<int>(p)) % 2 == 0 && n > 0) {
        const int m = n / static_cast<int>(p);
        const Mat<Fp>& base = prim[ix(m)];
        Mat<Fp> powers = with_prime<Fp>(zeros<Fp>(E.dim(n), base.cols()), p);
        for (Eigen::Index k = 0; k < base.cols(); ++k) powers.col(k) = E.power(m, base.col(k), static_cast<int>(p));
        ell -= rank(powers, p);
      }
      c.lie_dims.push_back(ell);
      for (int k = 0; k < ell; ++k) generators.push_back(n);
    }
    for (long v : pbw_hilbert_series(generators, W)) c.predicted_dims.push_back(static_cast<int>(v));
    for (int n = 0; n <= W; ++n)
      if (c.predicted_dims[ix(n)] != c.page_dims[ix(n)]) {
        c.hilbert_matches = false;
        c.failures.push_back("dim E^" + std::to_string(r) + "_" + std::to_string(n) + " = " +
                             std::to_string(c.page_dims[ix(n)]) + " but the Lie part predicts " +
                             std::to_string(c.predicted_dims[ix(n)]));
      }

    const auto& inc = inclusion[ix(r - 1)];
    for (int n = 1; n <= W; ++n)
      if (!in_span(prim[ix(n)], inc.block(n), p)) {
        c.image_primitive = false;
        c.failures.push_back("E^" + std::to_string(r) + "(L) -> E^" + std::to_string(r) +
                             "(UL) hits a non-primitive in degree " + std::to_string(n));
      }
    report.pages.push_back(std::move(c));
  }
  return report;
}

#define LBSS_INSTANTIATE(S)                                                                                      \
  template struct HopfMorphism<S>;                                                                               \
  template GammaAlgebra<S> dual_gamma(const PbwAlgebra<S>&, int);                                                \
  template Mat<S> psi(const PbwAlgebra<S>&, const GammaAlgebra<S>&, int);                                        \
  template GradedMap<S> gamma_dual(const GradedMap<S>&, const PbwAlgebra<S>&, const PbwAlgebra<S>&,              \
                                   const GammaAlgebra<S>&, const GammaAlgebra<S>&);                              \
  template std::optional<std::string> coalgebra_defect(const PbwAlgebra<S>&, const PbwAlgebra<S>&,               \
                                                       const GradedMap<S>&);                                     \
  template HopfMorphism<S> hopf_morphism(PbwAlgebra<S>, PbwAlgebra<S>, std::vector<Element<S>>);                 \
  template std::string outside_lie(const PbwAlgebra<S>&, const Vec<S>&, int);                                    \
  template CriterionVerdict is_lie_type(const HopfMorphism<S>&);                                                 \
  template GradedMap<S> extend_derivation(const PbwAlgebra<S>&, const std::vector<Element<S>>&, int);            \
  template CriterionVerdict differential_restricts_to_lie(const PbwAlgebra<S>&, const GradedMap<S>&);

LBSS_INSTANTIATE(PLocal)
LBSS_INSTANTIATE(Fp)

}  // namespace lbss
