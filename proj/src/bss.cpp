#include "lbss/bss.hpp"

#include <algorithm>
#include <numeric>

namespace lbss {

namespace {

std::size_t ix(int n) { return static_cast<std::size_t>(n); }

}  // namespace

int SpectralPage::dim(int n) const {
  if (n < 0 || n > window) return 0;
  return static_cast<int>(classes[ix(n)].size());
}

GradedBasis SpectralPage::basis() const {
  GradedBasis b(std::max(window, 0));
  for (int n = 0; n <= window; ++n)
    for (const auto& c : classes[ix(n)]) b.add(n, c.name);
  return b;
}

BssResult::BssResult(ChainComplex<PLocal> complex, int r_max)
    : complex_(std::move(complex)), dec_(decompose(complex_)), r_max_(r_max), window_(complex_.window()) {
  if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
  if (complex_.shift() != -1) throw std::invalid_argument("Bockstein pages need a chain complex (degree -1)");
  const unsigned p = complex_.prime();

  for (const auto& piece : dec_.pieces)
    if (piece.target_degree <= window_) max_exponent_ = std::max(max_exponent_, piece.exponent);

  for (int r = 1; r <= r_max; ++r) {
    SpectralPage page;
    page.r = r;
    page.window = window_;
    page.p = p;
    page.classes.resize(ix(window_ + 1));
    std::vector<std::vector<int>> live(ix(window_ + 1));
    for (int n = 0; n <= window_; ++n) {
      const auto& names = complex_.basis().names(n);
      for (int s = 0; s < complex_.basis().rank(n); ++s) {
        int k = slot_exponent(n, s);
        if (k != -1 && k < r) continue;
        Vec<PLocal> rep = dec_.basis[ix(n)].col(s);
        page.classes[ix(n)].push_back({render(rep, names), s, rep});
      }
      auto& cls = page.classes[ix(n)];
      std::sort(cls.begin(), cls.end(), [](const PageClass& a, const PageClass& b) {
        return a.name != b.name ? a.name < b.name : a.slot < b.slot;
      });
      for (const auto& c : cls) live[ix(n)].push_back(c.slot);
    }
    GradedBasis b = page.basis();
    page.beta = GradedMap<Fp>(b, b, -1, p);
    for (int n = 1; n <= window_; ++n) {
      Mat<Fp> m = with_prime<Fp>(zeros<Fp>(page.dim(n - 1), page.dim(n)), p);
      for (int i = 0; i < page.dim(n); ++i) {
        const auto& slot = dec_.slots[ix(n)][ix(page.classes[ix(n)][ix(i)].slot)];
        if (slot.role != BasisRole::Source) continue;
        const auto& piece = dec_.pieces[ix(slot.piece)];
        if (piece.exponent != r) continue;
        const auto& below = live[ix(n - 1)];
        auto j = std::find(below.begin(), below.end(), piece.target_slot) - below.begin();
        m(j, i) = Fp(1, p);
      }
      page.beta.set_block(n, m);
    }
    pages_.push_back(std::move(page));
    live_.push_back(std::move(live));
  }
}

const SpectralPage& BssResult::page(int r) const {
  if (r < 1 || r > r_max_)
    throw std::out_of_range("page " + std::to_string(r) + " not computed (have 1.." + std::to_string(r_max_) + ")");
  return pages_[ix(r - 1)];
}

const std::vector<int>& BssResult::live_slots(int r, int n) const {
  page(r);
  if (n < 0 || n > window_) throw std::out_of_range("degree " + std::to_string(n) + " outside the window");
  return live_[ix(r - 1)][ix(n)];
}

std::optional<int> BssResult::stable_page() const {
  if (stable_from() <= r_max_) return stable_from();
  return std::nullopt;
}

int BssResult::slot_exponent(int n, int slot) const {
  const auto& s = dec_.slots[ix(n)][ix(slot)];
  if (s.role == BasisRole::Free) return -1;
  return dec_.pieces[ix(s.piece)].exponent;
}

bool BssResult::survives(int r, int n, const Vec<PLocal>& c) const {
  Vec<PLocal> coords = dec_.basis_inv[ix(n)] * c;
  for (int s = 0; s < coords.rows(); ++s) {
    const auto& slot = dec_.slots[ix(n)][ix(s)];
    if (slot.role != BasisRole::Source || coords(s).is_zero()) continue;
    int k = dec_.pieces[ix(slot.piece)].exponent;
    if (k < r && coords(s).valuation() + k < r) return false;
  }
  return true;
}

Vec<Fp> BssResult::class_of(int r, int n, const Vec<PLocal>& c) const {
  if (!survives(r, n, c))
    throw std::domain_error("chain in degree " + std::to_string(n) + " does not survive to page " + std::to_string(r));
  Vec<PLocal> coords = dec_.basis_inv[ix(n)] * c;
  const auto& slots = live_slots(r, n);
  Vec<Fp> out(static_cast<Eigen::Index>(slots.size()));
  for (std::size_t i = 0; i < slots.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = coords(slots[i]).with_prime(prime()).reduce();
  return out;
}

BssResult bockstein_pages(const ChainComplex<PLocal>& c, int r_max) { return BssResult(c, r_max); }

std::optional<int> chain_map_defect(const GradedMap<PLocal>& f, const ChainComplex<PLocal>& source,
                                    const ChainComplex<PLocal>& target) {
  if (f.shift() != 0) return 0;
  const int top = std::min(source.top(), target.top());
  for (int n = 1; n <= top; ++n)
    if (target.d(n) * f.block(n) != f.block(n - 1) * source.d(n)) return n;
  return std::nullopt;
}

std::vector<GradedMap<Fp>> bss_of_morphism(const GradedMap<PLocal>& f, const BssResult& source,
                                           const BssResult& target) {
  if (auto bad = chain_map_defect(f, source.complex(), target.complex()))
    throw ComplexError("not a chain map: d f != f d in degree " + std::to_string(*bad));
  const unsigned p = source.prime();
  const int r_max = std::min(source.r_max(), target.r_max());
  const int window = std::min(source.window(), target.window());
  std::vector<GradedMap<Fp>> out;
  for (int r = 1; r <= r_max; ++r) {
    const auto& sp = source.page(r);
    const auto& tp = target.page(r);
    GradedMap<Fp> m(sp.basis(), tp.basis(), 0, p);
    for (int n = 0; n <= window; ++n) {
      Mat<Fp> block = with_prime<Fp>(zeros<Fp>(tp.dim(n), sp.dim(n)), p);
      for (int i = 0; i < sp.dim(n); ++i) {
        Vec<PLocal> image = f.block(n) * sp.classes[ix(n)][ix(i)].representative;
        block.col(i) = target.class_of(r, n, image);
      }
      m.set_block(n, block);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace lbss
