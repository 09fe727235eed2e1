#include "lbss/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbss {

MonomialBasis::MonomialBasis(std::vector<int> degrees, int top) : degrees_(std::move(degrees)), top_(top) {
  if (top < 0) throw std::invalid_argument("negative top degree");
  for (int d : degrees_)
    if (d < 1) throw std::invalid_argument("monomial generators need positive degrees");
  monomials_.resize(static_cast<std::size_t>(top + 1));
  const int m = generators();
  Monomial cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, int deg) -> void {
    if (i == m) {
      monomials_[static_cast<std::size_t>(deg)].push_back(cur);
      return;
    }
    int d = degrees_[static_cast<std::size_t>(i)];
    int max_k = is_odd(d) ? 1 : (top - deg) / d;
    for (int k = 0; k <= max_k && deg + k * d <= top; ++k) {
      cur[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, deg + k * d);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, 0);
  for (auto& ms : monomials_) {
    std::sort(ms.begin(), ms.end(), std::greater<>());
    for (std::size_t k = 0; k < ms.size(); ++k) index_[ms[k]] = static_cast<int>(k);
  }
}

int MonomialBasis::dim(int n) const {
  if (n < 0 || n > top_) return 0;
  return static_cast<int>(monomials_[static_cast<std::size_t>(n)].size());
}

const std::vector<Monomial>& MonomialBasis::monomials(int n) const {
  static const std::vector<Monomial> empty;
  if (n < 0 || n > top_) return empty;
  return monomials_[static_cast<std::size_t>(n)];
}

int MonomialBasis::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * degrees_[i];
  return d;
}

int MonomialBasis::length(const Monomial& m) const {
  int l = 0;
  for (int k : m) l += k;
  return l;
}

int MonomialBasis::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("monomial outside the truncated basis");
  return it->second;
}

Monomial MonomialBasis::generator(int i) const {
  Monomial m = unit();
  m[static_cast<std::size_t>(i)] = 1;
  return m;
}

std::vector<int> MonomialBasis::letters(const Monomial& m) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int k = 0; k < m[i]; ++k) out.push_back(static_cast<int>(i));
  return out;
}

int permutation_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  // Bubble sort the target order back to identity, counting odd-odd swaps.
  std::vector<int> a = order;
  int parity = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j] > a[j + 1]) {
        if (is_odd(degrees[static_cast<std::size_t>(a[j])]) && is_odd(degrees[static_cast<std::size_t>(a[j + 1])]))
          parity ^= 1;
        std::swap(a[j], a[j + 1]);
      }
  return parity ? -1 : 1;
}

int product_sign(const std::vector<int>& degrees, const Monomial& a, const Monomial& b) {
  std::vector<int> item_degrees, items_a, items_b;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) items_a.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) items_b.push_back(static_cast<int>(i));
  for (int i : items_a) item_degrees.push_back(a[static_cast<std::size_t>(i)] * degrees[static_cast<std::size_t>(i)]);
  for (int i : items_b) item_degrees.push_back(b[static_cast<std::size_t>(i)] * degrees[static_cast<std::size_t>(i)]);
  std::vector<int> order;
  std::size_t pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (pa < items_a.size() && items_a[pa] == static_cast<int>(i)) order.push_back(static_cast<int>(pa++));
    if (pb < items_b.size() && items_b[pb] == static_cast<int>(i))
      order.push_back(static_cast<int>(items_a.size() + pb++));
  }
  return permutation_sign(item_degrees, order);
}

}  // namespace lbss
