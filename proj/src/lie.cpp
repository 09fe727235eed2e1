#include "lbss/lie.hpp"

#include <algorithm>
#include <sstream>

namespace lbss {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

bool odd(int d) { return d % 2 != 0; }

template <ExactScalar S>
S half(unsigned p) {
  return scalar<S>(1, p) / scalar<S>(2, p);
}

template <ExactScalar S>
S binomial(int n, int k, unsigned p) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return scalar<S>(b, p);
}

}  // namespace

// ---------------------------------------------------------------- DgLie

template <ExactScalar S>
int DgLie<S>::add_generator(std::string name, int degree) {
  if (index_of(name) >= 0) throw std::invalid_argument("duplicate generator " + name);
  gens_.push_back({std::move(name), degree});
  // Resize stored vectors to the new basis size.
  for (auto& [k, v] : bracket_) v.conservativeResize(size()), v(size() - 1) = scalar<S>(0, p_);
  for (auto& [k, v] : d_) v.conservativeResize(size()), v(size() - 1) = scalar<S>(0, p_);
  return size() - 1;
}

template <ExactScalar S>
int DgLie<S>::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[ix(i)].name == name) return i;
  return -1;
}

template <ExactScalar S>
void DgLie<S>::set_bracket(int i, int j, Vec<S> value) {
  if (value.rows() != size()) throw std::invalid_argument("bracket value has wrong length");
  bracket_[{i, j}] = std::move(value);
}

template <ExactScalar S>
void DgLie<S>::set_differential(int i, Vec<S> value) {
  if (value.rows() != size()) throw std::invalid_argument("differential value has wrong length");
  d_[i] = std::move(value);
}

template <ExactScalar S>
Vec<S> DgLie<S>::unit_vector(int i) const {
  Vec<S> v = with_prime<S>(zero_vector<S>(size()), p_);
  v(i) = scalar<S>(1, p_);
  return v;
}

template <ExactScalar S>
Vec<S> DgLie<S>::bracket(int i, int j) const {
  auto it = bracket_.find({i, j});
  if (it != bracket_.end()) return it->second;
  return with_prime<S>(zero_vector<S>(size()), p_);
}

template <ExactScalar S>
Vec<S> DgLie<S>::differential(int i) const {
  auto it = d_.find(i);
  if (it != d_.end()) return it->second;
  return with_prime<S>(zero_vector<S>(size()), p_);
}

template <ExactScalar S>
Vec<S> DgLie<S>::bracket(const Vec<S>& a, const Vec<S>& b) const {
  Vec<S> out = with_prime<S>(zero_vector<S>(size()), p_);
  for (const auto& [key, v] : bracket_) {
    const S& ca = a(key.first);
    const S& cb = b(key.second);
    if (ca.is_zero() || cb.is_zero()) continue;
    out += (ca * cb) * v;
  }
  return out;
}

template <ExactScalar S>
Vec<S> DgLie<S>::differential(const Vec<S>& a) const {
  Vec<S> out = with_prime<S>(zero_vector<S>(size()), p_);
  for (const auto& [i, v] : d_)
    if (!a(i).is_zero()) out += a(i) * v;
  return out;
}

template <ExactScalar S>
bool DgLie<S>::is_abelian() const {
  for (const auto& [k, v] : bracket_)
    if (!is_zero(v)) return false;
  return true;
}

template <ExactScalar S>
void DgLie<S>::complete_antisymmetry() {
  std::vector<std::pair<std::pair<int, int>, Vec<S>>> missing;
  for (const auto& [key, v] : bracket_) {
    auto [i, j] = key;
    if (bracket_.count({j, i})) continue;
    S sign = -koszul<S>(static_cast<long>(degree(i)) * degree(j), p_);
    missing.push_back({{j, i}, Vec<S>(sign * v)});
  }
  for (auto& [k, v] : missing) bracket_[k] = std::move(v);
}

template <ExactScalar S>
GradedBasis DgLie<S>::basis(int top) const {
  GradedBasis b(top);
  for (const auto& g : gens_)
    if (g.degree <= top) b.add(g.degree, g.name);
  return b;
}

template <ExactScalar S>
ChainComplex<S> DgLie<S>::complex(int top) const {
  GradedBasis b = basis(top);
  std::vector<std::vector<int>> by_degree(ix(top + 1));
  for (int i = 0; i < size(); ++i)
    if (degree(i) >= 0 && degree(i) <= top) by_degree[ix(degree(i))].push_back(i);
  GradedMap<S> d(b, b, -1, p_);
  for (int n = 1; n <= top; ++n) {
    Mat<S> m = with_prime<S>(zeros<S>(b.rank(n - 1), b.rank(n)), p_);
    for (std::size_t c = 0; c < by_degree[ix(n)].size(); ++c) {
      Vec<S> v = differential(by_degree[ix(n)][c]);
      for (std::size_t r = 0; r < by_degree[ix(n - 1)].size(); ++r)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v(by_degree[ix(n - 1)][r]);
    }
    d.set_block(n, m);
  }
  return ChainComplex<S>(b, d);
}

DgLie<Fp> reduce(const DgLie<PLocal>& L) {
  DgLie<Fp> out(L.prime());
  for (int i = 0; i < L.size(); ++i) out.add_generator(L.generator(i).name, L.degree(i));
  auto red = [&](const Vec<PLocal>& v) { return Vec<Fp>(with_prime<Fp>(reduce(v), L.prime())); };
  for (int i = 0; i < L.size(); ++i) {
    out.set_differential(i, red(L.differential(i)));
    for (int j = 0; j < L.size(); ++j)
      if (L.has_bracket(i, j)) out.set_bracket(i, j, red(L.bracket(i, j)));
  }
  return out;
}

template <ExactScalar S>
ValidationReport validate(const DgLie<S>& L) {
  ValidationReport report;
  const unsigned p = L.prime();
  const int m = L.size();
  auto nm = [&](int i) { return L.generator(i).name; };
  auto add = [&](std::string what, std::string witness) { report.violations.push_back({std::move(what), std::move(witness)}); };
  auto sign = [&](long e) { return koszul<S>(e, p); };
  auto names = [&]() {
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) out.push_back(nm(i));
    return out;
  }();

  for (int i = 0; i < m; ++i)
    if (L.degree(i) < 1) add("connectivity", nm(i) + " has degree " + std::to_string(L.degree(i)));

  auto homogeneous = [&](const Vec<S>& v, int deg) {
    for (int k = 0; k < m; ++k)
      if (!v(k).is_zero() && L.degree(k) != deg) return false;
    return true;
  };
  for (int i = 0; i < m; ++i) {
    if (!homogeneous(L.differential(i), L.degree(i) - 1))
      add("differential degree mismatch", "d" + nm(i) + " = " + render(L.differential(i), names));
    for (int j = 0; j < m; ++j)
      if (!homogeneous(L.bracket(i, j), L.degree(i) + L.degree(j)))
        add("bracket degree mismatch", "[" + nm(i) + "," + nm(j) + "] = " + render(L.bracket(i, j), names));
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec<S> lhs = L.bracket(i, j);
      Vec<S> rhs = -sign(static_cast<long>(L.degree(i)) * L.degree(j)) * L.bracket(j, i);
      if (lhs != rhs) add("graded antisymmetry", "[" + nm(i) + "," + nm(j) + "] != -(-1)^{|x||y|}[" + nm(j) + "," + nm(i) + "]");
    }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Vec<S> x = L.unit_vector(i), y = L.unit_vector(j), z = L.unit_vector(k);
        int a = L.degree(i), b = L.degree(j), c = L.degree(k);
        Vec<S> sum = sign(static_cast<long>(a) * c) * L.bracket(x, L.bracket(y, z)) +
                     sign(static_cast<long>(b) * a) * L.bracket(y, L.bracket(z, x)) +
                     sign(static_cast<long>(c) * b) * L.bracket(z, L.bracket(x, y));
        if (!is_zero(sum)) add("graded Jacobi identity", "(" + nm(i) + ", " + nm(j) + ", " + nm(k) + ")");
      }

  for (int i = 0; i < m; ++i)
    if (odd(L.degree(i))) {
      Vec<S> x = L.unit_vector(i);
      if (!is_zero(L.bracket(x, L.bracket(x, x)))) add("[x,[x,x]] = 0 for odd x", nm(i));
    }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec<S> x = L.unit_vector(i), y = L.unit_vector(j);
      Vec<S> lhs = L.differential(L.bracket(x, y));
      Vec<S> rhs = L.bracket(L.differential(x), y) + sign(L.degree(i)) * L.bracket(x, L.differential(y));
      if (lhs != rhs) add("d is a derivation", "d[" + nm(i) + "," + nm(j) + "]");
    }

  for (int i = 0; i < m; ++i)
    if (!is_zero(L.differential(L.differential(L.unit_vector(i))))) add("dd = 0", "dd" + nm(i));
  return report;
}

// ---------------------------------------------------------------- PbwAlgebra

template <ExactScalar S>
PbwAlgebra<S>::PbwAlgebra(DgLie<S> L, int top) : L_(std::move(L)), top_(top), basis_(top) {
  std::vector<int> degrees;
  for (int i = 0; i < L_.size(); ++i) {
    if (L_.degree(i) < 1) throw std::invalid_argument("UL needs a connected Lie algebra");
    if (L_.degree(i) > top) truncated_ = true;
    degrees.push_back(L_.degree(i));
  }
  mb_ = MonomialBasis(degrees, top);
  for (int n = 0; n <= top; ++n)
    for (const auto& m : mb_.monomials(n)) basis_.add(n, name(m));
}

template <ExactScalar S>
std::pair<int, int> PbwAlgebra<S>::locate(const Monomial& m) const {
  if (!mb_.contains(m)) throw std::out_of_range("monomial " + name(m) + " is not in the truncated basis");
  return {degree(m), mb_.index(m)};
}

template <ExactScalar S>
std::string PbwAlgebra<S>::name(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < L_.size(); ++i) {
    if (m[ix(i)] == 0) continue;
    if (!out.empty()) out += ".";
    out += L_.generator(i).name;
    if (m[ix(i)] > 1) out += "^" + std::to_string(m[ix(i)]);
  }
  return out.empty() ? "1" : out;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::one() const {
  Element<S> e;
  e[unit()] = scalar<S>(1, prime());
  return e;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::from_lie(const Vec<S>& v) const {
  Element<S> e;
  for (int i = 0; i < L_.size(); ++i) {
    if (v(i).is_zero() || L_.degree(i) > top_) continue;
    Monomial m = unit();
    m[ix(i)] = 1;
    add_to(e, m, v(i));
  }
  return e;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::element(int n, const Vec<S>& c) const {
  Element<S> e;
  const auto& ms = monomials(n);
  for (std::size_t k = 0; k < ms.size(); ++k) add_to(e, ms[k], c(static_cast<Eigen::Index>(k)));
  return e;
}

template <ExactScalar S>
Vec<S> PbwAlgebra<S>::coords(const Element<S>& u, int n) const {
  Vec<S> v = with_prime<S>(zero_vector<S>(dim(n)), prime());
  for (const auto& [m, c] : u) {
    if (degree(m) != n) throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(n));
    v(locate(m).second) = c;
  }
  return v;
}

template <ExactScalar S>
const Element<S>& PbwAlgebra<S>::times_generator(const Monomial& m, int j) const {
  auto key = std::make_pair(m, j);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Element<S> out;
  const unsigned p = prime();
  if (degree(m) + L_.degree(j) <= top_) {
    int t = -1;
    for (int i = L_.size() - 1; i > j; --i)
      if (m[ix(i)] > 0) {
        t = i;
        break;
      }
    if (t < 0) {
      if (odd(L_.degree(j)) && m[ix(j)] == 1) {
        // m = m' x_j and x_j x_j = [x_j, x_j]/2.
        Monomial mp = m;
        mp[ix(j)] = 0;
        Element<S> base;
        base[mp] = scalar<S>(1, p);
        out = times_lie(base, Vec<S>(half<S>(p) * L_.bracket(j, j)));
      } else {
        Monomial mm = m;
        ++mm[ix(j)];
        out[mm] = scalar<S>(1, p);
      }
    } else {
      // m = m' x_t with t > j: m' x_t x_j = +-(m' x_j) x_t + m' [x_t, x_j].
      Monomial mp = m;
      --mp[ix(t)];
      S sign = koszul<S>(static_cast<long>(L_.degree(t)) * L_.degree(j), p);
      Element<S> left = times_generator(mp, j);
      for (const auto& [mono, c] : left)
        for (const auto& [mono2, c2] : times_generator(mono, t)) add_to(out, mono2, S(sign * c * c2));
      Element<S> base;
      base[mp] = scalar<S>(1, p);
      for (const auto& [mono, c] : times_lie(base, L_.bracket(t, j))) add_to(out, mono, c);
    }
  }
  return cache_.emplace(std::move(key), std::move(out)).first->second;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::times_lie(const Element<S>& a, const Vec<S>& v) const {
  Element<S> out;
  for (int l = 0; l < L_.size(); ++l) {
    if (v(l).is_zero()) continue;
    for (const auto& [m, c] : a)
      for (const auto& [m2, c2] : times_generator(m, l)) add_to(out, m2, S(v(l) * c * c2));
  }
  return out;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::multiply(const Element<S>& a, const Element<S>& b) const {
  Element<S> out;
  for (const auto& [mb, cb] : b) {
    Element<S> cur;
    for (const auto& [ma, ca] : a) add_to(cur, ma, S(ca * cb));
    for (int i = 0; i < L_.size() && !cur.empty(); ++i)
      for (int k = 0; k < mb[ix(i)]; ++k) {
        Element<S> next;
        for (const auto& [m, c] : cur)
          for (const auto& [m2, c2] : times_generator(m, i)) add_to(next, m2, S(c * c2));
        cur = std::move(next);
      }
    for (const auto& [m, c] : cur) add_to(out, m, c);
  }
  return out;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::power(const Element<S>& a, int k) const {
  Element<S> out = one();
  for (int i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::commutator(const Element<S>& a, int deg_a, const Element<S>& b, int deg_b) const {
  Element<S> out = multiply(a, b);
  S sign = -koszul<S>(static_cast<long>(deg_a) * deg_b, prime());
  for (const auto& [m, c] : multiply(b, a)) add_to(out, m, S(sign * c));
  return out;
}

template <ExactScalar S>
Element<S> PbwAlgebra<S>::differential(const Element<S>& u) const {
  Element<S> out;
  const unsigned p = prime();
  for (const auto& [m, c] : u) {
    std::vector<int> seq;
    for (int i = 0; i < L_.size(); ++i)
      for (int k = 0; k < m[ix(i)]; ++k) seq.push_back(i);
    Monomial prefix = unit();
    int prefix_degree = 0;
    for (std::size_t l = 0; l < seq.size(); ++l) {
      Vec<S> dg = L_.differential(seq[l]);
      if (!is_zero(dg)) {
        Element<S> cur;
        cur[prefix] = koszul<S>(prefix_degree, p) * c;
        cur = times_lie(cur, dg);
        for (std::size_t r = l + 1; r < seq.size() && !cur.empty(); ++r) {
          Element<S> next;
          for (const auto& [mm, cc] : cur)
            for (const auto& [m2, c2] : times_generator(mm, seq[r])) add_to(next, m2, S(cc * c2));
          cur = std::move(next);
        }
        for (const auto& [mm, cc] : cur) add_to(out, mm, cc);
      }
      ++prefix[ix(seq[l])];
      prefix_degree += L_.degree(seq[l]);
    }
  }
  return out;
}

template <ExactScalar S>
Mat<S> PbwAlgebra<S>::product_matrix(int a, int b) const {
  const int n = a + b;
  Mat<S> out = with_prime<S>(zeros<S>(dim(n), static_cast<Eigen::Index>(dim(a)) * dim(b)), prime());
  if (n > top_) return out;
  for (int i = 0; i < dim(a); ++i)
    for (int j = 0; j < dim(b); ++j) {
      Element<S> x, y;
      x[monomials(a)[ix(i)]] = scalar<S>(1, prime());
      y[monomials(b)[ix(j)]] = scalar<S>(1, prime());
      out.col(static_cast<Eigen::Index>(i) * dim(b) + j) = coords(multiply(x, y), n);
    }
  return out;
}

template <ExactScalar S>
Mat<S> PbwAlgebra<S>::differential_matrix(int n) const {
  Mat<S> out = with_prime<S>(zeros<S>(dim(n - 1), dim(n)), prime());
  if (n < 1 || n > top_) return out;
  for (int k = 0; k < dim(n); ++k) {
    Element<S> x;
    x[monomials(n)[ix(k)]] = scalar<S>(1, prime());
    out.col(k) = coords(differential(x), n - 1);
  }
  return out;
}

template <ExactScalar S>
ChainComplex<S> PbwAlgebra<S>::complex() const {
  GradedMap<S> d(basis_, basis_, -1, prime());
  for (int n = 1; n <= top_; ++n) d.set_block(n, differential_matrix(n));
  return ChainComplex<S>(basis_, d);
}

template <ExactScalar S>
std::vector<MatrixEntry<S>> PbwAlgebra<S>::coproduct_entries(int a, int b) const {
  const int n = a + b;
  const unsigned p = prime();
  const int m = L_.size();
  std::vector<MatrixEntry<S>> out;
  if (a < 0 || b < 0 || n > top_) return out;
  for (int col = 0; col < dim(n); ++col) {
    const Monomial& mono = monomials(n)[ix(col)];
    Monomial left = unit();
    auto rec = [&](auto&& self, int i, int deg_left) -> void {
      if (deg_left > a) return;
      if (i == m) {
        if (deg_left != a) return;
        Monomial right = mono;
        S coeff = scalar<S>(1, p);
        long parity = 0;
        for (int s = 0; s < m; ++s) {
          right[ix(s)] -= left[ix(s)];
          coeff *= binomial<S>(mono[ix(s)], left[ix(s)], p);
        }
        // Right part of factor s passes the left parts of later factors t.
        for (int s = 0; s < m; ++s)
          for (int t = s + 1; t < m; ++t)
            parity += static_cast<long>(right[ix(s)] * L_.degree(s)) * (left[ix(t)] * L_.degree(t));
        if (coeff.is_zero()) return;
        Eigen::Index row = static_cast<Eigen::Index>(locate(left).second) * dim(b) + locate(right).second;
        out.push_back({row, col, koszul<S>(parity, p) * coeff});
        return;
      }
      for (int k = 0; k <= mono[ix(i)]; ++k) {
        left[ix(i)] = k;
        self(self, i + 1, deg_left + k * L_.degree(i));
      }
      left[ix(i)] = 0;
    };
    rec(rec, 0, 0);
  }
  return out;
}

template <ExactScalar S>
Mat<S> PbwAlgebra<S>::coproduct(int a, int b) const {
  Mat<S> out = with_prime<S>(zeros<S>(static_cast<Eigen::Index>(dim(a)) * dim(b), dim(a + b)), prime());
  for (const auto& e : coproduct_entries(a, b)) out(e.row, e.col) += e.value;
  return out;
}

template <ExactScalar S>
Mat<S> PbwAlgebra<S>::reduced_coproduct(int n) const {
  std::vector<Mat<S>> parts;
  Eigen::Index rows = 0;
  for (int a = 1; a < n; ++a) {
    if (dim(a) == 0 || dim(n - a) == 0) continue;
    parts.push_back(coproduct(a, n - a));
    rows += parts.back().rows();
  }
  Mat<S> out(rows, dim(n));
  Eigen::Index r = 0;
  for (const auto& part : parts) {
    out.middleRows(r, part.rows()) = part;
    r += part.rows();
  }
  return out;
}

template <ExactScalar S>
Mat<S> PbwAlgebra<S>::primitives(int n) const {
  if (n <= 0 || n > top_) return zeros<S>(dim(n), 0);
  Mat<S> rc = reduced_coproduct(n);
  if (rc.rows() == 0) return identity<S>(dim(n), prime());
  return kernel_basis<S>(independent_rows<S>(rc, prime()), prime());
}

template <ExactScalar S>
Mat<S> PbwAlgebra<S>::lie_part(int n) const {
  std::vector<int> idx;
  for (int i = 0; i < L_.size(); ++i)
    if (L_.degree(i) == n) idx.push_back(i);
  Mat<S> out = with_prime<S>(zeros<S>(dim(n), static_cast<Eigen::Index>(idx.size())), prime());
  if (n < 1 || n > top_) return out;
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = coords(generator(idx[k]), n);
  return out;
}

template <ExactScalar S>
GradedMap<S> extend_algebra_map(const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                                const std::vector<Element<S>>& images) {
  const auto& L = source.lie();
  if (static_cast<int>(images.size()) != L.size()) throw std::invalid_argument("one image per generator required");
  for (int i = 0; i < L.size(); ++i)
    for (const auto& [m, c] : images[ix(i)])
      if (target.degree(m) != L.degree(i))
        throw std::invalid_argument("image of " + L.generator(i).name + " is not homogeneous of degree " +
                                    std::to_string(L.degree(i)));
  const int top = std::min(source.top(), target.top());
  GradedBasis src_basis = source.basis(), tgt_basis = target.basis();
  GradedMap<S> out(src_basis, tgt_basis, 0, source.prime());
  for (int n = 0; n <= top; ++n) {
    Mat<S> block = with_prime<S>(zeros<S>(target.dim(n), source.dim(n)), source.prime());
    for (int k = 0; k < source.dim(n); ++k) {
      const Monomial& m = source.monomials(n)[ix(k)];
      Element<S> img = target.one();
      for (int i = 0; i < L.size(); ++i)
        for (int e = 0; e < m[ix(i)]; ++e) img = target.multiply(img, images[ix(i)]);
      block.col(k) = target.coords(img, n);
    }
    out.set_block(n, block);
  }
  return out;
}

template <ExactScalar S>
std::optional<std::string> relation_defect(const PbwAlgebra<S>& source, const PbwAlgebra<S>& target,
                                           const std::vector<Element<S>>& images) {
  const auto& L = source.lie();
  for (int i = 0; i < L.size(); ++i)
    for (int j = i; j < L.size(); ++j) {
      if (L.degree(i) + L.degree(j) > target.top()) continue;
      Element<S> lhs = target.commutator(images[ix(i)], L.degree(i), images[ix(j)], L.degree(j));
      Vec<S> br = L.bracket(i, j);
      for (int k = 0; k < L.size(); ++k) {
        if (br(k).is_zero()) continue;
        for (const auto& [m, c] : images[ix(k)]) add_to(lhs, m, S(-br(k) * c));
      }
      if (!lhs.empty())
        return "[" + L.generator(i).name + "," + L.generator(j).name + "] is not sent to the commutator of images";
    }
  return std::nullopt;
}

std::vector<long> pbw_hilbert_series(const std::vector<int>& degrees, int top) {
  std::vector<long> h(ix(top + 1), 0);
  h[0] = 1;
  for (int d : degrees) {
    if (d > top) continue;
    if (odd(d)) {
      for (int n = top; n >= d; --n) h[ix(n)] += h[ix(n - d)];
    } else {
      for (int n = d; n <= top; ++n) h[ix(n)] += h[ix(n - d)];
    }
  }
  return h;
}

template class DgLie<PLocal>;
template class DgLie<Fp>;
template class PbwAlgebra<PLocal>;
template class PbwAlgebra<Fp>;
template ValidationReport validate(const DgLie<PLocal>&);
template ValidationReport validate(const DgLie<Fp>&);
template GradedMap<PLocal> extend_algebra_map(const PbwAlgebra<PLocal>&, const PbwAlgebra<PLocal>&,
                                              const std::vector<Element<PLocal>>&);
template GradedMap<Fp> extend_algebra_map(const PbwAlgebra<Fp>&, const PbwAlgebra<Fp>&,
                                          const std::vector<Element<Fp>>&);
template std::optional<std::string> relation_defect(const PbwAlgebra<PLocal>&, const PbwAlgebra<PLocal>&,
                                                    const std::vector<Element<PLocal>>&);
template std::optional<std::string> relation_defect(const PbwAlgebra<Fp>&, const PbwAlgebra<Fp>&,
                                                    const std::vector<Element<Fp>>&);

}  // namespace lbss
