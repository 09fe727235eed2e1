#pragma once

// Exact coefficient rings: the p-local integers Z_(p) and the prime field F_p.
//
// Both scalar types carry the prime they live over. A prime of 0 marks a
// prime-agnostic integer literal (what Eigen produces for Scalar(0) and
// Scalar(1)); it adopts the prime of whatever it is combined with.

#include <Eigen/Core>
#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lbss {

/// Raised when a value leaves the ring it is supposed to live in.
class RingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kInfiniteValuation = INT_MAX;

bool is_odd_prime(unsigned long p);

class Fp;

/// Element of Z_(p): a reduced fraction whose denominator is prime to p.
class PLocal {
 public:
  PLocal() = default;
  PLocal(int v) : q_(v) {}
  PLocal(long v) : q_(v) {}
  PLocal(long v, unsigned prime);
  PLocal(const mpz_class& num, const mpz_class& den, unsigned prime);
  PLocal(mpq_class q, unsigned prime);

  /// Parses "a", "-a" or "a/b" in decimal.
  static PLocal parse(std::string_view text, unsigned prime);
  static PLocal power_of_prime(unsigned prime, int k);

  unsigned prime() const { return p_; }
  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  /// p-adic valuation; kInfiniteValuation for zero.
  int valuation() const;
  bool is_unit() const { return valuation() == 0; }
  /// u with *this == p^valuation * u. Requires a nonzero value.
  PLocal unit_part() const;
  Fp reduce() const;
  PLocal with_prime(unsigned prime) const { return PLocal(q_, prime); }

  /// Canonical text: "a" for integers, otherwise "a/b".
  std::string to_string() const;

  PLocal operator-() const;
  PLocal& operator+=(const PLocal& o);
  PLocal& operator-=(const PLocal& o);
  PLocal& operator*=(const PLocal& o);
  /// Exact division; throws RingError unless the quotient is p-integral.
  PLocal& operator/=(const PLocal& o);

  friend PLocal operator+(PLocal a, const PLocal& b) { return a += b; }
  friend PLocal operator-(PLocal a, const PLocal& b) { return a -= b; }
  friend PLocal operator*(PLocal a, const PLocal& b) { return a *= b; }
  friend PLocal operator/(PLocal a, const PLocal& b) { return a /= b; }
  friend bool operator==(const PLocal& a, const PLocal& b) { return a.q_ == b.q_; }
  friend bool operator!=(const PLocal& a, const PLocal& b) { return a.q_ != b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const PLocal& x);

 private:
  void adopt(unsigned other);

  mpq_class q_{0};
  unsigned p_ = 0;
};

/// Element of the prime field F_p.
class Fp {
 public:
  Fp() = default;
  Fp(int v) : v_(v) {}
  Fp(long v) : v_(v) {}
  Fp(long v, unsigned prime);

  unsigned prime() const { return p_; }
  /// Representative in [0, p) once the prime is known.
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  int valuation() const { return is_zero() ? kInfiniteValuation : 0; }
  bool is_unit() const { return !is_zero(); }
  Fp unit_part() const { return *this; }
  Fp inverse() const;
  /// Symmetric representative in (-p/2, p/2), used for display.
  std::int64_t centered() const;
  std::string to_string() const;

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& x);

 private:
  void adopt(unsigned other);

  std::int64_t v_ = 0;
  unsigned p_ = 0;
};

enum class Ring { LocalIntegers, PrimeField };

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<PLocal> {
  static constexpr Ring ring = Ring::LocalIntegers;
  static constexpr const char* name = "Z_(p)";
  static PLocal make(long v, unsigned p) { return PLocal(v, p); }
};

template <>
struct ScalarTraits<Fp> {
  static constexpr Ring ring = Ring::PrimeField;
  static constexpr const char* name = "F_p";
  static Fp make(long v, unsigned p) { return Fp(v, p); }
};

template <class S>
concept ExactScalar = requires { ScalarTraits<S>::ring; };

template <ExactScalar S>
S scalar(long v, unsigned p) {
  return ScalarTraits<S>::make(v, p);
}

/// Exact integer coefficient (e.g. a binomial or factorial ratio) as a scalar.
template <ExactScalar S>
S scalar(const mpz_class& v, unsigned p);

template <>
inline PLocal scalar<PLocal>(const mpz_class& v, unsigned p) {
  return PLocal(mpq_class(v), p);
}

template <>
inline Fp scalar<Fp>(const mpz_class& v, unsigned p) {
  mpz_class r = v % p;
  return Fp(r.get_si(), p);
}

inline Fp reduce(const PLocal& x) { return x.reduce(); }
inline Fp reduce(const Fp& x) { return x; }

inline int valuation(const PLocal& x) { return x.valuation(); }
inline int valuation(const Fp& x) { return x.valuation(); }

inline std::string to_string(const PLocal& x) { return x.to_string(); }
inline std::string to_string(const Fp& x) { return x.to_string(); }

/// Sign (-1)^k as a scalar.
template <ExactScalar S>
S koszul(long k, unsigned p) {
  return scalar<S>(k % 2 == 0 ? 1 : -1, p);
}

}  // namespace lbss

namespace Eigen {

template <>
struct NumTraits<lbss::PLocal> : GenericNumTraits<lbss::PLocal> {
  typedef lbss::PLocal Real;
  typedef lbss::PLocal NonInteger;
  typedef lbss::PLocal Literal;
  typedef lbss::PLocal Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lbss::Fp> : GenericNumTraits<lbss::Fp> {
  typedef lbss::Fp Real;
  typedef lbss::Fp NonInteger;
  typedef lbss::Fp Literal;
  typedef lbss::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lbss {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <ExactScalar S>
Mat<S> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Mat<S>::Constant(rows, cols, S(0));
}

template <ExactScalar S>
Vec<S> zero_vector(Eigen::Index n) {
  return Vec<S>::Constant(n, S(0));
}

template <ExactScalar S>
Mat<S> identity(Eigen::Index n, unsigned p) {
  Mat<S> m = zeros<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = scalar<S>(1, p);
  return m;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Entrywise reduction Z_(p) -> F_p.
template <class Derived>
Mat<Fp> reduce(const Eigen::MatrixBase<Derived>& m) {
  Mat<Fp> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = reduce(m(i, j));
  return out;
}

/// Entrywise product with an explicit prime attached (fixes literal zeros).
template <ExactScalar S, class Derived>
Mat<S> with_prime(const Eigen::MatrixBase<Derived>& m, unsigned p) {
  Mat<S> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j) * scalar<S>(1, p);
  return out;
}

}  // namespace lbss
