#include "lbss/scalar.hpp"

#include <ostream>

namespace lbss {

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

unsigned merge_primes(unsigned a, unsigned b) {
  if (a == 0) return b;
  if (b != 0 && a != b) throw RingError("scalars over different primes combined");
  return a;
}

int mpz_valuation(mpz_class n, unsigned p) {
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::int64_t mod(std::int64_t v, unsigned p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

// ---------------------------------------------------------------- PLocal

PLocal::PLocal(long v, unsigned prime) : q_(v), p_(prime) {}

PLocal::PLocal(const mpz_class& num, const mpz_class& den, unsigned prime)
    : PLocal(mpq_class(num, den), prime) {}

PLocal::PLocal(mpq_class q, unsigned prime) : q_(std::move(q)), p_(prime) {
  q_.canonicalize();
  if (p_ != 0 && mpz_divisible_ui_p(q_.get_den_mpz_t(), p_))
    throw RingError("denominator of " + q_.get_str() + " is divisible by " + std::to_string(p_));
}

PLocal PLocal::parse(std::string_view text, unsigned prime) {
  std::string s(text);
  if (s.empty()) throw RingError("empty coefficient");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw RingError("malformed coefficient '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw RingError("zero denominator in '" + s + "'");
  return PLocal(mpz_class(num), d, prime);
}

PLocal PLocal::power_of_prime(unsigned prime, int k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), prime, static_cast<unsigned long>(k));
  return PLocal(mpq_class(v), prime);
}

void PLocal::adopt(unsigned other) { p_ = merge_primes(p_, other); }

int PLocal::valuation() const {
  if (is_zero()) return kInfiniteValuation;
  if (p_ == 0) throw RingError("valuation of a prime-agnostic literal");
  return mpz_valuation(q_.get_num(), p_);
}

PLocal PLocal::unit_part() const {
  int v = valuation();
  if (v == kInfiniteValuation) throw RingError("unit part of zero");
  mpz_class num = q_.get_num();
  for (int i = 0; i < v; ++i) mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p_);
  return PLocal(num, q_.get_den(), p_);
}

Fp PLocal::reduce() const {
  if (p_ == 0) {
    if (q_.get_den() != 1)
      throw RingError("cannot reduce a fraction without a prime");
    // Literal integers reduce lazily once combined with a prime.
    return Fp(q_.get_num().get_si());
  }
  mpz_class n = q_.get_num() % p_;
  mpz_class d = q_.get_den() % p_;
  Fp num(n.get_si(), p_);
  Fp den(d.get_si(), p_);
  return num / den;
}

std::string PLocal::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

PLocal PLocal::operator-() const {
  PLocal r = *this;
  r.q_ = -r.q_;
  return r;
}

PLocal& PLocal::operator+=(const PLocal& o) {
  adopt(o.p_);
  q_ += o.q_;
  return *this;
}

PLocal& PLocal::operator-=(const PLocal& o) {
  adopt(o.p_);
  q_ -= o.q_;
  return *this;
}

PLocal& PLocal::operator*=(const PLocal& o) {
  adopt(o.p_);
  q_ *= o.q_;
  return *this;
}

PLocal& PLocal::operator/=(const PLocal& o) {
  adopt(o.p_);
  if (o.is_zero()) throw RingError("division by zero");
  if (p_ != 0 && !is_zero() && valuation() < o.valuation())
    throw RingError("quotient " + to_string() + " / " + o.to_string() + " is not p-integral");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const PLocal& x) { return os << x.to_string(); }

// ---------------------------------------------------------------- Fp

Fp::Fp(long v, unsigned prime) : v_(mod(v, prime)), p_(prime) {
  if (prime == 0) throw RingError("F_p element needs a prime");
}

void Fp::adopt(unsigned other) {
  unsigned merged = merge_primes(p_, other);
  if (merged != p_) {
    p_ = merged;
    v_ = mod(v_, p_);
  }
}

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw RingError("inverse of a prime-agnostic literal");
  }
  if (v_ == 0) throw RingError("division by zero in F_p");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

std::int64_t Fp::centered() const {
  if (p_ == 0) return v_;
  return v_ > static_cast<std::int64_t>(p_) / 2 ? v_ - p_ : v_;
}

std::string Fp::to_string() const { return std::to_string(centered()); }

Fp Fp::operator-() const {
  Fp r = *this;
  r.v_ = p_ == 0 ? -v_ : mod(-v_, p_);
  return r;
}

Fp& Fp::operator+=(const Fp& o) {
  Fp other = o;
  adopt(o.p_);
  other.adopt(p_);
  v_ = p_ == 0 ? v_ + other.v_ : mod(v_ + other.v_, p_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
  Fp other = o;
  adopt(o.p_);
  other.adopt(p_);
  v_ = p_ == 0 ? v_ * other.v_ : mod(v_ * other.v_, p_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  Fp other = o;
  other.adopt(p_);
  adopt(other.p_);
  return *this *= other.inverse();
}

bool operator==(const Fp& a, const Fp& b) {
  unsigned p = merge_primes(a.p_, b.p_);
  if (p == 0) return a.v_ == b.v_;
  return mod(a.v_, p) == mod(b.v_, p);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.to_string(); }

}  // namespace lbss
