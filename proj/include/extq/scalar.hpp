#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace extq {

/// Thrown on contract violations of the public API (maps to exit code 64 in the CLI).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational scalar.  All arithmetic in the system is exact.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw UsageError("division by zero scalar");
  return Rational(1) / x;
}

/// Prime field element with a runtime modulus.  A default-constructed value is
/// the zero of an unspecified field (modulus 0); it combines with any modulus.
/// Nonzero values always carry their modulus.
class Fp {
 public:
  Fp() = default;
  Fp(long long v, uint32_t p) : p_(p) {
    if (p < 2) throw UsageError("prime field modulus must be >= 2");
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<uint32_t>(r);
    if (v_ == 0) p_ = 0;
  }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  friend bool is_zero(const Fp& x) { return x.v_ == 0; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp operator-() const {
    if (v_ == 0) return Fp();
    Fp r;
    r.p_ = p_;
    r.v_ = p_ - v_;
    return r;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    uint32_t p = common_modulus(a, b);
    if (p == 0) return Fp();
    return from_raw((uint64_t(a.v_) + b.v_) % p, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    if (a.v_ == 0 || b.v_ == 0) return Fp();
    uint32_t p = common_modulus(a, b);
    return from_raw((uint64_t(a.v_) * b.v_) % p, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend Fp inverse(const Fp& x) {
    if (x.v_ == 0) throw UsageError("division by zero scalar");
    // extended Euclid
    int64_t a = x.v_, m = x.p_, u = 1, w = 0;
    while (a != 0) {
      int64_t q = m / a;
      m -= q * a;
      std::swap(a, m);
      w -= q * u;
      std::swap(u, w);
    }
    if (w < 0) w += x.p_;
    return from_raw(static_cast<uint32_t>(w), x.p_);
  }

 private:
  static uint32_t common_modulus(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw UsageError("mixed prime field moduli");
    return a.p_;
  }
  static Fp from_raw(uint64_t v, uint32_t p) {
    Fp r;
    if (v != 0) {
      r.v_ = static_cast<uint32_t>(v);
      r.p_ = p;
    }
    return r;
  }

  uint32_t v_ = 0;
  uint32_t p_ = 0;
};

// redeclared at namespace scope so qualified extq:: calls find them
bool is_zero(const Fp& x);
Fp inverse(const Fp& x);

constexpr uint32_t kDefaultPrime = 32003;

/// Scalar factory carrying whatever runtime data the field needs (the modulus
/// for F_p, nothing for the rationals).
template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
  Rational from_long(long long v) const { return Rational(static_cast<long>(v)); }
  Rational one() const { return Rational(1); }
  Rational zero() const { return Rational(0); }
  static std::string name() { return "QQ"; }
};

template <>
struct FieldCtx<Fp> {
  uint32_t p = kDefaultPrime;
  Fp from_long(long long v) const { return Fp(v, p); }
  Fp one() const { return Fp(1, p); }
  Fp zero() const { return Fp(); }
  std::string name() const { return "F" + std::to_string(p); }
};

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/// Image of a rational number in the target field.  Throws when the
/// denominator vanishes there.
template <class K>
K convert_scalar(const Rational& r, FieldCtx<K> ctx) {
  if constexpr (std::is_same_v<K, Rational>) {
    return r;
  } else {
    Rational c = r;
    c.canonicalize();
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), ctx.p);
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), ctx.p);
    if (den == 0) throw UsageError("denominator divisible by the field characteristic");
    return Fp(static_cast<long long>(num), ctx.p) /
           Fp(static_cast<long long>(den), ctx.p);
  }
}

/// Multiply by a sign coming from monomial arithmetic.
template <class K>
K apply_sign(K c, int sign) {
  return sign < 0 ? K(-c) : c;
}

}  // namespace extq
