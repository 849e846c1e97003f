#pragma once

// Exact signed fractions backed by GMP. Every quantity in the library (the
// constraint parameters x and y, reach levels z, and vertex weights) is a
// Rational; nothing in the math core touches floating point.

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace phipsi {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(unsigned long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses `[+-]digits[/digits]`. Throws std::invalid_argument on malformed
  /// text and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  /// Canonical "p/q", or "p" when q = 1.
  std::string str() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class floor() const;
  mpz_class ceil() const;

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// True iff 0 < r <= 1.
inline bool in_unit_interval(const Rational& r) { return r.sign() > 0 && r <= Rational(1); }

/// min over 1 <= k <= k_max of (ceil(kx) + ceil(ky) - 1) / k. This caps psi
/// (and hence phi) from above. Throws std::domain_error unless 0 < x,y <= 1
/// and k_max >= 1.
Rational cayley_bound(const Rational& x, const Rational& y, int k_max = 100);

/// Same minimum, also returning the first k attaining it.
struct CayleyResult {
  Rational value;
  int k = 1;
};
CayleyResult cayley_bound_with_k(const Rational& x, const Rational& y, int k_max = 100);

}  // namespace phipsi
