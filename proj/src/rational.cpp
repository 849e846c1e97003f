#include "phipsi/rational.hpp"

#include <cctype>
#include <ostream>

namespace phipsi {

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

CayleyResult cayley_bound_with_k(const Rational& x, const Rational& y, int k_max) {
  if (!in_unit_interval(x) || !in_unit_interval(y))
    throw std::domain_error("cayley_bound needs 0 < x,y <= 1, got " + x.str() + ", " + y.str());
  if (k_max < 1) throw std::domain_error("cayley_bound needs k_max >= 1");

  // ceil(k n / d) evaluated on integers; the candidate for k is (cx + cy - 1) / k.
  const mpz_class xn = x.numerator(), xd = x.denominator();
  const mpz_class yn = y.numerator(), yd = y.denominator();
  mpz_class best_num, cx, cy, t;
  long best_k = 0;
  for (long k = 1; k <= k_max; ++k) {
    t = xn * k;
    mpz_cdiv_q(cx.get_mpz_t(), t.get_mpz_t(), xd.get_mpz_t());
    t = yn * k;
    mpz_cdiv_q(cy.get_mpz_t(), t.get_mpz_t(), yd.get_mpz_t());
    mpz_class num = cx + cy - 1;
    // num / k < best_num / best_k  <=>  num * best_k < best_num * k
    if (best_k == 0 || num * best_k < best_num * k) {
      best_num = num;
      best_k = k;
    }
  }
  return {Rational(best_num, mpz_class(best_k)), static_cast<int>(best_k)};
}

Rational cayley_bound(const Rational& x, const Rational& y, int k_max) {
  return cayley_bound_with_k(x, y, k_max).value;
}

}  // namespace phipsi
