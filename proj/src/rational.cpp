#include "penney/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "penney/errors.hpp"

namespace penney {

namespace {

mpz_class pow10(unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

mpq_class pow10_signed(long k) {
  if (k >= 0) return mpq_class(pow10(static_cast<unsigned>(k)));
  return mpq_class(mpz_class(1), pow10(static_cast<unsigned>(-k)));
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Parse, "invalid rational literal '" + std::string(text) + "': " + why);
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::from_literal(std::string_view text) {
  if (text.empty()) bad_literal(text, "empty");
  if (text.find('(') != std::string_view::npos || text.find("...") != std::string_view::npos)
    bad_literal(text, "repeating decimals are not supported; write the value as a/b");

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_literal(text, "missing digits");

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
      bad_literal(text, "expected digits on both sides of '/'");
    const mpz_class d{std::string(den)};
    if (d == 0) bad_literal(text, "zero denominator");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    const auto dot = body.find('.');
    const auto whole = body.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text, "missing digits");
    if (!all_digits(whole) || !all_digits(frac)) bad_literal(text, "unexpected character");
    const std::string digits = std::string(whole) + std::string(frac);
    result = Rational(mpz_class(digits, 10), pow10(static_cast<unsigned>(frac.size())));
  }
  return negative ? -result : result;
}

Rational Rational::abs() const { return Rational(::abs(value_)); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
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
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) return "0";
  const mpq_class a = ::abs(value_);

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (pow10_signed(e) > a) --e;
  while (pow10_signed(e + 1) <= a) ++e;

  const mpq_class scaled = a * pow10_signed(significant - 1 - e);
  mpz_class digits = scaled.get_num() / scaled.get_den();
  const mpz_class rem = scaled.get_num() - digits * scaled.get_den();
  if (2 * rem >= scaled.get_den()) ++digits;
  if (digits == pow10(static_cast<unsigned>(significant))) {
    digits /= 10;
    ++e;
  }
  const std::string d = digits.get_str();

  auto trim = [](std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };

  std::string out;
  if (e < -4 || e >= significant) {
    out = trim(d.substr(0, 1) + "." + d.substr(1));
    const long ae = e < 0 ? -e : e;
    out += (e < 0 ? "e-" : "e+");
    if (ae < 10) out += '0';
    out += std::to_string(ae);
  } else if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    out = trim(d.substr(0, int_len) + "." + d.substr(int_len));
  } else {
    out = trim("0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d);
  }
  return sign() < 0 ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace penney
