#include "starspec/rational.hpp"

#include <cctype>

#include "starspec/error.hpp"

namespace starspec {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
}

Integer pow10(unsigned long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad(text);
    Integer num(std::string(p), 10), den(std::string(q), 10);
    if (den == 0) throw Error(ErrorCode::DivZero, "zero denominator in '" + std::string(text) + "'");
    out = Rational(num, den);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = Rational(num, pow10(frac.size()));
    out.canonicalize();
  } else {
    if (!all_digits(s)) bad(text);
    out = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  Integer scale = pow10(static_cast<unsigned long>(digits));
  Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
  Integer den = q.get_den() * 2;
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(q) < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

std::string sqrt_decimal(const Rational& q, int digits) {
  if (sgn(q) < 0) throw Error(ErrorCode::InvalidArgument, "sqrt of negative value");
  if (digits < 0) digits = 0;
  // floor(sqrt(q * 10^(2d+2))) then round the extra digit.
  Integer scaled = q.get_num() * pow10(2ul * static_cast<unsigned long>(digits) + 2);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return to_decimal(Rational(root, pow10(static_cast<unsigned long>(digits) + 1)), digits);
}

}  // namespace starspec
