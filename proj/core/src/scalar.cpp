#include "ddlab/scalar.hpp"

#include <cctype>
#include <ostream>

namespace ddlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text = trim(text.substr(1));
  }
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : trim(text.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den))
    throw ScalarSyntaxError("malformed rational '" + std::string(text) + "'");
  boost::multiprecision::mpz_int n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ScalarSyntaxError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ScalarSyntaxError("empty scalar");

  Scalar total;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative = s[pos] == '-';
      ++pos;
      // "(a + -c i)": the second term may carry its own sign.
      if (!first) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
          negative = negative != (s[pos] == '-');
          ++pos;
        }
      }
    } else if (!first) {
      throw ScalarSyntaxError("expected '+' or '-' in scalar '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view body = trim(s.substr(pos, end - pos));
    if (body.empty()) throw ScalarSyntaxError("dangling sign in scalar '" + std::string(text) + "'");
    bool imaginary = body.back() == 'i';
    if (imaginary) body = trim(body.substr(0, body.size() - 1));
    Rational value = body.empty() ? Rational(1) : parse_rational(body);
    if (negative) value = -value;
    total += imaginary ? Scalar(Rational(0), value) : Scalar(value);
    pos = end;
    first = false;
  }
  return total;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.im_.is_zero()) {
    if (o.re_.is_zero()) throw std::domain_error("division by zero scalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string Scalar::to_string() const {
  if (im_.is_zero()) return rational_to_string(re_);
  if (re_.is_zero()) return rational_to_string(im_) + " i";
  std::string out = "(" + rational_to_string(re_);
  out += im_ < 0 ? " - " : " + ";
  out += rational_to_string(im_ < 0 ? Rational(-im_) : im_) + " i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ddlab
