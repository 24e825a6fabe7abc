#include "bidlab/money.hpp"

#include <charconv>
#include <cctype>
#include <limits>
#include <string>

#include "bidlab/errors.hpp"

namespace bidlab {

namespace {

using boost::multiprecision::cpp_int;

cpp_int floor_div(const cpp_int& n, const cpp_int& d) {
  cpp_int q = n / d;
  if (n % d != 0 && ((n < 0) != (d < 0))) q -= 1;
  return q;
}

Money to_money(const cpp_int& v) {
  if (v > std::numeric_limits<Money>::max() || v < std::numeric_limits<Money>::min()) {
    throw InvalidArgument("amount out of Money range: " + v.str());
  }
  return v.convert_to<Money>();
}

cpp_int pow10(int k) {
  cpp_int p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  cpp_int digits = 0;
  int frac_digits = 0;
  bool seen_digit = false;
  bool in_fraction = false;
  while (!s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.')) {
    if (s.front() == '.') {
      if (in_fraction) throw InvalidArgument("bad number: " + std::string(whole));
      in_fraction = true;
    } else {
      digits = digits * 10 + (s.front() - '0');
      seen_digit = true;
      if (in_fraction) ++frac_digits;
    }
    s.remove_prefix(1);
  }
  if (!seen_digit) throw InvalidArgument("bad number: " + std::string(whole));
  int exponent = 0;
  if (!s.empty() && (s.front() == 'e' || s.front() == 'E')) {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), exponent);
    if (ec != std::errc() || ptr == s.data()) throw InvalidArgument("bad exponent: " + std::string(whole));
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  }
  if (!s.empty()) throw InvalidArgument("bad number: " + std::string(whole));
  if (negative) digits = -digits;
  const int scale = exponent - frac_digits;
  if (scale >= 0) return Rational(digits * pow10(scale));
  return Rational(digits, pow10(-scale));
}

}  // namespace

std::string to_string(const Rational& r) {
  const cpp_int& n = boost::multiprecision::numerator(r);
  const cpp_int& d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string to_decimal(const Rational& r, int digits) {
  const cpp_int scale = pow10(digits);
  const cpp_int& n = boost::multiprecision::numerator(r);
  const cpp_int& d = boost::multiprecision::denominator(r);
  cpp_int scaled = abs(n) * scale * 2 + d;
  scaled /= d * 2;
  std::string body = scaled.str();
  std::string out = (n < 0 && scaled != 0) ? "-" : "";
  if (digits == 0) return out + body;
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  out += body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Money floor_money(const Rational& r) {
  return to_money(floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r)));
}

Money round_half_up(const Rational& r) { return floor_money(r + Rational(1, 2)); }

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty number");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw InvalidArgument("zero denominator: " + std::string(text));
    return num / den;
  }
  return parse_decimal(s, text);
}

Rational rational_from_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw InvalidArgument("cannot format number");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

}  // namespace bidlab
