#include "tagset/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tagset {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<BigInt> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt v{std::string(s)};
  return negative ? -v : v;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_integer(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  if (*den < 0) { // keep the sign on the numerator
    *num = -*num;
    *den = -*den;
  }
  return Rational(*num, *den);
}

std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

std::string sqrt_decimal(const Rational& value, unsigned digits) {
  if (value < 0) throw std::domain_error("sqrt_decimal: negative value");
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // floor(sqrt(value) * 10^digits) up to 1 ulp from the inner floor division
  const BigInt scaled = (numerator(value) * scale * scale) / denominator(value);
  const BigInt root = boost::multiprecision::sqrt(scaled);
  std::string s = root.str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, 1, '.');
  return s;
}

} // namespace tagset
