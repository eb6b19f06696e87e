#include "geninv/rational.hpp"

#include <algorithm>
#include <cctype>

#include "geninv/exceptions.hpp"

namespace geninv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) {
    throw InputError("empty integer literal");
  }
  std::size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (pos == s.size()) {
    throw InputError("sign without digits in rational literal");
  }
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InputError("bad character in rational literal: '"
                       + std::string(s) + "'");
    }
  }
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw InputError("zero denominator in rational literal: '"
                     + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) {
    return numerator(value).str();
  }
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace geninv
