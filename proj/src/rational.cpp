#include "pfq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pfq {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/')) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace pfq
