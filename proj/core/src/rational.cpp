#include "sfmlab/rational.hpp"

#include <cctype>

#include "sfmlab/errors.hpp"

namespace sfmlab {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string digits(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw InvalidArgumentError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class num = parse_integer(num_text);
  mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw InvalidArgumentError("zero denominator in \"" + std::string(text) + "\"");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace sfmlab
