#include "upse/rational.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "upse/error.hpp"

namespace upse {
namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class(long) must hold int64");

Rational::Rational(std::int64_t value) : value_(mpz_class(static_cast<long>(value))) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::from_fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num));
  }
  mpz_class den;
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!parse_integer(num_text, num) || !parse_integer(den_text, den) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorKind::ParseError, "rational '" + std::string(text) + "' is not in lowest terms");
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace upse
