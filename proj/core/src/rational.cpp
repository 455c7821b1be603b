#include "balcov/rational.hpp"

#include "balcov/errors.hpp"

#include <cctype>

namespace balcov {

int sign_of(const Rational& x) { return sgn(x); }
int sign_of(const Integer& x) { return sgn(x); }

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const auto fail = [&](const char* why) {
    throw InputError("invalid rational literal '" + text + "': " + why);
  };
  if (text.empty()) fail("empty string");
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  const std::size_t slash = text.find('/', pos);
  if (slash == std::string::npos) {
    if (!all_digits(text, pos, text.size()))
      fail("expected an integer or 'p/q' fraction");
  } else {
    if (!all_digits(text, pos, slash)) fail("malformed numerator");
    if (!all_digits(text, slash + 1, text.size())) fail("malformed denominator");
  }
  // GMP does not accept a leading '+'; validation above already vetted it.
  std::string cleaned = text[0] == '+' ? text.substr(1) : text;
  Rational value;
  if (value.set_str(cleaned, 10) != 0) fail("not a base-10 rational");
  if (sgn(value.get_den()) == 0) fail("zero denominator");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& x) {
  // Callers may have built x from a raw numerator/denominator pair, which
  // mpq_class stores verbatim; reduce before printing.
  Rational canonical = x;
  canonical.canonicalize();
  return canonical.get_str();
}

RationalVector vec_sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector vec_add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector vec_scale(const Rational& c, const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vector(const RationalVector& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<Integer> primitive_integer_direction(const RationalVector& v) {
  if (is_zero_vector(v))
    throw InputError("cannot normalize the zero vector to a direction");
  Integer lcm_den = 1;
  for (const auto& x : v) {
    Integer den = x.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer gcd_all = 0;
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(scaled);
  }
  for (auto& x : out) x /= gcd_all;
  return out;
}

} // namespace balcov
