#include "leaderline/rational.hpp"

#include <cctype>

#include "leaderline/errors.hpp"

namespace leaderline {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text) {
  throw MalformedInput("not an exact number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) reject(text);
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    std::string_view int_part = body;
    std::string_view frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      int_part = body.substr(0, dot);
      frac_part = body.substr(dot + 1);
      if (!all_digits(frac_part)) reject(text);
      if (int_part.empty()) int_part = "0";
    }
    if (!all_digits(int_part)) reject(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    result = Rational(mpz_class(digits, 10), den);
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value) {
  mpz_class den = value.get_den();
  // Terminating decimal iff the reduced denominator is 2^a 5^b.
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return value.get_num().get_str() + "/" + value.get_den().get_str();

  int places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = value.get_num() * (scale / value.get_den());
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<size_t>(places)) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return negative ? "-" + digits : digits;
}

double to_double(const Rational& value) { return value.get_d(); }

Rational fraction(long num, long den) {
  if (den == 0) throw MalformedInput("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational floor(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

}  // namespace leaderline
