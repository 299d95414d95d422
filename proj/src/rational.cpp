#include "hermite/rational.hpp"

#include <cctype>

namespace hermite {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = make_rational(n, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    Integer scaled(std::string(whole) + std::string(frac), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = make_rational(scaled, den);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(Integer(std::string(text), 10));
  }
  if (negative) value = -value;
  return value;
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

std::string to_decimal_string(const Rational& r, unsigned significant_digits) {
  if (significant_digits == 0) significant_digits = 1;
  if (r == 0) return "0";

  Integer num = ::abs(r.get_num());
  Integer den = r.get_den();

  // decimal exponent e with 10^e <= num/den < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
  auto scaled_ge_one = [&](long k) {
    // num/den * 10^-k >= 1 ?
    Integer lhs = num, rhs = den;
    Integer p;
    if (k >= 0) {
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
      rhs *= p;
    } else {
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
      lhs *= p;
    }
    return lhs >= rhs;
  };
  while (!scaled_ge_one(e)) --e;
  while (scaled_ge_one(e + 1)) ++e;

  // round num/den * 10^(digits-1-e) to nearest integer
  long shift = static_cast<long>(significant_digits) - 1 - e;
  Integer n = num, d = den, p;
  if (shift >= 0) {
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    n *= p;
  } else {
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    d *= p;
  }
  Integer q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (rem * 2 >= d) q += 1;

  std::string digits = q.get_str();
  if (static_cast<long>(digits.size()) > static_cast<long>(significant_digits))
    ++e;  // rounding carried into an extra digit, e.g. 999.6 -> 1000

  std::string out;
  if (r < 0) out += '-';
  if (e >= 0 && e < 21) {
    if (static_cast<long>(digits.size()) <= e) {
      out += digits;
      out.append(static_cast<size_t>(e + 1 - digits.size()), '0');
    } else {
      out += digits.substr(0, static_cast<size_t>(e + 1));
      std::string tail = digits.substr(static_cast<size_t>(e + 1));
      while (!tail.empty() && tail.back() == '0') tail.pop_back();
      if (!tail.empty()) out += "." + tail;
    }
  } else if (e < 0 && e > -5) {
    out += "0.";
    out.append(static_cast<size_t>(-e - 1), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += digits;
  } else {
    out += digits.substr(0, 1);
    std::string tail = digits.substr(1);
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    if (!tail.empty()) out += "." + tail;
    out += "e" + std::to_string(e);
  }
  return out;
}

}  // namespace hermite
