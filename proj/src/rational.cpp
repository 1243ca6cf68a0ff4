#include "blotto/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace blotto {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
      throw std::invalid_argument("bad rational literal: " + text);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(BigInt(num), d);
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    std::string sign;
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
      sign = whole.substr(0, 1);
      whole = whole.substr(1);
    }
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!is_integer_text(whole) || !is_integer_text(frac))
      throw std::invalid_argument("bad decimal literal: " + text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt value = BigInt(whole) * scale + BigInt(frac);
    Rational r(value, scale);
    return sign == "-" ? -r : r;
  }

  if (!is_integer_text(s)) throw std::invalid_argument("bad rational literal: " + text);
  return Rational(BigInt(s));
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  BigInt num(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  Rational r(num);
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

std::string rational_to_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

}  // namespace blotto
