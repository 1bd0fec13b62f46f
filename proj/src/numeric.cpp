#include "sosw/numeric.hpp"

#include <cstdio>
#include <cstdlib>

namespace sosw {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty numeric string");
  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
    return q;
  }
  // decimal: sign + digits '.' digits
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad decimal: " + s);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal: " + s);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double parse_double_or_fraction(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      double num = std::stod(s.substr(0, slash));
      double den = std::stod(s.substr(slash + 1));
      if (den == 0.0) throw std::invalid_argument("zero denominator");
      return num / den;
    }
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric string: " + s);
  }
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace sosw
