#ifndef SOSW_NUMERIC_HPP
#define SOSW_NUMERIC_HPP

// Scalar layer: every table/polynomial/matrix in this project is templated on
// a scalar T that is either `double` (fast, experiments) or `Rational`
// (exact, certification runs). The mode is chosen per run at the CLI.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sosw {

using Rational = mpq_class;

// Thrown when an operation would exceed a configured enumeration/size budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.get_d(); }

template <typename T>
inline T scalar_from_long(long v) {
  return T(v);
}

template <typename T>
inline T scalar_ratio(long num, long den) {
  if constexpr (std::is_same_v<T, Rational>) {
    Rational q(num, den);
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <typename T>
inline bool scalar_is_zero(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) return sgn(v) == 0;
  else return v == 0.0;
}

template <typename T>
inline int scalar_sign(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) return sgn(v);
  else return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

template <typename T>
inline T scalar_pow(const T& base, unsigned long e) {
  T acc = scalar_from_long<T>(1);
  T b = base;
  unsigned long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

template <typename T>
inline const char* scalar_mode_name() {
  if constexpr (std::is_same_v<T, Rational>) return "rational";
  else return "float";
}

// Exact conversion: a double is a dyadic rational, so this never rounds.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  return Rational(x);
}

// Accepts "a/b", integers, and plain decimals ("0.25", "-3.5").
Rational parse_rational(const std::string& s);

double parse_double_or_fraction(const std::string& s);

std::string format_rational(const Rational& q);
std::string format_double(double x);

template <typename T>
inline T parse_scalar(const std::string& s) {
  if constexpr (std::is_same_v<T, Rational>) return parse_rational(s);
  else return parse_double_or_fraction(s);
}

template <typename T>
inline std::string format_scalar(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) return format_rational(v);
  else return format_double(v);
}

// Smallest integer k0 >= 1/v, computed exactly in rational mode and with a
// small guard against FP noise (e.g. 1/(1/3.0) = 3.0000000000000004) in float.
template <typename T>
inline long ceil_inverse(const T& v) {
  if (scalar_sign(v) <= 0) throw std::invalid_argument("ceil_inverse requires a positive value");
  if constexpr (std::is_same_v<T, Rational>) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_den().get_mpz_t(), v.get_num().get_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("ceil_inverse overflow");
    return q.get_si();
  } else {
    double r = 1.0 / v;
    return static_cast<long>(std::ceil(r - 1e-9 * std::max(1.0, r)));
  }
}

// SplitMix64: used only to derive per-trial seeds (seed, index) -> seed64.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sosw

#endif  // SOSW_NUMERIC_HPP
