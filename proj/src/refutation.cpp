#include "sosw/refutation.hpp"

namespace sosw {

CoefficientAudit coefficient_audit(int s, int ell, double omega, long budget) {
  if (ell < 1) throw std::invalid_argument("coefficient_audit: ell must be >= 1");
  if (s < 1) throw std::invalid_argument("coefficient_audit: s must be >= 1");
  if (s > (1 << (ell - 1)))
    throw std::invalid_argument("coefficient_audit: requires s <= 2^{ell-1}");
  if (static_cast<long>(s) * (1L << ell) > budget)
    throw BudgetError("coefficient_audit: s * 2^ell exceeds budget");

  // oracle: expand f = x_1 + ... + x_s over universe [s] by repeated squaring
  Polynomial<Rational> f(s);
  for (int i = 1; i <= s; ++i) f.add(Monomial({i}), Rational(1));
  std::vector<int> full;
  for (int i = 1; i <= s; ++i) full.push_back(i);
  const Monomial target{full};

  Polynomial<Rational> power = f;
  for (int j = 1; j < ell; ++j) power = power * power;  // f^{2^{ell-1}}
  Rational c_s = Rational(0);
  if (auto it = power.terms.find(target); it != power.terms.end()) c_s = it->second;
  power = power * power;  // f^{2^ell}
  Rational c_prime = Rational(0);
  if (auto it = power.terms.find(target); it != power.terms.end()) c_prime = it->second;

  CoefficientAudit out;
  out.s = s;
  out.ell = ell;
  out.omega = omega;
  out.c_s = c_s.get_num().get_str();
  out.c_prime_s = c_prime.get_num().get_str();

  mpz_class upper;  // s^{2^ell}
  mpz_ui_pow_ui(upper.get_mpz_t(), s, 1uL << ell);
  out.upper_bound_ok = c_prime.get_num() <= upper;

  mpz_class lower;  // s^{2^{ell-1}-s} * s!
  mpz_ui_pow_ui(lower.get_mpz_t(), s, (1uL << (ell - 1)) - s);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), s);
  lower *= fact;
  out.lower_bound_ok = c_s.get_num() >= lower;

  out.ratio_applicable = omega >= std::exp(1.0) * s;
  if (out.ratio_applicable && sgn(c_s) > 0) {
    double ratio = mpq_class(c_prime / c_s).get_d();
    out.ratio_ok = ratio <= std::pow(omega, static_cast<double>(1uL << (ell - 1)));
  }
  return out;
}

RefutationVerdict refute_coloring_existence(const Graph& g, int k, int degree, int mis_limit) {
  if (k < 1) throw std::invalid_argument("refute_coloring_existence: k must be >= 1");
  auto mis = max_independent_set(g, mis_limit);
  RefutationVerdict out;
  out.t = mis.size;
  out.witness = mis.witness;
  out.k = k;
  out.degree = degree;
  if (degree < 4 * out.t)
    throw std::invalid_argument("refute_coloring_existence: degree below 4t");
  out.threshold = g.n() / (std::exp(1.0) * out.t);
  out.refuted = k <= out.threshold;
  int ell = 0;
  while ((1 << ell) < 2 * out.t) ++ell;
  ell = std::max(ell, 1);
  const double omega = static_cast<double>(g.n()) / k;
  for (int s = 1; s <= std::min(out.t, 1 << (ell - 1)) && s <= 6; ++s)
    out.audit.push_back(coefficient_audit(s, ell, omega));
  return out;
}

}  // namespace sosw
