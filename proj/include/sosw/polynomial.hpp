#ifndef SOSW_POLYNOMIAL_HPP
#define SOSW_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sosw/graph.hpp"
#include "sosw/numeric.hpp"

namespace sosw {

// Multilinear monomial over {x_i}: a sorted, duplicate-free vertex set.
// Ordered graded-lex; this fixes matrix row/column order everywhere.
struct Monomial {
  std::vector<int> vars;  // sorted ascending

  Monomial() = default;
  explicit Monomial(std::vector<int> v) : vars(std::move(v)) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  }

  int degree() const { return static_cast<int>(vars.size()); }
  bool empty() const { return vars.empty(); }

  bool contains(int v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
  }

  // product modulo x_i^2 = x_i: set union
  Monomial united(const Monomial& other) const {
    Monomial out;
    std::set_union(vars.begin(), vars.end(), other.vars.begin(), other.vars.end(),
                   std::back_inserter(out.vars));
    return out;
  }

  bool subset_of(const Monomial& other) const {
    return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
  }

  bool operator==(const Monomial& o) const { return vars == o.vars; }
  bool operator<(const Monomial& o) const {
    if (vars.size() != o.vars.size()) return vars.size() < o.vars.size();
    return vars < o.vars;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) os << ',';
      os << vars[i];
    }
    return os.str();
  }

  static Monomial parse(const std::string& s) {
    Monomial m;
    if (s.empty()) return m;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) m.vars.push_back(std::stoi(tok));
    std::sort(m.vars.begin(), m.vars.end());
    return m;
  }
};

inline bool monomial_independent(const Graph& g, const Monomial& m) {
  return is_independent_set(g, m.vars);
}

// Monomial over {x_{i,c}}: map color -> nonempty vertex set.
struct ColorMonomial {
  std::map<int, Monomial> parts;

  ColorMonomial() = default;

  void set_part(int color, Monomial m) {
    if (!m.empty()) parts[color] = std::move(m);
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [c, m] : parts) d += m.degree();
    return d;
  }

  int cdeg() const {
    int d = 0;
    for (const auto& [c, m] : parts) d = std::max(d, m.degree());
    return d;
  }

  ColorMonomial united(const ColorMonomial& other) const {
    ColorMonomial out = *this;
    for (const auto& [c, m] : other.parts) {
      auto it = out.parts.find(c);
      if (it == out.parts.end()) out.parts[c] = m;
      else it->second = it->second.united(m);
    }
    return out;
  }

  bool operator==(const ColorMonomial& o) const { return parts == o.parts; }
  bool operator<(const ColorMonomial& o) const {
    int d = total_degree(), od = o.total_degree();
    if (d != od) return d < od;
    return parts < o.parts;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, m] : parts) {
      if (!first) os << ';';
      first = false;
      os << c << ':' << m.str();
    }
    return os.str();
  }
};

inline ColorMonomial single_var(int vertex, int color) {
  ColorMonomial m;
  m.set_part(color, Monomial({vertex}));
  return m;
}

// every color class an independent set of g
inline bool color_monomial_independent(const Graph& g, const ColorMonomial& m) {
  for (const auto& [c, part] : m.parts)
    if (!monomial_independent(g, part)) return false;
  return true;
}

// Multilinear polynomial, stored pre-reduced (booleanity is a representation
// invariant, not a rewrite pass). No zero coefficients are kept.
template <typename T>
struct Polynomial {
  int n = 0;  // variable universe [1,n]
  std::map<Monomial, T> terms;

  Polynomial() = default;
  explicit Polynomial(int n_) : n(n_) {}

  static Polynomial constant(int n, const T& c) {
    Polynomial p(n);
    p.add(Monomial(), c);
    return p;
  }

  static Polynomial var(int n, int i) {
    Polynomial p(n);
    p.add(Monomial({i}), scalar_from_long<T>(1));
    return p;
  }

  void add(const Monomial& m, const T& coeff) {
    if (scalar_is_zero(coeff)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, coeff);
    } else {
      it->second += coeff;
      if (scalar_is_zero(it->second)) terms.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }

  bool is_zero() const { return terms.empty(); }

  Polynomial operator+(const Polynomial& o) const {
    check_universe(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, c);
    return out;
  }

  Polynomial operator-(const Polynomial& o) const {
    check_universe(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, -c);
    return out;
  }

  Polynomial scaled(const T& s) const {
    Polynomial out(n);
    if (scalar_is_zero(s)) return out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, c * s);
    return out;
  }

  // product reduced modulo x_i^2 = x_i (monomials multiply by set union)
  Polynomial operator*(const Polynomial& o) const {
    check_universe(o);
    Polynomial out(n);
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms) out.add(m1.united(m2), c1 * c2);
    return out;
  }

  T eval(const std::vector<bool>& point) const {  // point[i] for i in [1,n]
    T acc = scalar_from_long<T>(0);
    for (const auto& [m, c] : terms) {
      bool on = true;
      for (int v : m.vars)
        if (!point[v]) {
          on = false;
          break;
        }
      if (on) acc += c;
    }
    return acc;
  }

  T l2_norm_sq() const {
    T acc = scalar_from_long<T>(0);
    for (const auto& [m, c] : terms) acc += c * c;
    return acc;
  }

  bool operator==(const Polynomial& o) const { return n == o.n && terms == o.terms; }

  void check_universe(const Polynomial& o) const {
    if (n != o.n) throw std::invalid_argument("polynomial variable-universe mismatch");
  }
};

template <typename T>
struct ColorPolynomial {
  int n = 0;
  int k = 0;  // colors [1,k]
  std::map<ColorMonomial, T> terms;

  ColorPolynomial() = default;
  ColorPolynomial(int n_, int k_) : n(n_), k(k_) {}

  static ColorPolynomial constant(int n, int k, const T& c) {
    ColorPolynomial p(n, k);
    p.add(ColorMonomial(), c);
    return p;
  }

  static ColorPolynomial var(int n, int k, int vertex, int color) {
    ColorPolynomial p(n, k);
    p.add(single_var(vertex, color), scalar_from_long<T>(1));
    return p;
  }

  void add(const ColorMonomial& m, const T& coeff) {
    if (scalar_is_zero(coeff)) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, coeff);
    } else {
      it->second += coeff;
      if (scalar_is_zero(it->second)) terms.erase(it);
    }
  }

  int cdeg() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.cdeg());
    return d;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.total_degree());
    return d;
  }

  bool is_zero() const { return terms.empty(); }

  ColorPolynomial operator+(const ColorPolynomial& o) const {
    check_universe(o);
    ColorPolynomial out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, c);
    return out;
  }

  ColorPolynomial operator-(const ColorPolynomial& o) const {
    check_universe(o);
    ColorPolynomial out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, -c);
    return out;
  }

  ColorPolynomial scaled(const T& s) const {
    ColorPolynomial out(n, k);
    if (scalar_is_zero(s)) return out;
    for (const auto& [m, c] : terms) out.terms.emplace(m, c * s);
    return out;
  }

  ColorPolynomial operator*(const ColorPolynomial& o) const {
    check_universe(o);
    ColorPolynomial out(n, k);
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms) out.add(m1.united(m2), c1 * c2);
    return out;
  }

  // assignment: set of true variables (i,c)
  T eval(const std::set<std::pair<int, int>>& point) const {
    T acc = scalar_from_long<T>(0);
    for (const auto& [m, c] : terms) {
      bool on = true;
      for (const auto& [color, part] : m.parts) {
        for (int v : part.vars)
          if (!point.count({v, color})) {
            on = false;
            break;
          }
        if (!on) break;
      }
      if (on) acc += c;
    }
    return acc;
  }

  T l2_norm_sq() const {
    T acc = scalar_from_long<T>(0);
    for (const auto& [m, c] : terms) acc += c * c;
    return acc;
  }

  bool operator==(const ColorPolynomial& o) const {
    return n == o.n && k == o.k && terms == o.terms;
  }

  void check_universe(const ColorPolynomial& o) const {
    if (n != o.n || k != o.k)
      throw std::invalid_argument("color polynomial variable-universe mismatch");
  }
};

template <typename T>
inline int cdeg(const ColorPolynomial<T>& f) {
  return f.cdeg();
}

// Zeroes the coefficient of every x_S whose S is not independent in g.
// Idempotent linear map.
template <typename T>
inline Polynomial<T> project_indep(const Graph& g, const Polynomial<T>& f) {
  Polynomial<T> out(f.n);
  for (const auto& [m, c] : f.terms)
    if (monomial_independent(g, m)) out.terms.emplace(m, c);
  return out;
}

// Per-color analogue: kills monomials with an edge inside some color class.
template <typename T>
inline ColorPolynomial<T> project_indep_tensor(const Graph& g, int k,
                                               const ColorPolynomial<T>& f) {
  ColorPolynomial<T> out(f.n, k);
  for (const auto& [m, c] : f.terms)
    if (color_monomial_independent(g, m)) out.terms.emplace(m, c);
  return out;
}

// Indicator of the event "vertex i lies in at most one color class":
//   h_i = sum_c x_{i,c} prod_{c' != c} (1 - x_{i,c'}) + prod_c (1 - x_{i,c}).
// Expanded form: coefficient of prod_{c in B} x_{i,c} is (-1)^|B| (1 - |B|),
// so the expansion has 2^k terms and coloring degree 1.
template <typename T>
inline ColorPolynomial<T> indicator_h(int n, int k, int i, int k_limit = 20) {
  if (k < 1) throw std::invalid_argument("indicator_h needs k >= 1");
  if (k > k_limit) throw BudgetError("indicator_h: 2^k expansion exceeds limit");
  if (i < 1 || i > n) throw std::out_of_range("vertex out of range");
  ColorPolynomial<T> out(n, k);
  const long total = 1L << k;
  for (long mask = 0; mask < total; ++mask) {
    int b = __builtin_popcountl(mask);
    long sign = (b % 2 == 0) ? (1 - b) : (b - 1);
    if (sign == 0) continue;
    ColorMonomial m;
    for (int c = 1; c <= k; ++c)
      if (mask & (1L << (c - 1))) m.set_part(c, Monomial({i}));
    out.add(m, scalar_from_long<T>(sign));
  }
  return out;
}

}  // namespace sosw

#endif  // SOSW_POLYNOMIAL_HPP
