#ifndef SOSW_MOMENT_HPP
#define SOSW_MOMENT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "sosw/graph.hpp"
#include "sosw/matrix.hpp"
#include "sosw/pseudo_expectation.hpp"

namespace sosw {

enum class MomentBasis { kStandard, kPrimed };

// Symmetric matrix entry(S,T) = pE[x_S x_T], indexed by all monomials with
// |S| <= half_degree in graded-lex order.
template <typename T>
struct MomentMatrix {
  std::vector<Monomial> index;
  Matrix<T> entries;
  MomentBasis basis = MomentBasis::kStandard;
  int half_degree = 0;
};

inline std::vector<Monomial> moment_index(int n, int half_degree) {
  auto subsets = subsets_of_size_at_most(n, half_degree);
  std::vector<Monomial> index;
  index.reserve(subsets.size());
  for (auto& s : subsets) index.emplace_back(std::move(s));
  std::sort(index.begin(), index.end());  // graded-lex
  return index;
}

template <typename T>
MomentMatrix<T> build_moment_matrix(const PseudoExpectation<T>& pe, int half_degree) {
  if (2 * half_degree > pe.d)
    throw std::invalid_argument("moment matrix degree exceeds stored table");
  MomentMatrix<T> m;
  m.half_degree = half_degree;
  m.index = moment_index(pe.n, half_degree);
  const std::size_t sz = m.index.size();
  m.entries = Matrix<T>(sz);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) {
      T v = pe.value(m.index[i].united(m.index[j]));
      m.entries.at(i, j) = v;
      m.entries.at(j, i) = v;
    }
  return m;
}

// Basis change e'_S = e_S - pE[x_S] e_empty: entries become centered moments
// pE[x_S x_T] - pE[x_S] pE[x_T]; the empty row/column decouples with entry 1.
template <typename T>
MomentMatrix<T> to_primed_basis(const MomentMatrix<T>& m, const PseudoExpectation<T>& pe) {
  if (m.basis != MomentBasis::kStandard)
    throw std::invalid_argument("to_primed_basis expects a standard-basis matrix");
  if (!pe.normalized())
    throw std::invalid_argument("to_primed_basis requires a normalized pseudo-expectation");
  MomentMatrix<T> out;
  out.basis = MomentBasis::kPrimed;
  out.half_degree = m.half_degree;
  out.index = m.index;
  const std::size_t sz = m.index.size();
  out.entries = Matrix<T>(sz);
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = i; j < sz; ++j) {
      T v;
      if (m.index[i].empty() && m.index[j].empty()) {
        v = scalar_from_long<T>(1);
      } else if (m.index[i].empty() || m.index[j].empty()) {
        v = scalar_from_long<T>(0);
      } else {
        v = m.entries.at(i, j) - pe.value(m.index[i]) * pe.value(m.index[j]);
      }
      out.entries.at(i, j) = v;
      out.entries.at(j, i) = v;
    }
  }
  return out;
}

template <typename T>
PsdVerdict certify_psd(const MomentMatrix<T>& m, double tol = 1e-9) {
  if (!m.entries.is_symmetric(1e-12))
    throw std::invalid_argument("certify_psd: matrix is not symmetric");
  return psd_verdict(m.entries, tol);
}

struct CoveringCertificate {
  long k0 = 0;
  double lambda = 0.0;   // min eigenvalue of the independent-set principal submatrix
  double min_xi = 0.0;
  double spec_min = 0.0;  // spectrum summary of the same submatrix
  double spec_max = 0.0;
  bool exact = false;     // rational-mode run (PSD/PD verdicts exact)
  bool strictly_positive = false;  // submatrix PD (lambda > 0), exact in rational mode
  bool covering_ok = false;        // all pE[x_i] > 0
  bool passed = false;
  std::string status;
};

// Extracts the principal submatrix of the standard moment matrix indexed by
// independent sets of size <= half_degree.
template <typename T>
Matrix<T> independent_submatrix(const MomentMatrix<T>& m, const Graph& g,
                                std::vector<Monomial>* sub_index = nullptr) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.index.size(); ++i)
    if (monomial_independent(g, m.index[i])) keep.push_back(i);
  Matrix<T> out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out.at(a, b) = m.entries.at(keep[a], keep[b]);
  if (sub_index) {
    sub_index->clear();
    for (auto i : keep) sub_index->push_back(m.index[i]);
  }
  return out;
}

// Covering hypotheses as concrete numbers: k0 from the singleton marginals
// and lambda as the minimum eigenvalue of the independent principal submatrix
// (the tightest constant, since non-independent rows vanish).
template <typename T>
CoveringCertificate covering_certificate(const PseudoExpectation<T>& pe, const Graph& g) {
  if (!pe.normalized())
    throw std::invalid_argument("covering_certificate requires a normalized pseudo-expectation");
  CoveringCertificate cert;
  cert.exact = std::is_same_v<T, Rational>;

  auto vals = pe_values_vector(pe);
  cert.min_xi = to_double(vals.min_xi);
  cert.covering_ok = vals.covering_ok;
  if (vals.covering_ok) cert.k0 = vals.k0;

  auto m = build_moment_matrix(pe, pe.d / 2);
  auto sub = independent_submatrix(m, g);
  auto range = sym_eig_range(sub);
  cert.lambda = range.first;
  cert.spec_min = range.first;
  cert.spec_max = range.second;
  if constexpr (std::is_same_v<T, Rational>) {
    cert.strictly_positive = exact_psd_check(sub).is_pd;
  } else {
    cert.strictly_positive = cert.lambda > 0.0;
  }
  cert.passed = cert.covering_ok && cert.strictly_positive;
  cert.status = cert.passed             ? "PASS"
                : !cert.covering_ok     ? "FAILED: some pE[x_i] <= 0"
                                        : "FAILED: moment form not positive definite on independent sets";
  return cert;
}

}  // namespace sosw

#endif  // SOSW_MOMENT_HPP
