#ifndef SOSW_MATRIX_HPP
#define SOSW_MATRIX_HPP

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "sosw/numeric.hpp"

namespace sosw {

// Small dense matrix, row-major. Holds both float and rational entries; the
// matrices in this project stay at desk scale (a few hundred rows at most).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, scalar_from_long<T>(0)) {}

  std::size_t size() const { return n_; }
  T& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric(double tol = 0.0) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        double d = to_double(at(i, j)) - to_double(at(j, i));
        if (std::abs(d) > tol) return false;
      }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m.at(i, j);
  return out;
}

inline Eigen::MatrixXd to_eigen(const Matrix<Rational>& m) {
  Eigen::MatrixXd out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = to_double(m.at(i, j));
  return out;
}

inline std::vector<double> sym_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return ev;
}

template <typename T>
inline std::pair<double, double> sym_eig_range(const Matrix<T>& m) {
  if (m.size() == 0) return {0.0, 0.0};
  auto ev = sym_eigenvalues(to_eigen(m));
  return {ev.front(), ev.back()};
}

struct ExactPsd {
  bool is_psd = false;
  bool is_pd = false;  // all pivots strictly positive, full rank
};

// Exact PSD test for a symmetric rational matrix via symmetric Gaussian
// elimination with positive diagonal pivots. A symmetric matrix is PSD iff
// the elimination never meets a negative diagonal entry and every zero
// diagonal entry has a zero row in the remaining block.
inline ExactPsd exact_psd_check(Matrix<Rational> a) {
  const std::size_t n = a.size();
  std::vector<bool> done(n, false);
  std::size_t eliminated = 0;
  while (true) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      int s = scalar_sign(a.at(i, i));
      if (s < 0) return {false, false};
      if (s > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) break;
    const Rational d = a.at(pivot, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == pivot) continue;
      if (scalar_is_zero(a.at(i, pivot))) continue;
      const Rational f = a.at(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j] || j == pivot) continue;
        a.at(i, j) -= f * a.at(pivot, j);
      }
    }
    done[pivot] = true;
    ++eliminated;
  }
  // all remaining diagonal entries are zero; PSD iff the block is zero
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      if (!scalar_is_zero(a.at(i, j))) return {false, false};
    }
  }
  return {true, eliminated == n};
}

// Unified PSD verdict: exact in rational mode, min-eigenvalue vs tol in float.
struct PsdVerdict {
  bool is_psd = false;
  double min_eig = 0.0;
  bool exact = false;
};

template <typename T>
inline PsdVerdict psd_verdict(const Matrix<T>& m, double tol) {
  PsdVerdict v;
  if (m.size() == 0) {
    return {true, 0.0, true};
  }
  auto range = sym_eig_range(m);
  v.min_eig = range.first;
  if constexpr (std::is_same_v<T, Rational>) {
    v.exact = true;
    v.is_psd = exact_psd_check(m).is_psd;
  } else {
    v.exact = false;
    v.is_psd = v.min_eig >= -tol;
  }
  return v;
}

}  // namespace sosw

#endif  // SOSW_MATRIX_HPP
