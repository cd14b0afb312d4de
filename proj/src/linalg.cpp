#include "moufang/linalg.hpp"
#include "moufang/differentiate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace moufang {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::ChartDomain: return "outside chart domain";
    case ErrorCode::NotUnit: return "element is not of unit norm";
    case ErrorCode::SingularMatrix: return "singular matrix";
    case ErrorCode::ZeroDivisor: return "zero divisor";
    case ErrorCode::LevelMismatch: return "algebra level mismatch";
    case ErrorCode::Unsupported: return "unsupported operation";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double e : a.entries()) s += e * e;
  return std::sqrt(s);
}

double max_abs(const Matrix& a) { return max_abs(a.entries()); }

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

LuFactorization::LuFactorization(const Matrix& a) : n_(a.rows()), lu_(a), perm_(a.rows()) {
  if (!a.square()) fail(ErrorCode::InvalidArgument, "LU factorization needs a square matrix");
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  const double threshold = kSingularPivot * frobenius_norm(a);
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
    }
    if (!(std::abs(lu_(p, k)) > threshold)) {
      fail(ErrorCode::SingularMatrix, "pivot below threshold at column " + std::to_string(k));
    }
    if (p != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(lu_(p, j), lu_(k, j));
      std::swap(perm_[p], perm_[k]);
      sign_ = -sign_;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      const double f = lu_(i, k) / lu_(k, k);
      lu_(i, k) = f;
      for (std::size_t j = k + 1; j < n_; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  if (b.size() != n_) fail(ErrorCode::InvalidArgument, "right-hand side has wrong length");
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n_; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n_; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

Matrix LuFactorization::inverse() const {
  Matrix inv(n_, n_);
  std::vector<double> e(n_, 0.0);
  for (std::size_t j = 0; j < n_; ++j) {
    e[j] = 1.0;
    const auto col = solve(e);
    for (std::size_t i = 0; i < n_; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

double LuFactorization::determinant() const {
  double d = sign_;
  for (std::size_t i = 0; i < n_; ++i) d *= lu_(i, i);
  return d;
}

std::vector<double> solve_linear(const Matrix& a, std::span<const double> b) {
  return LuFactorization(a).solve(b);
}

Matrix mat_inv(const Matrix& a) { return LuFactorization(a).inverse(); }

RankResult rank_revealing(const std::vector<std::vector<double>>& vectors, double tol) {
  RankResult result;
  if (vectors.empty()) return result;
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "rank tolerance must be positive");
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) fail(ErrorCode::InvalidArgument, "rank input vectors differ in dimension");
  }

  auto work = vectors;
  std::vector<bool> used(work.size(), false);
  double largest = 0.0;
  for (const auto& v : work) largest = std::max(largest, norm2(v));
  if (largest == 0.0) return result;
  const double threshold = tol * largest;

  for (std::size_t step = 0; step < std::min(work.size(), dim); ++step) {
    std::size_t p = work.size();
    double best = -1.0;
    for (std::size_t c = 0; c < work.size(); ++c) {
      if (used[c]) continue;
      const double n = norm2(work[c]);
      if (n > best) { best = n; p = c; }
    }
    if (p == work.size() || !(best > threshold)) break;
    used[p] = true;
    result.pivots.push_back(p);
    ++result.rank;

    std::vector<double> q = work[p];
    for (double& e : q) e /= best;
    for (std::size_t c = 0; c < work.size(); ++c) {
      if (used[c]) continue;
      double d = 0.0;
      for (std::size_t i = 0; i < dim; ++i) d += q[i] * work[c][i];
      for (std::size_t i = 0; i < dim; ++i) work[c][i] -= d * q[i];
    }
  }
  return result;
}

std::size_t numeric_rank(const std::vector<std::vector<double>>& vectors, double tol) {
  return rank_revealing(vectors, tol).rank;
}

double span_remainder(const std::vector<std::vector<double>>& basis, std::span<const double> target) {
  if (basis.empty()) return norm2(target);
  const std::size_t m = basis.size();
  const std::size_t dim = target.size();
  Matrix gram(m, m);
  std::vector<double> rhs(m, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    if (basis[a].size() != dim) fail(ErrorCode::InvalidArgument, "basis vector dimension mismatch");
    for (std::size_t b = a; b < m; ++b) {
      double d = 0.0;
      for (std::size_t i = 0; i < dim; ++i) d += basis[a][i] * basis[b][i];
      gram(a, b) = gram(b, a) = d;
    }
    for (std::size_t i = 0; i < dim; ++i) rhs[a] += basis[a][i] * target[i];
  }
  const auto coeffs = solve_linear(gram, rhs);
  std::vector<double> rest(target.begin(), target.end());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < dim; ++i) rest[i] -= coeffs[a] * basis[a][i];
  return norm2(rest);
}

double relative_discrepancy(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "discrepancy operands differ in length");
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(diff) / std::max(1.0, norm2(a));
}

}  // namespace moufang
