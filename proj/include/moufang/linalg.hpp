#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moufang/matrix.hpp"

namespace moufang {

/// Pivot threshold, relative to the Frobenius norm of the factored matrix.
inline constexpr double kSingularPivot = 1e-12;

/// Default rank tolerance, relative to the largest column norm.
inline constexpr double kRankTolerance = 1e-8;

/// LU factorization with partial pivoting. Throws SingularMatrix when a pivot
/// falls below kSingularPivot * ||A||_F. One factorization serves many solves.
class LuFactorization {
 public:
  explicit LuFactorization(const Matrix& a);

  std::size_t size() const noexcept { return n_; }
  std::vector<double> solve(std::span<const double> b) const;
  Matrix inverse() const;
  double determinant() const;

 private:
  std::size_t n_;
  Matrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
};

std::vector<double> solve_linear(const Matrix& a, std::span<const double> b);
Matrix mat_inv(const Matrix& a);

/// Vectors whose magnitudes pass the rank test, in pivot order, plus the rank.
struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Column-pivoted Gram-Schmidt elimination: at each step the remaining vector
/// of largest residual norm is taken as pivot and projected out of the rest.
/// A pivot counts when its residual norm exceeds tol * (largest initial norm).
RankResult rank_revealing(const std::vector<std::vector<double>>& vectors, double tol = kRankTolerance);

std::size_t numeric_rank(const std::vector<std::vector<double>>& vectors, double tol = kRankTolerance);

/// Distance from `target` to span(basis), by least squares through the normal
/// equations. `basis` must be linearly independent.
double span_remainder(const std::vector<std::vector<double>>& basis, std::span<const double> target);

double norm2(std::span<const double> v);
double max_abs(std::span<const double> v);

}  // namespace moufang
