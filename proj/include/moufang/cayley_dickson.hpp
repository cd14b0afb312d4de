#pragma once

// Cayley-Dickson algebras of dimension 2^level over a generic scalar:
// level 0 reals, 1 complexes, 2 quaternions, 3 octonions, 4 sedenions.
// Doubling convention: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moufang/error.hpp"
#include "moufang/jet.hpp"

namespace moufang {

inline constexpr int kMaxLevel = 4;

constexpr std::size_t algebra_dim(int level) { return std::size_t{1} << level; }

template <class S>
class CDElement {
 public:
  CDElement() = default;

  explicit CDElement(int level) : level_(check_level(level)), coeffs_(algebra_dim(level)) {}

  CDElement(int level, std::vector<S> coeffs) : level_(check_level(level)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != algebra_dim(level_)) {
      fail(ErrorCode::InvalidArgument, "coefficient count does not match level " + std::to_string(level_));
    }
  }

  /// Basis unit e_i; e_0 is the multiplicative unit.
  static CDElement unit(int level, std::size_t i = 0) {
    CDElement e(level);
    if (i >= e.size()) fail(ErrorCode::InvalidArgument, "basis index out of range");
    e.coeffs_[i] = S(1.0);
    return e;
  }

  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  S& operator[](std::size_t i) { return coeffs_[i]; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const S> coeffs() const noexcept { return coeffs_; }

  CDElement& operator+=(const CDElement& o) {
    check_levels(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CDElement& operator-=(const CDElement& o) {
    check_levels(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CDElement& operator*=(const S& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
  friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
  friend CDElement operator*(CDElement a, const S& s) { return a *= s; }

  void check_levels(const CDElement& o) const {
    if (level_ != o.level_) {
      fail(ErrorCode::LevelMismatch,
           "levels " + std::to_string(level_) + " and " + std::to_string(o.level_) + " differ");
    }
  }

 private:
  static int check_level(int level) {
    if (level < 0 || level > kMaxLevel) {
      fail(ErrorCode::InvalidArgument, "Cayley-Dickson level must be in 0..4, got " + std::to_string(level));
    }
    return level;
  }

  int level_ = 0;
  std::vector<S> coeffs_{S(0.0)};
};

namespace detail {

template <class S>
void conj_into(std::span<const S> a, std::span<S> out) {
  out[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) out[i] = -a[i];
}

template <class S>
void mul_into(std::span<const S> a, std::span<const S> b, std::span<S> out) {
  const std::size_t n = a.size();
  if (n == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t h = n / 2;
  const auto A = a.first(h), B = a.subspan(h);
  const auto C = b.first(h), D = b.subspan(h);
  std::vector<S> scratch(4 * h);
  std::span<S> conj_part(scratch.data(), h);
  std::span<S> t1(scratch.data() + h, h);
  std::span<S> t2(scratch.data() + 2 * h, h);
  std::span<S> t3(scratch.data() + 3 * h, h);

  mul_into<S>(A, C, t1);
  conj_into<S>(D, conj_part);
  mul_into<S>(conj_part, B, t2);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

  mul_into<S>(D, A, t1);
  conj_into<S>(C, conj_part);
  mul_into<S>(B, conj_part, t3);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t3[i];
}

}  // namespace detail

template <class S>
CDElement<S> cd_mul(const CDElement<S>& a, const CDElement<S>& b) {
  a.check_levels(b);
  std::vector<S> buf(a.size());
  detail::mul_into<S>(a.coeffs(), b.coeffs(), buf);
  return CDElement<S>(a.level(), std::move(buf));
}

template <class S>
CDElement<S> cd_conj(const CDElement<S>& a) {
  CDElement<S> out = a;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

template <class S>
S cd_norm2(const CDElement<S>& a) {
  S s(0.0);
  for (const auto& c : a.coeffs()) s += c * c;
  return s;
}

/// conj(a) / norm2(a); throws ZeroDivisor for a zero-norm element.
template <class S>
CDElement<S> cd_inv(const CDElement<S>& a) {
  const S n2 = cd_norm2(a);
  if (value_of(n2) == 0.0) fail(ErrorCode::ZeroDivisor, "inverse of zero-norm element");
  CDElement<S> out = cd_conj(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] / n2;
  return out;
}

/// Euclidean norm of the coefficient vector.
double cd_abs(const CDElement<double>& a);

/// max(||(aa)b - a(ab)||, ||(ab)b - a(bb)||).
double alternativity_residual(const CDElement<double>& a, const CDElement<double>& b);

struct BasisProduct {
  int sign = 1;
  std::size_t index = 0;
};

/// e_i e_j = sign e_m for every pair of basis units at one level.
class BasisTable {
 public:
  explicit BasisTable(int level);

  int level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return dim_; }
  const BasisProduct& operator()(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  /// `{level, entries:[{i,j,sign,m}]}` in row-major (i, j) order.
  std::string to_json() const;

 private:
  int level_;
  std::size_t dim_;
  std::vector<BasisProduct> table_;
};

inline BasisTable basis_table(int level) { return BasisTable(level); }

}  // namespace moufang
