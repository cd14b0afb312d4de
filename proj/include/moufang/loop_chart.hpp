#pragma once

// Analytic Moufang loops realized as unit spheres of the Cayley-Dickson
// algebras of level 1..3 (circle, S^3, S^7). Points are written in graph
// coordinates over the imaginary hyperplane: x <-> sqrt(1-|x|^2) e_0 + x^i e_i,
// so the identity sits at the origin and inversion is negation.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moufang/cayley_dickson.hpp"
#include "moufang/error.hpp"
#include "moufang/jet.hpp"

namespace moufang {

/// Coordinates g^i of a loop element; the identity is the origin.
using LoopPoint = std::vector<double>;

/// Components of a tangent vector at the identity.
using TangentVector = std::vector<double>;

inline constexpr double kDefaultRadius = 0.5;
inline constexpr double kTheoremRadius = 0.35;
inline constexpr double kUnitTolerance = 1e-9;

enum class Bracketing {
  LeftToRight,  // ((g h) g^-1) h^-1
  Paired,       // (g h)(g^-1 h^-1)
  RightNested,  // g (h (g^-1 h^-1))
};

struct MoufangResidual {
  double residual = 0.0;        // |(ag)(ha) - (a(gh))a|
  double bracketing_gap = 0.0;  // |(a(gh))a - a((gh)a)|
};

class LoopChart {
 public:
  explicit LoopChart(int level, double radius = kDefaultRadius);

  int level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return dim_; }
  double radius() const noexcept { return radius_; }
  std::string name() const;

  LoopPoint identity() const { return LoopPoint(dim_, 0.0); }

  template <class S>
  CDElement<S> embed(std::span<const S> x) const {
    check_dim(x.size());
    S n2(0.0);
    for (const auto& c : x) n2 += c * c;
    if (!(value_of(n2) < 1.0)) {
      fail(ErrorCode::ChartDomain, "point has norm >= 1: |x|^2 = " + std::to_string(value_of(n2)));
    }
    CDElement<S> u(level_);
    u[0] = checked_sqrt(S(1.0) - n2);
    for (std::size_t i = 0; i < dim_; ++i) u[i + 1] = x[i];
    return u;
  }

  template <class S>
  std::vector<S> project(const CDElement<S>& u) const {
    if (u.level() != level_) fail(ErrorCode::LevelMismatch, "element level differs from loop level");
    if (!(value_of(u[0]) > 0.0)) {
      fail(ErrorCode::ChartDomain, "real part " + std::to_string(value_of(u[0])) + " is not positive");
    }
    double n2 = 0.0;
    for (const auto& c : u.coeffs()) n2 += value_of(c) * value_of(c);
    if (std::abs(n2 - 1.0) > kUnitTolerance) {
      fail(ErrorCode::NotUnit, "element norm^2 = " + std::to_string(n2));
    }
    return std::vector<S>(u.coeffs().begin() + 1, u.coeffs().end());
  }

  template <class S>
  std::vector<S> mul(std::span<const S> x, std::span<const S> y) const {
    return project(cd_mul(embed(x), embed(y)));
  }

  template <class S>
  std::vector<S> inv(std::span<const S> x) const {
    check_dim(x.size());
    std::vector<S> out(x.begin(), x.end());
    for (auto& c : out) c = -c;
    return out;
  }

  /// g h g^-1 h^-1 under the chosen bracketing.
  template <class S>
  std::vector<S> commutator_map(std::span<const S> g, std::span<const S> h,
                                Bracketing bracketing = Bracketing::LeftToRight) const {
    const auto gi = inv(g);
    const auto hi = inv(h);
    switch (bracketing) {
      case Bracketing::Paired: {
        const auto gh = mul(g, h);
        const auto gihi = mul<S>(gi, hi);
        return mul<S>(gh, gihi);
      }
      case Bracketing::RightNested: {
        const auto gihi = mul<S>(gi, hi);
        const auto hgihi = mul<S>(h, gihi);
        return mul<S>(g, hgihi);
      }
      case Bracketing::LeftToRight:
        break;
    }
    const auto gh = mul(g, h);
    const auto ghg = mul<S>(gh, gi);
    return mul<S>(ghg, hi);
  }

  MoufangResidual moufang_residual(const LoopPoint& a, const LoopPoint& g, const LoopPoint& h) const;

  // Convenience overloads on plain points.
  LoopPoint mul(const LoopPoint& x, const LoopPoint& y) const { return mul<double>(x, y); }
  LoopPoint inv(const LoopPoint& x) const { return inv<double>(x); }
  CDElement<double> embed(const LoopPoint& x) const { return embed<double>(x); }

 private:
  void check_dim(std::size_t n) const {
    if (n != dim_) {
      fail(ErrorCode::InvalidArgument,
           "point has " + std::to_string(n) + " coordinates, loop dimension is " + std::to_string(dim_));
    }
  }

  int level_;
  std::size_t dim_;
  double radius_;
};

/// Loop names accepted on the command line and in config files.
LoopChart make_loop(const std::string& name, double radius = kDefaultRadius);

}  // namespace moufang
