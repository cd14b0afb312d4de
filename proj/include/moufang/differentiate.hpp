#pragma once

// Directional differentiation of vector maps written once over a generic
// scalar. Callables take `const std::vector<S>&` and return `std::vector<S>`
// for S in {double, Jet1, Jet2}; generic lambdas are the usual form.

#include <cstddef>
#include <span>
#include <vector>

#include "moufang/error.hpp"
#include "moufang/jet.hpp"

namespace moufang {

inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdMixedStep = 1e-4;

struct Jet1Result {
  std::vector<double> value;
  std::vector<double> deriv;
};

struct Jet2Result {
  std::vector<double> value;
  std::vector<double> du;
  std::vector<double> dv;
  std::vector<double> dudv;
};

namespace detail {
inline void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) fail(ErrorCode::InvalidArgument, "seed direction and point differ in dimension");
}
}  // namespace detail

/// f(x) and Df(x)·u.
template <class F>
Jet1Result jet1_eval(F&& f, std::span<const double> x, std::span<const double> u) {
  detail::check_same_size(x.size(), u.size());
  std::vector<Jet1> in(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) in[i] = Jet1(x[i], u[i]);
  const std::vector<Jet1> out = f(in);
  Jet1Result r;
  r.value.reserve(out.size());
  r.deriv.reserve(out.size());
  for (const auto& e : out) {
    r.value.push_back(e.value);
    r.deriv.push_back(e.deriv);
  }
  return r;
}

/// f(x), Df·u, Df·v and the mixed second derivative D²f(u, v).
template <class F>
Jet2Result jet2_eval(F&& f, std::span<const double> x, std::span<const double> u,
                     std::span<const double> v) {
  detail::check_same_size(x.size(), u.size());
  detail::check_same_size(x.size(), v.size());
  std::vector<Jet2> in(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) in[i] = Jet2(x[i], u[i], v[i], 0.0);
  const std::vector<Jet2> out = f(in);
  Jet2Result r;
  for (const auto& e : out) {
    r.value.push_back(e.value);
    r.du.push_back(e.du);
    r.dv.push_back(e.dv);
    r.dudv.push_back(e.dudv);
  }
  return r;
}

namespace detail {
inline std::vector<double> offset(std::span<const double> x, std::span<const double> u, double h) {
  std::vector<double> p(x.begin(), x.end());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += h * u[i];
  return p;
}
inline std::vector<double> offset2(std::span<const double> x, std::span<const double> u, double a,
                                   std::span<const double> v, double b) {
  std::vector<double> p(x.begin(), x.end());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += a * u[i] + b * v[i];
  return p;
}
}  // namespace detail

/// Central difference (f(x+hu) - f(x-hu)) / 2h.
template <class F>
std::vector<double> fd_directional(F&& f, std::span<const double> x, std::span<const double> u,
                                   double h = kFdStep) {
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  detail::check_same_size(x.size(), u.size());
  const std::vector<double> plus = f(detail::offset(x, u, h));
  const std::vector<double> minus = f(detail::offset(x, u, -h));
  std::vector<double> d(plus.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (plus[i] - minus[i]) / (2.0 * h);
  return d;
}

/// Nested central difference for D²f(u, v).
template <class F>
std::vector<double> fd_mixed(F&& f, std::span<const double> x, std::span<const double> u,
                             std::span<const double> v, double h = kFdMixedStep) {
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  detail::check_same_size(x.size(), u.size());
  detail::check_same_size(x.size(), v.size());
  const std::vector<double> pp = f(detail::offset2(x, u, h, v, h));
  const std::vector<double> pm = f(detail::offset2(x, u, h, v, -h));
  const std::vector<double> mp = f(detail::offset2(x, u, -h, v, h));
  const std::vector<double> mm = f(detail::offset2(x, u, -h, v, -h));
  std::vector<double> d(pp.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h);
  return d;
}

/// Which derivative route a computation takes. Jets are exact to rounding;
/// finite differences are the independent oracle.
enum class Backend { Jet, FiniteDifference };

template <class F>
std::vector<double> directional(Backend backend, F&& f, std::span<const double> x,
                                std::span<const double> u) {
  if (backend == Backend::Jet) return jet1_eval(f, x, u).deriv;
  return fd_directional(f, x, u);
}

template <class F>
std::vector<double> mixed(Backend backend, F&& f, std::span<const double> x, std::span<const double> u,
                          std::span<const double> v) {
  if (backend == Backend::Jet) return jet2_eval(f, x, u, v).dudv;
  return fd_mixed(f, x, u, v);
}

/// ||a - b|| / max(1, ||a||): the jet/FD agreement measure used throughout.
double relative_discrepancy(std::span<const double> a, std::span<const double> b);

}  // namespace moufang
