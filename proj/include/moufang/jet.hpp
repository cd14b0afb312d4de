#pragma once

// Forward-mode jets. Jet1 carries one directional derivative, Jet2 carries two
// independent seed directions together with the mixed second partial.
// Every chart map in this library is a composition of +, -, *, / and sqrt, so
// only those operations are lifted.

#include <cmath>
#include <concepts>
#include <string>

#include "moufang/error.hpp"

namespace moufang {

struct Jet1 {
  double value = 0.0;
  double deriv = 0.0;

  constexpr Jet1() = default;
  constexpr Jet1(double v) : value(v) {}  // NOLINT: constants lift implicitly
  constexpr Jet1(double v, double d) : value(v), deriv(d) {}

  constexpr Jet1& operator+=(const Jet1& o) { value += o.value; deriv += o.deriv; return *this; }
  constexpr Jet1& operator-=(const Jet1& o) { value -= o.value; deriv -= o.deriv; return *this; }
  constexpr Jet1& operator*=(const Jet1& o) {
    deriv = value * o.deriv + deriv * o.value;
    value *= o.value;
    return *this;
  }
  constexpr Jet1& operator/=(const Jet1& o);
};

constexpr Jet1 operator-(const Jet1& a) { return {-a.value, -a.deriv}; }
constexpr Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
constexpr Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
constexpr Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
constexpr Jet1 operator/(const Jet1& a, const Jet1& b) {
  const double q = a.value / b.value;
  return {q, (a.deriv - q * b.deriv) / b.value};
}
constexpr Jet1& Jet1::operator/=(const Jet1& o) { return *this = *this / o; }

inline Jet1 sqrt(const Jet1& a) {
  if (!(a.value > 0.0)) {
    fail(ErrorCode::Domain, "sqrt of non-positive jet value " + std::to_string(a.value));
  }
  const double s = std::sqrt(a.value);
  return {s, a.deriv / (2.0 * s)};
}

struct Jet2 {
  double value = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double dudv = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double v) : value(v) {}  // NOLINT
  constexpr Jet2(double v, double u, double w, double uw) : value(v), du(u), dv(w), dudv(uw) {}

  constexpr Jet2& operator+=(const Jet2& o) {
    value += o.value; du += o.du; dv += o.dv; dudv += o.dudv;
    return *this;
  }
  constexpr Jet2& operator-=(const Jet2& o) {
    value -= o.value; du -= o.du; dv -= o.dv; dudv -= o.dudv;
    return *this;
  }
  constexpr Jet2& operator*=(const Jet2& o) {
    dudv = dudv * o.value + du * o.dv + dv * o.du + value * o.dudv;
    du = du * o.value + value * o.du;
    dv = dv * o.value + value * o.dv;
    value *= o.value;
    return *this;
  }
};

constexpr Jet2 operator-(const Jet2& a) { return {-a.value, -a.du, -a.dv, -a.dudv}; }
constexpr Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
constexpr Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
constexpr Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }

// Lifts a scalar function through its value, first and second derivative.
constexpr Jet2 lift(const Jet2& a, double f, double f1, double f2) {
  return {f, f1 * a.du, f1 * a.dv, f1 * a.dudv + f2 * a.du * a.dv};
}

constexpr Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double inv = 1.0 / b.value;
  return a * lift(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet2 sqrt(const Jet2& a) {
  if (!(a.value > 0.0)) {
    fail(ErrorCode::Domain, "sqrt of non-positive jet value " + std::to_string(a.value));
  }
  const double s = std::sqrt(a.value);
  return lift(a, s, 0.5 / s, -0.25 / (s * a.value));
}

constexpr double value_of(double a) { return a; }
constexpr double value_of(const Jet1& a) { return a.value; }
constexpr double value_of(const Jet2& a) { return a.value; }

template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Jet1> || std::same_as<S, Jet2>;

// Plain sqrt with the same domain contract as the jet liftings.
inline double checked_sqrt(double a) {
  if (!(a > 0.0) && a != 0.0) {
    fail(ErrorCode::Domain, "sqrt of negative value " + std::to_string(a));
  }
  return std::sqrt(a);
}
inline Jet1 checked_sqrt(const Jet1& a) { return sqrt(a); }
inline Jet2 checked_sqrt(const Jet2& a) { return sqrt(a); }

}  // namespace moufang
