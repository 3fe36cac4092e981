#pragma once

#include "parinv/rational.hpp"

#include <ostream>

namespace parinv {

/// a + b·ε with ε² = 0. Evaluating a polynomial at x + ε·v yields f(x) + ε·Df(x)[v].
struct DualScalar {
  Rational value;
  Rational derivative;

  DualScalar() = default;
  DualScalar(Rational v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  DualScalar(int v) : value(v) {}                  // NOLINT(google-explicit-constructor)
  DualScalar(Rational v, Rational d) : value(std::move(v)), derivative(std::move(d)) {}

  bool is_zero() const { return value.is_zero() && derivative.is_zero(); }

  DualScalar& operator+=(const DualScalar& o) {
    value += o.value;
    derivative += o.derivative;
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    value -= o.value;
    derivative -= o.derivative;
    return *this;
  }
  DualScalar& operator*=(const DualScalar& o) {
    derivative = value * o.derivative + derivative * o.value;
    value *= o.value;
    return *this;
  }
  /// Requires a nonzero value part in the divisor; throws std::domain_error otherwise.
  DualScalar& operator/=(const DualScalar& o);

  friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
  friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
  friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
  friend DualScalar operator/(DualScalar a, const DualScalar& b) { return a /= b; }
  friend DualScalar operator-(const DualScalar& a) { return {-a.value, -a.derivative}; }

  friend bool operator==(const DualScalar&, const DualScalar&) = default;
  friend std::ostream& operator<<(std::ostream& os, const DualScalar& d) {
    return os << d.value << " + " << d.derivative << "e";
  }
};

}  // namespace parinv
