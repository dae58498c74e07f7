#pragma once

#include <cmath>
#include <stdexcept>

namespace tempo {

/// Shape threshold below which the generalized exponential/logarithm
/// switch to their exp/ln limit branch. With the log-domain evaluation
/// used here this keeps |gexp(h,a) - exp(a)| under 1e-6 for |a| <= 3
/// on both sides of the switch.
inline constexpr double gexp_limit_eps = 1e-8;

/// Generalized exponential (1 + h*a)^(1/h), continuous in h with
/// gexp(0, a) = exp(a). Strictly increasing in a.
///
/// Throws std::domain_error when 1 + h*a <= 0, i.e. the argument left
/// the real domain of the function.
inline double gexp(double h, double a) {
  if (std::abs(h) < gexp_limit_eps) {
    return std::exp(a);
  }
  const double bracket = 1.0 + h * a;
  if (!(bracket > 0.0)) {
    throw std::domain_error("gexp: 1 + h*a must be positive");
  }
  // log-domain form avoids cancellation for small |h|
  return std::exp(std::log1p(h * a) / h);
}

/// Generalized logarithm (v^p - 1)/p, continuous in p with
/// glog(0, v) = ln(v). Inverse of gexp in the shape parameter:
/// glog(h, gexp(h, a)) == a on the shared domain.
inline double glog(double p, double v) {
  if (!(v > 0.0)) {
    throw std::domain_error("glog: argument must be positive");
  }
  if (std::abs(p) < gexp_limit_eps) {
    return std::log(v);
  }
  return std::expm1(p * std::log(v)) / p;
}

/// Attenuated change (1+X)^s - 1: the lower outcome whose certain
/// repetition matches the time average of X occurring with long-run
/// frequency s. Shrinks toward 0 as s -> 0 and is bounded by s*X for
/// X >= 0 (tangent line at the origin).
inline double meiotic_change(double X, double s) {
  if (!(X >= -1.0)) {
    throw std::domain_error("meiotic_change: change must be >= -1");
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("meiotic_change: sense of truth must lie in [0, 1]");
  }
  if (s == 0.0) return 0.0;
  if (s == 1.0) return X;
  if (X == -1.0) return -1.0;
  return std::expm1(s * std::log1p(X));
}

/// Inflated change (1+y)^(1/s) - 1, the inverse of meiotic_change:
/// meiotic_change(hyperbolic_change(y, s), s) == y. Exaggerates gains
/// and deepens losses; identity at s = 1.
inline double hyperbolic_change(double y, double s) {
  if (!(y >= -1.0)) {
    throw std::domain_error("hyperbolic_change: change must be >= -1");
  }
  if (!(s > 0.0 && s <= 1.0)) {
    throw std::domain_error("hyperbolic_change: sense of truth must lie in (0, 1]");
  }
  if (s == 1.0) return y;
  if (y == -1.0) return -1.0;
  return std::expm1(std::log1p(y) / s);
}

/// A multiplicative wealth update 1 + x. The relative change x is
/// validated at construction: x >= -1 always, with x = -1 meaning total
/// ruin (factor 0). Invalid values are rejected, never clamped.
class ChangeFactor {
 public:
  explicit ChangeFactor(double change) : x_(change) {
    if (!(change >= -1.0)) {
      throw std::domain_error("ChangeFactor: change must be >= -1");
    }
  }

  static ChangeFactor from_factor(double factor) { return ChangeFactor(factor - 1.0); }

  double change() const { return x_; }
  double factor() const { return 1.0 + x_; }

  /// Sequential composition multiplies factors; the result is again a
  /// valid change because both factors are >= 0.
  friend ChangeFactor operator*(ChangeFactor a, ChangeFactor b) {
    return from_factor(a.factor() * b.factor());
  }

  friend bool operator==(ChangeFactor a, ChangeFactor b) { return a.x_ == b.x_; }

 private:
  double x_;
};

}  // namespace tempo
