#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tempo/core_math.hpp"
#include "tempo/membership.hpp"

namespace tempo {

/// Shape of the loss branch: p is the probability/sense of the loss
/// hypothesis, rho exaggerates its steepness. rho = 1 is the bare
/// hyperbole; slightly above 1 is the realistic choice.
class SCurveParams {
 public:
  SCurveParams(double p, double rho) : p_(p), rho_(rho) {
    if (!(p_ > 0.0 && p_ <= 1.0)) {
      throw std::domain_error("SCurveParams: probability must lie in (0, 1]");
    }
    if (!(rho_ >= 1.0)) {
      throw std::domain_error("SCurveParams: convexity rate must be >= 1");
    }
  }

  double p() const { return p_; }
  double rho() const { return rho_; }

 private:
  double p_;
  double rho_;
};

/// Expected change of a gain x received with probability p: the
/// meiotic form (1+x)^p - 1. Concave in x and never above the tangent
/// line p*x.
inline double meiotic_value(double p, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("meiotic_value: gain must be >= 0");
  }
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("meiotic_value: probability must lie in (0, 1]");
  }
  return meiotic_change(x, p);
}

/// Expected change of a certain loss x seen through the hyperbolic
/// exaggeration: (1 + p*rho*x)^(1/p) - 1. Convex, zero at zero, below
/// the identity line for mild losses and above it for deep ones.
inline double hyperbolic_loss_value(const SCurveParams& params, double x) {
  if (!(x > -1.0 && x <= 0.0)) {
    throw std::domain_error("hyperbolic_loss_value: loss must lie in (-1, 0]");
  }
  if (!(1.0 + params.p() * params.rho() * x > 0.0)) {
    throw std::domain_error("hyperbolic_loss_value: loss exceeds the curve's domain");
  }
  return gexp(params.p(), params.rho() * x) - 1.0;
}

/// Prospect-style value curve: meiotic gains, hyperbolic losses.
/// Continuous at 0 with value 0.
inline double s_curve(const SCurveParams& params, double x) {
  if (!(x > -1.0)) {
    throw std::domain_error("s_curve: change must be > -1");
  }
  if (x >= 0.0) return meiotic_value(params.p(), x);
  return hyperbolic_loss_value(params, x);
}

/// Loss level where the convex loss curve re-crosses the identity
/// line. Scans for sign changes of hyperbolic_loss_value(x) - x over
/// the curve's domain, then bisects to 1e-10. No interior crossing
/// (rho at or near 1) yields nullopt; more than one sign change means
/// the assumed root structure is broken and is reported as an error.
inline std::optional<double> risk_crossover(const SCurveParams& params) {
  constexpr double edge = 1e-9;
  double lo = -1.0;
  const double prx = params.p() * params.rho();
  if (prx > 1.0) lo = std::max(lo, -1.0 / prx);
  lo += edge;
  const double hi = -edge;
  if (!(lo < hi)) return std::nullopt;

  const auto gap = [&params](double x) { return hyperbolic_loss_value(params, x) - x; };

  constexpr int cells = 1024;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int crossings = 0;
  double prev_x = lo;
  double prev_g = gap(lo);
  for (int i = 1; i <= cells; ++i) {
    const double x = lo + (hi - lo) * i / cells;
    const double g = gap(x);
    if ((prev_g < 0.0 && g > 0.0) || (prev_g > 0.0 && g < 0.0)) {
      ++crossings;
      bracket_lo = prev_x;
      bracket_hi = x;
    } else if (g == 0.0 && i < cells) {
      ++crossings;
      bracket_lo = bracket_hi = x;
    }
    prev_x = x;
    prev_g = g;
  }
  if (crossings == 0) return std::nullopt;
  if (crossings > 1) {
    throw std::runtime_error("risk_crossover: multiple crossings detected");
  }
  if (bracket_lo == bracket_hi) return bracket_lo;

  double g_lo = gap(bracket_lo);
  while (bracket_hi - bracket_lo > 1e-10) {
    const double mid = 0.5 * (bracket_lo + bracket_hi);
    const double g_mid = gap(mid);
    if (g_mid == 0.0) return mid;
    if ((g_lo < 0.0) == (g_mid < 0.0)) {
      bracket_lo = mid;
      g_lo = g_mid;
    } else {
      bracket_hi = mid;
    }
  }
  return 0.5 * (bracket_lo + bracket_hi);
}

enum class LotteryPreference { Certain, Uncertain };

/// Sure gain p*x versus gaining x with probability p. The certain
/// option's tangent line dominates the meiotic curve, so certainty
/// wins for every x > 0, p < 1; degenerate ties also go to the
/// certain option.
inline LotteryPreference judge_gain_lottery(double x, double p, const MembershipParams& params) {
  if (!(x >= 0.0)) {
    throw std::domain_error("judge_gain_lottery: gain must be >= 0");
  }
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("judge_gain_lottery: probability must lie in (0, 1]");
  }
  const Candidate candidates[] = {
      {"certain", p * x, 1.0},
      {"uncertain", meiotic_value(p, x), p},
  };
  return judge_index(params, candidates) == 0 ? LotteryPreference::Certain
                                              : LotteryPreference::Uncertain;
}

/// Sure loss (valued through the hyperbolic curve) versus losing x
/// with probability p. Mild losses favor the gamble (risk seeking);
/// losses deeper than the crossover favor the sure loss (ruin
/// aversion); the exact crossover ties and goes to the certain option.
inline LotteryPreference judge_loss_lottery(double x, const SCurveParams& scurve,
                                            const MembershipParams& params) {
  if (!(x > -1.0 && x < 0.0)) {
    throw std::domain_error("judge_loss_lottery: loss must lie in (-1, 0)");
  }
  const Candidate candidates[] = {
      {"certain", hyperbolic_loss_value(scurve, x), scurve.p()},
      {"uncertain", x, scurve.p()},
  };
  return judge_index(params, candidates) == 0 ? LotteryPreference::Certain
                                              : LotteryPreference::Uncertain;
}

struct DisjunctionChange {
  double change = 0.0;
  bool next_form = false;  // probability mass sums to 1: certain to resolve next period
};

/// Expected change of the two-outcome disjunction "gain x1 with
/// probability p or lose x2 with probability q": (1+x1)^p (1+x2)^q - 1.
inline DisjunctionChange disjunction_change(double x1, double p, double x2, double q) {
  if (!(x1 >= 0.0) || !(x2 > -1.0 && x2 <= 0.0)) {
    throw std::domain_error("disjunction_change: need x1 >= 0 >= x2 > -1");
  }
  if (!(p >= 0.0) || !(q >= 0.0)) {
    throw std::domain_error("disjunction_change: probabilities must be >= 0");
  }
  if (p + q > 1.0 + 1e-12) {
    throw std::domain_error("disjunction_change: probability mass exceeds 1");
  }
  DisjunctionChange result;
  result.change = std::expm1(p * std::log1p(x1) + q * std::log1p(x2));
  result.next_form = std::abs(p + q - 1.0) <= 1e-12;
  return result;
}

/// A disjunction is fair when its expected change is positive.
inline bool is_fair(double x1, double p, double x2, double q) {
  return disjunction_change(x1, p, x2, q).change > 0.0;
}

/// Change required to undo a change x: 1/(1+x) - 1. Restoring a loss
/// takes a strictly larger gain, which is where loss aversion comes
/// from.
inline double restore_change(double x) {
  if (!(x > -1.0)) {
    throw std::domain_error("restore_change: change must be > -1");
  }
  return 1.0 / (1.0 + x) - 1.0;
}

/// A general finite lottery over wealth changes. Probability mass may
/// sum to less than 1 (the remainder is "nothing happens"); mass
/// exactly 1 is the certain-to-resolve N-form.
class Lottery {
 public:
  Lottery(std::vector<std::pair<double, double>> outcomes, double W0)
      : outcomes_(std::move(outcomes)), W0_(W0) {
    if (!(W0_ > 0.0)) {
      throw std::domain_error("Lottery: baseline wealth must be positive");
    }
    double mass = 0.0;
    for (const auto& [amount, prob] : outcomes_) {
      if (!(prob >= 0.0 && prob <= 1.0)) {
        throw std::domain_error("Lottery: outcome probabilities must lie in [0, 1]");
      }
      if (!(amount / W0_ > -1.0)) {
        throw std::domain_error("Lottery: outcome would be worse than ruin");
      }
      mass += prob;
    }
    if (mass > 1.0 + 1e-12) {
      throw std::domain_error("Lottery: probability mass exceeds 1");
    }
    mass_ = mass;
  }

  const std::vector<std::pair<double, double>>& outcomes() const { return outcomes_; }
  double W0() const { return W0_; }

  bool is_certain() const { return std::abs(mass_ - 1.0) <= 1e-12; }

  std::vector<double> changes() const {
    std::vector<double> xs;
    xs.reserve(outcomes_.size());
    for (const auto& [amount, prob] : outcomes_) xs.push_back(amount / W0_);
    return xs;
  }

  /// Product-form expected change: prod (1+x_i)^(p_i) - 1.
  double expected_change() const {
    double log_factor = 0.0;
    for (const auto& [amount, prob] : outcomes_) {
      log_factor += prob * std::log1p(amount / W0_);
    }
    return std::expm1(log_factor);
  }

 private:
  std::vector<std::pair<double, double>> outcomes_;
  double W0_;
  double mass_ = 0.0;
};

}  // namespace tempo
