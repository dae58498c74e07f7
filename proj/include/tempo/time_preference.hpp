#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tempo/membership.hpp"

namespace tempo {

/// A small-soon versus large-late reward problem. The small amount m
/// can be tried n times per large-reward period (n may be rational),
/// and each reward carries its own sense of truth.
struct IntertemporalChoice {
  double m = 0.0;    // small amount, received sooner
  double M = 0.0;    // large amount, received later
  double W0 = 1.0;   // baseline wealth
  double s_m = 1.0;  // sense of truth of the small reward
  double s_M = 1.0;  // sense of truth of the large reward
  double n = 1.0;    // small-reward trials per large-reward period
};

enum class Preference { Sooner, Later };

struct PreferenceResult {
  Preference decision = Preference::Sooner;
  double sooner_factor = 1.0;  // (1 + m/W0)^(n * s_m)
  double later_factor = 1.0;   // (1 + M/W0)^(s_M)
};

namespace detail {

inline double growth_factor(double amount, double W0, double exponent) {
  return std::exp(exponent * std::log1p(amount / W0));
}

}  // namespace detail

/// Decide between repeated small rewards and one large reward by
/// comparing the growth factors (1+m/W0)^(n*s_m) and (1+M/W0)^(s_M).
/// Exact ties fall through to the membership judge's tie policy with
/// the sooner option listed first.
inline PreferenceResult prefer_delayed(const IntertemporalChoice& choice,
                                       const MembershipParams& params = MembershipParams::defaults()) {
  if (!(choice.m > 0.0) || !(choice.M > choice.m)) {
    throw std::domain_error("prefer_delayed: need M > m > 0");
  }
  if (!(choice.W0 > 0.0)) {
    throw std::domain_error("prefer_delayed: baseline wealth must be positive");
  }
  if (!(choice.s_m >= 0.0 && choice.s_m <= 1.0) || !(choice.s_M >= 0.0 && choice.s_M <= 1.0)) {
    throw std::domain_error("prefer_delayed: senses of truth must lie in [0, 1]");
  }
  if (!(choice.n >= 1.0)) {
    throw std::domain_error("prefer_delayed: trial count must be >= 1");
  }
  PreferenceResult result;
  result.sooner_factor = detail::growth_factor(choice.m, choice.W0, choice.n * choice.s_m);
  result.later_factor = detail::growth_factor(choice.M, choice.W0, choice.s_M);
  const Candidate candidates[] = {
      {"sooner", result.sooner_factor - 1.0, choice.s_m},
      {"later", result.later_factor - 1.0, choice.s_M},
  };
  result.decision =
      judge_index(params, candidates) == 0 ? Preference::Sooner : Preference::Later;
  return result;
}

struct ReversalStep {
  int n = 1;
  bool prefers_m2 = false;
  double m1_factor = 1.0;  // (1 + M1/W0)^(((n+1)/n) * s1)
  double m2_factor = 1.0;  // (1 + M2/W0)^(s2)
};

struct ReversalSchedule {
  std::vector<ReversalStep> steps;
  std::optional<int> reversal_at;  // smallest n at which the preference flips to M2
};

/// Horizon analysis of the preference flip between a nearer reward M1
/// and a farther reward M2. Waiting one extra period for M2 forgoes an
/// (n+1)/n-th attempt at M1, so M1 is valued at exponent ((n+1)/n)*s1;
/// as n grows that premium decays and M2 can overtake. Once M2 wins it
/// wins for every larger n. reversal_at is reported only for a genuine
/// flip (M1 preferred at n=1, M2 later).
inline ReversalSchedule reversal_schedule(double M1, double M2, double W0, double s1, double s2,
                                          int n_max,
                                          const MembershipParams& params = MembershipParams::defaults()) {
  if (!(M1 > 0.0) || !(M2 >= M1)) {
    throw std::domain_error("reversal_schedule: need M2 >= M1 > 0");
  }
  if (!(W0 > 0.0)) {
    throw std::domain_error("reversal_schedule: baseline wealth must be positive");
  }
  if (!(s1 > 0.0 && s1 <= 1.0) || !(s2 > 0.0 && s2 <= 1.0)) {
    throw std::domain_error("reversal_schedule: senses of truth must lie in (0, 1]");
  }
  if (n_max < 1) {
    throw std::invalid_argument("reversal_schedule: horizon must be >= 1");
  }
  ReversalSchedule schedule;
  schedule.steps.reserve(static_cast<std::size_t>(n_max));
  const double m2_factor = detail::growth_factor(M2, W0, s2);
  for (int n = 1; n <= n_max; ++n) {
    ReversalStep step;
    step.n = n;
    step.m1_factor = detail::growth_factor(M1, W0, (n + 1.0) / n * s1);
    step.m2_factor = m2_factor;
    const Candidate candidates[] = {
        {"M1", step.m1_factor - 1.0, s1},
        {"M2", step.m2_factor - 1.0, s2},
    };
    step.prefers_m2 = judge_index(params, candidates) == 1;
    if (step.prefers_m2 && !schedule.reversal_at && !schedule.steps.empty() &&
        !schedule.steps.front().prefers_m2) {
      schedule.reversal_at = n;
    }
    schedule.steps.push_back(step);
  }
  return schedule;
}

}  // namespace tempo
