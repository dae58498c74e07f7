#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "tempo/core_math.hpp"

namespace tempo {

/// Parameters of the "bigger is better" fuzzy-goal family
///
///   mu(x) = 1 - [1 - alpha*beta*(x+1)]^(1/alpha)
///
/// which must map [-1, inf) onto [0, 1) with mu(-1) = 0, mu strictly
/// increasing and mu -> 1 at infinity. beta > 0 is required for the
/// derivative sign; the remaining conditions are checked numerically on
/// a fixed grid at construction, so an (alpha, beta) pair that drives
/// the bracket negative anywhere on the grid is rejected.
class MembershipParams {
 public:
  MembershipParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(beta > 0.0)) {
      throw std::invalid_argument("MembershipParams: beta must be positive");
    }
    validate_on_grid();
  }

  /// The only concrete parameterization suggested by the model family:
  /// alpha = -1.001, beta = 1.3.
  static MembershipParams defaults() { return MembershipParams(-1.001, 1.3); }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  void validate_on_grid() const;

  double alpha_;
  double beta_;
};

/// Membership degree of a change under the given goal parameters.
/// Strictly increasing, mu(-1) = 0, sup = 1 (never attained).
inline double mu(const MembershipParams& params, double x) {
  if (!(x >= -1.0)) {
    throw std::domain_error("mu: change must be >= -1");
  }
  return 1.0 - gexp(params.alpha(), -params.beta() * (x + 1.0));
}

inline void MembershipParams::validate_on_grid() const {
  static constexpr double grid[] = {-1.0, -0.99, -0.9, -0.5, -0.1, 0.0,  0.1,
                                    0.5,  1.0,   2.0,  5.0,  10.0, 1e2,  1e3,
                                    1e4,  1e5,   1e6};
  double prev = -1.0;
  bool first = true;
  for (double x : grid) {
    double value;
    try {
      value = mu(*this, x);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("MembershipParams: bracket leaves the real domain on [-1, 1e6]");
    }
    if (!(value >= 0.0 && value < 1.0)) {
      throw std::invalid_argument("MembershipParams: membership leaves [0, 1)");
    }
    if (first) {
      if (value != 0.0) {
        throw std::invalid_argument("MembershipParams: mu(-1) must be 0");
      }
      first = false;
    } else if (!(value > prev)) {
      throw std::invalid_argument("MembershipParams: membership must be strictly increasing");
    }
    prev = value;
  }
}

/// A labeled change submitted to judge(). The sense of truth only
/// participates in tie-breaking.
struct Candidate {
  std::string label;
  double change = 0.0;
  double sense = 1.0;
};

/// Index of the candidate with maximal membership degree. Because mu is
/// strictly increasing this is the candidate with the largest change;
/// the change itself settles membership ties caused by saturation near
/// 1. Exact ties prefer the larger sense of truth, then the first
/// listed.
inline std::size_t judge_index(const MembershipParams& params, std::span<const Candidate> candidates) {
  if (candidates.empty()) {
    throw std::invalid_argument("judge: candidate list is empty");
  }
  std::size_t best = 0;
  double best_mu = mu(params, candidates[0].change);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double m = mu(params, candidates[i].change);
    const bool wins = m > best_mu ||
                      (m == best_mu && candidates[i].change > candidates[best].change) ||
                      (m == best_mu && candidates[i].change == candidates[best].change &&
                       candidates[i].sense > candidates[best].sense);
    if (wins) {
      best = i;
      best_mu = m;
    }
  }
  return best;
}

/// Label of the winning candidate.
inline std::string judge(const MembershipParams& params, std::span<const Candidate> candidates) {
  return candidates[judge_index(params, candidates)].label;
}

}  // namespace tempo
