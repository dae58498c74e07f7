#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "tempo/core_math.hpp"
#include "tempo/membership.hpp"
#include "tempo/rng.hpp"

namespace tempo {

/// Temporal quantifier attached to a hypothesis. Next and Always are
/// certainty operators; Sometime and Frequently carry a sense of truth
/// below 1. Always implies Next for judgment purposes (G => GN).
enum class Quantifier { Next, Sometime, Always, Frequently };

inline std::string_view to_string(Quantifier q) {
  switch (q) {
    case Quantifier::Next: return "N";
    case Quantifier::Sometime: return "F";
    case Quantifier::Always: return "G";
    case Quantifier::Frequently: return "GF";
  }
  return "?";
}

inline std::optional<Quantifier> quantifier_from_string(std::string_view s) {
  if (s == "N" || s == "NEXT") return Quantifier::Next;
  if (s == "F" || s == "SOMETIME") return Quantifier::Sometime;
  if (s == "G" || s == "ALWAYS") return Quantifier::Always;
  if (s == "GF" || s == "FREQUENTLY") return Quantifier::Frequently;
  return std::nullopt;
}

/// Frequency-adverb anchors for the sense of truth. The adverb scale is
/// a library convention for input convenience; only the endpoints
/// ("never" = impossible, "always" = certain) are canonical.
inline constexpr std::pair<std::string_view, double> adverb_senses[] = {
    {"never", 0.0},    {"rarely", 0.15}, {"sometimes", 0.4},
    {"often", 0.65},   {"usually", 0.8}, {"always", 1.0},
};

inline std::optional<double> sense_from_adverb(std::string_view adverb) {
  for (const auto& [name, value] : adverb_senses) {
    if (name == adverb) return value;
  }
  return std::nullopt;
}

/// A labeled proposition carrying a proposed change x, a sense of truth
/// s in [0, 1] and a temporal quantifier. Certainty quantifiers (Next,
/// Always) force s = 1.
class Hypothesis {
 public:
  Hypothesis(std::string label, double change, double sense, Quantifier quantifier)
      : label_(std::move(label)), x_(change), s_(sense), quantifier_(quantifier) {
    if (!(x_ >= -1.0)) {
      throw std::domain_error("Hypothesis: change must be >= -1");
    }
    if (!(s_ >= 0.0 && s_ <= 1.0)) {
      throw std::domain_error("Hypothesis: sense of truth must lie in [0, 1]");
    }
    if ((quantifier_ == Quantifier::Next || quantifier_ == Quantifier::Always) && s_ != 1.0) {
      throw std::invalid_argument("Hypothesis: Next/Always require sense of truth 1");
    }
  }

  const std::string& label() const { return label_; }
  double change() const { return x_; }
  double sense() const { return s_; }
  Quantifier quantifier() const { return quantifier_; }

 private:
  std::string label_;
  double x_;
  double s_;
  Quantifier quantifier_;
};

/// Attenuation step: restate the hypothesis with a lower change and
/// maximal certainty in the next-moment frame. The output change is
/// (1+x)^s - 1, so certain hypotheses pass through unchanged.
inline Hypothesis meiosis(const Hypothesis& hyp) {
  return Hypothesis(hyp.label(), meiotic_change(hyp.change(), hyp.sense()), 1.0, Quantifier::Next);
}

/// Exaggeration step: restate a certain hypothesis with a larger change
/// and the given lower sense of truth in the sometime frame. Inverse of
/// meiosis.
inline Hypothesis hyperbole(const Hypothesis& hyp, double target_sense) {
  if (hyp.sense() != 1.0) {
    throw std::invalid_argument("hyperbole: input hypothesis must be certain (sense 1)");
  }
  return Hypothesis(hyp.label(), hyperbolic_change(hyp.change(), target_sense), target_sense,
                    Quantifier::Sometime);
}

enum class CompareMode { Meiosis, Hyperbole };

struct CompareResult {
  std::string winner;
  double change_a = 0.0;  // equalized change argued for a
  double change_b = 0.0;  // equalized change argued for b
};

/// Judge two hypotheses after equalizing their senses of truth. In
/// Meiosis mode both are reduced to the certain next-moment form; in
/// Hyperbole mode both are raised to the smaller of the two senses
/// (exaggeration may only lower certainty). The equalized change at
/// sense t is (1+x)^(s/t) - 1, a common monotone rescaling, so both
/// modes pick the same winner.
inline CompareResult compare_hypotheses(const Hypothesis& a, const Hypothesis& b,
                                        const MembershipParams& params, CompareMode mode) {
  double target = 1.0;
  if (mode == CompareMode::Hyperbole) {
    target = std::min(a.sense(), b.sense());
    if (target == 0.0) {
      throw std::domain_error("compare_hypotheses: hyperbole mode requires nonzero senses of truth");
    }
  }
  const auto equalize = [target](const Hypothesis& h) {
    if (h.sense() == 0.0) return 0.0;
    if (h.change() == -1.0) return -1.0;
    return std::expm1(h.sense() / target * std::log1p(h.change()));
  };
  const Candidate candidates[] = {
      {a.label(), equalize(a), a.sense()},
      {b.label(), equalize(b), b.sense()},
  };
  return CompareResult{judge(params, candidates), candidates[0].change, candidates[1].change};
}

/// Monte Carlo estimate of the per-period growth factor of a hypothesis
/// that applies the factor 1+X with probability p each period. The
/// geometric mean over `periods` periods converges to (1+X)^p. Wealth is
/// accumulated in the log domain, so long horizons cannot overflow.
inline double simulate_time_average(double X, double p, std::int64_t periods, std::uint64_t seed) {
  if (!(X > -1.0)) {
    throw std::domain_error("simulate_time_average: change must be > -1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("simulate_time_average: probability must lie in [0, 1]");
  }
  if (periods < 1) {
    throw std::invalid_argument("simulate_time_average: need at least one period");
  }
  SplitMix64 rng(seed);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < periods; ++i) {
    if (rng.next_unit() < p) ++hits;
  }
  if (hits == 0) return 1.0;
  if (hits == periods) return 1.0 + X;
  return std::exp(std::log1p(X) * static_cast<double>(hits) / static_cast<double>(periods));
}

/// Same oracle for a two-outcome disjunction: factor 1+x1 with
/// probability p, 1+x2 with probability q, otherwise no change.
/// Converges to (1+x1)^p (1+x2)^q.
inline double simulate_disjunction_average(double x1, double p, double x2, double q,
                                           std::int64_t periods, std::uint64_t seed) {
  if (!(x1 > -1.0 && x2 > -1.0)) {
    throw std::domain_error("simulate_disjunction_average: changes must be > -1");
  }
  if (!(p >= 0.0 && q >= 0.0 && p + q <= 1.0)) {
    throw std::domain_error("simulate_disjunction_average: probability mass must lie in [0, 1]");
  }
  if (periods < 1) {
    throw std::invalid_argument("simulate_disjunction_average: need at least one period");
  }
  SplitMix64 rng(seed);
  double log_wealth = 0.0;
  for (std::int64_t i = 0; i < periods; ++i) {
    const double u = rng.next_unit();
    if (u < p) {
      log_wealth += std::log1p(x1);
    } else if (u < p + q) {
      log_wealth += std::log1p(x2);
    }
  }
  return std::exp(log_wealth / static_cast<double>(periods));
}

}  // namespace tempo
