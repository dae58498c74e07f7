#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempo/core_math.hpp"

namespace tempo {

/// Parameters of the generalized-exponential discount family
/// (1 - h*rho*n)^(1/h). Hyperbolicity h is at most zero; the limit
/// h -> 0 recovers plain exponential discounting exp(-rho*n).
class DiscountParams {
 public:
  DiscountParams(double h, double rho) : h_(h), rho_(rho) {
    if (!(h_ <= 0.0)) {
      throw std::domain_error("DiscountParams: hyperbolicity must be <= 0");
    }
    if (!(rho_ > 0.0)) {
      throw std::domain_error("DiscountParams: rate must be positive");
    }
  }

  double h() const { return h_; }
  double rho() const { return rho_; }

 private:
  double h_;
  double rho_;
};

/// Discount factor for a delay of n periods. Equals 1 at n = 0 and
/// decreases strictly in n.
inline double discount(const DiscountParams& params, double n) {
  if (!(n >= 0.0)) {
    throw std::domain_error("discount: delay must be >= 0");
  }
  return gexp(params.h(), -params.rho() * n);
}

/// Derive discount parameters from the intertemporal-arbitrage setup:
/// a small reward can be tried n times per large-reward period, the
/// rewards carry senses of truth s_m and s_M, and kappa scales the
/// equivalent amount against baseline wealth W0. The derived h is
/// always negative.
inline DiscountParams params_from_arbitrage(double s_m, double s_M, double n, double kappa,
                                            double W0) {
  if (!(s_m > 0.0 && s_m <= 1.0) || !(s_M > 0.0 && s_M <= 1.0)) {
    throw std::domain_error("params_from_arbitrage: senses of truth must lie in (0, 1]");
  }
  if (!(n >= 1.0)) {
    throw std::domain_error("params_from_arbitrage: trial count must be >= 1");
  }
  if (!(kappa > 0.0) || !(W0 > 0.0)) {
    throw std::domain_error("params_from_arbitrage: scale and wealth must be positive");
  }
  return DiscountParams(-s_M / (s_m * n), kappa * s_m / W0);
}

/// Continuously-compounded annual rate implied by taking M after t
/// years instead of m now: ln(M/m)/t.
inline double annualized_rate(double m, double M, double t) {
  if (!(m > 0.0) || !(M > m)) {
    throw std::domain_error("annualized_rate: need M > m > 0");
  }
  if (!(t > 0.0)) {
    throw std::domain_error("annualized_rate: delay must be positive");
  }
  return std::log(M / m) / t;
}

struct SubadditiveSplit {
  double divided = 0.0;    // discount(a) * discount(b)
  double undivided = 0.0;  // discount(a + b)
};

/// Discounting a delay in two pieces versus in one. For h < 0 and
/// a, b > 0 the divided product is strictly smaller, which is the
/// source of the time and magnitude effects.
inline SubadditiveSplit subadditive_combine(const DiscountParams& params, double a, double b) {
  return SubadditiveSplit{discount(params, a) * discount(params, b), discount(params, a + b)};
}

struct DiscountPoint {
  double delay = 0.0;
  double discount = 1.0;
};

struct DiscountFit {
  double h = 0.0;
  double rho = 0.0;
  double residual = 0.0;  // sum of squared errors at (h, rho)
  bool converged = false;

  DiscountParams params() const { return DiscountParams(h, rho); }
};

namespace detail {

// Curve evaluation tolerant of out-of-domain trial points; the fitter
// treats NaN as an infinitely bad residual.
inline double discount_eval(double h, double rho, double n) {
  if (std::abs(h) < gexp_limit_eps) return std::exp(-rho * n);
  const double bracket = 1.0 - h * rho * n;
  if (!(bracket > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(std::log(bracket) / h);
}

inline double fit_sse(double h, double rho, std::span<const DiscountPoint> points) {
  double sse = 0.0;
  for (const auto& pt : points) {
    const double d = discount_eval(h, rho, pt.delay);
    if (std::isnan(d)) return std::numeric_limits<double>::infinity();
    const double r = d - pt.discount;
    sse += r * r;
  }
  return sse;
}

}  // namespace detail

/// Least-squares fit of (h, rho) to observed indifference points.
/// Coarse log-spaced grid search seeds a Nelder-Mead simplex over
/// (h, log rho); h is held <= 0 unless allow_positive_h is set (a
/// diagnostic mode for comparing against the unconstrained family).
/// Stops when the simplex diameter drops below 1e-9 or after 1e4
/// objective evaluations, whichever comes first; the converged flag
/// records which.
inline DiscountFit fit_discount(std::span<const DiscountPoint> points,
                                bool allow_positive_h = false) {
  if (points.size() < 2) {
    throw std::invalid_argument("fit_discount: need at least two points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].delay >= 0.0)) {
      throw std::domain_error("fit_discount: delays must be >= 0");
    }
    if (!(points[i].discount > 0.0 && points[i].discount <= 1.0)) {
      throw std::domain_error("fit_discount: discount factors must lie in (0, 1]");
    }
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].delay == points[j].delay) {
        throw std::invalid_argument("fit_discount: delays must be distinct");
      }
    }
  }

  long evals = 0;
  constexpr long max_evals = 10000;
  const auto objective = [&](double h, double log_rho) {
    ++evals;
    if (!allow_positive_h && h > 0.0) return std::numeric_limits<double>::infinity();
    return detail::fit_sse(h, std::exp(log_rho), points);
  };

  // Seed from a coarse grid; log-spaced in |h| and rho.
  double best_h = -1.0;
  double best_lr = 0.0;
  double best_sse = std::numeric_limits<double>::infinity();
  constexpr int grid_n = 40;
  for (int i = 0; i < grid_n; ++i) {
    const double lh = -6.0 + 7.0 * i / (grid_n - 1);  // log10|h| in [-6, 1]
    const double habs = std::pow(10.0, lh);
    for (int sign = 0; sign < (allow_positive_h ? 2 : 1); ++sign) {
      const double h = sign == 0 ? -habs : habs;
      for (int j = 0; j < grid_n; ++j) {
        const double lr = std::log(1e-4) + (std::log(10.0) - std::log(1e-4)) * j / (grid_n - 1);
        const double sse = objective(h, lr);
        if (sse < best_sse) {
          best_sse = sse;
          best_h = h;
          best_lr = lr;
        }
      }
    }
  }

  // Nelder-Mead refinement on (h, log rho).
  struct Vertex {
    std::array<double, 2> x;
    double f;
  };
  const auto eval = [&](const std::array<double, 2>& x) { return objective(x[0], x[1]); };
  std::array<Vertex, 3> simplex;
  simplex[0] = {{best_h, best_lr}, best_sse};
  const double dh = std::max(std::abs(best_h) * 0.25, 1e-7);
  const double dl = 0.25;
  simplex[1] = {{best_h - dh, best_lr}, 0.0};
  simplex[2] = {{best_h, best_lr + dl}, 0.0};
  simplex[1].f = eval(simplex[1].x);
  simplex[2].f = eval(simplex[2].x);

  bool converged = false;
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    double diameter = 0.0;
    for (int i = 1; i < 3; ++i) {
      for (int d = 0; d < 2; ++d) {
        diameter = std::max(diameter, std::abs(simplex[i].x[d] - simplex[0].x[d]));
      }
    }
    if (diameter < 1e-9) {
      converged = true;
      break;
    }

    const std::array<double, 2> centroid = {(simplex[0].x[0] + simplex[1].x[0]) / 2.0,
                                            (simplex[0].x[1] + simplex[1].x[1]) / 2.0};
    const auto point_at = [&](double coeff) {
      return std::array<double, 2>{centroid[0] + coeff * (centroid[0] - simplex[2].x[0]),
                                   centroid[1] + coeff * (centroid[1] - simplex[2].x[1])};
    };

    const auto reflected = point_at(1.0);
    const double fr = eval(reflected);
    if (fr < simplex[0].f) {
      const auto expanded = point_at(2.0);
      const double fe = eval(expanded);
      simplex[2] = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
    } else if (fr < simplex[1].f) {
      simplex[2] = {reflected, fr};
    } else {
      const auto contracted = point_at(fr < simplex[2].f ? 0.5 : -0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, simplex[2].f)) {
        simplex[2] = {contracted, fc};
      } else {
        for (int i = 1; i < 3; ++i) {
          for (int d = 0; d < 2; ++d) {
            simplex[i].x[d] = simplex[0].x[d] + 0.5 * (simplex[i].x[d] - simplex[0].x[d]);
          }
          simplex[i].f = eval(simplex[i].x);
        }
      }
    }
  }

  std::sort(simplex.begin(), simplex.end(),
            [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  DiscountFit fit;
  fit.h = simplex[0].x[0];
  if (!allow_positive_h && fit.h > 0.0) fit.h = 0.0;
  fit.rho = std::exp(simplex[0].x[1]);
  fit.residual = simplex[0].f;
  fit.converged = converged;
  return fit;
}

inline DiscountFit fit_discount(const std::vector<DiscountPoint>& points,
                                bool allow_positive_h = false) {
  return fit_discount(std::span<const DiscountPoint>(points), allow_positive_h);
}

/// Parse indifference points from CSV with header
/// `delay_periods,discount_factor`.
inline std::vector<DiscountPoint> read_discount_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("discount csv: empty input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "delay_periods,discount_factor") {
    throw std::invalid_argument("discount csv: expected header delay_periods,discount_factor");
  }
  std::vector<DiscountPoint> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string delay_field, discount_field, extra;
    if (!std::getline(row, delay_field, ',') || !std::getline(row, discount_field, ',')) {
      throw std::invalid_argument("discount csv: malformed row " + std::to_string(lineno));
    }
    if (std::getline(row, extra, ',')) {
      throw std::invalid_argument("discount csv: too many fields on row " + std::to_string(lineno));
    }
    try {
      std::size_t pos = 0;
      const double delay = std::stod(delay_field, &pos);
      if (pos != delay_field.size()) throw std::invalid_argument("trailing characters");
      pos = 0;
      const double factor = std::stod(discount_field, &pos);
      if (pos != discount_field.size()) throw std::invalid_argument("trailing characters");
      points.push_back({delay, factor});
    } catch (const std::exception&) {
      throw std::invalid_argument("discount csv: bad number on row " + std::to_string(lineno));
    }
  }
  return points;
}

inline std::vector<DiscountPoint> read_discount_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("discount csv: cannot open " + path);
  }
  return read_discount_csv(in);
}

}  // namespace tempo
