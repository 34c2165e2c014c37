#ifndef RDW_FIT_HPP
#define RDW_FIT_HPP

#include <span>

namespace rdw {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;   // 1 when y is constant (nothing left to explain)
  double rms = 0.0;  // root mean square residual
};

/// Ordinary least squares y = intercept + slope * x. Needs >= 2 distinct x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace rdw

#endif  // RDW_FIT_HPP
