#ifndef RDW_RD_HPP
#define RDW_RD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rdw/algebra.hpp"
#include "rdw/opnorm.hpp"

namespace rdw {

enum class ProfileFamily { Balls, Spheres, RandomSigns };

/// "balls", "spheres", "random".
std::string to_string(ProfileFamily family);
ProfileFamily parse_profile_family(std::string_view text);

struct RdPoint {
  std::size_t r = 0;
  double l2 = 0.0;
  double op_lower = 0.0;
  double op_upper = 0.0;
  std::size_t truncation_radius = 0;
};

struct RdProfile {
  std::string group;
  ProfileFamily family = ProfileFamily::Balls;
  std::uint64_t seed = 0;
  double truncation_factor = 2.0;
  std::vector<RdPoint> points;  // r = 0..r_max
};

struct RdProfileOptions {
  /// f_r is compressed to B(max(r, ceil(factor * r))).
  double truncation_factor = 2.0;
  OpNormOptions opnorm;
};

/// For r = 0..r_max builds f_r (ball indicator, sphere indicator or seeded
/// random signs on B(r)) and records ||f_r||_2 with operator-norm bounds.
/// A CapacityError names the first r whose truncation ball cannot be built.
RdProfile rd_profile(const GroupHandle& group, ProfileFamily family, std::size_t r_max,
                     std::uint64_t seed, const RdProfileOptions& options = {});

enum class RatioBound { Lower, Upper };

struct RdFit {
  double slope = 0.0;
  double s_hat = 0.0;  // 2 * slope
  double r2 = 1.0;
  double rms = 0.0;
  std::size_t points = 0;
};

/// OLS of log(op/l2) against log(1+r) over window [a, b], with op the lower
/// bound by default. Throws UsageError for fewer than 3 points in the window
/// or a nonpositive ratio.
RdFit fit_rd_degree(const RdProfile& profile, std::size_t a, std::size_t b,
                    RatioBound bound = RatioBound::Lower);

/// Sum over l(x) <= R of <lambda(x) xi, eta>^2 / (1 + l(x))^s.
double coeff_decay_sum(const AlgebraVector& xi, const AlgebraVector& eta, double s, std::size_t R);

struct ConvolutionCheck {
  double lhs = 0.0;  // ||f*g||_{l,2s}
  double rhs = 0.0;  // ||f_s * g_s||_2 with f_s = |f| (1+l)^s
  bool holds = false;
};

ConvolutionCheck convolution_algebra_check(const AlgebraVector& f, const AlgebraVector& g,
                                           double s, double tolerance = 1e-8);

}  // namespace rdw

#endif  // RDW_RD_HPP
