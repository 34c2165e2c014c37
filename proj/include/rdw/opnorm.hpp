#ifndef RDW_OPNORM_HPP
#define RDW_OPNORM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rdw/algebra.hpp"
#include "rdw/ball.hpp"

namespace rdw {

inline constexpr std::size_t kDefaultIterations = 10'000;
inline constexpr double kDefaultTolerance = 1e-10;

/// Certified bounds lower <= ||f||_op <= upper for left convolution by f.
struct OpNormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> iteration_trace;  // nondecreasing, lower == back()
  std::size_t truncation_radius = 0;
  std::size_t iterations = 0;  // operator applications
  bool converged = false;
  bool used_fallback = false;
  bool radial = false;  // computed in the free-group radial algebra
};

struct OpNormOptions {
  std::size_t iters = kDefaultIterations;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;  // fallback start vector
  std::size_t cap = kDefaultElementCap;
  /// Permit the exact radial reduction for radial nonnegative f on free groups.
  bool allow_radial = true;
};

/// Largest singular value of the compression P lambda(f) P to l^2(B(R)),
/// approached from below by Krylov iteration on its Gram operator with start
/// vector delta_e. upper = min(||f||_1, sqrt(gamma(l(f))) ||f||_2).
///
/// Throws UsageError when R < support_radius(f); CapacityError from the ball.
OpNormEstimate truncated_opnorm(const AlgebraVector& f, std::size_t R,
                                const OpNormOptions& options = {});

/// Same, reusing an enumerated ball; B(R) is its length-<=R prefix.
OpNormEstimate truncated_opnorm(const AlgebraVector& f, const BallIndex& ball, std::size_t R,
                                const OpNormOptions& options = {});

/// Dense reference: top singular value of the compression, via Eigen. Only
/// for small balls; used as an oracle by tests and the CLI `--dense` check.
double dense_compressed_norm(const AlgebraVector& f, const BallIndex& ball, std::size_t R);

/// (h^{*n}(e))^{1/(2n)} for h = f* * f and n = 1..n_max. For symmetric f
/// h^{*n}(e) = ||f^{*n}||_2^2, which is what is evaluated. Nondecreasing and
/// convergent to ||f||_op.
///
/// Throws UsageError for non-symmetric f, CapacityError when the support of
/// f^{*n} exceeds `cap`.
std::vector<double> return_prob_norm(const AlgebraVector& f, std::size_t n_max,
                                     std::size_t cap = kDefaultElementCap);

/// Limit of a return-probability sequence a_n: the root ratios
/// sqrt(tau_{n+1}/tau_n), tau_n = a_n^{2n}, are extrapolated to n = infinity by
/// a quadratic fit in 1/n over the later half of the sequence.
double extrapolate_return_limit(const std::vector<double>& a);

struct KestenGap {
  double l1 = 0.0;
  double op_lower = 0.0;
  double gap = 0.0;
};

/// gap = ||f||_1 - truncated_opnorm(f, R).lower for f >= 0.
/// Throws UsageError on a negative coefficient.
KestenGap kesten_gap(const AlgebraVector& f, std::size_t R, const OpNormOptions& options = {});

}  // namespace rdw

#endif  // RDW_OPNORM_HPP
