// Krylov iteration for the top eigenvalue of a symmetric positive
// semidefinite operator, used behind the operator-norm estimators.
#ifndef RDW_SRC_LANCZOS_HPP
#define RDW_SRC_LANCZOS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rdw::detail {

using ApplyFn = std::function<void(std::span<const double> x, std::span<double> y)>;

struct LanczosOptions {
  std::size_t max_applications = 10'000;
  double tol = 1e-10;  // on successive sqrt(Ritz) values and the relative Ritz residual
  std::size_t krylov_dim = 64;
  std::uint64_t seed = 0;
};

struct LanczosResult {
  // sqrt of the running maximum of the top Ritz value, one entry per
  // operator application; nondecreasing by construction.
  std::vector<double> trace;
  std::size_t applications = 0;
  bool converged = false;
  bool used_fallback = false;
};

// Restarted Lanczos with full reorthogonalisation. Each Ritz value is a
// Rayleigh quotient of a vector in the Krylov space, so every trace entry is
// a lower bound for sqrt(lambda_max). Restarts keep the current top Ritz
// vector, which makes the sequence monotone across cycles as well. If the
// Krylov space of `start` becomes invariant before convergence, iteration
// continues from a seeded random vector.
LanczosResult top_eigenvalue(std::size_t dimension, const ApplyFn& apply,
                             std::vector<double> start, const LanczosOptions& options);

}  // namespace rdw::detail

#endif  // RDW_SRC_LANCZOS_HPP
