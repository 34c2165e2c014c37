#include "lanczos.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "rdw/random.hpp"

namespace rdw::detail {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

struct Ritz {
  double value;
  Eigen::VectorXd vector;  // coordinates in the Lanczos basis
};

Ritz top_ritz(const std::vector<double>& alpha, const std::vector<double>& beta) {
  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k);
  if (k == 1) return {alpha[0], Eigen::VectorXd::Ones(1)};
  Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), k - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  return {solver.eigenvalues()(k - 1), solver.eigenvectors().col(k - 1)};
}

class Runner {
 public:
  Runner(std::size_t n, const ApplyFn& apply, const LanczosOptions& options, LanczosResult& out)
      : n_(n), apply_(apply), options_(options), out_(out) {}

  enum class Outcome { Converged, Exhausted, Breakdown };

  Outcome run(std::vector<double> v) {
    const double nv = norm(v);
    for (double& x : v) x /= nv;
    const std::size_t kmax = std::max<std::size_t>(2, options_.krylov_dim);
    bool restarted = false;
    last_raw_ = -1.0;
    while (true) {
      std::vector<std::vector<double>> basis;
      basis.push_back(std::move(v));
      std::vector<double> alpha, beta;
      std::vector<double> w(n_);
      for (std::size_t j = 0;; ++j) {
        std::fill(w.begin(), w.end(), 0.0);
        apply_(basis[j], w);
        ++out_.applications;
        double a = dot(basis[j], w);
        axpy(-a, basis[j], w);
        if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
        // Two passes of classical Gram-Schmidt keep the basis orthogonal to
        // working precision, so no spurious copies of converged Ritz values.
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& q : basis) {
            double c = dot(q, w);
            axpy(-c, q, w);
            if (&q == &basis[j]) a += c;
          }
        }
        alpha.push_back(a);
        Ritz ritz = top_ritz(alpha, beta);
        const double b = norm(w);
        const double scale = std::max(1.0, std::abs(ritz.value));
        // ||A y - theta y|| for the top Ritz pair
        const double residual = b * std::abs(ritz.vector(ritz.vector.size() - 1));
        // an invariant Krylov space goes to the fallback, not to convergence
        const bool invariant = b <= 1e-13 * scale;
        const bool comparable = !(restarted && j == 0) && !invariant;
        if (record(ritz.value, residual, comparable)) return Outcome::Converged;
        if (invariant) return Outcome::Breakdown;
        if (out_.applications >= options_.max_applications) return Outcome::Exhausted;

        if (basis.size() == kmax) {
          v.assign(n_, 0.0);
          for (std::size_t i = 0; i < basis.size(); ++i) axpy(ritz.vector(static_cast<Eigen::Index>(i)), basis[i], v);
          const double nr = norm(v);
          for (double& x : v) x /= nr;
          restarted = true;
          break;
        }
        beta.push_back(b);
        for (double& x : w) x /= b;
        basis.push_back(w);
      }
    }
  }

 private:
  // Convergence is judged on this run's own Ritz sequence, which is monotone
  // within a run; the trace keeps the running maximum over all runs. A small
  // step alone is not enough when the top of the spectrum is clustered, so
  // the Ritz residual must also be below tol relative to max(1, theta).
  bool record(double theta, double residual, bool comparable) {
    const double value = std::sqrt(std::max(theta, 0.0));
    const double prev = out_.trace.empty() ? 0.0 : out_.trace.back();
    out_.trace.push_back(std::max(prev, value));
    const double last = last_raw_;
    last_raw_ = value;
    if (!comparable || last < 0.0) return false;
    if (value - last < options_.tol && residual <= options_.tol * std::max(1.0, theta)) {
      out_.converged = true;
      return true;
    }
    return false;
  }

  double last_raw_ = -1.0;

  std::size_t n_;
  const ApplyFn& apply_;
  const LanczosOptions& options_;
  LanczosResult& out_;
};

}  // namespace

LanczosResult top_eigenvalue(std::size_t dimension, const ApplyFn& apply,
                             std::vector<double> start, const LanczosOptions& options) {
  LanczosResult result;
  if (dimension == 0) {
    result.trace.push_back(0.0);
    result.converged = true;
    return result;
  }
  Runner runner(dimension, apply, options, result);
  if (norm(start) == 0.0) start.assign(dimension, 1.0);
  auto outcome = runner.run(std::move(start));
  if (outcome == Runner::Outcome::Breakdown && dimension > 1) {
    // The Krylov space of the start vector is invariant; its top Ritz value
    // is exact there but may miss the global top eigenvector.
    result.used_fallback = true;
    auto rng = make_rng(options.seed, 0x46414c4cu);
    std::vector<double> v(dimension);
    for (double& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    outcome = runner.run(std::move(v));
  }
  if (outcome == Runner::Outcome::Breakdown) result.converged = true;
  return result;
}

}  // namespace rdw::detail
