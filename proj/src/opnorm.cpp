#include "rdw/opnorm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "lanczos.hpp"
#include "radial.hpp"
#include "rdw/error.hpp"

namespace rdw {

namespace {

// Beyond this many (term, element) pairs the shift table would not fit in
// memory next to the ball itself.
constexpr std::size_t kShiftTableCap = 400'000'000;
// Doubles held by the Krylov basis.
constexpr std::size_t kBasisBudget = std::size_t{1} << 25;

// Left convolution by f restricted to B(R): column z of the compression has
// entry c_t in row index(y_t z) whenever that product stays in the ball.
struct ShiftTable {
  std::size_t n = 0;
  std::vector<double> coefficient;
  std::vector<std::int32_t> target;  // term-major, kOutsideBall when outside

  ShiftTable(const AlgebraVector& f, const BallIndex& ball, std::size_t R) {
    n = ball.prefix_size(R);
    if (f.support_size() * n > kShiftTableCap) {
      throw CapacityError("compression table for " + std::to_string(f.support_size()) +
                              " terms on " + std::to_string(n) + " elements exceeds the cap",
                          R);
    }
    const Group& group = *f.group();
    coefficient.reserve(f.support_size());
    target.resize(f.support_size() * n);
    std::size_t t = 0;
    for (const auto& [y, c] : f.terms()) {
      coefficient.push_back(c);
      for (std::size_t z = 0; z < n; ++z) {
        auto idx = ball.index_of(group.multiply(y, ball.element(z)));
        target[t * n + z] =
            (idx && *idx < n) ? static_cast<std::int32_t>(*idx) : kOutsideBall;
      }
      ++t;
    }
  }

  void apply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t t = 0; t < coefficient.size(); ++t) {
      const double c = coefficient[t];
      const std::int32_t* row = &target[t * n];
      for (std::size_t z = 0; z < n; ++z) {
        if (row[z] != kOutsideBall) y[static_cast<std::size_t>(row[z])] += c * x[z];
      }
    }
  }

  void apply_transpose(std::span<const double> x, std::span<double> y) const {
    for (std::size_t t = 0; t < coefficient.size(); ++t) {
      const double c = coefficient[t];
      const std::int32_t* row = &target[t * n];
      for (std::size_t z = 0; z < n; ++z) {
        if (row[z] != kOutsideBall) y[z] += c * x[static_cast<std::size_t>(row[z])];
      }
    }
  }
};

void require_radius(const AlgebraVector& f, std::size_t R) {
  const std::size_t L = support_radius(f);
  if (R < L) {
    throw UsageError("truncation radius " + std::to_string(R) +
                     " is smaller than the support radius " + std::to_string(L));
  }
}

double upper_bound(const NormReport& nr, double gamma_L) {
  return std::min(nr.l1, std::sqrt(gamma_L) * nr.l2);
}

OpNormEstimate finish(detail::LanczosResult&& run, double upper, std::size_t R) {
  OpNormEstimate est;
  est.iteration_trace = std::move(run.trace);
  est.lower = est.iteration_trace.back();
  est.upper = upper;
  est.truncation_radius = R;
  est.iterations = run.applications;
  est.converged = run.converged;
  est.used_fallback = run.used_fallback;
  return est;
}

std::optional<std::vector<double>> nonnegative_radial(const AlgebraVector& f) {
  auto phi = detail::radial_profile(f);
  if (!phi) return std::nullopt;
  for (double v : *phi) {
    if (v < 0.0) return std::nullopt;
  }
  return phi;
}

double free_group_ball_size(std::size_t k, std::size_t L) {
  double total = 0.0;
  for (std::size_t n = 0; n <= L; ++n) total += std::round(std::exp(detail::log_sphere_size(k, n)));
  return total;
}

OpNormEstimate radial_opnorm(const AlgebraVector& f, const std::vector<double>& phi,
                             std::size_t R, const OpNormOptions& options) {
  const std::size_t k = f.group()->spec().rank;
  const Eigen::MatrixXd M = detail::radial_matrix(k, phi, R);
  const Eigen::MatrixXd A = M.transpose() * M;
  auto apply = [&A](std::span<const double> x, std::span<double> y) {
    Eigen::Map<Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size())) =
        A * Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
  };
  std::vector<double> start(R + 1, 0.0);
  start[0] = 1.0;
  detail::LanczosOptions lo{options.iters, options.tol, R + 1, options.seed};
  auto run = detail::top_eigenvalue(R + 1, apply, std::move(start), lo);
  const NormReport nr = norms(f);
  auto est = finish(std::move(run), upper_bound(nr, free_group_ball_size(k, nr.support_radius)), R);
  est.radial = true;
  return est;
}

}  // namespace

OpNormEstimate truncated_opnorm(const AlgebraVector& f, const BallIndex& ball, std::size_t R,
                                const OpNormOptions& options) {
  require_radius(f, R);
  if (R > ball.radius()) {
    throw UsageError("truncation radius " + std::to_string(R) + " exceeds the enumerated ball");
  }
  if (!same_group(*f.group(), *ball.group())) {
    throw UsageError("truncated_opnorm: ball and function live in different groups");
  }
  if (options.allow_radial) {
    if (auto phi = nonnegative_radial(f)) return radial_opnorm(f, *phi, R, options);
  }
  const NormReport nr = norms(f);
  if (f.empty()) {
    OpNormEstimate est;
    est.iteration_trace = {0.0};
    est.truncation_radius = R;
    est.converged = true;
    return est;
  }
  const ShiftTable table(f, ball, R);
  std::vector<double> scratch(table.n);
  auto apply = [&](std::span<const double> x, std::span<double> y) {
    std::fill(scratch.begin(), scratch.end(), 0.0);
    table.apply(x, scratch);
    table.apply_transpose(scratch, y);
  };
  std::vector<double> start(table.n, 0.0);
  start[0] = 1.0;  // delta_e
  const std::size_t krylov = std::clamp<std::size_t>(kBasisBudget / table.n, 4, 64);
  detail::LanczosOptions lo{options.iters, options.tol, krylov, options.seed};
  auto run = detail::top_eigenvalue(table.n, apply, std::move(start), lo);
  const double gamma_L = static_cast<double>(ball.prefix_size(nr.support_radius));
  return finish(std::move(run), upper_bound(nr, gamma_L), R);
}

OpNormEstimate truncated_opnorm(const AlgebraVector& f, std::size_t R,
                                const OpNormOptions& options) {
  require_radius(f, R);
  if (options.allow_radial) {
    if (auto phi = nonnegative_radial(f)) return radial_opnorm(f, *phi, R, options);
  }
  const BallIndex ball = enumerate_ball(f.group(), R, options.cap);
  return truncated_opnorm(f, ball, R, options);
}

double dense_compressed_norm(const AlgebraVector& f, const BallIndex& ball, std::size_t R) {
  require_radius(f, R);
  const ShiftTable table(f, ball, R);
  const auto n = static_cast<Eigen::Index>(table.n);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t t = 0; t < table.coefficient.size(); ++t) {
    for (std::size_t z = 0; z < table.n; ++z) {
      const auto row = table.target[t * table.n + z];
      if (row != kOutsideBall) T(row, static_cast<Eigen::Index>(z)) += table.coefficient[t];
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(T);
  return n == 0 ? 0.0 : svd.singularValues()(0);
}

std::vector<double> return_prob_norm(const AlgebraVector& f, std::size_t n_max, std::size_t cap) {
  if (!is_symmetric(f)) {
    throw UsageError("return_prob_norm requires a symmetric function (f = f*)");
  }
  std::vector<double> out;
  out.reserve(n_max);
  if (f.empty()) {
    out.assign(n_max, 0.0);
    return out;
  }
  // F is kept normalised to max |F| = 1; log_scale carries the removed factor.
  double log_scale = 0.0;
  auto record = [&](std::size_t n, double sum_sq) {
    out.push_back(std::exp((2.0 * log_scale + std::log(sum_sq)) / (2.0 * static_cast<double>(n))));
  };

  if (auto phi = detail::radial_profile(f)) {
    const std::size_t L = phi->size() - 1;
    const std::size_t R = n_max * L;
    const Eigen::MatrixXd M = detail::radial_matrix(f.group()->spec().rank, *phi, R);
    Eigen::VectorXd G = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(R + 1));
    G(0) = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      G = M * G;
      const double m = G.cwiseAbs().maxCoeff();
      if (m == 0.0) {
        out.resize(n_max, 0.0);
        return out;
      }
      G /= m;
      log_scale += std::log(m);
      record(n, G.squaredNorm());
    }
    return out;
  }

  AlgebraVector F = AlgebraVector::delta(f.group(), f.group()->identity());
  for (std::size_t n = 1; n <= n_max; ++n) {
    F = convolve(f, F);
    if (F.support_size() > cap) {
      throw CapacityError("support of f^{*" + std::to_string(n) + "} has " +
                          std::to_string(F.support_size()) + " elements, above the cap");
    }
    if (F.empty()) {
      out.resize(n_max, 0.0);
      return out;
    }
    double m = 0.0;
    for (const auto& t : F.terms()) m = std::max(m, std::abs(t.second));
    F = F * (1.0 / m);
    log_scale += std::log(m);
    double sum_sq = 0.0;
    for (const auto& t : F.terms()) sum_sq += t.second * t.second;
    record(n, sum_sq);
  }
  return out;
}

double extrapolate_return_limit(const std::vector<double>& a) {
  if (a.empty()) throw UsageError("extrapolate_return_limit: empty sequence");
  if (a.size() < 2 || a.back() == 0.0) return a.back();
  std::vector<double> log_tau(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    log_tau[i] = 2.0 * static_cast<double>(i + 1) * std::log(a[i]);
  }
  // rho_n = sqrt(tau_{n+1} / tau_n), n = 1..N-1
  std::vector<double> inv_n, rho;
  const std::size_t N = a.size();
  const std::size_t first = std::max<std::size_t>(1, N / 2);
  for (std::size_t n = first; n < N; ++n) {
    inv_n.push_back(1.0 / static_cast<double>(n));
    rho.push_back(std::exp(0.5 * (log_tau[n] - log_tau[n - 1])));
  }
  if (rho.size() < 3) return rho.back();
  const auto m = static_cast<Eigen::Index>(rho.size());
  Eigen::MatrixXd X(m, 3);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = inv_n[static_cast<std::size_t>(i)];
    X(i, 2) = inv_n[static_cast<std::size_t>(i)] * inv_n[static_cast<std::size_t>(i)];
    y(i) = rho[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
  return beta(0);
}

KestenGap kesten_gap(const AlgebraVector& f, std::size_t R, const OpNormOptions& options) {
  for (const auto& t : f.terms()) {
    if (t.second < 0.0) {
      throw UsageError("kesten_gap requires nonnegative coefficients; found " +
                       std::to_string(t.second) + " at " + f.group()->format(t.first));
    }
  }
  const auto est = truncated_opnorm(f, R, options);
  KestenGap out;
  out.l1 = norms(f).l1;
  out.op_lower = est.lower;
  out.gap = out.l1 - out.op_lower;
  return out;
}

}  // namespace rdw
