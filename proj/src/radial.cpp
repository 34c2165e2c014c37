#include "radial.hpp"

#include <cmath>
#include <map>

namespace rdw::detail {

double log_sphere_size(std::size_t k, std::size_t n) {
  if (n == 0) return 0.0;
  const double q = 2.0 * static_cast<double>(k) - 1.0;
  return std::log(2.0 * static_cast<double>(k)) + static_cast<double>(n - 1) * std::log(q);
}

double sphere_count(std::size_t k, std::size_t j, std::size_t n, std::size_t m) {
  // y agrees with x on exactly p leading letters, then diverges.
  const long long twice_p = static_cast<long long>(j + m) - static_cast<long long>(n);
  if (twice_p < 0 || twice_p % 2 != 0) return 0.0;
  const auto p = static_cast<std::size_t>(twice_p / 2);
  if (p > j || p > m) return 0.0;
  if (p == j) return 1.0;
  const double two_k = 2.0 * static_cast<double>(k);
  double choices;
  if (p == 0) {
    choices = m > 0 ? two_k - 1.0 : two_k;
  } else if (p < m) {
    choices = two_k - 2.0;  // neither x's next letter nor the cancelling one
  } else {
    choices = two_k - 1.0;
  }
  return choices * std::pow(two_k - 1.0, static_cast<double>(j - p - 1));
}

std::optional<std::vector<double>> radial_profile(const AlgebraVector& f) {
  const Group& group = *f.group();
  if (group.spec().family != Family::Free) return std::nullopt;
  const std::size_t k = group.spec().rank;
  std::map<std::size_t, std::pair<std::size_t, double>> spheres;  // n -> (count, value)
  for (const auto& [x, a] : f.terms()) {
    auto [it, fresh] = spheres.try_emplace(group.word_length(x), 0, a);
    if (!fresh && it->second.second != a) return std::nullopt;
    ++it->second.first;
  }
  std::vector<double> phi(spheres.empty() ? 1 : spheres.rbegin()->first + 1, 0.0);
  for (const auto& [n, cv] : spheres) {
    if (static_cast<double>(cv.first) != std::round(std::exp(log_sphere_size(k, n)))) {
      return std::nullopt;
    }
    phi[n] = cv.second;
  }
  return phi;
}

Eigen::MatrixXd radial_matrix(std::size_t k, const std::vector<double>& phi, std::size_t R) {
  const auto dim = static_cast<Eigen::Index>(R + 1);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t m = 0; m <= R; ++m) {
    for (std::size_t n = 0; n <= R; ++n) {
      const double scale =
          std::exp(0.5 * (log_sphere_size(k, m) - log_sphere_size(k, n)));
      double sum = 0.0;
      for (std::size_t j = 0; j < phi.size(); ++j) {
        if (phi[j] != 0.0) sum += phi[j] * sphere_count(k, j, n, m);
      }
      M(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) = sum * scale;
    }
  }
  return M;
}

}  // namespace rdw::detail
