#include "rdw/rd.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rdw/error.hpp"
#include "rdw/fit.hpp"
#include "rdw/fnspec.hpp"

namespace rdw {

std::string to_string(ProfileFamily family) {
  switch (family) {
    case ProfileFamily::Balls: return "balls";
    case ProfileFamily::Spheres: return "spheres";
    case ProfileFamily::RandomSigns: return "random";
  }
  return "?";
}

ProfileFamily parse_profile_family(std::string_view text) {
  if (text == "balls") return ProfileFamily::Balls;
  if (text == "spheres") return ProfileFamily::Spheres;
  if (text == "random") return ProfileFamily::RandomSigns;
  throw UsageError("unknown profile family '" + std::string(text) +
                   "' (expected balls, spheres or random)");
}

namespace {

std::size_t truncation_radius(std::size_t r, double factor) {
  const auto scaled = static_cast<std::size_t>(std::ceil(factor * static_cast<double>(r) - 1e-9));
  return std::max(r, scaled);
}

AlgebraVector family_member(const BallIndex& ball, ProfileFamily family, std::size_t r,
                            std::uint64_t seed) {
  switch (family) {
    case ProfileFamily::Balls: return ball_indicator(ball, r);
    case ProfileFamily::Spheres: return sphere_indicator(ball, r);
    case ProfileFamily::RandomSigns: return random_signs(ball, r, seed);
  }
  throw UsageError("unknown profile family");
}

}  // namespace

RdProfile rd_profile(const GroupHandle& group, ProfileFamily family, std::size_t r_max,
                     std::uint64_t seed, const RdProfileOptions& options) {
  if (!(options.truncation_factor >= 1.0)) {
    throw UsageError("truncation factor must be at least 1");
  }
  RdProfile profile;
  profile.group = group->name();
  profile.family = family;
  profile.seed = seed;
  profile.truncation_factor = options.truncation_factor;

  // Indicator families on free groups are radial, so their compressions never
  // need the truncation ball itself.
  const bool radial = options.opnorm.allow_radial && group->spec().family == Family::Free &&
                      family != ProfileFamily::RandomSigns;
  const std::size_t ball_radius =
      radial ? r_max : truncation_radius(r_max, options.truncation_factor);
  BallIndex ball;
  try {
    ball = enumerate_ball(group, ball_radius, options.opnorm.cap);
  } catch (const CapacityError& e) {
    std::size_t first = r_max;
    const std::size_t failed = e.radius().value_or(ball_radius);
    for (std::size_t r = 0; r <= r_max; ++r) {
      if ((radial ? r : truncation_radius(r, options.truncation_factor)) >= failed) {
        first = r;
        break;
      }
    }
    throw CapacityError("rd_profile: cannot build the truncation ball needed at r = " +
                            std::to_string(first) + " (" + e.what() + ")",
                        first);
  }

  for (std::size_t r = 0; r <= r_max; ++r) {
    const AlgebraVector f = family_member(ball, family, r, seed);
    const std::size_t R = truncation_radius(r, options.truncation_factor);
    const OpNormEstimate est = radial ? truncated_opnorm(f, R, options.opnorm)
                                      : truncated_opnorm(f, ball, R, options.opnorm);
    RdPoint p;
    p.r = r;
    p.l2 = norms(f).l2;
    p.op_lower = est.lower;
    p.op_upper = est.upper;
    p.truncation_radius = R;
    profile.points.push_back(p);
  }
  return profile;
}

RdFit fit_rd_degree(const RdProfile& profile, std::size_t a, std::size_t b, RatioBound bound) {
  std::vector<double> x, y;
  for (const auto& p : profile.points) {
    if (p.r < a || p.r > b) continue;
    const double op = bound == RatioBound::Lower ? p.op_lower : p.op_upper;
    if (!(op > 0.0) || !(p.l2 > 0.0)) {
      throw UsageError("fit_rd_degree: nonpositive ratio at r = " + std::to_string(p.r));
    }
    x.push_back(std::log(1.0 + static_cast<double>(p.r)));
    y.push_back(std::log(op / p.l2));
  }
  if (x.size() < 3) {
    throw UsageError("fit_rd_degree: window [" + std::to_string(a) + ", " + std::to_string(b) +
                     "] holds " + std::to_string(x.size()) + " points, need at least 3");
  }
  const LinearFit fit = least_squares(x, y);
  RdFit out;
  out.slope = fit.slope;
  out.s_hat = 2.0 * fit.slope;
  out.r2 = fit.r2;
  out.rms = fit.rms;
  out.points = x.size();
  return out;
}

double coeff_decay_sum(const AlgebraVector& xi, const AlgebraVector& eta, double s, std::size_t R) {
  if (!same_group(*xi.group(), *eta.group())) {
    throw UsageError("coeff_decay_sum: xi and eta live in different groups");
  }
  const Group& group = *xi.group();
  // <lambda(x) xi, eta> = sum_t xi(x^-1 t) eta(t); nonzero only for x = t u^-1.
  std::unordered_map<Element, double, ElementHash> coefficient;
  std::vector<std::pair<Element, double>> xi_inv;
  xi_inv.reserve(xi.support_size());
  for (const auto& [u, a] : xi.terms()) xi_inv.emplace_back(group.invert(u), a);
  for (const auto& [t, b] : eta.terms()) {
    for (const auto& [u_inv, a] : xi_inv) coefficient[group.multiply(t, u_inv)] += a * b;
  }
  // Sorted so the floating-point sum is independent of hash order.
  std::vector<std::pair<Element, double>> sorted(coefficient.begin(), coefficient.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  double total = 0.0;
  for (const auto& [x, c] : sorted) {
    const std::size_t len = group.word_length(x);
    if (len > R) continue;
    total += c * c / std::pow(1.0 + static_cast<double>(len), s);
  }
  return total;
}

ConvolutionCheck convolution_algebra_check(const AlgebraVector& f, const AlgebraVector& g,
                                           double s, double tolerance) {
  auto weighted = [s](const AlgebraVector& v) {
    std::vector<AlgebraVector::Term> terms;
    terms.reserve(v.support_size());
    for (const auto& [x, a] : v.terms()) {
      const double w = std::pow(1.0 + static_cast<double>(v.group()->word_length(x)), s);
      terms.emplace_back(x, std::abs(a) * w);
    }
    return AlgebraVector(v.group(), std::move(terms));
  };
  ConvolutionCheck out;
  out.lhs = sobolev_norm(convolve(f, g), 2.0 * s);
  out.rhs = norms(convolve(weighted(f), weighted(g))).l2;
  out.holds = out.lhs <= out.rhs + tolerance;
  return out;
}

}  // namespace rdw
