#include "rdw/centroid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "rdw/error.hpp"
#include "rdw/random.hpp"

namespace rdw {

std::string to_string(CentroidStrategy strategy) {
  return strategy == CentroidStrategy::Median ? "median" : "gromov";
}

CentroidStrategy parse_centroid_strategy(std::string_view text) {
  if (text == "median") return CentroidStrategy::Median;
  if (text == "gromov") return CentroidStrategy::Gromov;
  throw UsageError("unknown centroid strategy '" + std::string(text) +
                   "' (expected median or gromov)");
}

namespace {

struct Known {
  const Element& x;
  std::size_t length;
};

// Distances are translation invariant, so everything reduces to lengths:
// d(o,g) = l(g), d(o,h) = l(h), d(g,h) = l(g^-1 h).
Element centroid_impl(const Group& group, CentroidStrategy strategy, Known g, Known h,
                      const Element& g_inv) {
  const std::size_t gh = group.word_length(group.multiply(g_inv, h.x));
  const std::size_t twice_k = g.length + h.length - gh;
  if (strategy == CentroidStrategy::Gromov) return group.geodesic_prefix(h.x, twice_k / 2);

  auto violation = [&](const std::vector<Element>& hits) {
    std::vector<std::string> labels;
    for (const auto& c : hits) labels.push_back(group.format(c));
    std::string joined;
    for (const auto& s : labels) joined += (joined.empty() ? "" : ",") + s;
    return MedianViolation("median(e," + group.format(g.x) + "," + group.format(h.x) +
                               ") is not unique: intersection {" + joined + "}",
                           std::move(labels));
  };
  if (twice_k % 2 != 0) throw violation({});
  const std::size_t k = twice_k / 2;
  std::vector<Element> hits;
  for (auto& c : group.interval_level(g.x, k)) {
    if (group.word_length(group.multiply(group.invert(c), h.x)) + k == h.length) {
      hits.push_back(std::move(c));
    }
  }
  if (hits.size() != 1) throw violation(hits);
  return std::move(hits.front());
}

Element centroid_of(const Group& group, CentroidStrategy strategy, const Element& g,
                    const Element& h) {
  return centroid_impl(group, strategy, {g, group.word_length(g)}, {h, group.word_length(h)},
                       group.invert(g));
}

// Counts per radius: out[r] = #{ distinct values first reached at length <= r }.
void accumulate_first_lengths(const std::unordered_map<Element, std::size_t, ElementHash>& first,
                              std::vector<std::size_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  for (const auto& [m, len] : first) ++counts[len];
  std::partial_sum(counts.begin(), counts.end(), counts.begin());
}

}  // namespace

Element centroid(const ActionSpec& action, CentroidStrategy strategy, const Element& g,
                 const Element& h) {
  return centroid_of(*action.group, strategy, g, h);
}

CentroidReport verify_centroid_conditions(const ActionSpec& action, CentroidStrategy strategy,
                                          std::size_t r_max, std::size_t h_radius,
                                          std::size_t sample, std::uint64_t seed,
                                          std::size_t cap) {
  if (r_max > h_radius) {
    throw UsageError("verify_centroid_conditions: r_max " + std::to_string(r_max) +
                     " exceeds h_radius " + std::to_string(h_radius));
  }
  const Group& group = *action.group;
  const BallIndex ball = enumerate_ball(action.group, h_radius, cap);

  CentroidReport report;
  report.group = group.name();
  report.strategy = strategy;
  report.sampling.h_radius = h_radius;
  report.sampling.population = ball.size();
  report.sampling.seed = seed;

  std::vector<std::size_t> hs(ball.size());
  std::iota(hs.begin(), hs.end(), 0);
  if (sample != 0 && sample < ball.size()) {
    auto rng = make_rng(seed);
    for (std::size_t i = 0; i < sample; ++i) {
      std::swap(hs[i], hs[i + draw_index(rng, hs.size() - i)]);
    }
    hs.resize(sample);
    std::sort(hs.begin(), hs.end());
    report.sampling.exhaustive = false;
  }
  report.sampling.sample_size = hs.size();

  const std::size_t n_g = ball.prefix_size(r_max);
  std::vector<Element> g_inv(n_g);
  for (std::size_t i = 0; i < n_g; ++i) g_inv[i] = group.invert(ball.element(i));

  std::vector<std::size_t> cond1(r_max + 1, 0), cond3(r_max + 1, 0), counts(r_max + 1);
  std::vector<std::unordered_set<Element, ElementHash>> cond2_sets(n_g);
  std::unordered_map<Element, std::size_t, ElementHash> first1, first3;
  for (std::size_t hi : hs) {
    const Element& h = ball.element(hi);
    const Known hk{h, ball.length(hi)};
    first1.clear();
    first3.clear();
    for (std::size_t gi = 0; gi < n_g; ++gi) {
      const Known gk{ball.element(gi), ball.length(gi)};
      Element m = centroid_impl(group, strategy, gk, hk, g_inv[gi]);
      first1.try_emplace(m, gk.length);  // g visited in nondecreasing length
      cond2_sets[gi].insert(std::move(m));

      const Element gh = group.multiply(gk.x, h);
      const Element m3 = centroid_impl(group, strategy, gk, {gh, group.word_length(gh)}, g_inv[gi]);
      first3.try_emplace(group.multiply(g_inv[gi], m3), gk.length);
    }
    accumulate_first_lengths(first1, counts);
    for (std::size_t r = 0; r <= r_max; ++r) cond1[r] = std::max(cond1[r], counts[r]);
    accumulate_first_lengths(first3, counts);
    for (std::size_t r = 0; r <= r_max; ++r) cond3[r] = std::max(cond3[r], counts[r]);
  }

  std::size_t running = 0;
  for (std::size_t r = 0; r <= r_max; ++r) {
    for (std::size_t gi = (r == 0 ? 0 : ball.prefix_size(r - 1)); gi < ball.prefix_size(r); ++gi) {
      running = std::max(running, cond2_sets[gi].size());
    }
    report.r_values.push_back(r);
    report.cond1_max.push_back(cond1[r]);
    report.cond2_max.push_back(running);
    report.cond3_max.push_back(cond3[r]);
  }
  if (r_max >= 4) report.fit = fit_condition_degrees(report);
  return report;
}

ConditionFit fit_condition_degrees(const CentroidReport& report) {
  std::vector<double> x;
  std::array<std::vector<double>, 3> y;
  const std::array<const std::vector<std::size_t>*, 3> series{
      &report.cond1_max, &report.cond2_max, &report.cond3_max};
  for (std::size_t i = 0; i < report.r_values.size(); ++i) {
    const std::size_t r = report.r_values[i];
    if (r < 2) continue;
    x.push_back(std::log(1.0 + static_cast<double>(r)));
    for (std::size_t c = 0; c < 3; ++c) {
      const auto value = (*series[c])[i];
      if (value == 0) throw UsageError("fit_condition_degrees: a condition maximum is zero");
      y[c].push_back(std::log(static_cast<double>(value)));
    }
  }
  if (x.size() < 3) {
    throw UsageError("fit_condition_degrees: need at least 3 radii r >= 2, have " +
                     std::to_string(x.size()));
  }
  ConditionFit fit;
  for (std::size_t c = 0; c < 3; ++c) {
    fit.fits[c] = least_squares(x, y[c]);
    fit.degrees[c] = fit.fits[c].slope;
    fit.deg_rd_bound += fit.degrees[c];
  }
  return fit;
}

std::size_t stabilizer_bound(const ActionSpec& action, const std::vector<Element>& vertices,
                             std::size_t search_radius) {
  const Group& group = *action.group;
  const BallIndex ball = enumerate_ball(action.group, search_radius);
  std::size_t best = 0;
  for (const auto& v : vertices) {
    std::size_t fixed = 0;
    for (const auto& g : ball.elements()) fixed += group.multiply(g, v) == v;
    best = std::max(best, fixed);
  }
  return best;
}

EquivarianceReport equivariance_check(const ActionSpec& action, CentroidStrategy strategy,
                                      std::size_t samples, std::uint64_t seed, std::size_t r_max,
                                      std::size_t h_radius) {
  const Group& group = *action.group;
  const std::size_t big = std::max(r_max, h_radius);
  const BallIndex ball = enumerate_ball(action.group, big);
  const std::size_t n_a = ball.prefix_size(r_max);
  const std::size_t n_h = ball.prefix_size(h_radius);
  auto rng = make_rng(seed);
  auto m = [&](const Element& g, const Element& h) { return centroid_of(group, strategy, g, h); };
  // m~(g0, g1, g2) = g0 m(g0^-1 g1, g0^-1 g2)
  auto m_tilde = [&](const Element& g0, const Element& g1, const Element& g2) {
    const Element inv = group.invert(g0);
    return group.multiply(g0, m(group.multiply(inv, g1), group.multiply(inv, g2)));
  };

  EquivarianceReport report;
  auto fail = [&](std::string what) {
    if (report.passed) {
      report.passed = false;
      report.violation = std::move(what);
    }
  };
  auto show = [&](const Element& a, const Element& b, const Element& c) {
    return "(" + group.format(a) + ", " + group.format(b) + ", " + group.format(c) + ")";
  };

  using Sets = std::map<std::pair<std::size_t, std::size_t>, std::set<Element>>;
  Sets orig1, delta1, orig2, delta2, orig3, delta3;  // keyed by (h or a index, r)
  for (std::size_t t = 0; t < samples && report.passed; ++t) {
    const std::size_t ai = draw_index(rng, n_a);
    const std::size_t hi = draw_index(rng, n_h);
    const Element& g0 = ball.element(draw_index(rng, ball.size()));
    const Element& a = ball.element(ai);
    const Element& h = ball.element(hi);
    const Element g1 = group.multiply(g0, a);
    const Element g2 = group.multiply(g0, h);
    ++report.triples;

    const Element base = m_tilde(g0, g1, g2);
    if (strategy == CentroidStrategy::Median) {
      const std::array<const Element*, 3> p{&g0, &g1, &g2};
      std::array<int, 3> order{0, 1, 2};
      while (std::next_permutation(order.begin(), order.end())) {
        if (m_tilde(*p[order[0]], *p[order[1]], *p[order[2]]) != base) {
          fail("m~ is not symmetric on " + show(g0, g1, g2));
        }
      }
    } else {
      const Element& k = ball.element(draw_index(rng, n_a));
      const Element moved =
          m_tilde(group.multiply(k, g0), group.multiply(k, g1), group.multiply(k, g2));
      if (moved != group.multiply(k, base)) {
        fail("m~ is not translation equivariant on " + show(g0, g1, g2));
      }
    }

    // Original formulation through m, Delta(r) formulation through m~.
    const Element g0_inv = group.invert(g0);
    const Element g1h = group.multiply(g1, h);
    const Element d1 = group.multiply(g0_inv, base);
    const Element d3 = group.multiply(group.invert(g1), m_tilde(g0, g1, g1h));
    const Element o1 = m(a, h);
    const Element o3 = group.multiply(group.invert(a), m(a, group.multiply(a, h)));
    for (std::size_t r = ball.length(ai); r <= r_max; ++r) {
      orig1[{hi, r}].insert(o1);
      delta1[{hi, r}].insert(d1);
      orig3[{hi, r}].insert(o3);
      delta3[{hi, r}].insert(d3);
    }
    orig2[{ai, 0}].insert(o1);
    delta2[{ai, 0}].insert(d1);
  }

  auto maxima = [&](const Sets& sets) {
    std::map<std::size_t, std::size_t> best;
    for (const auto& [key, s] : sets) best[key.second] = std::max(best[key.second], s.size());
    return best;
  };
  const std::array<std::pair<const Sets*, const Sets*>, 3> pairs{
      std::pair{&orig1, &delta1}, std::pair{&orig2, &delta2}, std::pair{&orig3, &delta3}};
  for (std::size_t c = 0; c < 3 && report.passed; ++c) {
    if (maxima(*pairs[c].first) != maxima(*pairs[c].second)) {
      fail("condition " + std::to_string(c + 1) + " maxima differ between the two formulations");
    }
  }
  return report;
}

}  // namespace rdw
