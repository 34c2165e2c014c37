#ifndef RDW_CENTROID_HPP
#define RDW_CENTROID_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdw/ball.hpp"
#include "rdw/element.hpp"
#include "rdw/fit.hpp"
#include "rdw/group.hpp"

namespace rdw {

/// G acting on its own Cayley graph by left multiplication, basepoint o = e.
/// Vertices are identified with group elements: g.o = g.
struct ActionSpec {
  GroupHandle group;
};

enum class CentroidStrategy { Median, Gromov };

std::string to_string(CentroidStrategy strategy);
CentroidStrategy parse_centroid_strategy(std::string_view text);  // "median" | "gromov"

/// median: the unique vertex of [o,g] cap [o,h] cap [g,h], found among the
/// level-k vertices of [o,g] with k the Gromov product (g|h); distances use the
/// exact word length. Throws MedianViolation if the intersection is not a
/// singleton (including a half-integer Gromov product).
/// gromov: the vertex at distance floor((g|h)) from o on the ShortLex-first
/// geodesic from o to h.
Element centroid(const ActionSpec& action, CentroidStrategy strategy, const Element& g,
                 const Element& h);

struct ConditionFit {
  std::array<LinearFit, 3> fits;
  std::array<double, 3> degrees{};
  double deg_rd_bound = 0.0;  // sum of the three degrees
};

struct CentroidReport {
  std::string group;
  CentroidStrategy strategy = CentroidStrategy::Median;
  std::vector<std::size_t> r_values;
  std::vector<std::size_t> cond1_max;  // max_h |{ m(g,h) : g in B(r) }|
  std::vector<std::size_t> cond2_max;  // max_{g in B(r)} |{ m(g,h) : h sampled }|
  std::vector<std::size_t> cond3_max;  // max_h |{ g^-1 m(g, gh) : g in B(r) }|
  std::optional<ConditionFit> fit;     // present when r_max >= 4
  struct Sampling {
    std::size_t h_radius = 0;
    std::size_t sample_size = 0;  // number of h actually used
    std::size_t population = 0;   // |B(h_radius)|
    bool exhaustive = true;
    std::uint64_t seed = 0;
  } sampling;
};

/// Sampling is exhaustive when `sample` is 0 or at least |B(h_radius)|;
/// otherwise `sample` elements of B(h_radius) are drawn without replacement.
/// Throws UsageError if r_max > h_radius.
CentroidReport verify_centroid_conditions(const ActionSpec& action, CentroidStrategy strategy,
                                          std::size_t r_max, std::size_t h_radius,
                                          std::size_t sample, std::uint64_t seed,
                                          std::size_t cap = kDefaultElementCap);

/// Log-log least squares of each maxima sequence against log(1+r) over r >= 2.
/// Throws UsageError with fewer than 3 such radii.
ConditionFit fit_condition_degrees(const CentroidReport& report);

/// Largest |{ g in B(search_radius) : g.v = v }| over the sampled vertices.
std::size_t stabilizer_bound(const ActionSpec& action, const std::vector<Element>& vertices,
                             std::size_t search_radius = 2);

struct EquivarianceReport {
  bool passed = true;
  std::size_t triples = 0;
  std::string violation;  // first failure, empty on success
};

/// On `samples` seeded triples (g0, g1, g2) with l(g0^-1 g1) <= r_max, checks
/// that m~(g0,g1,g2) = g0 m(g0^-1 g1, g0^-1 g2) is well defined (symmetric
/// under permutations for the median strategy, translation equivariant for
/// the Gromov strategy) and that the three conditions evaluated through m~
/// on Delta(r) triples give the same maxima as the original formulation.
EquivarianceReport equivariance_check(const ActionSpec& action, CentroidStrategy strategy,
                                      std::size_t samples, std::uint64_t seed,
                                      std::size_t r_max = 4, std::size_t h_radius = 2);

}  // namespace rdw

#endif  // RDW_CENTROID_HPP
