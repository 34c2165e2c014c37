#ifndef RDW_MEDIAN_HPP
#define RDW_MEDIAN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdw/graph.hpp"

namespace rdw {

/// is_median works from an all-pairs distance table and rejects larger graphs.
inline constexpr std::size_t kMedianVertexCap = 5000;

/// {x : d(u,x) + d(x,v) = d(u,v)}, sorted. UsageError if u, v are disconnected.
std::vector<Vertex> interval(const FiniteGraph& graph, Vertex u, Vertex v);

struct MedianReport {
  bool is_median = false;
  /// First triple (in lexicographic order) whose interval intersection is not
  /// a singleton, with that intersection. Empty for median graphs.
  std::optional<std::array<Vertex, 3>> violating_triple;
  std::vector<Vertex> intersection;
  std::string reason;
};

/// Chepoi criterion: |[u,v] cap [v,w] cap [w,u]| = 1 for every triple.
/// A disconnected graph is reported as not median. Throws CapacityError
/// above `vertex_cap` vertices.
MedianReport is_median(const FiniteGraph& graph, std::size_t vertex_cap = kMedianVertexCap);

/// The unique vertex of [u,v] cap [v,w] cap [w,u]. Throws MedianViolation
/// (carrying the intersection's labels) when it is not a singleton.
Vertex median(const FiniteGraph& graph, Vertex u, Vertex v, Vertex w);

struct Hyperplane {
  std::size_t id = 0;
  std::vector<std::size_t> edges;  // edge ids, ascending
  /// side[x] is 0 or 1; side 0 holds the lower endpoint of the first edge.
  std::vector<std::uint8_t> side;
};

/// Edge classes of the transitive closure of "opposite edges of a 4-cycle",
/// ordered by their smallest edge id. Throws MedianViolation when deleting a
/// class does not leave exactly two components joined only by that class.
std::vector<Hyperplane> hyperplanes(const FiniteGraph& graph);

struct WallDistance {
  std::size_t d = 0;
  std::size_t separating = 0;
  bool equal = false;
};

WallDistance wall_distance_check(const FiniteGraph& graph, const std::vector<Hyperplane>& walls,
                                 Vertex u, Vertex v);
WallDistance wall_distance_check(const FiniteGraph& graph, Vertex u, Vertex v);

/// The hyperplanes separating v from w, with h1 < h2 iff the two do not cross
/// and h1 separates v from h2.
struct HyperplanePoset {
  Vertex v = 0;
  Vertex w = 0;
  std::vector<Vertex> interval;     // [v, w], sorted
  std::vector<Hyperplane> ground;   // ascending id
  std::vector<std::vector<bool>> less;  // less[i][j] <=> ground[i] < ground[j]
};

HyperplanePoset hyperplane_poset(const FiniteGraph& graph, const std::vector<Hyperplane>& walls,
                                 Vertex v, Vertex w);
HyperplanePoset hyperplane_poset(const FiniteGraph& graph, Vertex v, Vertex w);

struct ChainCover {
  std::vector<std::vector<std::size_t>> chains;  // positions in ground, increasing
  std::size_t width = 0;
};

/// Minimum chain cover by maximum bipartite matching on the comparability
/// relation; ties resolve in ground order.
ChainCover chain_cover(const HyperplanePoset& poset);

/// c_i(u) = number of hyperplanes of chain i separating u from v.
/// UsageError if u is not in [v, w].
std::vector<std::size_t> interval_coordinates(const HyperplanePoset& poset,
                                              const ChainCover& cover, Vertex u);

struct IntervalGrowthPoint {
  std::size_t r = 0;
  std::size_t count = 0;   // |[v,w] cap B(v,r)|
  double bound = 1.0;      // (r+1)^N, N the chain-cover width
  bool holds = false;
};

std::vector<IntervalGrowthPoint> interval_growth_check(const FiniteGraph& graph, Vertex v,
                                                       Vertex w, std::size_t r_max);

}  // namespace rdw

#endif  // RDW_MEDIAN_HPP
