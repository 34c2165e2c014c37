#ifndef RDW_BALL_HPP
#define RDW_BALL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rdw/element.hpp"
#include "rdw/graph.hpp"
#include "rdw/group.hpp"

namespace rdw {

inline constexpr std::size_t kDefaultElementCap = 10'000'000;
inline constexpr std::int32_t kOutsideBall = -1;

/// An enumerated word-length ball B(R), ordered by (length, canonical form).
class BallIndex {
 public:
  const GroupHandle& group() const noexcept { return group_; }
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  std::size_t length(std::size_t i) const { return lengths_.at(i); }
  std::optional<std::size_t> index_of(const Element& g) const;

  /// Index of element(i) * generators()[s], or kOutsideBall.
  std::int32_t neighbor(std::size_t i, std::size_t s) const {
    return adjacency_[i * generator_count_ + s];
  }
  std::size_t generator_count() const noexcept { return generator_count_; }

  /// Elements with length <= r occupy indices [0, prefix_size(r)).
  std::size_t prefix_size(std::size_t r) const;

 private:
  friend BallIndex enumerate_ball(const GroupHandle&, std::size_t, std::size_t);

  GroupHandle group_;
  std::size_t radius_ = 0;
  std::size_t generator_count_ = 0;
  std::vector<Element> elements_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::size_t> shell_end_;  // shell_end_[r] = prefix_size(r)
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
  std::vector<std::int32_t> adjacency_;
};

/// Breadth-first enumeration of B(R). Throws CapacityError naming the first
/// radius at which the element count exceeds `cap`.
BallIndex enumerate_ball(const GroupHandle& group, std::size_t radius,
                         std::size_t cap = kDefaultElementCap);

/// gamma(0..R): gamma(n) = |B(n)|.
std::vector<std::size_t> growth_function(const BallIndex& ball);

/// The Cayley graph restricted to the ball (edges x -- x s), labelled by element.
FiniteGraph cayley_graph(const BallIndex& ball);

/// An isometric action of a group on the vertices of a finite graph.
/// `act(g, v)` returns g.v, or nullopt when it falls outside the loaded graph.
struct GraphAction {
  const FiniteGraph* graph = nullptr;
  std::function<std::optional<Vertex>(const Element&, Vertex)> act;
};

/// Left multiplication on a Cayley ball (vertex i <-> ball.element(i)).
GraphAction cayley_action(const BallIndex& ball, const FiniteGraph& graph);

/// l_p(g) = d(p, g.p). Throws CapacityError if g.p is not in the graph.
std::size_t action_length(const GraphAction& action, Vertex basepoint, const Element& g);

}  // namespace rdw

#endif  // RDW_BALL_HPP
