#include "rdw/ball.hpp"

#include <algorithm>

#include "rdw/error.hpp"

namespace rdw {

std::optional<std::size_t> BallIndex::index_of(const Element& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t BallIndex::prefix_size(std::size_t r) const {
  return shell_end_.at(std::min(r, radius_));
}

BallIndex enumerate_ball(const GroupHandle& group, std::size_t radius, std::size_t cap) {
  BallIndex ball;
  ball.group_ = group;
  ball.radius_ = radius;
  const auto& gens = group->generators();
  ball.generator_count_ = gens.size();

  ball.elements_.push_back(group->identity());
  ball.lengths_.push_back(0);
  ball.index_.emplace(group->identity(), 0);
  ball.shell_end_.push_back(1);

  std::size_t shell_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::size_t shell_end = ball.elements_.size();
    std::vector<Element> fresh;
    for (std::size_t i = shell_begin; i < shell_end; ++i) {
      for (const auto& s : gens) {
        Element y = group->multiply(ball.elements_[i], s.element);
        if (!ball.index_.contains(y)) fresh.push_back(std::move(y));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (ball.elements_.size() + fresh.size() > cap) {
      throw CapacityError("ball of radius " + std::to_string(r) + " in " + group->name() +
                              " exceeds the element cap of " + std::to_string(cap),
                          r);
    }
    for (auto& y : fresh) {
      ball.index_.emplace(y, static_cast<std::uint32_t>(ball.elements_.size()));
      ball.elements_.push_back(std::move(y));
      ball.lengths_.push_back(static_cast<std::uint32_t>(r));
    }
    ball.shell_end_.push_back(ball.elements_.size());
    shell_begin = shell_end;
  }

  ball.adjacency_.assign(ball.elements_.size() * gens.size(), kOutsideBall);
  for (std::size_t i = 0; i < ball.elements_.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto it = ball.index_.find(group->multiply(ball.elements_[i], gens[s].element));
      if (it != ball.index_.end()) {
        ball.adjacency_[i * gens.size() + s] = static_cast<std::int32_t>(it->second);
      }
    }
  }
  return ball;
}

std::vector<std::size_t> growth_function(const BallIndex& ball) {
  std::vector<std::size_t> gamma;
  gamma.reserve(ball.radius() + 1);
  for (std::size_t r = 0; r <= ball.radius(); ++r) gamma.push_back(ball.prefix_size(r));
  return gamma;
}

FiniteGraph cayley_graph(const BallIndex& ball) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t s = 0; s < ball.generator_count(); ++s) {
      auto j = ball.neighbor(i, s);
      if (j != kOutsideBall && static_cast<std::size_t>(j) > i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::string> labels;
  labels.reserve(ball.size());
  for (const auto& g : ball.elements()) labels.push_back(ball.group()->format(g));
  return FiniteGraph(ball.size(), edges, std::move(labels));
}

GraphAction cayley_action(const BallIndex& ball, const FiniteGraph& graph) {
  GraphAction action;
  action.graph = &graph;
  action.act = [&ball](const Element& g, Vertex v) -> std::optional<Vertex> {
    auto idx = ball.index_of(ball.group()->multiply(g, ball.element(v)));
    if (!idx) return std::nullopt;
    return static_cast<Vertex>(*idx);
  };
  return action;
}

std::size_t action_length(const GraphAction& action, Vertex basepoint, const Element& g) {
  auto image = action.act(g, basepoint);
  if (!image) {
    throw CapacityError("action_length: the orbit point g.p lies outside the loaded graph");
  }
  auto dist = bfs_distances(*action.graph, basepoint);
  if (dist[*image] == kUnreachable) {
    throw UsageError("action_length: g.p is not connected to the basepoint");
  }
  return static_cast<std::size_t>(dist[*image]);
}

}  // namespace rdw
