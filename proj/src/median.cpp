#include "rdw/median.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "rdw/error.hpp"

namespace rdw {

namespace {

constexpr std::uint16_t kFar = 0xFFFF;

std::vector<std::string> labels_of(const FiniteGraph& graph, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex x : vs) out.push_back(graph.label(x));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + "}";
}

void require_vertex(const FiniteGraph& graph, Vertex v) {
  if (v >= graph.size()) {
    throw UsageError("vertex " + std::to_string(v) + " is outside a graph with " +
                     std::to_string(graph.size()) + " vertices");
  }
}

// Row-major all-pairs table; vertex counts are capped well below 2^16.
std::vector<std::uint16_t> all_pairs(const FiniteGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::uint16_t> table(n * n, kFar);
  for (Vertex s = 0; s < n; ++s) {
    auto d = bfs_distances(graph, s);
    for (std::size_t x = 0; x < n; ++x) {
      if (d[x] != kUnreachable) table[s * n + x] = static_cast<std::uint16_t>(d[x]);
    }
  }
  return table;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Vertex> interval(const FiniteGraph& graph, Vertex u, Vertex v) {
  require_vertex(graph, u);
  require_vertex(graph, v);
  const auto du = bfs_distances(graph, u);
  if (du[v] == kUnreachable) {
    throw UsageError("interval: vertices " + graph.label(u) + " and " + graph.label(v) +
                     " lie in different components");
  }
  const auto dv = bfs_distances(graph, v);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < graph.size(); ++x) {
    if (du[x] != kUnreachable && du[x] + dv[x] == du[v]) out.push_back(x);
  }
  return out;
}

MedianReport is_median(const FiniteGraph& graph, std::size_t vertex_cap) {
  const std::size_t n = graph.size();
  if (n > vertex_cap) {
    throw CapacityError("is_median: " + std::to_string(n) + " vertices exceed the cap of " +
                        std::to_string(vertex_cap));
  }
  MedianReport report;
  if (n > 0) {
    const auto d0 = bfs_distances(graph, 0);
    for (Vertex x = 0; x < n; ++x) {
      if (d0[x] == kUnreachable) {
        report.violating_triple = std::array<Vertex, 3>{0, x, x};
        report.reason = "graph is disconnected: no path from " + graph.label(0) + " to " +
                        graph.label(x);
        return report;
      }
    }
  }
  const auto D = all_pairs(graph);
  auto d = [&](std::size_t a, std::size_t b) { return static_cast<int>(D[a * n + b]); };
  std::vector<Vertex> uv;
  // Triples with a repeated vertex always have a unique median.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      uv.clear();
      for (Vertex x = 0; x < n; ++x) {
        if (d(u, x) + d(x, v) == d(u, v)) uv.push_back(x);
      }
      for (Vertex w = v + 1; w < n; ++w) {
        std::size_t count = 0;
        for (Vertex x : uv) {
          if (d(v, x) + d(x, w) == d(v, w) && d(w, x) + d(x, u) == d(w, u) && ++count > 1) break;
        }
        if (count == 1) continue;
        report.violating_triple = std::array<Vertex, 3>{u, v, w};
        for (Vertex x : uv) {
          if (d(v, x) + d(x, w) == d(v, w) && d(w, x) + d(x, u) == d(w, u)) {
            report.intersection.push_back(x);
          }
        }
        report.reason = "triple (" + graph.label(u) + "," + graph.label(v) + "," +
                        graph.label(w) + ") has interval intersection " +
                        join(labels_of(graph, report.intersection));
        return report;
      }
    }
  }
  report.is_median = true;
  return report;
}

Vertex median(const FiniteGraph& graph, Vertex u, Vertex v, Vertex w) {
  require_vertex(graph, u);
  require_vertex(graph, v);
  require_vertex(graph, w);
  const auto du = bfs_distances(graph, u);
  const auto dv = bfs_distances(graph, v);
  const auto dw = bfs_distances(graph, w);
  if (du[v] == kUnreachable || du[w] == kUnreachable) {
    throw UsageError("median: the three vertices are not in one component");
  }
  // x lies in all three intervals iff its distance sum equals half the perimeter.
  const int half = (du[v] + dv[w] + dw[u]) / 2;
  std::vector<Vertex> hits;
  if ((du[v] + dv[w] + dw[u]) % 2 == 0) {
    for (Vertex x = 0; x < graph.size(); ++x) {
      if (du[x] != kUnreachable && du[x] + dv[x] + dw[x] == half) hits.push_back(x);
    }
  }
  if (hits.size() != 1) {
    auto labels = labels_of(graph, hits);
    throw MedianViolation("median(" + graph.label(u) + "," + graph.label(v) + "," +
                              graph.label(w) + ") is not unique: intersection " + join(labels),
                          std::move(labels));
  }
  return hits.front();
}

std::vector<Hyperplane> hyperplanes(const FiniteGraph& graph) {
  const std::size_t n = graph.size();
  const auto& edges = graph.edges();
  if (n > 0 && !is_connected(graph)) {
    throw MedianViolation("hyperplanes: graph is disconnected", {});
  }
  auto eid = [&](Vertex a, Vertex b) { return *graph.edge_id(a, b); };

  UnionFind classes(edges.size());
  std::vector<Vertex> common;
  for (Vertex a = 0; a < n; ++a) {
    const auto& na = graph.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        const Vertex b = na[i], c = na[j];
        common.clear();
        std::set_intersection(graph.neighbors(b).begin(), graph.neighbors(b).end(),
                              graph.neighbors(c).begin(), graph.neighbors(c).end(),
                              std::back_inserter(common));
        for (Vertex x : common) {
          if (x == a) continue;
          // square a-b-x-c
          classes.unite(eid(a, b), eid(c, x));
          classes.unite(eid(a, c), eid(b, x));
        }
      }
    }
  }

  std::vector<Hyperplane> out;
  std::vector<std::size_t> class_of_root(edges.size(), SIZE_MAX);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t root = classes.find(e);
    if (class_of_root[root] == SIZE_MAX) {
      class_of_root[root] = out.size();
      out.push_back(Hyperplane{out.size(), {}, {}});
    }
    out[class_of_root[root]].edges.push_back(e);
  }

  std::vector<std::uint8_t> in_class(edges.size(), 0);
  std::vector<Vertex> queue;
  for (auto& h : out) {
    for (auto e : h.edges) in_class[e] = 1;
    constexpr std::uint8_t kUnset = 2;
    h.side.assign(n, kUnset);
    auto flood = [&](Vertex start, std::uint8_t label) {
      queue.assign(1, start);
      h.side[start] = label;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Vertex x = queue[qi];
        for (Vertex y : graph.neighbors(x)) {
          if (h.side[y] != kUnset || in_class[eid(x, y)]) continue;
          h.side[y] = label;
          queue.push_back(y);
        }
      }
    };
    const Edge first = edges[h.edges.front()];
    flood(first.first, 0);
    const bool split = h.side[first.second] == kUnset;
    if (split) flood(first.second, 1);
    bool ok = split && std::find(h.side.begin(), h.side.end(), kUnset) == h.side.end();
    for (auto e : h.edges) {
      ok = ok && h.side[edges[e].first] != h.side[edges[e].second];
      in_class[e] = 0;
    }
    if (!ok) {
      throw MedianViolation("hyperplanes: edge class through " + graph.label(first.first) + "-" +
                                graph.label(first.second) +
                                " does not split the graph into two halfspaces",
                            {});
    }
  }
  return out;
}

WallDistance wall_distance_check(const FiniteGraph& graph, const std::vector<Hyperplane>& walls,
                                 Vertex u, Vertex v) {
  require_vertex(graph, u);
  require_vertex(graph, v);
  const auto du = bfs_distances(graph, u);
  if (du[v] == kUnreachable) throw UsageError("wall_distance_check: disconnected pair");
  WallDistance out;
  out.d = static_cast<std::size_t>(du[v]);
  for (const auto& h : walls) out.separating += h.side[u] != h.side[v];
  out.equal = out.d == out.separating;
  return out;
}

WallDistance wall_distance_check(const FiniteGraph& graph, Vertex u, Vertex v) {
  return wall_distance_check(graph, hyperplanes(graph), u, v);
}

HyperplanePoset hyperplane_poset(const FiniteGraph& graph, const std::vector<Hyperplane>& walls,
                                 Vertex v, Vertex w) {
  HyperplanePoset poset;
  poset.v = v;
  poset.w = w;
  poset.interval = interval(graph, v, w);
  for (const auto& h : walls) {
    if (h.side[v] != h.side[w]) poset.ground.push_back(h);
  }
  const std::size_t k = poset.ground.size();
  // w_side[i][x]: interval vertex x lies on w's side of ground[i].
  std::vector<std::vector<bool>> w_side(k, std::vector<bool>(poset.interval.size()));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& side = poset.ground[i].side;
    for (std::size_t x = 0; x < poset.interval.size(); ++x) {
      w_side[i][x] = side[poset.interval[x]] == side[w];
    }
  }
  // Two walls that both separate v from w either cross or are nested; nested
  // with h1 nearer to v exactly when w's side of h2 sits inside w's side of h1.
  poset.less.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      bool inside = true;
      for (std::size_t x = 0; x < poset.interval.size() && inside; ++x) {
        inside = !w_side[j][x] || w_side[i][x];
      }
      poset.less[i][j] = inside;
    }
  }
  return poset;
}

HyperplanePoset hyperplane_poset(const FiniteGraph& graph, Vertex v, Vertex w) {
  return hyperplane_poset(graph, hyperplanes(graph), v, w);
}

ChainCover chain_cover(const HyperplanePoset& poset) {
  const std::size_t k = poset.ground.size();
  std::vector<std::size_t> pred(k, SIZE_MAX);  // matched i -> j stored as pred[j] = i
  std::vector<std::size_t> succ(k, SIZE_MAX);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!poset.less[i][j] || seen[j]) continue;
      seen[j] = 1;
      if (pred[j] == SIZE_MAX || augment(pred[j])) {
        pred[j] = i;
        succ[i] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    seen.assign(k, 0);
    augment(i);
  }
  ChainCover cover;
  for (std::size_t i = 0; i < k; ++i) {
    if (pred[i] != SIZE_MAX) continue;
    std::vector<std::size_t> chain;
    for (std::size_t x = i; x != SIZE_MAX; x = succ[x]) chain.push_back(x);
    cover.chains.push_back(std::move(chain));
  }
  cover.width = cover.chains.size();
  return cover;
}

std::vector<std::size_t> interval_coordinates(const HyperplanePoset& poset,
                                              const ChainCover& cover, Vertex u) {
  if (!std::binary_search(poset.interval.begin(), poset.interval.end(), u)) {
    throw UsageError("interval_coordinates: vertex " + std::to_string(u) +
                     " is not in the interval [" + std::to_string(poset.v) + ", " +
                     std::to_string(poset.w) + "]");
  }
  std::vector<std::size_t> coords;
  coords.reserve(cover.chains.size());
  for (const auto& chain : cover.chains) {
    std::size_t c = 0;
    for (std::size_t i : chain) {
      const auto& side = poset.ground.at(i).side;
      c += side[u] != side[poset.v];
    }
    coords.push_back(c);
  }
  return coords;
}

std::vector<IntervalGrowthPoint> interval_growth_check(const FiniteGraph& graph, Vertex v,
                                                       Vertex w, std::size_t r_max) {
  const auto poset = hyperplane_poset(graph, v, w);
  const auto cover = chain_cover(poset);
  const auto dv = bfs_distances(graph, v);
  std::vector<IntervalGrowthPoint> out;
  for (std::size_t r = 0; r <= r_max; ++r) {
    IntervalGrowthPoint p;
    p.r = r;
    for (Vertex x : poset.interval) p.count += static_cast<std::size_t>(dv[x]) <= r;
    p.bound = std::pow(static_cast<double>(r + 1), static_cast<double>(cover.width));
    p.holds = static_cast<double>(p.count) <= p.bound;
    out.push_back(p);
  }
  return out;
}

}  // namespace rdw
