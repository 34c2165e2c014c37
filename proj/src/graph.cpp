#include "rdw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "rdw/error.hpp"
#include "rdw/random.hpp"

namespace rdw {

FiniteGraph::FiniteGraph(std::size_t n, const std::vector<Edge>& edges,
                         std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw ConfigError("graph: label count does not match vertex count");
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ConfigError("graph: edge " + std::to_string(u) + " " + std::to_string(v) +
                        " has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw ConfigError("graph: loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw ConfigError("graph: duplicate edge " + std::to_string(dup->first) + " " +
                      std::to_string(dup->second));
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool FiniteGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> FiniteGraph::edge_id(Vertex u, Vertex v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string FiniteGraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

std::vector<int> bfs_distances(const FiniteGraph& graph, Vertex source) {
  std::vector<int> dist(graph.size(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(graph.size());
  dist.at(source) = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : graph.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const FiniteGraph& graph) {
  if (graph.size() == 0) return true;
  auto d = bfs_distances(graph, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

FiniteGraph induced_subgraph(const FiniteGraph& graph, const std::vector<Vertex>& vertices) {
  std::vector<int> local(graph.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    labels.push_back(graph.label(vertices[i]));
    for (Vertex w : graph.neighbors(vertices[i])) {
      if (local[w] > static_cast<int>(i)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
      }
    }
  }
  return FiniteGraph(vertices.size(), edges, std::move(labels));
}

FiniteGraph read_graph(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw ConfigError("graph: expected header line `n m` with non-negative integers");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) {
      throw ConfigError("graph: expected " + std::to_string(m) + " edge lines, got " +
                        std::to_string(i));
    }
    if (u < 0 || v < 0) throw ConfigError("graph: negative vertex index on edge line " +
                                          std::to_string(i + 1));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return FiniteGraph(static_cast<std::size_t>(n), edges);
}

void write_graph(std::ostream& out, const FiniteGraph& graph) {
  out << graph.size() << ' ' << graph.edge_count() << '\n';
  for (auto [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

FiniteGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return FiniteGraph(n, edges);
}

FiniteGraph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("cycle graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return FiniteGraph(n, edges);
}

FiniteGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return FiniteGraph(n, edges);
}

FiniteGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return FiniteGraph(a + b, edges);
}

FiniteGraph grid_graph(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw UsageError("grid dimensions must be positive");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      Vertex v = static_cast<Vertex>(y * width + x);
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (x + 1 < width) edges.emplace_back(v, v + 1);
      if (y + 1 < height) edges.emplace_back(v, v + width);
    }
  }
  return FiniteGraph(width * height, edges, std::move(labels));
}

FiniteGraph hypercube_graph(std::size_t dim) {
  if (dim > 20) throw UsageError("hypercube dimension too large");
  std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b)
      if (!(v & (std::size_t{1} << b))) edges.emplace_back(v, v | (std::size_t{1} << b));
  return FiniteGraph(n, edges);
}

FiniteGraph random_tree(std::size_t n, std::uint64_t seed) {
  auto rng = make_rng(seed, 0x7472);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(draw_index(rng, i)), static_cast<Vertex>(i));
  }
  return FiniteGraph(n, edges);
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("graph spec: cannot parse " + std::string(what) + " from '" +
                     std::string(text) + "'");
  }
  return value;
}

std::pair<std::size_t, std::size_t> parse_pair(std::string_view text, char sep,
                                               std::string_view what) {
  auto pos = text.find(sep);
  if (pos == std::string_view::npos) {
    throw UsageError("graph spec: expected " + std::string(what));
  }
  return {parse_count(text.substr(0, pos), what), parse_count(text.substr(pos + 1), what)};
}

}  // namespace

FiniteGraph load_graph(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (spec == "k23") return complete_bipartite_graph(2, 3);
  if (colon != std::string_view::npos) {
    if (head == "grid") {
      auto [w, h] = parse_pair(arg, 'x', "WxH");
      return grid_graph(w, h);
    }
    if (head == "cube") return hypercube_graph(parse_count(arg, "dimension"));
    if (head == "cycle") return cycle_graph(parse_count(arg, "cycle length"));
    if (head == "path") return path_graph(parse_count(arg, "path length"));
    if (head == "complete") return complete_graph(parse_count(arg, "vertex count"));
    if (head == "kab") {
      auto [a, b] = parse_pair(arg, 'x', "AxB");
      return complete_bipartite_graph(a, b);
    }
    if (head == "tree") {
      auto [n, seed] = parse_pair(arg, ',', "n,seed");
      return random_tree(n, seed);
    }
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw UsageError("graph: '" + std::string(spec) + "' is neither a named graph nor a readable file");
  return read_graph(in);
}

}  // namespace rdw
