#ifndef RDW_GRAPH_HPP
#define RDW_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdw {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = -1;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once with `first < second`; edge ids are positions in
/// `edges()`. Construction rejects loops, duplicate edges and out-of-range
/// endpoints with a ConfigError.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  FiniteGraph(std::size_t n, const std::vector<Edge>& edges,
              std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  std::optional<std::size_t> edge_id(Vertex u, Vertex v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Label of `v`, or its decimal index when the graph is unlabelled.
  std::string label(Vertex v) const;

  bool operator==(const FiniteGraph& other) const {
    return edges_ == other.edges_ && adjacency_.size() == other.adjacency_.size();
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;  // sorted
  std::vector<Edge> edges_;                     // sorted, first < second
  std::vector<std::string> labels_;
};

/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const FiniteGraph& graph, Vertex source);

bool is_connected(const FiniteGraph& graph);

FiniteGraph induced_subgraph(const FiniteGraph& graph, const std::vector<Vertex>& vertices);

// Plain-text edge list: a line `n m` followed by m lines `u v` (0-based).
FiniteGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const FiniteGraph& graph);

// Named generators.
FiniteGraph path_graph(std::size_t n);
FiniteGraph cycle_graph(std::size_t n);
FiniteGraph complete_graph(std::size_t n);
FiniteGraph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Vertex (x, y) has id `y * width + x` and label "(x,y)".
FiniteGraph grid_graph(std::size_t width, std::size_t height);
FiniteGraph hypercube_graph(std::size_t dim);
/// Random recursive tree: vertex i > 0 attaches to a uniformly chosen j < i.
FiniteGraph random_tree(std::size_t n, std::uint64_t seed);

/// Resolves `grid:WxH`, `cube:d`, `cycle:n`, `path:n`, `complete:n`, `k23`,
/// `kab:AxB`, `tree:n,seed`; anything else is read as a file path.
FiniteGraph load_graph(std::string_view spec_or_path);

}  // namespace rdw

#endif  // RDW_GRAPH_HPP
