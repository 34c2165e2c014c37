#ifndef RDW_GROUP_HPP
#define RDW_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdw/element.hpp"
#include "rdw/graph.hpp"

namespace rdw {

enum class Family { FreeAbelian, Free, Heisenberg, Lamplighter, Raag };

/// Which built-in group to construct, together with its standard generating set.
///
/// | family       | generators (in canonical order)            |
/// |--------------|--------------------------------------------|
/// | free-abelian | a a' b b' ... (unit vectors and negatives) |
/// | free         | a a' b b' ...                              |
/// | heisenberg   | a a' b b' with a=(1,0,0), b=(0,1,0)        |
/// | lamplighter  | t t' a (shift right, shift left, toggle)   |
/// | raag         | one letter per defining-graph vertex + inverses |
struct GroupSpec {
  Family family = Family::FreeAbelian;
  std::size_t rank = 1;                       // d for free-abelian, k for free
  std::optional<FiniteGraph> defining_graph;  // raag only
  std::string graph_source;                   // how the defining graph was named
  std::size_t bfs_radius = 20;                // memo radius for BFS-backed word lengths

  static GroupSpec free_abelian(std::size_t d);
  static GroupSpec free(std::size_t k);
  static GroupSpec heisenberg(std::size_t bfs_radius = 20);
  static GroupSpec lamplighter();
  static GroupSpec raag(FiniteGraph graph, std::string source = {});

  /// Parses `zd:<d>`, `free:<k>`, `heisenberg`, `lamplighter`, `raag:<graph>`
  /// where `<graph>` is anything accepted by load_graph.
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const GroupSpec& other) const;
};

struct Generator {
  std::string name;
  Element element;
  std::size_t inverse;  // index of the inverse generator in the list
};

/// Exact arithmetic for one group with a fixed symmetric generating set.
///
/// Instances are immutable once constructed (lazy memo tables are built under
/// std::call_once) and may be shared across threads.
class Group {
 public:
  virtual ~Group() = default;

  const GroupSpec& spec() const noexcept { return spec_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::string name() const { return spec_.to_string(); }

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& g, const Element& h) const = 0;
  virtual Element invert(const Element& g) const = 0;
  /// Exact word length with respect to generators(). Throws CapacityError for
  /// BFS-backed families when `g` lies outside the memo ball.
  virtual std::size_t word_length(const Element& g) const = 0;
  virtual bool is_valid(const Element& g) const = 0;
  virtual std::string format(const Element& g) const = 0;

  /// Product of generators named in `word`, e.g. "aba'" (prime = inverse).
  Element parse_word(std::string_view word) const;
  /// A ShortLex-least geodesic word for `g`, formatted like parse_word input.
  std::string geodesic_word(const Element& g) const;

  /// Elements w with l(w) = k and l(w) + l(w^-1 g) = l(g), i.e. the level-k
  /// slice of the interval [1, g]. Sorted canonically.
  virtual std::vector<Element> interval_level(const Element& g, std::size_t k) const;
  /// The vertex at distance k from 1 on the ShortLex-first geodesic to g.
  virtual Element geodesic_prefix(const Element& g, std::size_t k) const;

  std::size_t distance(const Element& g, const Element& h) const {
    return word_length(multiply(invert(g), h));
  }

 protected:
  Group(GroupSpec spec, std::vector<Generator> generators)
      : spec_(std::move(spec)), generators_(std::move(generators)) {}

 private:
  GroupSpec spec_;
  std::vector<Generator> generators_;
};

using GroupHandle = std::shared_ptr<const Group>;

/// Throws ConfigError for invalid specs (rank 0, missing or non-simple raag graph).
GroupHandle make_group(const GroupSpec& spec);
GroupHandle make_group(std::string_view text);

bool same_group(const Group& a, const Group& b);

}  // namespace rdw

#endif  // RDW_GROUP_HPP
