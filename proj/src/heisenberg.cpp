#include <memory>
#include <mutex>
#include <unordered_map>

#include "families.hpp"
#include "rdw/error.hpp"

namespace rdw::detail {
namespace {

// Integer Heisenberg group. (x, y, z) stands for the matrix
//   [1 x z]
//   [0 1 y]
//   [0 0 1]
// so (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
class HeisenbergGroup final : public Group {
 public:
  explicit HeisenbergGroup(const GroupSpec& spec) : Group(spec, make_generators()) {}

  Element identity() const override { return Element{0, 0, 0}; }

  Element multiply(const Element& g, const Element& h) const override {
    return Element{g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]};
  }

  Element invert(const Element& g) const override {
    return Element{-g[0], -g[1], -g[2] + g[0] * g[1]};
  }

  std::size_t word_length(const Element& g) const override {
    std::call_once(memo_once_, [this] { build_memo(); });
    auto it = memo_.find(g);
    if (it == memo_.end()) {
      throw CapacityError("heisenberg: " + format(g) + " lies outside the word-length memo ball of radius " +
                              std::to_string(spec().bfs_radius),
                          spec().bfs_radius);
    }
    return it->second;
  }

  bool is_valid(const Element& g) const override { return g.size() == 3; }

  std::string format(const Element& g) const override {
    return "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
  }

 private:
  static std::vector<Generator> make_generators() {
    auto gens = letter_generators(2);
    gens[0].element = Element{1, 0, 0};
    gens[1].element = Element{-1, 0, 0};
    gens[2].element = Element{0, 1, 0};
    gens[3].element = Element{0, -1, 0};
    return gens;
  }

  void build_memo() const {
    std::vector<Element> frontier{identity()};
    memo_.emplace(identity(), 0);
    for (std::size_t r = 1; r <= spec().bfs_radius; ++r) {
      std::vector<Element> next;
      for (const auto& x : frontier) {
        for (const auto& s : generators()) {
          Element y = multiply(x, s.element);
          if (memo_.emplace(y, static_cast<std::uint32_t>(r)).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
  }

  mutable std::once_flag memo_once_;
  mutable std::unordered_map<Element, std::uint32_t, ElementHash> memo_;
};

}  // namespace

GroupHandle make_heisenberg(const GroupSpec& spec) {
  return std::make_shared<HeisenbergGroup>(spec);
}

}  // namespace rdw::detail
