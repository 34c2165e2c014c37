#include <algorithm>
#include <cstdlib>
#include <memory>

#include "families.hpp"

namespace rdw::detail {
namespace {

// Z/2 wr Z. Encoding: [position, lit lamps in increasing order].
// (L, p)(L', p') = (L xor (L' + p), p + p'); t = (∅, 1), a = ({0}, 0).
class LamplighterGroup final : public Group {
 public:
  explicit LamplighterGroup(const GroupSpec& spec) : Group(spec, make_generators()) {}

  Element identity() const override { return Element{0}; }

  Element multiply(const Element& g, const Element& h) const override {
    std::int32_t shift = g[0];
    auto a = g.data().subspan(1);
    auto b = h.data().subspan(1);
    std::vector<std::int32_t> out;
    out.reserve(1 + a.size() + b.size());
    out.push_back(g[0] + h[0]);
    // symmetric difference of two sorted lists, the second shifted by `shift`
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j] + shift)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j] + shift < a[i]) {
        out.push_back(b[j++] + shift);
      } else {
        ++i;
        ++j;
      }
    }
    return Element(std::move(out));
  }

  Element invert(const Element& g) const override {
    std::vector<std::int32_t> out(g.data().begin(), g.data().end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] -= g[0];
    out[0] = -g[0];
    return Element(std::move(out));
  }

  // |L| toggles plus the shortest walk from 0 to p visiting every lit lamp.
  std::size_t word_length(const Element& g) const override {
    std::int64_t p = g[0];
    std::int64_t lo = std::min<std::int64_t>(0, p);
    std::int64_t hi = std::max<std::int64_t>(0, p);
    if (g.size() > 1) {
      lo = std::min<std::int64_t>(lo, g[1]);
      hi = std::max<std::int64_t>(hi, g[g.size() - 1]);
    }
    std::int64_t left_first = -lo + (hi - lo) + (hi - p);
    std::int64_t right_first = hi + (hi - lo) + (p - lo);
    return static_cast<std::size_t>(static_cast<std::int64_t>(g.size() - 1) +
                                    std::min(left_first, right_first));
  }

  bool is_valid(const Element& g) const override {
    if (g.size() == 0) return false;
    auto lamps = g.data().subspan(1);
    return std::adjacent_find(lamps.begin(), lamps.end(),
                              [](auto x, auto y) { return x >= y; }) == lamps.end();
  }

  std::string format(const Element& g) const override {
    std::string out = "(" + std::to_string(g[0]) + ";{";
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (i > 1) out += ",";
      out += std::to_string(g[i]);
    }
    return out + "})";
  }

 private:
  static std::vector<Generator> make_generators() {
    return {{"t", Element{1}, 1}, {"t'", Element{-1}, 0}, {"a", Element{0, 0}, 2}};
  }
};

}  // namespace

GroupHandle make_lamplighter(const GroupSpec& spec) {
  return std::make_shared<LamplighterGroup>(spec);
}

}  // namespace rdw::detail
