#include <algorithm>
#include <memory>

#include "families.hpp"
#include "rdw/error.hpp"

namespace rdw::detail {
namespace {

// Right-angled Artin group of a simple defining graph: generators are the
// vertices, adjacent generators commute. Elements are stored as the
// lexicographically least reduced word (letter codes, a < a' < b < ...),
// which is also the ShortLex-least geodesic.
class RaagGroup final : public Group {
 public:
  explicit RaagGroup(const GroupSpec& spec)
      : Group(spec, letter_generators(spec.defining_graph->size())),
        vertices_(spec.defining_graph->size()),
        commute_(vertices_ * vertices_, false) {
    for (auto [u, v] : spec.defining_graph->edges()) {
      commute_[u * vertices_ + v] = true;
      commute_[v * vertices_ + u] = true;
    }
  }

  Element identity() const override { return Element{}; }

  Element multiply(const Element& g, const Element& h) const override {
    std::vector<std::int32_t> w(g.data().begin(), g.data().end());
    w.reserve(g.size() + h.size());
    for (auto c : h.data()) append_letter(w, c);
    return Element(normal_form(w));
  }

  Element invert(const Element& g) const override {
    std::vector<std::int32_t> w(g.data().rbegin(), g.data().rend());
    for (auto& c : w) c = letter_inverse(c);
    return Element(normal_form(w));
  }

  std::size_t word_length(const Element& g) const override { return g.size(); }

  bool is_valid(const Element& g) const override {
    std::vector<std::int32_t> w;
    for (auto c : g.data()) {
      if (c < 0 || static_cast<std::size_t>(c) >= 2 * vertices_) return false;
      append_letter(w, c);
    }
    return w.size() == g.size() && normal_form(w) == std::vector<std::int32_t>(g.data().begin(), g.data().end());
  }

  std::string format(const Element& g) const override {
    if (g.size() == 0) return "e";
    std::string out;
    for (auto c : g.data()) out += letter_name(c);
    return out;
  }

  Element geodesic_prefix(const Element& g, std::size_t k) const override {
    if (k > g.size()) throw UsageError("geodesic_prefix: k exceeds the length of g");
    auto w = g.data();
    return Element(std::vector<std::int32_t>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
  }

 private:
  bool letters_commute(std::int32_t x, std::int32_t y) const {
    auto gx = static_cast<std::size_t>(letter_generator(x));
    auto gy = static_cast<std::size_t>(letter_generator(y));
    return gx != gy && commute_[gx * vertices_ + gy];
  }

  // Right-multiplies a reduced word by one letter, cancelling against the
  // last occurrence of its inverse that can be shuffled to the end.
  void append_letter(std::vector<std::int32_t>& w, std::int32_t c) const {
    for (std::size_t j = w.size(); j-- > 0;) {
      if (letter_generator(w[j]) == letter_generator(c)) {
        if (w[j] == letter_inverse(c)) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
          return;
        }
        break;
      }
      if (!letters_commute(w[j], c)) break;
    }
    w.push_back(c);
  }

  // Lexicographically least rearrangement of a reduced word by commutations:
  // repeatedly emit the smallest letter that can be moved to the front.
  std::vector<std::int32_t> normal_form(const std::vector<std::int32_t>& w) const {
    const std::size_t n = w.size();
    std::vector<std::uint16_t> blockers(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!letters_commute(w[i], w[j])) ++blockers[i];
    std::vector<bool> used(n, false);
    std::vector<std::int32_t> out;
    out.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!used[i] && blockers[i] == 0 && (best == n || w[i] < w[best])) best = i;
      }
      used[best] = true;
      out.push_back(w[best]);
      for (std::size_t k = best + 1; k < n; ++k) {
        if (!used[k] && !letters_commute(w[best], w[k])) --blockers[k];
      }
    }
    return out;
  }

  std::size_t vertices_;
  std::vector<bool> commute_;
};

}  // namespace

GroupHandle make_raag(const GroupSpec& spec) { return std::make_shared<RaagGroup>(spec); }

}  // namespace rdw::detail
