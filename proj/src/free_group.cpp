#include <memory>

#include "families.hpp"
#include "rdw/error.hpp"

namespace rdw::detail {
namespace {

// F_k; elements are freely reduced words of letter codes.
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(const GroupSpec& spec) : Group(spec, letter_generators(spec.rank)) {}

  Element identity() const override { return Element{}; }

  Element multiply(const Element& g, const Element& h) const override {
    auto a = g.data();
    auto b = h.data();
    std::size_t cancel = 0;
    while (cancel < a.size() && cancel < b.size() &&
           a[a.size() - 1 - cancel] == letter_inverse(b[cancel])) {
      ++cancel;
    }
    std::vector<std::int32_t> out;
    out.reserve(a.size() + b.size() - 2 * cancel);
    out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
    return Element(std::move(out));
  }

  Element invert(const Element& g) const override {
    std::vector<std::int32_t> out(g.data().rbegin(), g.data().rend());
    for (auto& c : out) c = letter_inverse(c);
    return Element(std::move(out));
  }

  std::size_t word_length(const Element& g) const override { return g.size(); }

  bool is_valid(const Element& g) const override {
    auto w = g.data();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0 || static_cast<std::size_t>(w[i]) >= 2 * spec().rank) return false;
      if (i > 0 && w[i] == letter_inverse(w[i - 1])) return false;
    }
    return true;
  }

  std::string format(const Element& g) const override {
    if (g.size() == 0) return "e";
    std::string out;
    for (auto c : g.data()) out += letter_name(c);
    return out;
  }

  std::vector<Element> interval_level(const Element& g, std::size_t k) const override {
    if (k > g.size()) return {};
    return {prefix(g, k)};
  }

  Element geodesic_prefix(const Element& g, std::size_t k) const override {
    if (k > g.size()) throw UsageError("geodesic_prefix: k exceeds the length of g");
    return prefix(g, k);
  }

 private:
  static Element prefix(const Element& g, std::size_t k) {
    auto w = g.data();
    return Element(std::vector<std::int32_t>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
  }
};

}  // namespace

GroupHandle make_free_group(const GroupSpec& spec) { return std::make_shared<FreeGroup>(spec); }

}  // namespace rdw::detail
