#include <algorithm>
#include <cstdlib>
#include <memory>

#include "families.hpp"
#include "rdw/error.hpp"

namespace rdw::detail {
namespace {

// Z^d; elements are integer vectors, generators the signed unit vectors.
class FreeAbelianGroup final : public Group {
 public:
  explicit FreeAbelianGroup(const GroupSpec& spec) : Group(spec, make_generators(spec.rank)) {}

  Element identity() const override { return Element(std::vector<std::int32_t>(dim(), 0)); }

  Element multiply(const Element& g, const Element& h) const override {
    std::vector<std::int32_t> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = g[i] + h[i];
    return Element(std::move(out));
  }

  Element invert(const Element& g) const override {
    std::vector<std::int32_t> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = -g[i];
    return Element(std::move(out));
  }

  std::size_t word_length(const Element& g) const override {
    std::size_t total = 0;
    for (auto x : g.data()) total += static_cast<std::size_t>(std::abs(x));
    return total;
  }

  bool is_valid(const Element& g) const override { return g.size() == dim(); }

  std::string format(const Element& g) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
      if (i) out += ",";
      out += std::to_string(g[i]);
    }
    return out + ")";
  }

  std::vector<Element> interval_level(const Element& g, std::size_t k) const override {
    std::vector<Element> out;
    if (k > word_length(g)) return out;
    std::vector<std::int32_t> current(dim(), 0);
    fill_level(g, 0, static_cast<std::int64_t>(k), current, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  Element geodesic_prefix(const Element& g, std::size_t k) const override {
    if (k > word_length(g)) throw UsageError("geodesic_prefix: k exceeds the length of g");
    // The ShortLex-first geodesic spends all a-letters, then all b-letters, ...
    std::vector<std::int32_t> out(dim(), 0);
    auto remaining = static_cast<std::int32_t>(k);
    for (std::size_t i = 0; i < dim() && remaining > 0; ++i) {
      std::int32_t take = std::min(remaining, std::abs(g[i]));
      out[i] = g[i] < 0 ? -take : take;
      remaining -= take;
    }
    return Element(std::move(out));
  }

 private:
  std::size_t dim() const { return spec().rank; }

  static std::vector<Generator> make_generators(std::size_t d) {
    auto gens = letter_generators(d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<std::int32_t> v(d, 0);
      v[i / 2] = (i % 2 == 0) ? 1 : -1;
      gens[i].element = Element(std::move(v));
    }
    return gens;
  }

  void fill_level(const Element& g, std::size_t i, std::int64_t budget,
                  std::vector<std::int32_t>& current, std::vector<Element>& out) const {
    if (i == dim()) {
      if (budget == 0) out.emplace_back(current);
      return;
    }
    std::int64_t cap = std::min<std::int64_t>(budget, std::abs(g[i]));
    for (std::int64_t t = 0; t <= cap; ++t) {
      current[i] = static_cast<std::int32_t>(g[i] < 0 ? -t : t);
      fill_level(g, i + 1, budget - t, current, out);
    }
    current[i] = 0;
  }
};

}  // namespace

GroupHandle make_free_abelian(const GroupSpec& spec) {
  return std::make_shared<FreeAbelianGroup>(spec);
}

}  // namespace rdw::detail
