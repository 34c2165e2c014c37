#ifndef RDW_ELEMENT_HPP
#define RDW_ELEMENT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace rdw {

// A group element in the canonical form of its family. The encoding is
// family specific (see the group implementations); two elements of the same
// group are equal iff their encodings are equal, and the lexicographic order
// on encodings is the canonical order used for deterministic enumeration.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int32_t> data) : data_(std::move(data)) {}
  Element(std::initializer_list<std::int32_t> data) : data_(data) {}

  std::span<const std::int32_t> data() const noexcept { return data_; }
  std::size_t size() const noexcept { return data_.size(); }
  std::int32_t operator[](std::size_t i) const { return data_[i]; }

  bool operator==(const Element&) const = default;
  std::strong_ordering operator<=>(const Element& other) const {
    return data_ <=> other.data_;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ data_.size();
    for (auto v : data_) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::vector<std::int32_t> data_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

}  // namespace rdw

#endif  // RDW_ELEMENT_HPP
