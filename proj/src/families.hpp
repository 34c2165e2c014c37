// Internal factories for the built-in group families.
#ifndef RDW_SRC_FAMILIES_HPP
#define RDW_SRC_FAMILIES_HPP

#include "rdw/group.hpp"

namespace rdw::detail {

GroupHandle make_free_abelian(const GroupSpec& spec);
GroupHandle make_free_group(const GroupSpec& spec);
GroupHandle make_heisenberg(const GroupSpec& spec);
GroupHandle make_lamplighter(const GroupSpec& spec);
GroupHandle make_raag(const GroupSpec& spec);

// Letter codes shared by the word-based families: generator i is 2i and its
// inverse 2i+1, so `code ^ 1` inverts a letter and code order is a < a' < b ...
inline std::int32_t letter_inverse(std::int32_t code) { return code ^ 1; }
inline std::int32_t letter_generator(std::int32_t code) { return code >> 1; }
std::string letter_name(std::int32_t code);
std::vector<Generator> letter_generators(std::size_t count);

}  // namespace rdw::detail

#endif  // RDW_SRC_FAMILIES_HPP
