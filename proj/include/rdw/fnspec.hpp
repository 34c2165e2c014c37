#ifndef RDW_FNSPEC_HPP
#define RDW_FNSPEC_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rdw/algebra.hpp"
#include "rdw/ball.hpp"

namespace rdw {

/// 1_{B(r)}, taken from an enumerated ball with radius >= r.
AlgebraVector ball_indicator(const BallIndex& ball, std::size_t r);
/// 1_{S(r)}, the elements of length exactly r.
AlgebraVector sphere_indicator(const BallIndex& ball, std::size_t r);
/// Independent +-1 signs on B(r), drawn in ball order from make_rng(seed, r).
AlgebraVector random_signs(const BallIndex& ball, std::size_t r, std::uint64_t seed);
/// Sum of delta_s over the symmetric generating set.
AlgebraVector generator_sum(const GroupHandle& group);

/// Parses `ball:R`, `sphere:R`, `gen-sum`, `delta:<word>` or `random:R,seed`.
/// Throws UsageError on malformed text, CapacityError if B(R) is too large.
AlgebraVector parse_function(const GroupHandle& group, std::string_view text,
                             std::size_t cap = kDefaultElementCap);

}  // namespace rdw

#endif  // RDW_FNSPEC_HPP
