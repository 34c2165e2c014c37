#include "rdw/fnspec.hpp"

#include <charconv>
#include <string>

#include "rdw/error.hpp"
#include "rdw/random.hpp"

namespace rdw {

namespace {

std::uint64_t parse_number(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("function spec: expected a nonnegative integer for " + std::string(what) +
                     ", got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

AlgebraVector ball_indicator(const BallIndex& ball, std::size_t r) {
  std::vector<AlgebraVector::Term> terms;
  const std::size_t end = ball.prefix_size(r);
  terms.reserve(end);
  for (std::size_t i = 0; i < end; ++i) terms.emplace_back(ball.element(i), 1.0);
  return AlgebraVector(ball.group(), std::move(terms));
}

AlgebraVector sphere_indicator(const BallIndex& ball, std::size_t r) {
  std::vector<AlgebraVector::Term> terms;
  const std::size_t begin = r == 0 ? 0 : ball.prefix_size(r - 1);
  const std::size_t end = ball.prefix_size(r);
  for (std::size_t i = begin; i < end; ++i) terms.emplace_back(ball.element(i), 1.0);
  return AlgebraVector(ball.group(), std::move(terms));
}

AlgebraVector random_signs(const BallIndex& ball, std::size_t r, std::uint64_t seed) {
  auto rng = make_rng(seed, r);
  std::vector<AlgebraVector::Term> terms;
  const std::size_t end = ball.prefix_size(r);
  terms.reserve(end);
  for (std::size_t i = 0; i < end; ++i) {
    terms.emplace_back(ball.element(i), (rng() >> 63) != 0 ? -1.0 : 1.0);
  }
  return AlgebraVector(ball.group(), std::move(terms));
}

AlgebraVector generator_sum(const GroupHandle& group) {
  std::vector<AlgebraVector::Term> terms;
  for (const auto& s : group->generators()) terms.emplace_back(s.element, 1.0);
  return AlgebraVector(group, std::move(terms));
}

AlgebraVector parse_function(const GroupHandle& group, std::string_view text, std::size_t cap) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (head == "gen-sum" && colon == std::string_view::npos) return generator_sum(group);
  if (colon == std::string_view::npos) {
    throw UsageError("function spec '" + std::string(text) +
                     "' is not one of ball:R, sphere:R, gen-sum, delta:<word>, random:R,seed");
  }
  if (head == "delta") return AlgebraVector::delta(group, group->parse_word(arg));
  if (head == "ball" || head == "sphere") {
    const auto r = parse_number(arg, "R");
    const auto ball = enumerate_ball(group, r, cap);
    return head == "ball" ? ball_indicator(ball, r) : sphere_indicator(ball, r);
  }
  if (head == "random") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) {
      throw UsageError("function spec random:R,seed is missing the seed");
    }
    const auto r = parse_number(arg.substr(0, comma), "R");
    const auto seed = parse_number(arg.substr(comma + 1), "seed");
    return random_signs(enumerate_ball(group, r, cap), r, seed);
  }
  throw UsageError("unknown function spec kind '" + std::string(head) + "'");
}

}  // namespace rdw
