#include "rdw/group.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "families.hpp"
#include "rdw/error.hpp"

namespace rdw {

namespace detail {

std::string letter_name(std::int32_t code) {
  auto gen = letter_generator(code);
  std::string name;
  if (gen < 26) {
    name.push_back(static_cast<char>('a' + gen));
  } else {
    name = "x" + std::to_string(gen);
  }
  if (code & 1) name.push_back('\'');
  return name;
}

std::vector<Generator> letter_generators(std::size_t count) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < 2 * count; ++i) {
    auto code = static_cast<std::int32_t>(i);
    gens.push_back({letter_name(code), Element{code}, i ^ 1});
  }
  return gens;
}

}  // namespace detail

GroupSpec GroupSpec::free_abelian(std::size_t d) {
  GroupSpec s;
  s.family = Family::FreeAbelian;
  s.rank = d;
  return s;
}

GroupSpec GroupSpec::free(std::size_t k) {
  GroupSpec s;
  s.family = Family::Free;
  s.rank = k;
  return s;
}

GroupSpec GroupSpec::heisenberg(std::size_t bfs_radius) {
  GroupSpec s;
  s.family = Family::Heisenberg;
  s.rank = 2;
  s.bfs_radius = bfs_radius;
  return s;
}

GroupSpec GroupSpec::lamplighter() {
  GroupSpec s;
  s.family = Family::Lamplighter;
  s.rank = 2;
  return s;
}

GroupSpec GroupSpec::raag(FiniteGraph graph, std::string source) {
  GroupSpec s;
  s.family = Family::Raag;
  s.rank = graph.size();
  s.defining_graph = std::move(graph);
  s.graph_source = std::move(source);
  return s;
}

namespace {

std::size_t parse_rank(std::string_view text, std::string_view family) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("group spec: bad rank '" + std::string(text) + "' for " +
                     std::string(family));
  }
  return value;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  auto head = text.substr(0, colon);
  auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "zd" || head == "free-abelian") return free_abelian(parse_rank(arg, head));
  if (head == "free") return free(parse_rank(arg, head));
  if (head == "heisenberg" || head == "heis") {
    return arg.empty() ? heisenberg() : heisenberg(parse_rank(arg, head));
  }
  if (head == "lamplighter" || head == "lamp") return lamplighter();
  if (head == "raag") {
    if (arg.empty()) throw UsageError("group spec: raag needs a defining graph, e.g. raag:path:3");
    return raag(load_graph(arg), std::string(arg));
  }
  throw UsageError("group spec: unknown family '" + std::string(head) + "'");
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::FreeAbelian:
      return "zd:" + std::to_string(rank);
    case Family::Free:
      return "free:" + std::to_string(rank);
    case Family::Heisenberg:
      return "heisenberg";
    case Family::Lamplighter:
      return "lamplighter";
    case Family::Raag:
      return "raag:" + (graph_source.empty() ? std::string("<graph>") : graph_source);
  }
  return "?";
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  if (family != other.family || rank != other.rank) return false;
  if (family == Family::Raag) {
    return defining_graph.has_value() && other.defining_graph.has_value() &&
           *defining_graph == *other.defining_graph;
  }
  return true;
}

Element Group::parse_word(std::string_view word) const {
  Element result = identity();
  if (word == "e" || word == "1") return result;
  std::size_t i = 0;
  while (i < word.size()) {
    std::string base(1, word[i]);
    ++i;
    bool inverse = false;
    if (i < word.size() && word[i] == '\'') {
      inverse = true;
      ++i;
    }
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [&](const Generator& g) { return g.name == base; });
    if (it == generators_.end()) {
      throw UsageError("word '" + std::string(word) + "': no generator named '" + base +
                       "' in " + name());
    }
    const Generator& gen = inverse ? generators_[it->inverse] : *it;
    result = multiply(result, gen.element);
  }
  return result;
}

std::string Group::geodesic_word(const Element& g) const {
  std::string word;
  std::size_t len = word_length(g);
  Element w = identity();
  for (std::size_t step = 0; step < len; ++step) {
    for (const auto& s : generators_) {
      Element next = multiply(w, s.element);
      if (distance(next, g) + step + 1 == len) {
        word += s.name;
        w = std::move(next);
        break;
      }
    }
  }
  return word.empty() ? "e" : word;
}

std::vector<Element> Group::interval_level(const Element& g, std::size_t k) const {
  std::size_t len = word_length(g);
  if (k > len) return {};
  std::vector<Element> level{identity()};
  for (std::size_t j = 0; j < k; ++j) {
    std::set<Element> next;
    for (const auto& w : level) {
      for (const auto& s : generators_) {
        Element ws = multiply(w, s.element);
        if (distance(ws, g) + j + 1 == len) next.insert(std::move(ws));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

Element Group::geodesic_prefix(const Element& g, std::size_t k) const {
  std::size_t len = word_length(g);
  if (k > len) throw UsageError("geodesic_prefix: k exceeds the length of g");
  Element w = identity();
  for (std::size_t step = 0; step < k; ++step) {
    for (const auto& s : generators_) {
      Element ws = multiply(w, s.element);
      if (distance(ws, g) + step + 1 == len) {
        w = std::move(ws);
        break;
      }
    }
  }
  return w;
}

GroupHandle make_group(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::FreeAbelian:
      if (spec.rank < 1) throw ConfigError("free-abelian group needs d >= 1");
      return detail::make_free_abelian(spec);
    case Family::Free:
      if (spec.rank < 1) throw ConfigError("free group needs k >= 1");
      return detail::make_free_group(spec);
    case Family::Heisenberg:
      return detail::make_heisenberg(spec);
    case Family::Lamplighter:
      return detail::make_lamplighter(spec);
    case Family::Raag:
      if (!spec.defining_graph || spec.defining_graph->size() == 0) {
        throw ConfigError("raag needs a non-empty defining graph");
      }
      return detail::make_raag(spec);
  }
  throw ConfigError("unknown group family");
}

GroupHandle make_group(std::string_view text) { return make_group(GroupSpec::parse(text)); }

bool same_group(const Group& a, const Group& b) { return &a == &b || a.spec() == b.spec(); }

}  // namespace rdw
