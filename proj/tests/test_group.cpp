#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "rdw/ball.hpp"
#include "rdw/error.hpp"
#include "rdw/fit.hpp"
#include "rdw/group.hpp"
#include "rdw/random.hpp"

using namespace rdw;

namespace {

// Word lengths by plain BFS over generator products, independent of the
// per-family closed forms.
std::map<Element, std::size_t> bfs_lengths(const Group& group, std::size_t radius) {
  std::map<Element, std::size_t> dist{{group.identity(), 0}};
  std::vector<Element> frontier{group.identity()};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : group.generators()) {
        Element y = group.multiply(x, s.element);
        if (dist.emplace(y, r).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

// Upper unitriangular 3x3 integer matrices.
using Mat = std::array<std::array<long long, 3>, 3>;
Mat heis(const Element& g) { return Mat{{{1, g[0], g[2]}, {0, 1, g[1]}, {0, 0, 1}}}; }
Mat matmul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Lamplighter as (lit set, position) with (L, p)(L', p') = (L xor (L' + p), p + p').
struct Lamps {
  std::set<int> lit;
  int pos = 0;
};
Lamps lamp_mul(const Lamps& a, const Lamps& b) {
  Lamps out = a;
  for (int x : b.lit) {
    if (!out.lit.erase(x + a.pos)) out.lit.insert(x + a.pos);
  }
  out.pos = a.pos + b.pos;
  return out;
}
Element lamp_encode(const Lamps& l) {
  std::vector<std::int32_t> v{l.pos};
  v.insert(v.end(), l.lit.begin(), l.lit.end());
  return Element(std::move(v));
}

std::vector<GroupHandle> all_families() {
  return {make_group("zd:1"), make_group("zd:2"), make_group("free:2"), make_group("heisenberg"),
          make_group("lamplighter"), make_group("raag:path:3"), make_group("raag:cycle:4")};
}

}  // namespace

TEST_SUITE("group-core") {
  TEST_CASE("make_group exposes the standard generating sets") {
    CHECK(make_group("zd:1")->generators().size() == 2);
    CHECK(make_group("zd:1")->parse_word("a") == Element{1});
    CHECK(make_group("zd:1")->parse_word("a'") == Element{-1});
    CHECK(make_group("free:2")->generators().size() == 4);
    CHECK(make_group("raag:path:3")->generators().size() == 6);
    CHECK(make_group("heisenberg")->generators().size() == 4);
    CHECK(make_group("lamplighter")->generators().size() == 3);
  }

  TEST_CASE("raag on the path a-b-c commutes exactly along edges") {
    auto G = make_group("raag:path:3");
    CHECK(G->parse_word("ab") == G->parse_word("ba"));
    CHECK(G->parse_word("bc") == G->parse_word("cb"));
    CHECK(G->parse_word("ac") != G->parse_word("ca"));
  }

  TEST_CASE("malformed specs are configuration errors") {
    CHECK_THROWS_AS(make_group("zd:0"), UsageError);
    CHECK_THROWS_AS(make_group("free:x"), UsageError);
    CHECK_THROWS_AS(make_group("bogus"), UsageError);
    std::istringstream loop("2 1\n0 0\n");
    CHECK_THROWS_AS(read_graph(loop), ConfigError);
    std::istringstream dup("2 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_graph(dup), ConfigError);
    std::istringstream range("2 1\n0 5\n");
    CHECK_THROWS_AS(read_graph(range), ConfigError);
  }

  TEST_CASE("spec round trip") {
    for (const char* text : {"zd:3", "free:2", "heisenberg", "lamplighter", "raag:path:3"}) {
      CHECK(GroupSpec::parse(text).to_string() == text);
    }
  }

  TEST_CASE("multiply examples") {
    auto F2 = make_group("free:2");
    CHECK(F2->multiply(F2->parse_word("ab"), F2->parse_word("b'a")) == F2->parse_word("aa"));
    auto Z2 = make_group("zd:2");
    CHECK(Z2->multiply(Element{3, -1}, Element{-1, 4}) == Element{2, 3});
  }

  TEST_CASE("heisenberg product agrees with 3x3 integer matrices") {
    auto H = make_group("heisenberg");
    const Element a{1, 0, 0}, b{0, 1, 0};
    const Element ab = H->multiply(a, b), ba = H->multiply(b, a);
    CHECK(ab[0] == ba[0]);
    CHECK(ab[1] == ba[1]);
    CHECK(std::abs(ab[2] - ba[2]) == 1);
    auto rng = make_rng(11);
    for (int t = 0; t < 200; ++t) {
      auto pick = [&] {
        return Element{static_cast<std::int32_t>(draw_index(rng, 21)) - 10,
                       static_cast<std::int32_t>(draw_index(rng, 21)) - 10,
                       static_cast<std::int32_t>(draw_index(rng, 201)) - 100};
      };
      const Element g = pick(), h = pick();
      const Mat m = matmul(heis(g), heis(h));
      const Element gh = H->multiply(g, h);
      CHECK(m[0][1] == gh[0]);
      CHECK(m[1][2] == gh[1]);
      CHECK(m[0][2] == gh[2]);
      CHECK(H->multiply(g, H->invert(g)) == H->identity());
    }
  }

  TEST_CASE("invert examples") {
    auto F2 = make_group("free:2");
    CHECK(F2->invert(F2->parse_word("ab'")) == F2->parse_word("ba'"));
    CHECK(F2->invert(F2->identity()) == F2->identity());
    auto L = make_group("lamplighter");
    CHECK(L->invert(Element{1, 0}) == Element{-1, -1});
  }

  TEST_CASE("lamplighter arithmetic agrees with the wreath-product model") {
    auto L = make_group("lamplighter");
    auto rng = make_rng(5);
    auto pick = [&] {
      Lamps l;
      l.pos = static_cast<int>(draw_index(rng, 9)) - 4;
      for (int x = -4; x <= 4; ++x) {
        if (rng() & 1) l.lit.insert(x);
      }
      return l;
    };
    for (int t = 0; t < 200; ++t) {
      const Lamps a = pick(), b = pick();
      CHECK(L->multiply(lamp_encode(a), lamp_encode(b)) == lamp_encode(lamp_mul(a, b)));
    }
  }

  TEST_CASE("word_length examples") {
    CHECK(make_group("zd:2")->word_length(Element{3, -4}) == 7);
    auto F2 = make_group("free:2");
    CHECK(F2->word_length(F2->parse_word("aba'")) == 3);
    auto H = make_group("heisenberg");
    CHECK(H->word_length(Element{0, 0, 1}) == 4);  // the commutator a b a' b'
  }

  TEST_CASE("word lengths agree with a BFS oracle on every family") {
    for (const auto& G : all_families()) {
      CAPTURE(G->name());
      const auto oracle = bfs_lengths(*G, 6);
      for (const auto& [x, len] : oracle) REQUIRE(G->word_length(x) == len);
    }
  }

  TEST_CASE("heisenberg lengths beyond the memo radius fail loudly") {
    auto H = make_group(GroupSpec::heisenberg(4));
    CHECK_THROWS_AS(H->word_length(Element{0, 0, 1000}), CapacityError);
  }

  TEST_CASE("length-function axioms on sampled pairs") {
    for (const auto& G : all_families()) {
      CAPTURE(G->name());
      const auto ball = enumerate_ball(G, 4);
      auto rng = make_rng(3);
      CHECK(G->word_length(G->identity()) == 0);
      for (int t = 0; t < 300; ++t) {
        const auto& x = ball.element(draw_index(rng, ball.size()));
        const auto& y = ball.element(draw_index(rng, ball.size()));
        CHECK(G->word_length(G->invert(x)) == G->word_length(x));
        CHECK(G->word_length(G->multiply(x, y)) <= G->word_length(x) + G->word_length(y));
      }
    }
  }

  TEST_CASE("raag normal forms are stable and canonical") {
    auto G = make_group("raag:cycle:5");
    auto rng = make_rng(8);
    const char letters[] = {'a', 'b', 'c', 'd', 'e'};
    for (int t = 0; t < 200; ++t) {
      std::string w;
      for (int i = 0; i < 12; ++i) {
        w += letters[draw_index(rng, 5)];
        if (rng() & 1) w += '\'';
      }
      const Element g = G->parse_word(w);
      CHECK(G->is_valid(g));
      CHECK(G->parse_word(G->format(g)) == g);
      CHECK(G->parse_word(G->geodesic_word(g)) == g);
    }
  }

  TEST_CASE("enumerate_ball examples") {
    CHECK(enumerate_ball(make_group("zd:1"), 3).size() == 7);
    CHECK(enumerate_ball(make_group("free:2"), 2).size() == 17);
    CHECK(enumerate_ball(make_group("zd:2"), 2).size() == 13);
  }

  TEST_CASE("ball order, lengths and adjacency") {
    for (const auto& G : all_families()) {
      CAPTURE(G->name());
      const auto ball = enumerate_ball(G, 4);
      const auto oracle = bfs_lengths(*G, 4);
      REQUIRE(ball.size() == oracle.size());
      for (std::size_t i = 0; i < ball.size(); ++i) {
        CHECK(ball.length(i) == oracle.at(ball.element(i)));
        if (i > 0) {
          CHECK(std::pair(ball.length(i - 1), ball.element(i - 1)) <
                std::pair(ball.length(i), ball.element(i)));
        }
        for (std::size_t s = 0; s < ball.generator_count(); ++s) {
          const Element y = G->multiply(ball.element(i), G->generators()[s].element);
          const auto j = ball.neighbor(i, s);
          if (oracle.contains(y)) {
            REQUIRE(j != kOutsideBall);
            CHECK(ball.element(static_cast<std::size_t>(j)) == y);
          } else {
            CHECK(j == kOutsideBall);
          }
        }
      }
    }
  }

  TEST_CASE("balls are nested prefixes") {
    for (const auto& G : all_families()) {
      const auto big = enumerate_ball(G, 5);
      const auto small = enumerate_ball(G, 4);
      REQUIRE(big.prefix_size(4) == small.size());
      for (std::size_t i = 0; i < small.size(); ++i) CHECK(big.element(i) == small.element(i));
    }
  }

  TEST_CASE("growth functions") {
    const auto z = growth_function(enumerate_ball(make_group("zd:1"), 20));
    for (std::size_t n = 0; n < z.size(); ++n) CHECK(z[n] == 2 * n + 1);
    const auto f = growth_function(enumerate_ball(make_group("free:2"), 7));
    for (std::size_t n = 0; n < f.size(); ++n) {
      CHECK(f[n] == 2 * static_cast<std::size_t>(std::pow(3, n)) - 1);
    }
    for (const auto& G : all_families()) {
      const auto gamma = growth_function(enumerate_ball(G, 6));
      CHECK(gamma[0] == 1);
      for (std::size_t m = 0; m < gamma.size(); ++m) {
        if (m > 0) CHECK(gamma[m] >= gamma[m - 1]);
        for (std::size_t n = 0; m + n < gamma.size(); ++n) CHECK(gamma[m + n] <= gamma[m] * gamma[n]);
      }
    }
  }

  TEST_CASE("free-abelian growth matches lattice-point counts") {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto gamma = growth_function(enumerate_ball(make_group("zd:" + std::to_string(d)), 6));
      for (std::size_t n = 0; n <= 6; ++n) {
        // brute force over the cube [-n, n]^d
        std::size_t count = 0;
        std::vector<int> x(d, -static_cast<int>(n));
        while (true) {
          int norm1 = 0;
          for (int v : x) norm1 += std::abs(v);
          count += norm1 <= static_cast<int>(n);
          std::size_t i = 0;
          while (i < d && x[i] == static_cast<int>(n)) x[i++] = -static_cast<int>(n);
          if (i == d) break;
          ++x[i];
        }
        CHECK(gamma[n] == count);
      }
    }
  }

  TEST_CASE("heisenberg growth is quartic") {
    const auto gamma = growth_function(enumerate_ball(make_group("heisenberg"), 16));
    std::vector<double> x, y;
    for (std::size_t n = 8; n <= 16; ++n) {
      x.push_back(std::log(static_cast<double>(n)));
      y.push_back(std::log(static_cast<double>(gamma[n])));
    }
    const auto fit = least_squares(x, y);
    CHECK(fit.slope >= 3.5);
    CHECK(fit.slope <= 4.5);
  }

  TEST_CASE("capacity errors name the radius") {
    try {
      enumerate_ball(make_group("free:2"), 10, 1000);
      FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
      REQUIRE(e.radius().has_value());
      CHECK(*e.radius() == 6);  // gamma(5) = 485, gamma(6) = 1457
    }
  }

  TEST_CASE("action lengths") {
    auto F2 = make_group("free:2");
    const auto ball = enumerate_ball(F2, 4);
    const auto graph = cayley_graph(ball);
    const auto action = cayley_action(ball, graph);
    CHECK(action_length(action, 0, F2->identity()) == 0);
    CHECK(action_length(action, 0, F2->parse_word("ab")) == 2);
    CHECK_THROWS_AS(action_length(action, 0, F2->parse_word("ababa")), CapacityError);

    auto R = make_group("raag:path:3");
    const auto rball = enumerate_ball(R, 4);
    const auto rgraph = cayley_graph(rball);
    const auto raction = cayley_action(rball, rgraph);
    CHECK(action_length(raction, 0, R->parse_word("ac")) == 2);
  }

  TEST_CASE("action lengths satisfy the axioms and are dominated by word length") {
    // Z acting on a cycle by rotation: d(p, g.p) is a length function that is
    // not the word length, and each generator moves p by 1.
    const std::size_t n = 12;
    const auto cycle = cycle_graph(n);
    GraphAction action{&cycle, [n](const Element& g, Vertex v) -> std::optional<Vertex> {
                         const long long k = ((static_cast<long long>(v) + g[0]) % static_cast<long long>(n) + n) % n;
                         return static_cast<Vertex>(k);
                       }};
    auto Z = make_group("zd:1");
    std::size_t max_gen = 0;
    for (const auto& s : Z->generators()) max_gen = std::max(max_gen, action_length(action, 0, s.element));
    for (int a = -20; a <= 20; ++a) {
      const Element g{a};
      const auto la = action_length(action, 0, g);
      CHECK(la == action_length(action, 0, Z->invert(g)));
      CHECK(la <= Z->word_length(g) * max_gen);
      for (int b = -20; b <= 20; b += 3) {
        CHECK(action_length(action, 0, Z->multiply(g, Element{b})) <= la + action_length(action, 0, Element{b}));
      }
    }
  }

  TEST_CASE("graph file round trip and named generators") {
    const auto g = grid_graph(3, 2);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);
    CHECK(load_graph("k23").edge_count() == 6);
    CHECK(load_graph("cube:3").size() == 8);
    CHECK(load_graph("cycle:6").edge_count() == 6);
    CHECK(load_graph("grid:5x5").edge_count() == 40);
    CHECK(load_graph("tree:20,4").edge_count() == 19);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), UsageError);
  }
}
