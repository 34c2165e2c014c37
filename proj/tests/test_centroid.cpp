#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "rdw/ball.hpp"
#include "rdw/centroid.hpp"
#include "rdw/error.hpp"
#include "rdw/random.hpp"

using namespace rdw;

namespace {

// Reduced words in F_2 as letter lists: 1 = a, -1 = a', 2 = b, -2 = b'.
using Word = std::vector<int>;

Word reduce_mul(Word x, const Word& y) {
  for (int l : y) {
    if (!x.empty() && x.back() == -l) {
      x.pop_back();
    } else {
      x.push_back(l);
    }
  }
  return x;
}

Word inverse(const Word& x) {
  Word out;
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
  return out;
}

// In a tree the centroid of (e, g, h) is the longest common prefix.
Word tree_median(const Word& g, const Word& h) {
  std::size_t k = 0;
  while (k < g.size() && k < h.size() && g[k] == h[k]) ++k;
  return Word(g.begin(), g.begin() + static_cast<long>(k));
}

std::vector<Word> word_ball(std::size_t r) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == r) continue;
    for (int l : {1, -1, 2, -2}) {
      if (!out[i].empty() && out[i].back() == -l) continue;
      Word w = out[i];
      w.push_back(l);
      out.push_back(std::move(w));
    }
  }
  return out;
}

Element to_element(const GroupHandle& F2, const Word& w) {
  std::string text;
  for (int l : w) {
    text += std::abs(l) == 1 ? 'a' : 'b';
    if (l < 0) text += '\'';
  }
  return F2->parse_word(text);
}

struct Maxima {
  std::vector<std::size_t> c1, c2, c3;
};

Maxima tree_conditions(std::size_t r_max, std::size_t h_radius) {
  const auto hs = word_ball(h_radius);
  Maxima m;
  for (std::size_t r = 0; r <= r_max; ++r) {
    const auto gs = word_ball(r);
    std::size_t c1 = 0, c2 = 0, c3 = 0;
    for (const auto& h : hs) {
      std::set<Word> s1, s3;
      for (const auto& g : gs) {
        s1.insert(tree_median(g, h));
        s3.insert(reduce_mul(inverse(g), tree_median(g, reduce_mul(g, h))));
      }
      c1 = std::max(c1, s1.size());
      c3 = std::max(c3, s3.size());
    }
    for (const auto& g : gs) {
      std::set<Word> s2;
      for (const auto& h : hs) s2.insert(tree_median(g, h));
      c2 = std::max(c2, s2.size());
    }
    m.c1.push_back(c1);
    m.c2.push_back(c2);
    m.c3.push_back(c3);
  }
  return m;
}

int middle(int a, int b, int c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

TEST_SUITE("centroid-rd") {
  TEST_CASE("centroid examples") {
    auto F2 = make_group("free:2");
    const ActionSpec act{F2};
    for (auto s : {CentroidStrategy::Median, CentroidStrategy::Gromov}) {
      CHECK(centroid(act, s, F2->parse_word("ab"), F2->parse_word("ab'")) == F2->parse_word("a"));
      CHECK(centroid(act, s, F2->parse_word("ab"), F2->parse_word("ab")) == F2->parse_word("ab"));
      CHECK(centroid(act, s, F2->identity(), F2->parse_word("ba")) == F2->identity());
    }
    auto Z = make_group("zd:1");
    CHECK(centroid({Z}, CentroidStrategy::Median, Element{5}, Element{-3}) == Element{0});
    CHECK(centroid({Z}, CentroidStrategy::Median, Element{5}, Element{3}) == Element{3});
    CHECK(to_string(parse_centroid_strategy("gromov")) == "gromov");
    CHECK_THROWS_AS(parse_centroid_strategy("mean"), UsageError);
  }

  TEST_CASE("Z centroid is the middle value") {
    auto Z = make_group("zd:1");
    for (int g = -12; g <= 12; ++g)
      for (int h = -12; h <= 12; ++h)
        for (auto s : {CentroidStrategy::Median, CentroidStrategy::Gromov})
          CHECK(centroid({Z}, s, Element{g}, Element{h}) == Element{middle(0, g, h)});
  }

  TEST_CASE("Z^2 median is the coordinatewise middle") {
    auto G = make_group("zd:2");
    for (int gx = -3; gx <= 3; ++gx)
      for (int gy = -3; gy <= 3; ++gy)
        for (int hx = -3; hx <= 3; ++hx)
          for (int hy = -3; hy <= 3; ++hy)
            CHECK(centroid({G}, CentroidStrategy::Median, Element{gx, gy}, Element{hx, hy}) ==
                  Element{middle(0, gx, hx), middle(0, gy, hy)});
  }

  TEST_CASE("free group: both strategies give the common prefix") {
    auto F2 = make_group("free:2");
    const auto words = word_ball(8);
    auto rng = make_rng(17);
    for (int i = 0; i < 3000; ++i) {
      const auto& g = words[draw_index(rng, words.size())];
      const auto& h = words[draw_index(rng, words.size())];
      const auto expected = to_element(F2, tree_median(g, h));
      CHECK(centroid({F2}, CentroidStrategy::Median, to_element(F2, g), to_element(F2, h)) == expected);
      CHECK(centroid({F2}, CentroidStrategy::Gromov, to_element(F2, g), to_element(F2, h)) == expected);
    }
  }

  TEST_CASE("median centroid lies in all three intervals") {
    for (const char* spec : {"zd:2", "free:2", "raag:path:3"}) {
      auto G = make_group(spec);
      const auto ball = enumerate_ball(G, 4);
      auto rng = make_rng(5);
      for (int i = 0; i < 500; ++i) {
        const auto& g = ball.element(draw_index(rng, ball.size()));
        const auto& h = ball.element(draw_index(rng, ball.size()));
        const auto m = centroid({G}, CentroidStrategy::Median, g, h);
        const auto e = G->identity();
        CHECK(G->distance(e, m) + G->distance(m, g) == G->distance(e, g));
        CHECK(G->distance(e, m) + G->distance(m, h) == G->distance(e, h));
        CHECK(G->distance(g, m) + G->distance(m, h) == G->distance(g, h));
      }
    }
  }

  TEST_CASE("median strategy rejects a non-median Cayley graph") {
    auto H = make_group("heisenberg");
    const auto ball = enumerate_ball(H, 4);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < ball.size(); i += 7) {
      for (std::size_t j = 0; j < ball.size(); j += 11) {
        try {
          centroid({H}, CentroidStrategy::Median, ball.element(i), ball.element(j));
        } catch (const MedianViolation&) {
          ++violations;
        }
      }
    }
    CHECK(violations > 0);
  }

  TEST_CASE("Z report matches a brute-force count") {
    auto Z = make_group("zd:1");
    const auto rep = verify_centroid_conditions({Z}, CentroidStrategy::Median, 6, 9, 0, 0);
    CHECK(rep.sampling.exhaustive);
    CHECK(rep.sampling.population == 19);
    for (int r = 0; r <= 6; ++r) {
      std::size_t c1 = 0, c2 = 0, c3 = 0;
      for (int h = -9; h <= 9; ++h) {
        std::set<int> s1, s3;
        for (int g = -r; g <= r; ++g) {
          s1.insert(middle(0, g, h));
          s3.insert(middle(0, g, g + h) - g);
        }
        c1 = std::max(c1, s1.size());
        c3 = std::max(c3, s3.size());
      }
      for (int g = -r; g <= r; ++g) {
        std::set<int> s2;
        for (int h = -9; h <= 9; ++h) s2.insert(middle(0, g, h));
        c2 = std::max(c2, s2.size());
      }
      CHECK(rep.cond1_max[r] == c1);
      CHECK(rep.cond2_max[r] == c2);
      CHECK(rep.cond3_max[r] == c3);
    }
    REQUIRE(rep.fit.has_value());
    for (double d : rep.fit->degrees) CHECK(d == doctest::Approx(1.0).epsilon(0.05));
  }

  TEST_CASE("free-group report matches the word oracle") {
    auto F2 = make_group("free:2");
    const auto oracle = tree_conditions(3, 5);
    for (auto s : {CentroidStrategy::Median, CentroidStrategy::Gromov}) {
      const auto rep = verify_centroid_conditions({F2}, s, 3, 5, 0, 0);
      CHECK(rep.cond1_max == oracle.c1);
      CHECK(rep.cond2_max == oracle.c2);
      CHECK(rep.cond3_max == oracle.c3);
      CHECK_FALSE(rep.fit.has_value());
    }
  }

  TEST_CASE("sampling and argument checks") {
    auto F2 = make_group("free:2");
    const auto rep = verify_centroid_conditions({F2}, CentroidStrategy::Median, 2, 4, 50, 3);
    CHECK_FALSE(rep.sampling.exhaustive);
    CHECK(rep.sampling.sample_size == 50);
    CHECK(rep.sampling.population == 161);
    const auto again = verify_centroid_conditions({F2}, CentroidStrategy::Median, 2, 4, 50, 3);
    CHECK(again.cond2_max == rep.cond2_max);
    CHECK(verify_centroid_conditions({F2}, CentroidStrategy::Median, 2, 4, 500, 3).sampling.exhaustive);
    CHECK_THROWS_AS(verify_centroid_conditions({F2}, CentroidStrategy::Median, 5, 4, 0, 0), UsageError);
    CHECK_THROWS_AS(verify_centroid_conditions({F2}, CentroidStrategy::Median, 2, 30, 0, 0, 1000), CapacityError);
  }

  TEST_CASE("fit_condition_degrees") {
    CentroidReport flat;
    for (std::size_t r = 0; r <= 6; ++r) {
      flat.r_values.push_back(r);
      flat.cond1_max.push_back(5);
      flat.cond2_max.push_back(5);
      flat.cond3_max.push_back(5);
    }
    const auto fit = fit_condition_degrees(flat);
    for (double d : fit.degrees) CHECK(d == doctest::Approx(0.0));
    CHECK(fit.deg_rd_bound == doctest::Approx(0.0));

    CentroidReport sq = flat;
    for (std::size_t r = 0; r <= 6; ++r) sq.cond2_max[r] = (r + 1) * (r + 1);
    const auto fit2 = fit_condition_degrees(sq);
    CHECK(fit2.degrees[1] == doctest::Approx(2.0));
    CHECK(fit2.deg_rd_bound == doctest::Approx(2.0));

    flat.r_values.resize(4);
    flat.cond1_max.resize(4);
    flat.cond2_max.resize(4);
    flat.cond3_max.resize(4);
    CHECK_THROWS_AS(fit_condition_degrees(flat), UsageError);
  }

  TEST_CASE("stabilizers are trivial for the regular action") {
    for (const char* spec : {"zd:2", "free:2", "lamplighter"}) {
      auto G = make_group(spec);
      const auto ball = enumerate_ball(G, 2);
      CHECK(stabilizer_bound({G}, ball.elements()) == 1);
    }
  }

  TEST_CASE("equivariance") {
    for (const char* spec : {"zd:2", "free:2", "raag:path:3"}) {
      for (auto s : {CentroidStrategy::Median, CentroidStrategy::Gromov}) {
        const auto rep = equivariance_check({make_group(spec)}, s, 200, 1, 3, 2);
        CAPTURE(spec);
        CHECK(rep.passed);
        CHECK(rep.triples == 200);
        CHECK(rep.violation.empty());
      }
    }
  }
}
