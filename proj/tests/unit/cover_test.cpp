#include <gtest/gtest.h>

#include <sstream>

#include "simplex_cover/cover.hpp"
#include "simplex_cover/records.hpp"

using namespace simplex_cover;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Point pt(std::initializer_list<Rational> c) { return Point(std::vector<Rational>(c)); }

}  // namespace

TEST(Delta, Examples) {
  EXPECT_EQ(delta(2), Rational(1, 4));
  EXPECT_EQ(delta(1), Rational(1, 3));
  EXPECT_EQ(delta(6), Rational(1, 8));
  EXPECT_THROW(delta(0), std::invalid_argument);
}

TEST(CoverCount, Examples) {
  EXPECT_EQ(cover_count(2, 2), 6u);
  EXPECT_EQ(cover_count(3, 2), 20u);
  EXPECT_EQ(cover_count(2, 1), 3u);
  EXPECT_THROW(cover_count(1, 2), std::invalid_argument);
  EXPECT_THROW(cover_count(2, 0), std::invalid_argument);
  EXPECT_THROW(cover_count(64, 1000), std::overflow_error);
}

TEST(CoverCount, PlanarCaseIsNSquaredPlusTwo) {
  for (int n = 1; n <= 200; ++n) {
    EXPECT_EQ(cover_count(2, n), static_cast<std::uint64_t>(n) * n + 2);
  }
}

TEST(BuildCover, PlanarNEqualsOne) {
  const auto cover = build_cover(2, 1);
  ASSERT_EQ(cover.size(), 3u);
  const auto& e = cover.elements();
  EXPECT_EQ(e[0].kind, ElementKind::base_a);
  EXPECT_EQ(e[0].anchor(), pt({0, 0}));
  EXPECT_EQ(e[0].perm().one_based(), (std::vector<int>{1, 2}));
  EXPECT_EQ(e[1].kind, ElementKind::base_a);
  EXPECT_EQ(e[1].v, (LatticeVector{1, 0}));
  EXPECT_EQ(e[1].anchor(), pt({Rational(2, 3), 0}));
  EXPECT_EQ(e[1].perm().one_based(), (std::vector<int>{1, 2}));
  EXPECT_EQ(e[2].kind, ElementKind::base_b);
  EXPECT_EQ(e[2].v, (LatticeVector{1, 0}));
  EXPECT_EQ(e[2].anchor(), pt({1, Rational(1, 3)}));
  EXPECT_EQ(e[2].perm().one_based(), (std::vector<int>{2, 1}));
  EXPECT_EQ(cover.kind_counts(), (KindCounts{0, 2, 1}));
}

TEST(BuildCover, PlanarNEqualsTwo) {
  const auto cover = build_cover(2, 2);
  ASSERT_EQ(cover.size(), 6u);
  const auto counts = cover.kind_counts();
  EXPECT_EQ(counts.top, 1u);
  EXPECT_EQ(counts.base_a + counts.base_b, 5u);
  EXPECT_EQ(cover.elements()[0].kind, ElementKind::top);
  EXPECT_EQ(cover.elements()[0].anchor(), pt({Rational(5, 4), Rational(5, 4)}));
}

TEST(BuildCover, SpatialNEqualsOneHasNoTop) {
  const auto cover = build_cover(3, 1);
  EXPECT_EQ(cover.size(), 7u);
  EXPECT_EQ(cover.kind_counts().top, 0u);
}

// Counts, anchor formulas and admissibility over the whole grid.
TEST(BuildCover, InvariantsOverGrid) {
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 6; ++n) {
      const auto cover = build_cover(d, n);
      const Rational dl{1, n + 2};
      ASSERT_EQ(cover.delta(), dl);
      ASSERT_EQ(cover.size(), cover_count(d, n));

      std::uint64_t slab_last = 0;
      for (const auto& p : enumerate_base_slab(d, n + 1)) {
        slab_last += p.perm.position_of(d - 1) == d - 1;
      }
      const auto counts = cover.kind_counts();
      EXPECT_EQ(counts.top, ipow(static_cast<std::uint64_t>(n - 1), d));
      EXPECT_EQ(counts.base_a, slab_last);
      EXPECT_EQ(counts.base_a + counts.base_b,
                ipow(static_cast<std::uint64_t>(n + 1), d) - ipow(static_cast<std::uint64_t>(n), d));

      bool seen_base = false;
      for (const auto& e : cover.elements()) {
        std::vector<Rational> expected;
        for (int c : e.v) {
          switch (e.kind) {
            case ElementKind::top: expected.push_back(Rational{c} + 1 + dl); break;
            case ElementKind::base_a: expected.push_back((1 - dl) * c); break;
            case ElementKind::base_b: expected.push_back((1 - dl) * c + dl); break;
          }
        }
        ASSERT_EQ(e.anchor(), Point(expected));
        if (e.kind == ElementKind::top) {
          ASSERT_FALSE(seen_base) << "top elements come first";
          ASSERT_TRUE(is_admissible(e.v, e.perm(), n - 1));
        } else {
          seen_base = true;
          ASSERT_TRUE(is_admissible(e.v, e.perm(), n + 1));
          ASSERT_EQ(e.v.back(), 0);
          ASSERT_EQ(e.kind == ElementKind::base_a, e.perm().position_of(d - 1) == d - 1);
        }
        ASSERT_TRUE(cover.index_of(e).has_value());
      }
    }
  }
}

TEST(CoverSpec, IndexLookup) {
  const auto cover = build_cover(2, 2);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    EXPECT_EQ(cover.index_of(cover.elements()[i]), i);
  }
  EXPECT_FALSE(cover.index_of(ElementKind::top, {1, 1}, Permutation::identity(2)).has_value());
}

TEST(Records, CanonicalLine) {
  const auto cover = build_cover(2, 2);
  const auto& base_b = *std::find_if(cover.elements().begin(), cover.elements().end(),
                                     [](const auto& e) { return e.kind == ElementKind::base_b; });
  EXPECT_EQ(to_record(cover.elements()[0]),
            R"({"kind":"top","v":[0,0],"pi":[1,2],"anchor":["5/4","5/4"]})");
  EXPECT_EQ(to_record(base_b), R"({"kind":"base_b","v":[1,0],"pi":[2,1],"anchor":["1","1/4"]})");
}

// Property: every element of every cover in the grid round-trips.
TEST(Records, RoundTripIsLossless) {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const auto cover = build_cover(d, n);
      std::stringstream buffer;
      write_cover(buffer, cover);
      const auto back = read_cover(buffer, d, n);
      ASSERT_EQ(back.elements(), cover.elements());
    }
  }
}

TEST(Records, RejectsInconsistentLines) {
  EXPECT_THROW(parse_record("not json", 2), ParseError);
  EXPECT_THROW(parse_record(R"({"kind":"side","v":[0,0],"pi":[1,2],"anchor":["0","0"]})", 2),
               ParseError);
  // base_b anchor on a type-(a) permutation.
  EXPECT_THROW(parse_record(R"({"kind":"base_b","v":[0,0],"pi":[1,2],"anchor":["1/4","1/4"]})", 2),
               ParseError);
  // Anchor off by the squeeze.
  EXPECT_THROW(parse_record(R"({"kind":"base_a","v":[1,0],"pi":[1,2],"anchor":["1","0"]})", 2),
               ParseError);
  EXPECT_THROW(parse_record(R"({"kind":"top","v":[0,0],"pi":[1,1],"anchor":["5/4","5/4"]})", 2),
               ParseError);
  EXPECT_THROW(parse_record(R"({"kind":"top","v":[0],"pi":[1,2],"anchor":["5/4","5/4"]})", 2),
               ParseError);
}
