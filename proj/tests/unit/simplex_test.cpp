#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "simplex_cover/simplex.hpp"

using namespace simplex_cover;

namespace {

KuhnSimplex simplex(std::vector<Rational> anchor, std::vector<int> one_based) {
  return {Point(std::move(anchor)), Permutation::from_one_based(one_based)};
}

Point pt(std::initializer_list<Rational> c) { return Point(std::vector<Rational>(c)); }

}  // namespace

TEST(Vertices, PathOrder) {
  EXPECT_EQ(simplex({0, 0}, {1, 2}).vertices(),
            (std::vector<Point>{pt({0, 0}), pt({1, 0}), pt({1, 1})}));
  EXPECT_EQ(simplex({0, 0}, {2, 1}).vertices(),
            (std::vector<Point>{pt({0, 0}), pt({0, 1}), pt({1, 1})}));
  const Rational q{5, 4};
  EXPECT_EQ(simplex({q, q}, {1, 2}).vertices(),
            (std::vector<Point>{pt({q, q}), pt({Rational(9, 4), q}),
                                pt({Rational(9, 4), Rational(9, 4)})}));
}

TEST(Contains, Examples) {
  const auto k = simplex({0, 0}, {1, 2});
  EXPECT_TRUE(k.contains(pt({Rational(1, 2), Rational(1, 4)})));
  EXPECT_FALSE(k.contains(pt({Rational(1, 4), Rational(1, 2)})));
  EXPECT_TRUE(k.contains(pt({1, 1})));
  EXPECT_FALSE(k.contains(pt({1, 1}), Containment::strict));
  EXPECT_THROW(k.contains(Point::filled(3, 0)), std::invalid_argument);
}

TEST(ContainsOracle, Examples) {
  const auto k = simplex({0, 0}, {1, 2});
  // Solved by hand: x = 1/2 (0,0) + 1/4 (1,0) + 1/4 (1,1).
  EXPECT_EQ(k.barycentric(pt({Rational(1, 2), Rational(1, 4)})),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
  EXPECT_TRUE(k.contains_oracle(pt({Rational(1, 2), Rational(1, 4)})));
  // (2,0) = -1 (0,0) + 2 (1,0) + 0 (1,1).
  EXPECT_EQ(k.barycentric(pt({2, 0})), (std::vector<Rational>{-1, 2, 0}));
  EXPECT_FALSE(k.contains_oracle(pt({2, 0})));
  EXPECT_THROW(k.contains_oracle(Point::filled(3, 0)), std::invalid_argument);

  const auto shifted = simplex({Rational(1, 3), Rational(-2, 7), Rational(5, 2)}, {2, 3, 1});
  EXPECT_TRUE(shifted.contains_oracle(shifted.anchor()));
  EXPECT_EQ(shifted.barycentric(shifted.anchor()), (std::vector<Rational>{1, 0, 0, 0}));
}

// contains and contains_oracle must agree exactly, including on boundaries,
// so samples use a coarse denominator that hits faces often.
TEST(ContainsProperty, AgreesWithBarycentricOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> offset(-4, 12);  // (-1/2 .. 3/2) in eighths
  const std::vector<KuhnSimplex> cases = {
      simplex({0, 0}, {1, 2}),
      simplex({Rational(5, 4), Rational(5, 4)}, {2, 1}),
      simplex({Rational(2, 3), 0, Rational(1, 3)}, {3, 1, 2}),
      simplex({1, 1, 0, 0}, {2, 4, 1, 3}),
      simplex({Rational(-1, 2), 3, Rational(7, 5), 0, 2}, {5, 4, 3, 2, 1}),
  };
  for (const auto& k : cases) {
    int inside = 0;
    int boundary = 0;
    for (int i = 0; i < 10000; ++i) {
      std::vector<Rational> c;
      for (std::size_t j = 0; j < k.dim(); ++j) c.push_back(k.anchor()[j] + Rational(offset(rng), 8));
      const Point x(std::move(c));
      const bool closed = k.contains(x);
      ASSERT_EQ(closed, k.contains_oracle(x)) << x.str();
      inside += closed;
      boundary += closed && !k.contains(x, Containment::strict);
    }
    EXPECT_GT(inside, 0);
    EXPECT_GT(boundary, 0);
  }
}

TEST(ContainsProperty, VerticesClosedCentroidStrict) {
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    const auto k = simplex({Rational(1, 5), 2, Rational(-3, 2), 0}, perm);
    const auto verts = k.vertices();
    std::vector<Rational> centroid(4);
    for (const auto& v : verts) {
      EXPECT_TRUE(k.contains(v));
      EXPECT_FALSE(k.contains(v, Containment::strict));
      for (std::size_t j = 0; j < 4; ++j) centroid[j] += v[j] / 5;
    }
    EXPECT_TRUE(k.contains(Point(centroid), Containment::strict));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(EdgeLengths, CoordinateMetric) {
  for (int d = 2; d <= 5; ++d) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.rbegin(), perm.rend(), 1);
    const auto verts = simplex(std::vector<Rational>(static_cast<std::size_t>(d)), perm).vertices();
    int unit_sides = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        Rational sq;
        for (int c = 0; c < d; ++c) {
          const Rational diff = verts[j][static_cast<std::size_t>(c)] - verts[i][static_cast<std::size_t>(c)];
          sq += diff * diff;
        }
        ASSERT_EQ(sq, Rational(static_cast<std::int64_t>(j - i)));
        unit_sides += sq == 1;
      }
    }
    EXPECT_EQ(unit_sides, d);
  }
}

TEST(UnitVolume, Examples) {
  EXPECT_EQ(unit_volume(2), Rational(1, 2));
  EXPECT_EQ(unit_volume(3), Rational(1, 6));
  EXPECT_EQ(unit_volume(5), Rational(1, 120));
  EXPECT_THROW(unit_volume(1), std::invalid_argument);
  Rational factorial{1};
  for (int d = 2; d <= 12; ++d) {
    factorial *= d;
    EXPECT_EQ(unit_volume(d) * factorial, 1);
  }
}

TEST(GramMetric, EntriesAreRational) {
  const GramMetric2D g;
  EXPECT_EQ(g.g11, 1);
  EXPECT_EQ(g.g12, Rational(-1, 2));
  EXPECT_EQ(g.g22, 1);
}

TEST(GramMetric, UnitRightTrianglesBecomeEquilateral) {
  EXPECT_EQ(gram_squared_length(pt({1, 0})), 1);
  EXPECT_EQ(gram_squared_length(pt({0, 1})), 1);
  EXPECT_EQ(gram_squared_length(pt({1, 1})), 1);
  for (const auto& perm : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    const auto v = simplex({Rational(3, 7), 2}, perm).vertices();
    EXPECT_EQ(gram_squared_length(v[1] - v[0]), 1);
    EXPECT_EQ(gram_squared_length(v[2] - v[1]), 1);
    EXPECT_EQ(gram_squared_length(v[2] - v[0]), 1);
  }
  EXPECT_THROW(gram_squared_length(Point::filled(3, 1)), std::invalid_argument);
}
