#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplex_cover/rational.hpp"

namespace simplex_cover {

/// Integer lattice vector (simplex anchors before squeezing).
using LatticeVector = std::vector<int>;

/// Fixed-length vector of exact rationals, d >= 2. Immutable.
class Point {
 public:
  explicit Point(std::vector<Rational> coords);

  /// d copies of `value`.
  static Point filled(std::size_t d, const Rational& value);
  /// The lattice point `v` embedded exactly.
  static Point from_lattice(std::span<const int> v);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  /// Comma-separated canonical rationals, e.g. "9/4,1/2".
  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

/// point_parse: exactly d comma-separated rationals. Whitespace around
/// tokens is ignored. Throws ParseError on arity or token errors.
Point parse_point(std::string_view text, std::size_t d);

/// Permutation of {0, ..., d-1}, stored 0-based.
///
/// `perm[i]` is the coordinate incremented at step i of the simplex path,
/// i.e. pi(i+1) - 1 in one-based notation. `position_of(j)` is pi^{-1}.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection on 0..d-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t d);
  /// Builds from the one-based image sequence (pi(1), ..., pi(d)).
  static Permutation from_one_based(std::span<const int> images);

  std::size_t size() const noexcept { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  int position_of(int j) const { return inverse_[static_cast<std::size_t>(j)]; }

  const std::vector<int>& images() const noexcept { return images_; }
  std::vector<int> one_based() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  /// Lexicographic on the image sequence.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
  std::vector<int> inverse_;
};

}  // namespace simplex_cover
