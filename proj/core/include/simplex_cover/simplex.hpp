#pragma once

#include <cstddef>
#include <vector>

#include "simplex_cover/point.hpp"
#include "simplex_cover/rational.hpp"

namespace simplex_cover {

enum class Containment { closed, strict };

/// Unit right simplex k(u, pi): the convex hull of u, u + e^{pi(1)},
/// u + e^{pi(1)} + e^{pi(2)}, ..., u + e. Equivalently the set
///
///   1 >= (x-u)_{pi(1)} >= (x-u)_{pi(2)} >= ... >= (x-u)_{pi(d)} >= 0.
///
/// The anchor u need not be integral.
class KuhnSimplex {
 public:
  /// Throws std::invalid_argument if the dimensions disagree.
  KuhnSimplex(Point anchor, Permutation perm);

  std::size_t dim() const noexcept { return anchor_.dim(); }
  const Point& anchor() const noexcept { return anchor_; }
  const Permutation& perm() const noexcept { return perm_; }

  /// The d+1 vertices in path order, anchor first and anchor + e last.
  std::vector<Point> vertices() const;

  /// Chain-inequality membership test. Closed by default; `strict` tests the
  /// interior.
  bool contains(const Point& x, Containment mode = Containment::closed) const;

  /// Independent membership oracle: solves for the barycentric coordinates
  /// of x with respect to vertices() by exact Gaussian elimination and
  /// accepts iff all are >= 0. Agrees with contains(x) on every input.
  bool contains_oracle(const Point& x) const;

  /// Barycentric coordinates of x (sum to 1) from the same exact solve.
  std::vector<Rational> barycentric(const Point& x) const;

  friend bool operator==(const KuhnSimplex&, const KuhnSimplex&) = default;

 private:
  Point anchor_;
  Permutation perm_;
};

/// Volume 1/d! of every unit right d-simplex. Throws for d < 2.
Rational unit_volume(int d);

/// Entries of M^T M for the shear M = [[1, -1/2], [0, sqrt(3)/2]] that maps
/// right 2-simplices onto equilateral triangles. All entries are rational.
struct GramMetric2D {
  Rational g11{1};
  Rational g12{-1, 2};
  Rational g22{1};
};

/// u^T (M^T M) u = u1^2 - u1 u2 + u2^2, exactly. Throws unless dim(u) = 2.
Rational gram_squared_length(const Point& u);

}  // namespace simplex_cover
