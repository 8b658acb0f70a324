#include "simplex_cover/simplex.hpp"

#include <stdexcept>
#include <utility>

namespace simplex_cover {

KuhnSimplex::KuhnSimplex(Point anchor, Permutation perm)
    : anchor_(std::move(anchor)), perm_(std::move(perm)) {
  if (anchor_.dim() != perm_.size()) {
    throw std::invalid_argument("simplex anchor and permutation dimensions differ");
  }
}

std::vector<Point> KuhnSimplex::vertices() const {
  std::vector<Point> out;
  out.reserve(dim() + 1);
  std::vector<Rational> current(anchor_.coords().begin(), anchor_.coords().end());
  out.emplace_back(current);
  for (std::size_t k = 0; k < dim(); ++k) {
    auto& c = current[static_cast<std::size_t>(perm_[k])];
    c += 1;
    out.emplace_back(current);
  }
  return out;
}

bool KuhnSimplex::contains(const Point& x, Containment mode) const {
  if (x.dim() != dim()) throw std::invalid_argument("membership test dimension mismatch");
  const bool strict = mode == Containment::strict;
  Rational prev{1};
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto j = static_cast<std::size_t>(perm_[k]);
    Rational y = x[j] - anchor_[j];
    if (strict ? !(y < prev) : !(y <= prev)) return false;
    prev = std::move(y);
  }
  return strict ? prev.sign() > 0 : prev.sign() >= 0;
}

std::vector<Rational> KuhnSimplex::barycentric(const Point& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("membership test dimension mismatch");
  const std::size_t d = dim();
  const std::size_t m = d + 1;
  const auto verts = vertices();

  // Augmented system [V; 1...1 | x; 1], one column per vertex.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = verts[c][r];
    a[r][m] = x[r];
  }
  for (std::size_t c = 0; c < m; ++c) a[d][c] = 1;
  a[d][m] = 1;

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col].sign() == 0) ++pivot;
    if (pivot == m) throw std::logic_error("degenerate simplex in barycentric solve");
    std::swap(a[pivot], a[col]);
    const Rational inv = Rational{1} / a[col][col];
    for (std::size_t c = col; c <= m; ++c) a[col][c] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].sign() == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  std::vector<Rational> lambda;
  lambda.reserve(m);
  for (std::size_t r = 0; r < m; ++r) lambda.push_back(a[r][m]);
  return lambda;
}

bool KuhnSimplex::contains_oracle(const Point& x) const {
  const auto lambda = barycentric(x);
  Rational sum;
  for (const auto& l : lambda) {
    if (l.sign() < 0) return false;
    sum += l;
  }
  return sum == 1;
}

Rational unit_volume(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  Rational factorial{1};
  for (int k = 2; k <= d; ++k) factorial *= k;
  return Rational{1} / factorial;
}

Rational gram_squared_length(const Point& u) {
  if (u.dim() != 2) throw std::invalid_argument("Gram metric is defined for d = 2 only");
  const GramMetric2D g;
  return g.g11 * u[0] * u[0] + Rational{2} * g.g12 * u[0] * u[1] + g.g22 * u[1] * u[1];
}

}  // namespace simplex_cover
