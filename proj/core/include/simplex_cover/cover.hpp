#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "simplex_cover/point.hpp"
#include "simplex_cover/simplex.hpp"
#include "simplex_cover/triangulation.hpp"

namespace simplex_cover {

/// Which piece of the construction an element comes from.
///   top    : k(v + (1+delta)e, pi) for (v, pi) admissible in S^{n-1}
///   base_a : k((1-delta)v, pi), slab pair of S^{n+1} with pi^{-1}(d) = d
///   base_b : k((1-delta)v + delta e, pi), slab pair with pi^{-1}(d) < d
enum class ElementKind { top, base_a, base_b };

std::string_view to_string(ElementKind kind);
/// Throws ParseError for anything but "top", "base_a", "base_b".
ElementKind parse_element_kind(std::string_view text);

struct CoverElement {
  ElementKind kind;
  LatticeVector v;
  KuhnSimplex simplex;

  const Point& anchor() const { return simplex.anchor(); }
  const Permutation& perm() const { return simplex.perm(); }

  friend bool operator==(const CoverElement&, const CoverElement&) = default;
};

/// delta(n) = 1/(n+2). Throws for n < 1.
Rational delta(int n);

/// (n+1)^d + (n-1)^d - n^d. Throws std::invalid_argument for d < 2 or
/// n < 1, std::overflow_error if the count exceeds 64 bits.
std::uint64_t cover_count(int d, int n);

struct KindCounts {
  std::uint64_t top = 0;
  std::uint64_t base_a = 0;
  std::uint64_t base_b = 0;

  std::uint64_t total() const { return top + base_a + base_b; }
  friend bool operator==(const KindCounts&, const KindCounts&) = default;
};

/// Top element for (v, pi) admissible in S^{n-1}.
CoverElement make_top_element(LatticeVector v, Permutation perm, const Rational& delta);
/// Squeezed base element for a slab pair of S^{n+1}; kind follows pi^{-1}(d).
CoverElement make_base_element(LatticeVector v, Permutation perm, const Rational& delta);

/// The full cover of S^{n+delta}: top elements first, then base elements,
/// each in triangulation order.
class CoverSpec {
 public:
  CoverSpec(int d, int n, std::vector<CoverElement> elements);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  const Rational& delta() const noexcept { return delta_; }
  const std::vector<CoverElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  KindCounts kind_counts() const;

  /// Position of the element with this identity, if present.
  std::optional<std::size_t> index_of(ElementKind kind, const LatticeVector& v,
                                      const Permutation& perm) const;
  std::optional<std::size_t> index_of(const CoverElement& e) const {
    return index_of(e.kind, e.v, e.perm());
  }

 private:
  using Key = std::tuple<ElementKind, LatticeVector, std::vector<int>>;

  int d_;
  int n_;
  Rational delta_;
  std::vector<CoverElement> elements_;
  std::map<Key, std::size_t> index_;
};

CoverSpec build_cover(int d, int n);

}  // namespace simplex_cover
