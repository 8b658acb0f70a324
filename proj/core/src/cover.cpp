#include "simplex_cover/cover.hpp"

#include <stdexcept>
#include <string>

namespace simplex_cover {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::top: return "top";
    case ElementKind::base_a: return "base_a";
    case ElementKind::base_b: return "base_b";
  }
  return "?";
}

ElementKind parse_element_kind(std::string_view text) {
  if (text == "top") return ElementKind::top;
  if (text == "base_a") return ElementKind::base_a;
  if (text == "base_b") return ElementKind::base_b;
  throw ParseError("unknown element kind '" + std::string(text) + "'");
}

Rational delta(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return Rational{1, n + 2};
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int k = 0; k < exponent; ++k) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw std::overflow_error("cover count exceeds 64 bits");
    }
  }
  return out;
}

}  // namespace

std::uint64_t cover_count(int d, int n) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t upper = checked_power(un + 1, d);
  // (n+1)^d - n^d + (n-1)^d; the difference is positive, so no underflow.
  return upper - checked_power(un, d) + checked_power(un - 1, d);
}

CoverElement make_top_element(LatticeVector v, Permutation perm, const Rational& delta) {
  const Rational shift = Rational{1} + delta;
  std::vector<Rational> anchor;
  anchor.reserve(v.size());
  for (int c : v) anchor.push_back(Rational{c} + shift);
  KuhnSimplex simplex(Point(std::move(anchor)), std::move(perm));
  return {ElementKind::top, std::move(v), std::move(simplex)};
}

CoverElement make_base_element(LatticeVector v, Permutation perm, const Rational& delta) {
  const int last = static_cast<int>(v.size()) - 1;
  const bool type_a = perm.position_of(last) == last;
  const Rational squeeze = Rational{1} - delta;
  std::vector<Rational> anchor;
  anchor.reserve(v.size());
  for (int c : v) {
    Rational a = squeeze * c;
    if (!type_a) a += delta;
    anchor.push_back(std::move(a));
  }
  KuhnSimplex simplex(Point(std::move(anchor)), std::move(perm));
  return {type_a ? ElementKind::base_a : ElementKind::base_b, std::move(v),
          std::move(simplex)};
}

CoverSpec::CoverSpec(int d, int n, std::vector<CoverElement> elements)
    : d_(d), n_(n), delta_(simplex_cover::delta(n)), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    if (e.simplex.dim() != static_cast<std::size_t>(d_)) {
      throw std::invalid_argument("cover element dimension mismatch");
    }
    index_.emplace(Key{e.kind, e.v, e.perm().images()}, i);
  }
}

KindCounts CoverSpec::kind_counts() const {
  KindCounts counts;
  for (const auto& e : elements_) {
    switch (e.kind) {
      case ElementKind::top: ++counts.top; break;
      case ElementKind::base_a: ++counts.base_a; break;
      case ElementKind::base_b: ++counts.base_b; break;
    }
  }
  return counts;
}

std::optional<std::size_t> CoverSpec::index_of(ElementKind kind, const LatticeVector& v,
                                               const Permutation& perm) const {
  const auto it = index_.find(Key{kind, v, perm.images()});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CoverSpec build_cover(int d, int n) {
  const std::uint64_t expected = cover_count(d, n);
  const Rational dl = delta(n);

  std::vector<CoverElement> elements;
  elements.reserve(expected);
  if (n >= 2) {
    for (auto& pair : enumerate_simplex_triangulation(d, n - 1)) {
      elements.push_back(make_top_element(std::move(pair.v), std::move(pair.perm), dl));
    }
  }
  for (auto& pair : enumerate_base_slab(d, n + 1)) {
    elements.push_back(make_base_element(std::move(pair.v), std::move(pair.perm), dl));
  }
  if (elements.size() != expected) {
    throw std::logic_error("cover enumeration produced " + std::to_string(elements.size()) +
                           " elements, expected " + std::to_string(expected));
  }
  return CoverSpec(d, n, std::move(elements));
}

}  // namespace simplex_cover
