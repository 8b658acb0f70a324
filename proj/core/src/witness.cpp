#include "simplex_cover/witness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace simplex_cover {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::top: return "top";
    case Route::base_a: return "base_a";
    case Route::base_b: return "base_b";
    case Route::fallback: return "fallback";
  }
  return "?";
}

bool in_domain(const Point& x, int n, const Rational& eps) {
  const Rational upper = Rational{n} + eps;
  const Rational* prev = &upper;
  for (const auto& c : x.coords()) {
    if (c > *prev) return false;
    prev = &c;
  }
  return prev->sign() >= 0;
}

namespace {

struct Located {
  CoverElement element;
  Point w;
};

// Descending by w, equal values by ascending index.
Permutation order_descending(const std::vector<Rational>& w) {
  std::vector<int> images(w.size());
  std::iota(images.begin(), images.end(), 0);
  std::stable_sort(images.begin(), images.end(), [&](int a, int b) {
    return w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)];
  });
  return Permutation(std::move(images));
}

void require_domain(const Point& x, int n, const Rational& dl) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (!in_domain(x, n, dl)) {
    throw DomainError("point " + x.str() + " is outside S^{" + (Rational{n} + dl).str() + "}");
  }
}

void require_member(const CoverElement& e, const Point& x, std::string_view route) {
  if (!e.simplex.contains(x)) {
    throw MembershipError(std::string(route) + " route element does not contain " + x.str());
  }
}

Located locate_top(const Point& x, int n) {
  const Rational dl = delta(n);
  require_domain(x, n, dl);
  const Rational shift = Rational{1} + dl;
  const std::size_t d = x.dim();
  if (n < 2 || x[d - 1] < shift) {
    throw DomainError("top route needs n >= 2 and x_d >= 1 + delta");
  }

  LatticeVector v(d);
  std::vector<Rational> f;
  f.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    const Rational u = x[j] - shift;
    v[j] = static_cast<int>(std::min<std::int64_t>(u.floor(), n - 2));
    f.push_back(u - v[j]);
  }
  Permutation perm = order_descending(f);
  auto element = make_top_element(std::move(v), std::move(perm), dl);
  require_member(element, x, "top");
  return {std::move(element), Point(std::move(f))};
}

std::optional<Located> locate_base_a(const Point& x, int n) {
  const Rational dl = delta(n);
  require_domain(x, n, dl);
  const std::size_t d = x.dim();
  const Rational& xd = x[d - 1];
  if (xd > Rational{1} + dl) throw DomainError("base routes need x_d <= 1 + delta");

  const Rational squeeze = Rational{1} - dl;
  LatticeVector v(d, 0);
  std::vector<Rational> w;
  w.reserve(d);
  for (std::size_t j = 0; j + 1 < d; ++j) {
    auto vj = (x[j] / squeeze).floor();
    Rational wj = x[j] - squeeze * vj;
    if (vj > 0 && wj <= dl) {
      --vj;
      wj += squeeze;
    }
    v[j] = static_cast<int>(vj);
    w.push_back(std::move(wj));
  }
  w.push_back(xd);

  if (xd > 1) return std::nullopt;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    if (w[j] < xd) return std::nullopt;
  }

  Permutation perm = order_descending(w);
  auto element = make_base_element(std::move(v), std::move(perm), dl);
  if (element.kind != ElementKind::base_a) {
    throw MembershipError("type-(a) route did not order index d last");
  }
  require_member(element, x, "base_a");
  return Located{std::move(element), Point(std::move(w))};
}

Located locate_base_b(const Point& x, int n) {
  const Rational dl = delta(n);
  require_domain(x, n, dl);
  const std::size_t d = x.dim();
  if (x[d - 1] > Rational{1} + dl) throw DomainError("base routes need x_d <= 1 + delta");
  for (const auto& c : x.coords()) {
    if (c <= dl) throw DomainError("type-(b) route needs every x_j > delta");
  }

  const Rational squeeze = Rational{1} - dl;
  LatticeVector v(d, 0);
  std::vector<Rational> w;
  w.reserve(d);
  for (std::size_t j = 0; j + 1 < d; ++j) {
    const auto vj = ((x[j] - dl) / squeeze).floor();
    v[j] = static_cast<int>(vj);
    w.push_back(x[j] - squeeze * vj);
  }
  w.push_back(x[d - 1]);

  Permutation perm = order_descending(w);
  auto element = make_base_element(std::move(v), std::move(perm), dl);
  require_member(element, x, to_string(element.kind));
  return {std::move(element), Point(std::move(w))};
}

Route route_of(ElementKind kind) {
  switch (kind) {
    case ElementKind::top: return Route::top;
    case ElementKind::base_a: return Route::base_a;
    case ElementKind::base_b: return Route::base_b;
  }
  return Route::fallback;
}

bool consistent(const Located& found, const Point& x, const CoverSpec& cover) {
  const auto& e = found.element;
  if (e.kind != ElementKind::top && e.v.front() > cover.n()) return false;
  return e.simplex.contains(x) && cover.index_of(e).has_value();
}

}  // namespace

CoverElement witness_top(const Point& x, int n) { return locate_top(x, n).element; }

std::optional<CoverElement> witness_base_a(const Point& x, int n) {
  auto found = locate_base_a(x, n);
  if (!found) return std::nullopt;
  return std::move(found->element);
}

CoverElement witness_base_b(const Point& x, int n) { return locate_base_b(x, n).element; }

WitnessResult witness(const Point& x, const CoverSpec& cover) {
  if (x.dim() != static_cast<std::size_t>(cover.d())) {
    throw DomainError("point dimension does not match the cover");
  }
  const int n = cover.n();
  const Rational& dl = cover.delta();
  require_domain(x, n, dl);

  std::optional<Located> found;
  try {
    if (n >= 2 && x[x.dim() - 1] >= Rational{1} + dl) {
      found = locate_top(x, n);
    } else {
      found = locate_base_a(x, n);
      if (!found) found = locate_base_b(x, n);
    }
  } catch (const MembershipError&) {
    found.reset();
  } catch (const DomainError&) {
    found.reset();
  }

  if (found && consistent(*found, x, cover)) {
    const Route route = route_of(found->element.kind);
    return {std::move(found->element), route, std::move(found->w)};
  }

  for (const auto& e : cover.elements()) {
    if (e.simplex.contains(x)) return {e, Route::fallback, x - e.anchor()};
  }
  throw CoverageViolation("no cover element contains " + x.str());
}

}  // namespace simplex_cover
