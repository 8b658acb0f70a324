#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "simplex_cover/cover.hpp"
#include "simplex_cover/point.hpp"

namespace simplex_cover {

/// How a witness was found. `fallback` means the constructive routes failed
/// and the cover was scanned exhaustively; healthy runs never produce it.
enum class Route { top, base_a, base_b, fallback };

std::string_view to_string(Route route);

/// x is outside S^{n+eps}, or a route was called outside its precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructive route produced an element that fails the exact
/// membership recheck. Indicates an implementation defect.
class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No element of the cover contains x. Never expected for a full cover.
class CoverageViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessResult {
  CoverElement element;
  Route route;
  /// The offset the route worked with: x - (1-delta)v for base routes,
  /// x - (1+delta)e - v for the top route, x - anchor for the fallback.
  Point w;
};

/// n + eps >= x_1 >= ... >= x_d >= 0, exactly.
bool in_domain(const Point& x, int n, const Rational& eps);

/// Top route for x_d >= 1 + delta (requires n >= 2).
CoverElement witness_top(const Point& x, int n);

/// Type-(a) route: picks v_j = floor(x_j / (1-delta)), stepping down by one
/// when v_j > 0 and w_j <= delta, and returns k((1-delta)v, pi) when index d
/// can be ordered last. Empty when that ordering is impossible.
std::optional<CoverElement> witness_base_a(const Point& x, int n);

/// Type-(b) route for points with every x_j > delta: picks
/// v_j = floor((x_j - delta) / (1-delta)) so that w_j lies in [delta, 1). If
/// the resulting ordering puts d last the type-(a) element is returned.
CoverElement witness_base_b(const Point& x, int n);

/// Deterministic point location in `cover` for x in S^{n+delta}. Each route's
/// answer is rechecked exactly and looked up in the cover; on any mismatch
/// the cover is scanned and the route is reported as `fallback`.
///
/// Throws DomainError if x is outside S^{n+delta} and CoverageViolation if
/// no element contains x.
WitnessResult witness(const Point& x, const CoverSpec& cover);

}  // namespace simplex_cover
