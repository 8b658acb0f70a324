#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simplex_cover/cover.hpp"
#include "simplex_cover/point.hpp"
#include "simplex_cover/triangulation.hpp"
#include "simplex_cover/witness.hpp"

namespace simplex_cover {

/// Denominator of the random sampler's grid.
inline constexpr std::int64_t kRandomGrid = 1'000'000;

/// Grid points s*(k_1, ..., k_d) of S^{n+eps} with s = delta/q, k integral
/// and weakly decreasing, in lexicographic order of k. Requires
/// 0 <= eps <= delta(n) and q >= 1.
std::vector<Point> lattice_samples(int d, int n, const Rational& eps, int q);

/// Seeded stream: d integers uniform in [0, kRandomGrid], sorted descending,
/// scaled by (n+eps)/kRandomGrid. Same seed, same stream.
std::vector<Point> random_samples(int d, int n, const Rational& eps, std::size_t count,
                                  std::uint64_t seed);

/// Vertices and centroid of S^{n+eps}, plus every weakly decreasing tuple
/// drawn from the critical coordinate values of the construction (0, delta,
/// 1, 1+delta, the squeezed anchors k(1-delta) and k(1-delta)+delta, the
/// seam planes, n+eps, ...) that lies in S^{n+eps}. Duplicates removed.
std::vector<Point> boundary_suite(int d, int n, const Rational& eps);

struct RouteHistogram {
  std::uint64_t top = 0;
  std::uint64_t base_a = 0;
  std::uint64_t base_b = 0;
  std::uint64_t fallback = 0;

  void add(Route route);
  std::uint64_t total() const { return top + base_a + base_b + fallback; }
  RouteHistogram& operator+=(const RouteHistogram& rhs);
  friend bool operator==(const RouteHistogram&, const RouteHistogram&) = default;
};

struct CoverageReport {
  std::uint64_t total = 0;
  std::uint64_t covered = 0;
  RouteHistogram routes;
  std::vector<Point> failures;
  std::chrono::milliseconds elapsed{0};
  // Samples with x_d <= delta that were located in the base, and how many
  // of them came back with anything other than a type-(a) element. Not
  // part of the JSON form.
  std::uint64_t sliver_samples = 0;
  std::uint64_t sliver_violations = 0;

  bool success() const { return covered == total && routes.fallback == 0; }
  /// Component-wise merge; failures are appended in order.
  CoverageReport& operator+=(const CoverageReport& rhs);
};

/// {"total","covered","routes":{"top","base_a","base_b","fallback"},
///  "failures":[[rational...]...],"elapsed_ms"} in that field order.
std::string to_json(const CoverageReport& report);

/// Runs witness() on every sample, rechecks membership exactly and
/// aggregates. Samples must lie in S^{n+eps} with 0 <= eps <= delta.
/// `threads` = 0 picks the hardware concurrency; the result does not depend
/// on it apart from `elapsed`.
CoverageReport coverage_report(const CoverSpec& cover, std::span<const Point> samples,
                               const Rational& eps, unsigned threads = 0);

/// Every element whose simplex contains x, decided by the barycentric oracle.
std::vector<CoverElement> bruteforce_containing(const CoverSpec& cover, const Point& x);

enum class RegionKind { cube, simplex, base_slab };

/// Region triangulated by an enumerator: [0,1]^d, S^scale, or the slab
/// {x in S^scale : x_d <= 1}.
struct Region {
  RegionKind kind;
  int d;
  int scale = 1;

  bool contains_interior(const Point& x) const;
  Rational volume() const;
};

/// No coordinate integral and no pairwise difference integral, so x avoids
/// every hyperplane x_j = z and x_i - x_j = z of the Kuhn triangulation.
bool is_generic(const Point& x);

/// Seeded generic interior points of `region`: distinct numerators over the
/// prime 1000003, which cannot land on a triangulation hyperplane.
std::vector<Point> generic_interior_samples(const Region& region, std::size_t count,
                                            std::uint64_t seed);

struct PartitionReport {
  std::uint64_t samples = 0;
  std::uint64_t multiplicity_defects = 0;
  std::vector<Point> defects;
  Rational simplex_volume;  // |pairs| / d!
  Rational region_volume;

  bool volume_matches() const { return simplex_volume == region_volume; }
  bool ok() const { return multiplicity_defects == 0 && volume_matches(); }
};

/// Checks that every sample lies strictly inside exactly one simplex of
/// `pairs`, and that the simplex volumes add up to the region's volume.
/// Samples must be generic interior points of the region.
PartitionReport partition_check(std::span<const AdmissiblePair> pairs, const Region& region,
                                std::span<const Point> samples, unsigned threads = 0);

}  // namespace simplex_cover
