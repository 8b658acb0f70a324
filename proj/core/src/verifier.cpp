#include "simplex_cover/verifier.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"

namespace simplex_cover {

namespace {

void require_plan(int d, int n, const Rational& eps) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (eps.sign() < 0) throw std::invalid_argument("eps must be non-negative");
  if (eps > delta(n)) {
    throw std::invalid_argument("eps = " + eps.str() + " exceeds delta = " + delta(n).str());
  }
}

std::vector<Rational> scaled(const Rational& s, std::span<const int> k) {
  std::vector<Rational> out;
  out.reserve(k.size());
  for (int c : k) out.push_back(s * c);
  return out;
}

nlohmann::ordered_json point_json(const Point& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coords()) arr.push_back(c.str());
  return arr;
}

}  // namespace

std::vector<Point> lattice_samples(int d, int n, const Rational& eps, int q) {
  require_plan(d, n, eps);
  if (q < 1) throw std::invalid_argument("lattice resolution q must be at least 1");
  const Rational step = delta(n) / q;
  const auto bound = ((Rational{n} + eps) / step).floor();
  std::vector<Point> out;
  for (const auto& k : weakly_decreasing_vectors(d, static_cast<int>(bound))) {
    out.emplace_back(scaled(step, k));
  }
  return out;
}

std::vector<Point> random_samples(int d, int n, const Rational& eps, std::size_t count,
                                  std::uint64_t seed) {
  require_plan(d, n, eps);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(0, kRandomGrid);
  const Rational scale = (Rational{n} + eps) / kRandomGrid;

  std::vector<Point> out;
  out.reserve(count);
  std::vector<std::int64_t> k(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& c : k) c = draw(rng);
    std::sort(k.begin(), k.end(), std::greater<>());
    std::vector<Rational> coords;
    coords.reserve(k.size());
    for (auto c : k) coords.push_back(scale * c);
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::vector<Point> boundary_suite(int d, int n, const Rational& eps) {
  require_plan(d, n, eps);
  const Rational dl = delta(n);
  const Rational squeeze = Rational{1} - dl;
  const Rational upper = Rational{n} + eps;

  std::vector<Point> out;
  std::set<std::vector<Rational>> seen;
  auto emit = [&](std::vector<Rational> coords) {
    Point p(coords);
    if (!in_domain(p, n, eps)) return;
    if (seen.insert(std::move(coords)).second) out.push_back(std::move(p));
  };

  const auto ud = static_cast<std::size_t>(d);
  for (std::size_t k = 0; k <= ud; ++k) {
    std::vector<Rational> v(ud);
    for (std::size_t j = 0; j < k; ++j) v[j] = upper;
    emit(std::move(v));
  }
  std::vector<Rational> centroid(ud);
  for (std::size_t j = 0; j < ud; ++j) {
    centroid[j] = upper * Rational(static_cast<std::int64_t>(ud - j), d + 1);
  }
  emit(std::move(centroid));

  std::set<Rational> values{0, dl, dl + dl, squeeze, 1, Rational{1} + dl,
                            Rational{1} + dl + dl, n, upper, upper / 2};
  for (int k = 0; k <= n + 1; ++k) {
    const Rational base = squeeze * k;
    for (const Rational& offset : {Rational{0}, dl, dl + dl, Rational{1}, Rational{1} + dl}) {
      values.insert(base + offset);
    }
  }
  for (int j = 0; j < n; ++j) values.insert(Rational{j + 1} + dl);

  std::vector<Rational> levels;
  for (const auto& v : values) {
    if (v.sign() >= 0 && v <= upper) levels.push_back(v);
  }
  for (const auto& idx : weakly_decreasing_vectors(d, static_cast<int>(levels.size()) - 1)) {
    std::vector<Rational> coords;
    coords.reserve(ud);
    for (int i : idx) coords.push_back(levels[static_cast<std::size_t>(i)]);
    emit(std::move(coords));
  }
  return out;
}

void RouteHistogram::add(Route route) {
  switch (route) {
    case Route::top: ++top; break;
    case Route::base_a: ++base_a; break;
    case Route::base_b: ++base_b; break;
    case Route::fallback: ++fallback; break;
  }
}

RouteHistogram& RouteHistogram::operator+=(const RouteHistogram& rhs) {
  top += rhs.top;
  base_a += rhs.base_a;
  base_b += rhs.base_b;
  fallback += rhs.fallback;
  return *this;
}

CoverageReport& CoverageReport::operator+=(const CoverageReport& rhs) {
  total += rhs.total;
  covered += rhs.covered;
  routes += rhs.routes;
  failures.insert(failures.end(), rhs.failures.begin(), rhs.failures.end());
  elapsed += rhs.elapsed;
  sliver_samples += rhs.sliver_samples;
  sliver_violations += rhs.sliver_violations;
  return *this;
}

std::string to_json(const CoverageReport& report) {
  nlohmann::ordered_json j;
  j["total"] = report.total;
  j["covered"] = report.covered;
  j["routes"] = {{"top", report.routes.top},
                 {"base_a", report.routes.base_a},
                 {"base_b", report.routes.base_b},
                 {"fallback", report.routes.fallback}};
  auto failures = nlohmann::ordered_json::array();
  for (const auto& p : report.failures) failures.push_back(point_json(p));
  j["failures"] = std::move(failures);
  j["elapsed_ms"] = report.elapsed.count();
  return j.dump();
}

CoverageReport coverage_report(const CoverSpec& cover, std::span<const Point> samples,
                               const Rational& eps, unsigned threads) {
  require_plan(cover.d(), cover.n(), eps);
  for (const auto& x : samples) {
    if (x.dim() != static_cast<std::size_t>(cover.d()) || !in_domain(x, cover.n(), eps)) {
      throw std::invalid_argument("sample " + x.str() + " is outside the verified domain");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  const Rational& dl = cover.delta();
  auto parts = detail::run_chunked<CoverageReport>(
      samples.size(), threads, [&](std::size_t begin, std::size_t end) {
        CoverageReport part;
        for (std::size_t i = begin; i < end; ++i) {
          const Point& x = samples[i];
          ++part.total;
          try {
            const auto found = witness(x, cover);
            if (!found.element.simplex.contains(x) || !cover.index_of(found.element)) {
              part.failures.push_back(x);
              continue;
            }
            ++part.covered;
            part.routes.add(found.route);
            if (x[x.dim() - 1] <= dl && found.route != Route::top) {
              ++part.sliver_samples;
              if (found.route != Route::base_a) ++part.sliver_violations;
            }
          } catch (const CoverageViolation&) {
            part.failures.push_back(x);
          }
        }
        return part;
      });

  CoverageReport report;
  for (const auto& part : parts) report += part;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<CoverElement> bruteforce_containing(const CoverSpec& cover, const Point& x) {
  std::vector<CoverElement> out;
  for (const auto& e : cover.elements()) {
    if (e.simplex.contains_oracle(x)) out.push_back(e);
  }
  return out;
}

bool Region::contains_interior(const Point& x) const {
  if (x.dim() != static_cast<std::size_t>(d)) return false;
  switch (kind) {
    case RegionKind::cube:
      return std::all_of(x.coords().begin(), x.coords().end(),
                         [](const Rational& c) { return c.sign() > 0 && c < 1; });
    case RegionKind::simplex:
      return DomainSimplex{d, scale}.contains(x, Containment::strict);
    case RegionKind::base_slab:
      return DomainSimplex{d, scale}.contains(x, Containment::strict) && x[x.dim() - 1] < 1;
  }
  return false;
}

Rational Region::volume() const {
  switch (kind) {
    case RegionKind::cube: return 1;
    case RegionKind::simplex: return DomainSimplex{d, scale}.volume();
    case RegionKind::base_slab:
      // S^m minus its top {x_d >= 1}, a translate of S^{m-1}.
      return DomainSimplex{d, scale}.volume() - DomainSimplex{d, scale - 1}.volume();
  }
  return 0;
}

bool is_generic(const Point& x) {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_integer()) return false;
    for (std::size_t j = i + 1; j < x.dim(); ++j) {
      if ((x[i] - x[j]).is_integer()) return false;
    }
  }
  return true;
}

std::vector<Point> generic_interior_samples(const Region& region, std::size_t count,
                                            std::uint64_t seed) {
  constexpr std::int64_t kPrime = 1'000'003;
  if (region.d < 2 || region.scale < 1 || region.scale >= kPrime) {
    throw std::invalid_argument("unsupported region for generic sampling");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(1, kPrime - 1);
  const bool sorted = region.kind != RegionKind::cube;
  const Rational unit = Rational{region.kind == RegionKind::cube ? 1 : region.scale} / kPrime;

  std::vector<Point> out;
  out.reserve(count);
  std::vector<std::int64_t> k(static_cast<std::size_t>(region.d));
  while (out.size() < count) {
    for (auto& c : k) c = draw(rng);
    auto probe = k;
    std::sort(probe.begin(), probe.end());
    if (std::adjacent_find(probe.begin(), probe.end()) != probe.end()) continue;
    if (sorted) std::sort(k.begin(), k.end(), std::greater<>());
    std::vector<Rational> coords;
    coords.reserve(k.size());
    for (auto c : k) coords.push_back(unit * c);
    Point x(std::move(coords));
    if (region.contains_interior(x)) out.push_back(std::move(x));
  }
  return out;
}

PartitionReport partition_check(std::span<const AdmissiblePair> pairs, const Region& region,
                                std::span<const Point> samples, unsigned threads) {
  for (const auto& x : samples) {
    if (!region.contains_interior(x) || !is_generic(x)) {
      throw std::invalid_argument("partition sample " + x.str() +
                                  " is not a generic interior point");
    }
  }
  std::vector<KuhnSimplex> simplices;
  simplices.reserve(pairs.size());
  for (const auto& p : pairs) simplices.push_back(p.simplex());

  auto parts = detail::run_chunked<PartitionReport>(
      samples.size(), threads, [&](std::size_t begin, std::size_t end) {
        PartitionReport part;
        for (std::size_t i = begin; i < end; ++i) {
          int hits = 0;
          for (const auto& s : simplices) {
            if (s.contains(samples[i], Containment::strict) && ++hits > 1) break;
          }
          ++part.samples;
          if (hits != 1) {
            ++part.multiplicity_defects;
            part.defects.push_back(samples[i]);
          }
        }
        return part;
      });

  PartitionReport report;
  for (auto& part : parts) {
    report.samples += part.samples;
    report.multiplicity_defects += part.multiplicity_defects;
    report.defects.insert(report.defects.end(), part.defects.begin(), part.defects.end());
  }
  report.simplex_volume = Rational{static_cast<std::int64_t>(pairs.size())} * unit_volume(region.d);
  report.region_volume = region.volume();
  return report;
}

}  // namespace simplex_cover
