#include "simplex_cover/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simplex_cover {

namespace {

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
}

void require_size(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

void append_pairs(const LatticeVector& v, std::vector<AdmissiblePair>& out) {
  for (auto& perm : tie_respecting_permutations(v)) out.push_back({v, std::move(perm)});
}

}  // namespace

bool DomainSimplex::contains(const Point& x, Containment mode) const {
  if (x.dim() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("domain dimension mismatch");
  }
  const bool strict = mode == Containment::strict;
  const Rational* prev = &scale;
  for (const auto& c : x.coords()) {
    if (strict ? !(c < *prev) : !(c <= *prev)) return false;
    prev = &c;
  }
  return strict ? prev->sign() > 0 : prev->sign() >= 0;
}

Rational DomainSimplex::volume() const {
  Rational power{1};
  for (int k = 0; k < d; ++k) power *= scale;
  return power * unit_volume(d);
}

bool is_admissible(std::span<const int> v, const Permutation& perm, int n) {
  if (v.size() != perm.size() || v.empty()) return false;
  if (v.front() > n - 1 || v.back() < 0) return false;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] < v[j + 1]) return false;
    if (v[j] == v[j + 1] &&
        perm.position_of(static_cast<int>(j)) > perm.position_of(static_cast<int>(j + 1))) {
      return false;
    }
  }
  return true;
}

std::vector<LatticeVector> weakly_decreasing_vectors(int d, int bound, bool last_zero) {
  std::vector<LatticeVector> out;
  if (d < 1 || bound < 0) return out;
  const std::size_t free = static_cast<std::size_t>(last_zero ? d - 1 : d);
  LatticeVector v(static_cast<std::size_t>(d), 0);

  // Odometer over the free prefix, lexicographically ascending, keeping the
  // prefix weakly decreasing.
  while (true) {
    out.push_back(v);
    std::size_t i = free;
    while (i > 0) {
      --i;
      const int cap = i == 0 ? bound : v[i - 1];
      if (v[i] < cap) {
        ++v[i];
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  v.begin() + static_cast<std::ptrdiff_t>(free), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (free == 0) return out;
  }
}

std::vector<Permutation> tie_respecting_permutations(std::span<const int> v) {
  const std::size_t d = v.size();
  // labels[i] is the group of index i; groups are contiguous and ascending.
  std::vector<int> labels(d);
  std::vector<int> group_start;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == 0 || v[i] != v[i - 1]) group_start.push_back(static_cast<int>(i));
    labels[i] = static_cast<int>(group_start.size()) - 1;
  }

  // Multiset permutations of the labels in lexicographic order map
  // one-to-one onto tie-respecting image sequences in lexicographic order,
  // because each group's indices are handed out in ascending order.
  std::vector<Permutation> out;
  std::vector<int> sequence = labels;
  std::vector<int> images(d);
  do {
    std::vector<int> next = group_start;
    for (std::size_t k = 0; k < d; ++k) {
      images[k] = next[static_cast<std::size_t>(sequence[k])]++;
    }
    out.emplace_back(images);
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  return out;
}

std::vector<AdmissiblePair> enumerate_cube_triangulation(int d) {
  require_dimension(d);
  std::vector<AdmissiblePair> out;
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  const LatticeVector zero(static_cast<std::size_t>(d), 0);
  do {
    out.push_back({zero, Permutation(images)});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<AdmissiblePair> enumerate_simplex_triangulation(int d, int n) {
  require_dimension(d);
  require_size(n, "n");
  std::vector<AdmissiblePair> out;
  for (const auto& v : weakly_decreasing_vectors(d, n - 1)) append_pairs(v, out);
  return out;
}

std::vector<AdmissiblePair> enumerate_base_slab(int d, int m) {
  require_dimension(d);
  require_size(m, "m");
  std::vector<AdmissiblePair> out;
  for (const auto& v : weakly_decreasing_vectors(d, m - 1, true)) append_pairs(v, out);
  return out;
}

std::vector<AdmissiblePair> enumerate_by_filter(int d, int n, bool base_slab_only) {
  require_dimension(d);
  require_size(n, "n");
  std::vector<AdmissiblePair> out;
  LatticeVector v(static_cast<std::size_t>(d), 0);
  std::vector<int> images(static_cast<std::size_t>(d));
  while (true) {
    if (!base_slab_only || v.back() == 0) {
      std::iota(images.begin(), images.end(), 0);
      do {
        Permutation perm(images);
        if (is_admissible(v, perm, n)) out.push_back({v, std::move(perm)});
      } while (std::next_permutation(images.begin(), images.end()));
    }
    // Odometer over the full box [0, n-1]^d.
    std::size_t i = v.size();
    while (i > 0 && v[i - 1] == n - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace simplex_cover
