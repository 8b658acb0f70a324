#pragma once

#include <compare>
#include <span>
#include <vector>

#include "simplex_cover/point.hpp"
#include "simplex_cover/simplex.hpp"

namespace simplex_cover {

/// Integer anchor v and permutation pi naming the lattice simplex k(v, pi).
struct AdmissiblePair {
  LatticeVector v;
  Permutation perm;

  KuhnSimplex simplex() const { return {Point::from_lattice(v), perm}; }

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend std::strong_ordering operator<=>(const AdmissiblePair& a, const AdmissiblePair& b) {
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.perm <=> b.perm;
  }
};

/// The right simplex S^scale = {x : scale >= x_1 >= ... >= x_d >= 0}.
struct DomainSimplex {
  int d = 2;
  Rational scale{1};

  bool contains(const Point& x, Containment mode = Containment::closed) const;
  /// scale^d / d!
  Rational volume() const;
};

/// k(v, pi) lies in S^n iff n-1 >= v_1 >= ... >= v_d >= 0 and, whenever
/// v_j = v_{j+1}, j precedes j+1 in pi.
bool is_admissible(std::span<const int> v, const Permutation& perm, int n);

/// All weakly decreasing integer vectors with bound >= v_1 and v_d >= 0, in
/// lexicographic order. With `last_zero`, only those with v_d = 0.
std::vector<LatticeVector> weakly_decreasing_vectors(int d, int bound, bool last_zero = false);

/// Permutations satisfying the tie rule for a weakly decreasing v, in
/// lexicographic order of the image sequence. Built by interleaving the
/// index groups of equal entries, so the cost is proportional to the output.
std::vector<Permutation> tie_respecting_permutations(std::span<const int> v);

/// The d! simplices k(0, pi) triangulating [0,1]^d.
std::vector<AdmissiblePair> enumerate_cube_triangulation(int d);

/// The n^d admissible pairs triangulating S^n, in canonical order.
std::vector<AdmissiblePair> enumerate_simplex_triangulation(int d, int n);

/// The m^d - (m-1)^d pairs of S^m with v_d = 0, triangulating its base
/// slab {x in S^m : x_d <= 1}.
std::vector<AdmissiblePair> enumerate_base_slab(int d, int m);

/// Cross-check route: filters every (v, pi) with v in [0, n-1]^d and pi in
/// S_d through is_admissible. Exponential; meant for d <= 4.
std::vector<AdmissiblePair> enumerate_by_filter(int d, int n, bool base_slab_only);

}  // namespace simplex_cover
