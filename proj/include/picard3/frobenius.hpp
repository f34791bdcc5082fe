#pragma once

// Splitting of the pushforward of a line bundle along the p-th toric
// Frobenius (multiplication by p on the cocharacter lattice). For each
// residue g of the character lattice mod p the summand is the line bundle
// whose chart exponent on a maximal cone i is h from the division
//
//   C_{l,i} * (A_l * g) + u_i = p * h + r,   r in {0..p-1}^n,      (1)
//
// where A_l is the chart matrix of a reference cone l, C_{l,i} = A_i * B_l,
// and u_i is the local Cartier exponent of the pushed-forward bundle. The
// residue label g is anchored to the ambient lattice basis, so the class of
// each summand is independent of the reference cone; only the route through
// the transition matrices changes. p is any integer >= 2, not necessarily
// prime: equation (1) is well-defined for all of them.

#include <vector>

#include "picard3/divisor.hpp"
#include "picard3/fan.hpp"

namespace picard3 {

struct ConeChart {
  std::vector<int> span;  // ray indices, in row order
  Mat A;                  // rows = rays of the cone
  Mat B;                  // A^{-1}
};

// Chart of a smooth cone with rows in the given order. Throws
// std::invalid_argument when the rays are not a lattice basis.
ConeChart chart(const Fan& fan, const std::vector<int>& span);

struct Decomposition {
  Vec h;
  Vec r;  // componentwise in {0..p-1}
};

// Solve C*g + w = p*h + r. p >= 2 required.
Decomposition decompose(const Mat& c, const Vec& g, const Vec& w, const Int& p);

// Local Cartier data: one exponent vector per maximal cone, entries matching
// the cone's sorted ray order; entry k is the divisor coefficient at that ray.
using CartierData = std::vector<Vec>;

CartierData trivial_cartier(const Fan& fan);
CartierData cartier_from_divisor(const Fan& fan, const RayDivisor& d);

struct SplitSummand {
  DivisorClass cls;
  Int multiplicity = 0;
};

struct FrobeniusSplit {
  std::vector<SplitSummand> summands;  // sorted by class, ascending
  Int total = 0;                       // = p^n
};

// Multiset of summand classes of F_* L for the family fan. Rejects p < 2,
// inconsistent Cartier data (overlapping cones disagreeing on a ray), and
// reference cones out of range.
FrobeniusSplit pushforward_split(const Fan& fan, const CartierData& cartier, const Int& p,
                                 int reference_cone = 0);

// Global divisor coefficients of the summand at residue label g.
RayDivisor split_divisor(const Fan& fan, const CartierData& cartier, const Int& p, const Vec& g,
                         int reference_cone = 0);

struct FamilySplitSets {
  std::vector<DivisorClass> B1, B2, B3;
  std::vector<DivisorClass> all() const;  // deduplicated union, sorted
};

// B1 = {(-q,-1,-1): q=0..n-1+b}, B2 = {(-q,0,-1): q=1..n-1+b},
// B3 = {(-q,0,0): q=0..n-1}.
FamilySplitSets family_split_sets(const FamilyParams& params);

struct SaturationReport {
  std::vector<Int> tested_p;
  std::vector<DivisorClass> stable_set;   // distinct classes at the largest tested p
  bool monotone = true;                   // set nondecreasing in p
  bool contained = true;                  // always inside B1 u B2 u B3
  bool cardinality_ok = true;             // multiplicities positive, summing to p^n
  bool equals_split_sets = false;         // stable set == B1 u B2 u B3
  Int p_stable = 0;                       // least tested p reaching the stable set
  std::vector<DivisorClass> missing;      // B1 u B2 u B3 minus stable set
};

// Empirical saturation search for F_* O over p = 2..p_cap (p_cap chosen by
// the caller; verify uses n+b+3, two past the observed stabilisation at
// n+b+1). The distinct-class set grows with p and
// stabilises; for b = 0 it reaches all of B1 u B2 u B3, for b >= 1 the class
// (0,-1,-1) is unattainable (its e-coordinate would need g_n >= 1 with
// b*g_n = 0) and the stable set is everything else.
SaturationReport saturation_search(const FamilyParams& params, int p_cap);

}  // namespace picard3
