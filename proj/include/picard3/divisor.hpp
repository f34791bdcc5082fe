#pragma once

// Divisor class arithmetic. A torus-invariant divisor is a coefficient vector
// over the rays; its class lives in Pic = Z^m / (lattice relations). For the
// family fan the class group is free of rank 3 with basis (D_v, D_y, D_t),
// where D_v is the common class of the D_{v_i}; the two reduction routes
//
//   closed form:  (e,f,g) = (sum r_v + r_u + b r_z, r_y - r_u + r_z, r_t + r_z)
//   general:      free coordinates of the Smith normal form of the ray matrix
//
// are kept separate on purpose and cross-checked in the tests.

#include <string>

#include "picard3/fan.hpp"
#include "picard3/linalg.hpp"

namespace picard3 {

using RayDivisor = Vec;  // one integer coefficient per ray, in ray order

struct DivisorClass {
  Int e = 0, f = 0, g = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.f != b.f) return a.f < b.f;
    return a.g < b.g;
  }
  DivisorClass operator+(const DivisorClass& o) const { return {e + o.e, f + o.f, g + o.g}; }
  DivisorClass operator-(const DivisorClass& o) const { return {e - o.e, f - o.f, g - o.g}; }
  DivisorClass operator-() const { return {-e, -f, -g}; }
  std::string str() const;
};

struct ClassGroupInfo {
  int rank = 0;
  std::vector<Int> torsion;  // nontrivial invariant factors (empty when free)
  Mat basis_map;             // rank x m; divisor coefficients -> class coordinates
  Mat section_map;           // m x rank; a divisor in the given class (empty if torsion)
};

// Class group of a complete fan via Smith normal form of the ray matrix.
// For family fans basis_map is the closed-form (D_v, D_y, D_t) presentation;
// otherwise it is the Smith basis.
ClassGroupInfo class_group(const Fan& fan);

// Closed-form family reduction. Requires fan.family.
DivisorClass reduce(const Fan& fan, const RayDivisor& d);

// General reduction along a ClassGroupInfo's basis_map.
Vec reduce_general(const ClassGroupInfo& info, const RayDivisor& d);

// Exponents (a_1..a_5) over the blocks (v-total, y, z, t, u).
struct AlphaVector {
  Int a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0;
};

// Class of a_1 D_v + a_2 D_y + a_3 D_z + a_4 D_t + a_5 D_u.
DivisorClass alpha_to_class(const FamilyParams& params, const AlphaVector& alpha);

// The class M - L whose acyclicity controls Ext^i(L, M).
DivisorClass hom_difference(const DivisorClass& l, const DivisorClass& m);

// Class of K_X = -(sum of all ray divisors). For the family: (-(n+b),-1,-2).
DivisorClass canonical_class(const Fan& fan);

// A divisor with the given class under the closed-form family basis.
RayDivisor family_section(const Fan& fan, const DivisorClass& cls);

// A divisor with the given class for any fan with free class group, using the
// fan's own basis (closed form for family fans, Smith basis otherwise).
RayDivisor section_divisor(const Fan& fan, const Vec& cls);

}  // namespace picard3
