#pragma once

// Line bundle cohomology on a smooth complete toric variety. A divisor
// D = sum r_i D_i contributes to H^j through the sign pattern of r: the
// simplicial complex on the rays with r_i >= 0 (faces = subsets spanning a
// cone) has reduced rational homology, and
//
//   h^j(O(D)) = sum over representatives r of the class of D of
//               dim H~_{n-1-j}( complex restricted to {i : r_i >= 0} ).
//
// Only two kinds of pattern can contribute: the full ray set (an (n-1)-sphere,
// giving h^0) and the "forbidden" proper subsets whose restricted complex has
// homology (giving h^j, j >= 1; a proper subcomplex of the sphere has no top
// homology). For the family fan the forbidden subsets are exactly the five
// primitive collections, their five complements, and the empty set.
//
// Representatives with a fixed sign pattern are lattice points of a polytope;
// they are enumerated exactly by Fourier-Motzkin projection + depth first
// search, and the reported radius certifies that every contributing
// representative fits strictly inside the corresponding coordinate box.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picard3/divisor.hpp"
#include "picard3/fan.hpp"
#include "picard3/linalg.hpp"

namespace picard3 {

// Enumeration gave up: an unbounded sign-pattern region (fan not complete, or
// the class group data is inconsistent) or a blown certification radius.
struct enumeration_limit_error : std::runtime_error {
  explicit enumeration_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Simplicial complex on a vertex subset, presented by its minimal non-faces.
// A subset of `vertices` is a face iff it contains no blocker; the empty set
// is always a face.
struct SimplicialComplex {
  std::vector<int> vertices;               // sorted ray indices
  std::vector<std::vector<int>> blockers;  // primitive collections inside the subset
};

SimplicialComplex build_complex(const Fan& fan, const std::vector<int>& subset);

// Reduced rational Betti numbers, entry k = dim H~_{k-1}, k = 0..top_degree+1
// (so index 0 counts H~_{-1}, nonzero exactly for the empty complex).
using BettiVector = std::vector<Int>;
BettiVector reduced_homology(const SimplicialComplex& complex, int top_degree);

struct ForbiddenSubset {
  std::vector<int> rays;
  BettiVector betti;  // of the restricted complex, length dimension + 1
};

// Proper ray subsets with nontrivial reduced homology, sorted by size then
// lexicographically. Exponential in the number of rays.
std::vector<ForbiddenSubset> forbidden_subsets(const Fan& fan);

struct Representation {
  RayDivisor coeffs;
  std::vector<int> nonneg;  // sign pattern: rays with coefficient >= 0
};

struct RepEnumeration {
  std::vector<Representation> reps;
  bool saturated = false;  // some representative touches the box boundary
  bool truncated = false;  // stopped at `limit`
};

// All representatives of the class with every |coefficient| <= radius.
// limit = 0 means unlimited.
RepEnumeration representations(const Fan& fan, const Vec& cls, const Int& radius,
                               std::size_t limit = 0);
RepEnumeration representations(const Fan& fan, const DivisorClass& cls, const Int& radius,
                               std::size_t limit = 0);

struct CohomologyResult {
  std::vector<Int> h;                // h[j] = dim H^j, j = 0..dimension
  Int radius = 0;                    // certification box radius
  std::vector<Representation> reps;  // the contributing representatives
};

// Per-fan engine; construction computes the class group, forbidden subsets
// are computed lazily on first use. Requires a smooth fan with torsion-free
// class group; completeness shows up as an enumeration_limit_error.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(Fan fan);

  const Fan& fan() const { return fan_; }
  const ClassGroupInfo& class_info() const { return info_; }
  const std::vector<ForbiddenSubset>& forbidden() const;

  // Class coordinates follow class_info().basis_map; for family fans these
  // are the (e,f,g) of DivisorClass.
  CohomologyResult dims(const Vec& cls) const;
  Int h0(const Vec& cls) const;
  bool higher_acyclic(const Vec& cls) const;  // h^j = 0 for all j >= 1
  bool acyclic(const Vec& cls) const;         // h^j = 0 for all j >= 0

  CohomologyResult dims(const DivisorClass& cls) const { return dims(to_vec(cls)); }
  Int h0(const DivisorClass& cls) const { return h0(to_vec(cls)); }
  bool higher_acyclic(const DivisorClass& cls) const { return higher_acyclic(to_vec(cls)); }
  bool acyclic(const DivisorClass& cls) const { return acyclic(to_vec(cls)); }

  static Vec to_vec(const DivisorClass& cls) { return {cls.e, cls.f, cls.g}; }

 private:
  struct Pattern {
    std::vector<bool> nonneg;  // per ray
    BettiVector betti;
  };

  RayDivisor base_divisor(const Vec& cls) const;
  const Pattern& full_pattern() const;           // the all-rays sphere, lazy
  const std::vector<Pattern>& patterns() const;  // forbidden + full, lazy
  Int initial_radius(const Vec& cls) const;

  Fan fan_;
  ClassGroupInfo info_;
  mutable std::optional<std::vector<ForbiddenSubset>> forbidden_;
  mutable std::optional<Pattern> full_;
  mutable std::optional<std::vector<Pattern>> patterns_;
};

// Closed-form family tests, independent of the enumeration route. With the
// block variables (alpha_3, alpha_5) = (r_z, r_u) of a representative built
// on e D_{v_1} + f D_y + g D_t, the five block quantities
//
//   sum r_v = e - alpha_5 - b alpha_3     r_y = f - alpha_3 + alpha_5
//   r_z = alpha_3    r_t = g - alpha_3    r_u = alpha_5
//
// are linear, and a block sign pattern is realisable iff the corresponding
// integer system is feasible (the v block needs sum <= -(n-1) to go negative).
// The contributing patterns are: all five blocks negative, a cyclically
// consecutive pair negative, a cyclically consecutive triple negative (the
// eleven forbidden patterns), and none negative (sections). Feasibility is
// decided exactly by eliminating alpha_5 (all its coefficients are +-1).
bool higher_acyclic_closed_form(const FamilyParams& params, const DivisorClass& cls);
bool has_sections_closed_form(const FamilyParams& params, const DivisorClass& cls);
bool acyclic_closed_form(const FamilyParams& params, const DivisorClass& cls);

}  // namespace picard3
