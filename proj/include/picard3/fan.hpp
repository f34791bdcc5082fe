#pragma once

// Rational polyhedral fans given by primitive ray generators and maximal
// cones, specialised to a family X(n,b) of smooth projective toric varieties
// with Picard rank 3. The family fan in Z^n has rays, in this fixed order,
//
//   v_i = e_i                    (i = 1..n-1)
//   y   = -e_1-...-e_{n-1} - (b+1) e_n
//   z   = e_n
//   t   = -e_n
//   u   = -e_1-...-e_{n-1} - b e_n
//
// and its maximal cones are exactly the n-element ray subsets containing none
// of the five primitive collections {v_*,y}, {y,z}, {z,t}, {t,u}, {u,v_*}.

#include <optional>
#include <string>
#include <vector>

#include "picard3/linalg.hpp"

namespace picard3 {

struct FamilyParams {
  int n = 2;
  int b = 0;
  bool fano() const { return b < n - 1; }
};

struct Fan {
  int dimension = 0;
  std::vector<Vec> rays;
  std::vector<std::vector<int>> maximal_cones;  // sorted 0-based ray indices
  std::vector<std::string> ray_labels;          // may be empty
  std::optional<FamilyParams> family;           // set by build_family_fan

  int num_rays() const { return static_cast<int>(rays.size()); }
};

// Throws std::invalid_argument for n < 2 or b < 0.
Fan build_family_fan(int n, int b);

// Minimal non-faces, i.e. minimal ray sets not contained in any maximal cone.
// Sorted by size, then lexicographically.
std::vector<std::vector<int>> primitive_collections(const Fan& fan);

// Every maximal cone is simplicial of full dimension with |det| = 1.
bool is_smooth(const Fan& fan);

// Wall condition: every (n-1)-face of a maximal cone lies in exactly two
// maximal cones. Valid as a completeness test for smooth simplicial fans.
bool is_complete(const Fan& fan);

struct ConePoint {
  std::vector<int> rays;  // minimal cone containing the point
  Vec coefficients;       // positive coordinates along those rays
};

// Minimal cone of a complete fan containing the given lattice point, with the
// exact expansion of the point in that cone's rays. The zero point yields the
// zero cone (empty ray list). Throws std::runtime_error if no maximal cone
// contains the point (fan not complete).
ConePoint cone_containing(const Fan& fan, const Vec& point);

}  // namespace picard3
