#include "picard3/divisor.hpp"

#include <sstream>
#include <stdexcept>

namespace picard3 {

std::string DivisorClass::str() const {
  std::ostringstream os;
  os << "(" << e << "," << f << "," << g << ")";
  return os.str();
}

namespace {

Mat family_basis_map(const FamilyParams& p) {
  const int n = p.n, m = n + 3;
  Mat map(3, Vec(m, 0));
  for (int i = 0; i < n - 1; ++i) map[0][i] = 1;  // D_{v_i} -> D_v
  map[0][n + 2] = 1;                              // D_u -> D_v - D_y
  map[1][n + 2] = -1;
  map[0][n] = p.b;  // D_z -> b D_v + D_y + D_t
  map[1][n] = 1;
  map[2][n] = 1;
  map[1][n - 1] = 1;  // D_y
  map[2][n + 1] = 1;  // D_t
  return map;
}

}  // namespace

ClassGroupInfo class_group(const Fan& fan) {
  // Relations: for every dual basis vector, sum_r (x_r)_j D_r = 0, i.e. the
  // class group is the cokernel of the m x n ray matrix.
  Mat rays(fan.rays.begin(), fan.rays.end());
  Smith s = smith_normal_form(rays);
  ClassGroupInfo info;
  const int m = fan.num_rays();
  info.rank = m - s.rank;
  for (const Int& d : s.diag)
    if (d != 1) info.torsion.push_back(d);
  if (fan.family) {
    info.basis_map = family_basis_map(*fan.family);
    const int n = fan.family->n;
    info.section_map = Mat(m, Vec(3, 0));
    info.section_map[0][0] = 1;      // e D_{v_1}
    info.section_map[n - 1][1] = 1;  // f D_y
    info.section_map[n + 1][2] = 1;  // g D_t
  } else {
    // Free class coordinates are the last (m - rank) rows of U_inv; a section
    // of a class is U applied to (0,...,0,class), i.e. the last columns of U.
    for (int i = s.rank; i < m; ++i) info.basis_map.push_back(s.U_inv[i]);
    if (info.torsion.empty()) {
      info.section_map = Mat(m, Vec(info.rank, 0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < info.rank; ++j) info.section_map[i][j] = s.U[i][s.rank + j];
    }
  }
  return info;
}

DivisorClass reduce(const Fan& fan, const RayDivisor& d) {
  if (!fan.family) throw std::invalid_argument("reduce: fan is not a family fan");
  if (static_cast<int>(d.size()) != fan.num_rays())
    throw std::invalid_argument("reduce: coefficient count != ray count");
  const int n = fan.family->n, b = fan.family->b;
  DivisorClass cls;
  for (int i = 0; i < n - 1; ++i) cls.e += d[i];
  cls.e += d[n + 2] + b * d[n];
  cls.f = d[n - 1] - d[n + 2] + d[n];
  cls.g = d[n + 1] + d[n];
  return cls;
}

Vec reduce_general(const ClassGroupInfo& info, const RayDivisor& d) {
  return mat_vec(info.basis_map, d);
}

DivisorClass alpha_to_class(const FamilyParams& params, const AlphaVector& a) {
  return {a.a1 + a.a5 + a.a3 * params.b, a.a2 + a.a3 - a.a5, a.a3 + a.a4};
}

DivisorClass hom_difference(const DivisorClass& l, const DivisorClass& m) { return m - l; }

DivisorClass canonical_class(const Fan& fan) {
  RayDivisor minus_k(fan.num_rays(), 1);
  return -reduce(fan, minus_k);
}

RayDivisor family_section(const Fan& fan, const DivisorClass& cls) {
  if (!fan.family) throw std::invalid_argument("family_section: fan is not a family fan");
  const int n = fan.family->n;
  RayDivisor d(fan.num_rays(), 0);
  d[0] = cls.e;      // e D_{v_1}
  d[n - 1] = cls.f;  // f D_y
  d[n + 1] = cls.g;  // g D_t
  return d;
}

RayDivisor section_divisor(const Fan& fan, const Vec& cls) {
  const ClassGroupInfo info = class_group(fan);
  if (static_cast<int>(cls.size()) != info.rank)
    throw std::invalid_argument("section_divisor: class has wrong rank");
  if (info.section_map.empty())
    throw std::invalid_argument("section_divisor: class group has torsion");
  return mat_vec(info.section_map, cls);
}

}  // namespace picard3
