#include "picard3/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace picard3 {

namespace {

// All k-element subsets of {0..m-1}, lexicographic.
void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool contains_all(const std::vector<int>& sorted_hay, const std::vector<int>& sorted_needle) {
  return std::includes(sorted_hay.begin(), sorted_hay.end(), sorted_needle.begin(),
                       sorted_needle.end());
}

Mat cone_matrix(const Fan& fan, const std::vector<int>& cone) {
  Mat a;
  a.reserve(cone.size());
  for (int idx : cone) a.push_back(fan.rays.at(idx));
  return a;
}

}  // namespace

Fan build_family_fan(int n, int b) {
  if (n < 2) throw std::invalid_argument("build_family_fan: n must be >= 2");
  if (b < 0) throw std::invalid_argument("build_family_fan: b must be >= 0");

  Fan fan;
  fan.dimension = n;
  fan.family = FamilyParams{n, b};
  const int m = n + 3;

  for (int i = 0; i < n - 1; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    fan.rays.push_back(v);
    fan.ray_labels.push_back("v_" + std::to_string(i + 1));
  }
  Vec y(n, -1), z(n, 0), t(n, 0), u(n, -1);
  y[n - 1] = -(b + 1);
  z[n - 1] = 1;
  t[n - 1] = -1;
  u[n - 1] = -b;
  fan.rays.push_back(y);
  fan.rays.push_back(z);
  fan.rays.push_back(t);
  fan.rays.push_back(u);
  fan.ray_labels.insert(fan.ray_labels.end(), {"y", "z", "t", "u"});

  // Primitive collections Y_i = X_i u X_{i+1} (cyclic) over the blocks
  // X = ({v_1..v_{n-1}}, {y}, {z}, {t}, {u}).
  std::vector<std::vector<int>> blocks(5);
  for (int i = 0; i < n - 1; ++i) blocks[0].push_back(i);
  blocks[1] = {n - 1};
  blocks[2] = {n};
  blocks[3] = {n + 1};
  blocks[4] = {n + 2};
  std::vector<std::vector<int>> pcs;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> pc = blocks[i];
    pc.insert(pc.end(), blocks[(i + 1) % 5].begin(), blocks[(i + 1) % 5].end());
    std::sort(pc.begin(), pc.end());
    pcs.push_back(pc);
  }

  for_each_subset(m, n, [&](const std::vector<int>& s) {
    for (const auto& pc : pcs)
      if (contains_all(s, pc)) return;
    fan.maximal_cones.push_back(s);
  });
  return fan;
}

std::vector<std::vector<int>> primitive_collections(const Fan& fan) {
  const int m = fan.num_rays();
  auto is_face = [&](const std::vector<int>& s) {
    for (const auto& cone : fan.maximal_cones)
      if (contains_all(cone, s)) return true;
    return false;
  };
  std::vector<std::vector<int>> result;
  for (int k = 1; k <= m; ++k) {
    for_each_subset(m, k, [&](const std::vector<int>& s) {
      if (is_face(s)) return;
      // minimal: every proper subset must be a face, so in particular every
      // (k-1)-subset; smaller non-faces were found in earlier rounds.
      for (int drop = 0; drop < k; ++drop) {
        std::vector<int> sub;
        for (int j = 0; j < k; ++j)
          if (j != drop) sub.push_back(s[j]);
        if (!is_face(sub)) return;
      }
      result.push_back(s);
    });
  }
  return result;
}

bool is_smooth(const Fan& fan) {
  for (const auto& cone : fan.maximal_cones) {
    if (static_cast<int>(cone.size()) != fan.dimension) return false;
    Int d = det(cone_matrix(fan, cone));
    if (d != 1 && d != -1) return false;
  }
  return !fan.maximal_cones.empty();
}

bool is_complete(const Fan& fan) {
  std::map<std::vector<int>, int> wall_count;
  for (const auto& cone : fan.maximal_cones) {
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> wall;
      for (size_t j = 0; j < cone.size(); ++j)
        if (j != drop) wall.push_back(cone[j]);
      ++wall_count[wall];
    }
  }
  if (wall_count.empty()) return false;
  for (const auto& [wall, count] : wall_count)
    if (count != 2) return false;
  return true;
}

ConePoint cone_containing(const Fan& fan, const Vec& point) {
  if (static_cast<int>(point.size()) != fan.dimension)
    throw std::invalid_argument("cone_containing: dimension mismatch");
  for (const auto& cone : fan.maximal_cones) {
    Mat b = inverse_unimodular(cone_matrix(fan, cone));
    // point = sum c_i ray_i  <=>  c = B^T point
    Vec c = mat_vec(transpose(b), point);
    bool inside = std::all_of(c.begin(), c.end(), [](const Int& x) { return x >= 0; });
    if (!inside) continue;
    ConePoint result;
    for (size_t i = 0; i < cone.size(); ++i)
      if (c[i] > 0) {
        result.rays.push_back(cone[i]);
        result.coefficients.push_back(c[i]);
      }
    return result;
  }
  throw std::runtime_error("cone_containing: point in no maximal cone (fan not complete?)");
}

}  // namespace picard3
