#include "picard3/cohomology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>

namespace picard3 {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// ---------------------------------------------------------------------------
// simplicial homology

SimplicialComplex build_complex(const Fan& fan, const std::vector<int>& subset) {
  SimplicialComplex c;
  c.vertices = subset;
  std::sort(c.vertices.begin(), c.vertices.end());
  for (int i : c.vertices)
    if (i < 0 || i >= fan.num_rays())
      throw std::invalid_argument("build_complex: vertex out of range");
  if (std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
    throw std::invalid_argument("build_complex: duplicate vertex");
  for (const auto& pc : primitive_collections(fan))
    if (std::includes(c.vertices.begin(), c.vertices.end(), pc.begin(), pc.end()))
      c.blockers.push_back(pc);
  return c;
}

BettiVector reduced_homology(const SimplicialComplex& complex, int top_degree) {
  const int v = static_cast<int>(complex.vertices.size());
  if (v > 25) throw std::invalid_argument("reduced_homology: too many vertices");
  if (top_degree < -1) throw std::invalid_argument("reduced_homology: bad top degree");

  std::map<int, int> pos;
  for (int i = 0; i < v; ++i) pos.emplace(complex.vertices[i], i);
  std::vector<std::uint32_t> blockers;
  for (const auto& bl : complex.blockers) {
    std::uint32_t bm = 0;
    bool inside = true;
    for (int x : bl) {
      auto it = pos.find(x);
      if (it == pos.end()) {
        inside = false;  // reaches outside the vertex set, can never block
        break;
      }
      bm |= std::uint32_t(1) << it->second;
    }
    if (inside) blockers.push_back(bm);
  }

  // cells[c] = faces with c vertices, as bitmasks in ascending order
  std::vector<std::vector<std::uint32_t>> cells(v + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << v); ++mask) {
    bool face = true;
    for (std::uint32_t bm : blockers)
      if ((mask & bm) == bm) {
        face = false;
        break;
      }
    if (face) cells[std::popcount(mask)].push_back(mask);
  }

  // bd_rank[c] = rank of the boundary map from c-vertex faces to (c-1)-vertex
  // faces; the c = 1 map is the augmentation onto the empty face.
  std::vector<int> bd_rank(v + 2, 0);
  for (int c = 1; c <= v; ++c) {
    if (cells[c].empty() || cells[c - 1].empty()) continue;
    std::map<std::uint32_t, int> row;
    for (int i = 0; i < static_cast<int>(cells[c - 1].size()); ++i) row.emplace(cells[c - 1][i], i);
    Mat bd(cells[c - 1].size(), Vec(cells[c].size(), 0));
    for (int j = 0; j < static_cast<int>(cells[c].size()); ++j) {
      const std::uint32_t mask = cells[c][j];
      int sign = 1;
      for (int bit = 0; bit < v; ++bit)
        if (mask >> bit & 1) {
          bd[row.at(mask ^ (std::uint32_t(1) << bit))][j] = sign;
          sign = -sign;
        }
    }
    bd_rank[c] = rank(std::move(bd));
  }

  BettiVector betti(top_degree + 2, 0);
  for (int c = 0; c <= v; ++c) {
    Int b = Int(cells[c].size()) - bd_rank[c] - bd_rank[c + 1];
    if (b == 0) continue;
    if (c >= static_cast<int>(betti.size()))
      throw std::invalid_argument("reduced_homology: top degree too small for this complex");
    betti[c] = b;
  }
  return betti;
}

std::vector<ForbiddenSubset> forbidden_subsets(const Fan& fan) {
  const int m = fan.num_rays();
  if (m > 25) throw std::invalid_argument("forbidden_subsets: too many rays");
  const auto pcs = primitive_collections(fan);
  std::vector<ForbiddenSubset> out;
  for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t(1) << m); ++mask) {
    SimplicialComplex c;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) c.vertices.push_back(i);
    for (const auto& pc : pcs) {
      bool inside = true;
      for (int i : pc) inside = inside && (mask >> i & 1);
      if (inside) c.blockers.push_back(pc);
    }
    BettiVector betti = reduced_homology(c, fan.dimension - 1);
    if (std::any_of(betti.begin(), betti.end(), [](const Int& x) { return x != 0; }))
      out.push_back({std::move(c.vertices), std::move(betti)});
  }
  std::sort(out.begin(), out.end(), [](const ForbiddenSubset& a, const ForbiddenSubset& b) {
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    return a.rays < b.rays;
  });
  return out;
}

// ---------------------------------------------------------------------------
// lattice point enumeration in a sign-pattern region
//
// A representative is base + (<m, x_i>)_i over the cocharacters m. Each ray
// window lo <= r_i <= hi is a pair of inequalities in m; the system is
// projected by Fourier-Motzkin (variable n down to 1) and the integer points
// are read off by depth first search with exact per-level intervals. The
// elimination decides emptiness exactly, so empty regions cost nothing.

namespace {

constexpr std::size_t kHardPointCap = 2'000'000;
constexpr std::size_t kProjectionCap = 50'000;

struct Window {
  std::optional<Int> lo, hi;
};

struct Ineq {
  Int c0;  // c0 + sum c[j] m_{j+1} >= 0
  Vec c;
};

// Tighten by the gcd of the coefficients (valid on integer points).
// 1 = keep, 0 = constant true, -1 = constant false.
int normalize(Ineq& q) {
  Int g = 0;
  for (const Int& x : q.c) g = gcd(g, x);
  if (g == 0) return q.c0 >= 0 ? 0 : -1;
  if (g > 1) {
    for (Int& x : q.c) x /= g;
    q.c0 = floor_div(q.c0, g);
  }
  return 1;
}

struct Projection {
  std::vector<std::vector<Ineq>> lists;  // lists[k]: top variable is m_k
  bool empty = false;
  bool unbounded = false;
};

Projection project(std::vector<Ineq> current, int n) {
  Projection pr;
  pr.lists.assign(n + 1, {});
  for (int k = n; k >= 1 && !pr.empty; --k) {
    std::map<Vec, Int> uniq;  // coefficient vector -> tightest constant
    for (Ineq& q : current) {
      const int st = normalize(q);
      if (st < 0) {
        pr.empty = true;
        break;
      }
      if (st == 0) continue;
      auto [it, inserted] = uniq.emplace(std::move(q.c), q.c0);
      if (!inserted && q.c0 < it->second) it->second = q.c0;
    }
    if (pr.empty) break;
    std::vector<Ineq> with_k, rest;
    for (auto& [c, c0] : uniq)
      (c[k - 1] != 0 ? with_k : rest).push_back(Ineq{c0, c});
    bool has_lo = false, has_hi = false;
    for (const Ineq& q : with_k) (q.c[k - 1] > 0 ? has_lo : has_hi) = true;
    if (!has_lo || !has_hi) pr.unbounded = true;
    for (const Ineq& l : with_k) {
      if (l.c[k - 1] <= 0) continue;
      for (const Ineq& u : with_k) {
        if (u.c[k - 1] >= 0) continue;
        const Int a = l.c[k - 1], b = -u.c[k - 1];
        Ineq comb;
        comb.c0 = b * l.c0 + a * u.c0;
        comb.c.resize(n);
        for (int j = 0; j < n; ++j) comb.c[j] = b * l.c[j] + a * u.c[j];
        rest.push_back(std::move(comb));
      }
    }
    if (rest.size() > kProjectionCap)
      throw enumeration_limit_error("Fourier-Motzkin projection blow-up");
    pr.lists[k] = std::move(with_k);
    current = std::move(rest);
  }
  if (!pr.empty)
    for (Ineq& q : current)  // leftover variable-free combinations
      if (normalize(q) < 0) pr.empty = true;
  return pr;
}

// Integer points of the projected system; emit returns false to stop early.
bool fm_dfs(const std::vector<std::vector<Ineq>>& lists, int k, int n, Vec& m,
            const std::function<bool(const Vec&)>& emit) {
  if (k > n) return emit(m);
  std::optional<Int> lo, hi;
  for (const Ineq& q : lists[k]) {
    Int dot = q.c0;
    for (int j = 0; j + 1 < k; ++j)
      if (q.c[j] != 0) dot += q.c[j] * m[j];
    const Int& ck = q.c[k - 1];
    if (ck > 0) {
      Int bnd = -floor_div(dot, ck);  // m_k >= ceil(-dot/ck)
      if (!lo || bnd > *lo) lo = std::move(bnd);
    } else {
      Int bnd = floor_div(dot, -ck);  // m_k <= floor(dot/-ck)
      if (!hi || bnd < *hi) hi = std::move(bnd);
    }
  }
  if (!lo || !hi) throw std::logic_error("fm_dfs: level interval is unbounded");
  for (Int val = *lo; val <= *hi; ++val) {
    m[k - 1] = val;
    if (!fm_dfs(lists, k + 1, n, m, emit)) return false;
  }
  return true;
}

struct WindowEnum {
  std::vector<RayDivisor> points;
  Int max_abs = 0;
  bool truncated = false;
  bool unbounded = false;
};

WindowEnum enumerate_window(const Fan& fan, const RayDivisor& base,
                            const std::vector<Window>& win, std::size_t limit) {
  const int n = fan.dimension, m = fan.num_rays();
  std::vector<Ineq> sys;
  for (int i = 0; i < m; ++i) {
    if (win[i].lo) {
      Ineq q{base[i] - *win[i].lo, fan.rays[i]};
      sys.push_back(std::move(q));
    }
    if (win[i].hi) {
      Ineq q{*win[i].hi - base[i], Vec(n)};
      for (int j = 0; j < n; ++j) q.c[j] = -fan.rays[i][j];
      sys.push_back(std::move(q));
    }
  }
  Projection pr = project(std::move(sys), n);
  WindowEnum we;
  if (pr.empty) return we;
  if (pr.unbounded) {
    we.unbounded = true;
    return we;
  }
  Vec mv(n, 0);
  const std::function<bool(const Vec&)> emit = [&](const Vec& mm) {
    RayDivisor r(m);
    for (int i = 0; i < m; ++i) {
      Int val = base[i];
      for (int j = 0; j < n; ++j)
        if (fan.rays[i][j] != 0) val += fan.rays[i][j] * mm[j];
      Int a = abs(val);
      if (a > we.max_abs) we.max_abs = std::move(a);
      r[i] = std::move(val);
    }
    we.points.push_back(std::move(r));
    if (we.points.size() >= kHardPointCap)
      throw enumeration_limit_error("representative enumeration exceeded the hard cap");
    if (limit != 0 && we.points.size() >= limit) {
      we.truncated = true;
      return false;
    }
    return true;
  };
  fm_dfs(pr.lists, 1, n, mv, emit);
  return we;
}

std::vector<Window> mask_windows(const std::vector<bool>& nonneg) {
  std::vector<Window> win(nonneg.size());
  for (std::size_t i = 0; i < nonneg.size(); ++i) {
    if (nonneg[i])
      win[i].lo = 0;
    else
      win[i].hi = -1;
  }
  return win;
}

std::vector<int> nonneg_set(const RayDivisor& r) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] >= 0) out.push_back(i);
  return out;
}

}  // namespace

RepEnumeration representations(const Fan& fan, const Vec& cls, const Int& radius,
                               std::size_t limit) {
  if (radius < 0) throw std::invalid_argument("representations: radius must be >= 0");
  std::vector<Window> win(fan.num_rays());
  for (Window& w : win) {
    w.lo = -radius;
    w.hi = radius;
  }
  WindowEnum we = enumerate_window(fan, section_divisor(fan, cls), win, limit);
  if (we.unbounded)
    throw enumeration_limit_error("representation box is unbounded; rays do not span");
  RepEnumeration out;
  out.truncated = we.truncated;
  out.saturated = !we.points.empty() && we.max_abs == radius;
  for (RayDivisor& r : we.points) {
    std::vector<int> nn = nonneg_set(r);
    out.reps.push_back({std::move(r), std::move(nn)});
  }
  return out;
}

RepEnumeration representations(const Fan& fan, const DivisorClass& cls, const Int& radius,
                               std::size_t limit) {
  return representations(fan, CohomologyEngine::to_vec(cls), radius, limit);
}

// ---------------------------------------------------------------------------
// engine

CohomologyEngine::CohomologyEngine(Fan fan) : fan_(std::move(fan)) {
  if (!is_smooth(fan_)) throw std::invalid_argument("cohomology: fan must be smooth");
  info_ = class_group(fan_);
  if (!info_.torsion.empty())
    throw std::invalid_argument("cohomology: class group has torsion");
}

const std::vector<ForbiddenSubset>& CohomologyEngine::forbidden() const {
  if (!forbidden_) forbidden_ = forbidden_subsets(fan_);
  return *forbidden_;
}

const CohomologyEngine::Pattern& CohomologyEngine::full_pattern() const {
  if (!full_) {
    Pattern p;
    p.nonneg.assign(fan_.num_rays(), true);
    std::vector<int> all(fan_.num_rays());
    std::iota(all.begin(), all.end(), 0);
    p.betti = reduced_homology(build_complex(fan_, all), fan_.dimension - 1);
    full_ = std::move(p);
  }
  return *full_;
}

const std::vector<CohomologyEngine::Pattern>& CohomologyEngine::patterns() const {
  if (!patterns_) {
    std::vector<Pattern> ps;
    for (const ForbiddenSubset& f : forbidden()) {
      Pattern p;
      p.nonneg.assign(fan_.num_rays(), false);
      for (int i : f.rays) p.nonneg[i] = true;
      p.betti = f.betti;
      ps.push_back(std::move(p));
    }
    ps.push_back(full_pattern());
    patterns_ = std::move(ps);
  }
  return *patterns_;
}

RayDivisor CohomologyEngine::base_divisor(const Vec& cls) const {
  if (static_cast<int>(cls.size()) != info_.rank)
    throw std::invalid_argument("cohomology: class coordinate count != Picard rank");
  return mat_vec(info_.section_map, cls);
}

Int CohomologyEngine::initial_radius(const Vec& cls) const {
  Int r = fan_.dimension + 4;
  if (fan_.family) r = fan_.family->n + fan_.family->b + 4;
  for (const Int& c : cls) r += abs(c);
  return r;
}

namespace {

// First radius in the doubling chain strictly containing every contributing
// representative; mirrors the certification policy of the enumeration box.
Int certify_radius(Int r, const Int& max_abs) {
  for (int round = 0; round <= 4; ++round) {
    if (max_abs < r) return r;
    r *= 2;
  }
  throw enumeration_limit_error("certification radius exceeded after four doublings");
}

}  // namespace

CohomologyResult CohomologyEngine::dims(const Vec& cls) const {
  const int n = fan_.dimension;
  const RayDivisor base = base_divisor(cls);
  CohomologyResult res;
  res.h.assign(n + 1, 0);
  Int max_abs = 0;
  for (const Pattern& pat : patterns()) {
    WindowEnum we = enumerate_window(fan_, base, mask_windows(pat.nonneg), 0);
    if (we.unbounded)
      throw enumeration_limit_error("unbounded sign-pattern region; is the fan complete?");
    if (we.points.empty()) continue;
    // h^j picks up the reduced homology in degree n-1-j, i.e. Betti index n-j
    for (int j = 0; j <= n; ++j)
      if (pat.betti[n - j] != 0) res.h[j] += Int(we.points.size()) * pat.betti[n - j];
    if (we.max_abs > max_abs) max_abs = we.max_abs;
    for (RayDivisor& r : we.points) {
      std::vector<int> nn = nonneg_set(r);
      res.reps.push_back({std::move(r), std::move(nn)});
    }
  }
  res.radius = certify_radius(initial_radius(cls), max_abs);
  return res;
}

Int CohomologyEngine::h0(const Vec& cls) const {
  const Pattern& full = full_pattern();
  WindowEnum we = enumerate_window(fan_, base_divisor(cls), mask_windows(full.nonneg), 0);
  if (we.unbounded)
    throw enumeration_limit_error("unbounded section region; is the fan complete?");
  return Int(we.points.size()) * full.betti[fan_.dimension];
}

bool CohomologyEngine::higher_acyclic(const Vec& cls) const {
  const RayDivisor base = base_divisor(cls);
  for (const ForbiddenSubset& f : forbidden()) {
    std::vector<bool> nonneg(fan_.num_rays(), false);
    for (int i : f.rays) nonneg[i] = true;
    WindowEnum we = enumerate_window(fan_, base, mask_windows(nonneg), 1);
    if (we.unbounded)
      throw enumeration_limit_error("unbounded sign-pattern region; is the fan complete?");
    if (!we.points.empty()) return false;  // existence is self-certifying
  }
  return true;
}

bool CohomologyEngine::acyclic(const Vec& cls) const {
  return h0(cls) == 0 && higher_acyclic(cls);
}

// ---------------------------------------------------------------------------
// closed forms for the family

namespace {

void check_family(const FamilyParams& p) {
  if (p.n < 2 || p.b < 0)
    throw std::invalid_argument("family closed form: n >= 2 and b >= 0 required");
}

// Negative blocks over (v, y, z, t, u): the eleven patterns whose restricted
// complex has homology below the top degree.
constexpr std::array<std::array<bool, 5>, 11> kForbiddenBlocks = {{
    {true, true, false, false, false},
    {false, true, true, false, false},
    {false, false, true, true, false},
    {false, false, false, true, true},
    {true, false, false, false, true},
    {true, true, true, false, false},
    {false, true, true, true, false},
    {false, false, true, true, true},
    {true, false, false, true, true},
    {true, true, false, false, true},
    {true, true, true, true, true},
}};

// Integer feasibility of a block sign pattern in (alpha_3, alpha_5).
bool block_pattern_feasible(const FamilyParams& p, const DivisorClass& cls,
                            const std::array<bool, 5>& neg) {
  struct Cons {
    Int c0, c3, c5;  // c0 + c3 alpha_3 + c5 alpha_5 >= 0
  };
  std::vector<Cons> sys;
  auto add = [&](Int c0, Int c3, Int c5, bool negate, Int shift) {
    if (negate)
      sys.push_back({-c0 - shift, -c3, -c5});  // quantity <= -shift
    else
      sys.push_back({std::move(c0), std::move(c3), std::move(c5)});
  };
  add(cls.e, -p.b, -1, neg[0], p.n - 1);  // sum of the n-1 v coefficients
  add(cls.f, -1, 1, neg[1], 1);           // y
  add(0, 1, 0, neg[2], 1);                // z
  add(cls.g, -1, 0, neg[3], 1);           // t
  add(0, 0, 1, neg[4], 1);                // u

  // All alpha_5 coefficients are +-1: eliminate it exactly.
  std::vector<std::pair<Int, Int>> lowers, uppers, a3sys;  // (c0, c3)
  for (const Cons& q : sys) {
    if (q.c5 > 0)
      lowers.emplace_back(q.c0, q.c3);  // alpha_5 >= -(c0 + c3 a3)
    else if (q.c5 < 0)
      uppers.emplace_back(q.c0, q.c3);  // alpha_5 <= c0 + c3 a3
    else
      a3sys.emplace_back(q.c0, q.c3);
  }
  if (lowers.empty() || uppers.empty())
    throw std::logic_error("block pattern: alpha_5 must be bounded on both sides");
  for (const auto& [l0, l3] : lowers)
    for (const auto& [u0, u3] : uppers) a3sys.emplace_back(u0 + l0, u3 + l3);

  std::optional<Int> lo, hi;
  for (const auto& [c0, c3] : a3sys) {
    if (c3 == 0) {
      if (c0 < 0) return false;
    } else if (c3 > 0) {
      Int bnd = -floor_div(c0, c3);
      if (!lo || bnd > *lo) lo = std::move(bnd);
    } else {
      Int bnd = floor_div(c0, -c3);
      if (!hi || bnd < *hi) hi = std::move(bnd);
    }
  }
  if (!lo || !hi)
    throw std::logic_error("block pattern: unbounded region on a complete fan");
  if (*lo > *hi) return false;
  // sanity: the alpha_5 interval at alpha_3 = lo is nonempty (the elimination
  // is exact, so a violation here is a programming error)
  Int l_max, u_min;
  bool first = true;
  for (const auto& [l0, l3] : lowers) {
    Int bnd = -(l0 + l3 * *lo);
    if (first || bnd > l_max) l_max = std::move(bnd);
    first = false;
  }
  first = true;
  for (const auto& [u0, u3] : uppers) {
    Int bnd = u0 + u3 * *lo;
    if (first || bnd < u_min) u_min = std::move(bnd);
    first = false;
  }
  if (l_max > u_min) throw std::logic_error("block pattern: projection lost a constraint");
  return true;
}

}  // namespace

bool higher_acyclic_closed_form(const FamilyParams& params, const DivisorClass& cls) {
  check_family(params);
  for (const auto& neg : kForbiddenBlocks)
    if (block_pattern_feasible(params, cls, neg)) return false;
  return true;
}

bool has_sections_closed_form(const FamilyParams& params, const DivisorClass& cls) {
  check_family(params);
  return block_pattern_feasible(params, cls, {false, false, false, false, false});
}

bool acyclic_closed_form(const FamilyParams& params, const DivisorClass& cls) {
  return !has_sections_closed_form(params, cls) && higher_acyclic_closed_form(params, cls);
}

}  // namespace picard3
