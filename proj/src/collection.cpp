#include "picard3/collection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace picard3 {

std::vector<DivisorClass> the_collection(const FamilyParams& params) {
  if (params.n < 2 || params.b < 0)
    throw std::invalid_argument("the_collection: n >= 2 and b >= 0 required");
  std::vector<DivisorClass> out;
  for (int k = params.n - 1 + params.b; k >= params.b + 1; --k) {
    out.push_back({-k, -1, -1});
    out.push_back({-k, 0, -1});
  }
  out.push_back({-params.b, -1, -1});
  for (int q = params.n - 1; q >= 0; --q) out.push_back({-q, 0, 0});
  return out;
}

std::vector<DiffFamily> diff_families(const FamilyParams& params) {
  const auto coll = the_collection(params);
  const Int n1 = params.n - 1, b = params.b;
  std::vector<DiffFamily> fams = {
      {0, 0, -n1, n1, {}, false},
      {0, 1, b + 2 - params.n, n1 + b, {}, false},
      {0, -1, -(n1 + b), params.n - b - 2, {}, false},
      {1, 0, -n1, params.n - 2, {}, false},
      {-1, 0, -(params.n - 2), n1, {}, false},
      {1, 1, b - n1, b + n1, {}, false},
      {-1, -1, -(b + n1), n1 - b, {}, false},
  };
  std::vector<std::set<Int>> seen(fams.size());
  for (std::size_t j = 0; j < coll.size(); ++j)
    for (std::size_t k = 0; k < coll.size(); ++k) {
      const DivisorClass d = hom_difference(coll[j], coll[k]);
      bool placed = false;
      for (std::size_t i = 0; i < fams.size(); ++i) {
        if (d.f != fams[i].f || d.g != fams[i].g) continue;
        if (d.e < fams[i].s_min || d.e > fams[i].s_max)
          throw std::logic_error("diff_families: difference " + d.str() +
                                 " escapes its predicted range");
        seen[i].insert(d.e);
        placed = true;
        break;
      }
      if (!placed)
        throw std::logic_error("diff_families: difference " + d.str() +
                               " outside the seven signatures");
    }
  for (std::size_t i = 0; i < fams.size(); ++i) {
    fams[i].observed.assign(seen[i].begin(), seen[i].end());
    fams[i].covers_range = true;
    for (Int s = fams[i].s_min; s <= fams[i].s_max; ++s)
      if (!seen[i].count(s)) fams[i].covers_range = false;
  }
  return fams;
}

ExceptionalReport check_strongly_exceptional(const CohomologyEngine& engine,
                                             const std::vector<DivisorClass>& collection) {
  ExceptionalReport rep;
  const int len = static_cast<int>(collection.size());
  std::map<DivisorClass, std::pair<bool, Int>> memo;  // diff -> (higher acyclic, h^0)
  auto look = [&](const DivisorClass& d) -> const std::pair<bool, Int>& {
    auto it = memo.find(d);
    if (it == memo.end())
      it = memo.emplace(d, std::make_pair(engine.higher_acyclic(d), engine.h0(d))).first;
    return it->second;
  };
  for (int j = 0; j < len; ++j)
    for (int k = 0; k < len; ++k) {
      const DivisorClass diff = hom_difference(collection[j], collection[k]);
      const auto& [higher, h0] = look(diff);
      if (!higher) rep.violations.push_back({j, k, diff, "higher cohomology nonzero"});
      if (j > k && h0 != 0) rep.violations.push_back({j, k, diff, "backward Hom nonzero"});
      if (j == k && h0 != 1) rep.violations.push_back({j, k, diff, "diagonal End dimension != 1"});
    }
  rep.pairs_checked = len * len;
  rep.strongly_exceptional = rep.violations.empty();
  return rep;
}

FullnessReport verify_full(const FamilyParams& params, std::vector<DivisorClass> collection) {
  const int n = params.n;
  std::set<DivisorClass> have(collection.begin(), collection.end());
  FullnessReport rep;
  bool fired = true;
  while (fired) {
    fired = false;
    for (int k = params.n - 1 + params.b; k >= 0; --k) {
      const DivisorClass ca{-k, 0, -1};
      if (!have.count(ca)) {
        bool ok = true;
        for (int j = 0; j <= n - 1 && ok; ++j) ok = have.count({-k - j, -1, -1}) > 0;
        for (int j = 1; j <= n - 1 && ok; ++j) ok = have.count({-k - j, 0, -1}) > 0;
        if (ok) {
          have.insert(ca);
          rep.trace.push_back({KoszulRule::A, k, ca});
          fired = true;
        }
      }
      const DivisorClass cb{-k, -1, -1};
      if (!have.count(cb)) {
        bool ok = true;
        for (int j = 1; j <= n - 1 && ok; ++j) ok = have.count({-k - j, -1, -1}) > 0;
        for (int j = 1; j <= n && ok; ++j) ok = have.count({-k - j, 0, -1}) > 0;
        if (ok) {
          have.insert(cb);
          rep.trace.push_back({KoszulRule::B, k, cb});
          fired = true;
        }
      }
    }
  }
  for (const DivisorClass& cls : family_split_sets(params).all())
    if (!have.count(cls)) rep.missing.push_back(cls);
  rep.generates = rep.missing.empty();
  return rep;
}

FullnessReport verify_full(const FamilyParams& params) {
  return verify_full(params, the_collection(params));
}

namespace {

std::vector<std::vector<int>> expected_primitive_collections(const FamilyParams& p) {
  const int n = p.n;
  std::vector<int> vs;
  for (int i = 0; i < n - 1; ++i) vs.push_back(i);
  std::vector<std::vector<int>> pcs;
  std::vector<int> y1 = vs;
  y1.push_back(n - 1);
  pcs.push_back(y1);                                    // {v_*, y}
  pcs.push_back({n - 1, n});                            // {y, z}
  pcs.push_back({n, n + 1});                            // {z, t}
  pcs.push_back({n + 1, n + 2});                        // {t, u}
  std::vector<int> y5 = vs;
  y5.push_back(n + 2);
  pcs.push_back(y5);                                    // {u, v_*}
  for (auto& pc : pcs) std::sort(pc.begin(), pc.end());
  std::sort(pcs.begin(), pcs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return pcs;
}

}  // namespace

VerifyReport verify_all(const FamilyParams& params) {
  VerifyReport rep;
  rep.params = params;
  Fan fan = build_family_fan(params.n, params.b);
  rep.fan_smooth = is_smooth(fan);
  rep.fan_complete = is_complete(fan);
  rep.cone_count_ok = static_cast<int>(fan.maximal_cones.size()) == 3 * params.n - 1;
  rep.primitive_collections_ok =
      primitive_collections(fan) == expected_primitive_collections(params);
  rep.k0_rank = static_cast<int>(fan.maximal_cones.size());
  rep.fano = params.fano();
  rep.collection = the_collection(params);
  rep.k0_rank_matches = static_cast<int>(rep.collection.size()) == rep.k0_rank;

  const CohomologyEngine engine{std::move(fan)};
  rep.exceptional = check_strongly_exceptional(engine, rep.collection);

  rep.diffs = diff_families(params);
  rep.diffs_ok = std::all_of(rep.diffs.begin(), rep.diffs.end(),
                             [](const DiffFamily& f) { return f.covers_range; });

  rep.fullness = verify_full(params, rep.collection);

  rep.saturation = saturation_search(params, params.n + params.b + 3);
  rep.frobenius_ok = rep.saturation.contained && rep.saturation.cardinality_ok;

  rep.passed = rep.fan_smooth && rep.fan_complete && rep.cone_count_ok &&
               rep.primitive_collections_ok && rep.k0_rank_matches &&
               rep.exceptional.strongly_exceptional && rep.diffs_ok && rep.fullness.generates &&
               rep.frobenius_ok;
  return rep;
}

}  // namespace picard3
