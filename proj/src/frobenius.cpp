#include "picard3/frobenius.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace picard3 {

ConeChart chart(const Fan& fan, const std::vector<int>& span) {
  ConeChart c;
  c.span = span;
  for (int idx : span) c.A.push_back(fan.rays.at(idx));
  c.B = inverse_unimodular(c.A);  // throws unless |det| = 1
  return c;
}

Decomposition decompose(const Mat& c, const Vec& g, const Vec& w, const Int& p) {
  if (p < 2) throw std::invalid_argument("decompose: p must be >= 2");
  Vec lhs = mat_vec(c, g);
  if (lhs.size() != w.size()) throw std::invalid_argument("decompose: shape mismatch");
  Decomposition d;
  for (size_t i = 0; i < lhs.size(); ++i) {
    Int total = lhs[i] + w[i];
    d.h.push_back(floor_div(total, p));
    d.r.push_back(total - d.h.back() * p);
  }
  return d;
}

CartierData trivial_cartier(const Fan& fan) {
  CartierData data;
  for (const auto& cone : fan.maximal_cones) data.emplace_back(cone.size(), 0);
  return data;
}

CartierData cartier_from_divisor(const Fan& fan, const RayDivisor& d) {
  if (static_cast<int>(d.size()) != fan.num_rays())
    throw std::invalid_argument("cartier_from_divisor: coefficient count != ray count");
  CartierData data;
  for (const auto& cone : fan.maximal_cones) {
    Vec u;
    for (int idx : cone) u.push_back(d[idx]);
    data.push_back(u);
  }
  return data;
}

namespace {

void check_cartier(const Fan& fan, const CartierData& cartier) {
  if (cartier.size() != fan.maximal_cones.size())
    throw std::invalid_argument("pushforward_split: one exponent vector per maximal cone required");
  std::map<int, Int> seen;
  for (size_t c = 0; c < cartier.size(); ++c) {
    const auto& cone = fan.maximal_cones[c];
    if (cartier[c].size() != cone.size())
      throw std::invalid_argument("pushforward_split: exponent length != cone size");
    for (size_t k = 0; k < cone.size(); ++k) {
      auto [it, inserted] = seen.emplace(cone[k], cartier[c][k]);
      if (!inserted && it->second != cartier[c][k])
        throw std::invalid_argument("pushforward_split: inconsistent Cartier data");
    }
  }
  if (static_cast<int>(seen.size()) != fan.num_rays())
    throw std::invalid_argument("pushforward_split: some ray lies in no maximal cone");
}

struct SplitContext {
  std::vector<ConeChart> charts;
  std::vector<Mat> transitions;  // C_{l,c} = A_c * B_l
  Mat ref_a;
};

SplitContext make_context(const Fan& fan, int reference_cone) {
  if (reference_cone < 0 || reference_cone >= static_cast<int>(fan.maximal_cones.size()))
    throw std::invalid_argument("pushforward_split: reference cone out of range");
  SplitContext ctx;
  for (const auto& cone : fan.maximal_cones) ctx.charts.push_back(chart(fan, cone));
  const ConeChart& ref = ctx.charts[reference_cone];
  ctx.ref_a = ref.A;
  for (const auto& ch : ctx.charts) ctx.transitions.push_back(mat_mul(ch.A, ref.B));
  return ctx;
}

RayDivisor split_divisor_in(const Fan& fan, const SplitContext& ctx, const CartierData& cartier,
                            const Int& p, const Vec& g) {
  Vec s = mat_vec(ctx.ref_a, g);  // chart coordinates of the residue label
  RayDivisor coeff(fan.num_rays(), 0);
  std::vector<bool> assigned(fan.num_rays(), false);
  for (size_t c = 0; c < ctx.charts.size(); ++c) {
    Decomposition d = decompose(ctx.transitions[c], s, cartier[c], p);
    const auto& span = ctx.charts[c].span;
    for (size_t k = 0; k < span.size(); ++k) {
      int ray = span[k];
      if (assigned[ray] && coeff[ray] != d.h[k])
        throw std::logic_error("pushforward_split: charts disagree on a shared ray");
      coeff[ray] = d.h[k];
      assigned[ray] = true;
    }
  }
  return coeff;
}

// Iterate over P_p = {0..p-1}^n in lexicographic order.
bool next_point(Vec& g, const Int& p) {
  for (size_t i = g.size(); i-- > 0;) {
    if (++g[i] < p) return true;
    g[i] = 0;
  }
  return false;
}

}  // namespace

RayDivisor split_divisor(const Fan& fan, const CartierData& cartier, const Int& p, const Vec& g,
                         int reference_cone) {
  check_cartier(fan, cartier);
  return split_divisor_in(fan, make_context(fan, reference_cone), cartier, p, g);
}

FrobeniusSplit pushforward_split(const Fan& fan, const CartierData& cartier, const Int& p,
                                 int reference_cone) {
  if (p < 2) throw std::invalid_argument("pushforward_split: p must be >= 2");
  check_cartier(fan, cartier);
  SplitContext ctx = make_context(fan, reference_cone);

  std::map<DivisorClass, Int> multiplicity;
  Vec g(fan.dimension, 0);
  Int total = 0;
  do {
    RayDivisor d = split_divisor_in(fan, ctx, cartier, p, g);
    ++multiplicity[reduce(fan, d)];
    ++total;
  } while (next_point(g, p));

  FrobeniusSplit split;
  split.total = total;
  for (const auto& [cls, mult] : multiplicity) split.summands.push_back({cls, mult});
  return split;
}

std::vector<DivisorClass> FamilySplitSets::all() const {
  std::set<DivisorClass> s(B1.begin(), B1.end());
  s.insert(B2.begin(), B2.end());
  s.insert(B3.begin(), B3.end());
  return {s.begin(), s.end()};
}

FamilySplitSets family_split_sets(const FamilyParams& params) {
  FamilySplitSets sets;
  for (int q = 0; q <= params.n - 1 + params.b; ++q) sets.B1.push_back({-q, -1, -1});
  for (int q = 1; q <= params.n - 1 + params.b; ++q) sets.B2.push_back({-q, 0, -1});
  for (int q = 0; q <= params.n - 1; ++q) sets.B3.push_back({-q, 0, 0});
  return sets;
}

SaturationReport saturation_search(const FamilyParams& params, int p_cap) {
  Fan fan = build_family_fan(params.n, params.b);
  CartierData trivial = trivial_cartier(fan);
  auto universe = family_split_sets(params).all();
  std::set<DivisorClass> allowed(universe.begin(), universe.end());

  SaturationReport report;
  std::set<DivisorClass> prev;
  for (int p = 2; p <= p_cap; ++p) {
    FrobeniusSplit split = pushforward_split(fan, trivial, p);
    Int expected = 1;
    for (int i = 0; i < params.n; ++i) expected *= p;
    Int total = 0;
    for (const auto& s : split.summands) {
      if (s.multiplicity < 1) report.cardinality_ok = false;
      total += s.multiplicity;
    }
    if (total != expected || split.total != expected) report.cardinality_ok = false;
    std::set<DivisorClass> classes;
    for (const auto& s : split.summands) classes.insert(s.cls);
    report.tested_p.push_back(p);
    if (!std::includes(classes.begin(), classes.end(), prev.begin(), prev.end()))
      report.monotone = false;
    for (const auto& cls : classes)
      if (!allowed.count(cls)) report.contained = false;
    if (classes != prev) report.p_stable = p;
    prev = classes;
  }
  report.stable_set.assign(prev.begin(), prev.end());
  report.equals_split_sets = (prev == allowed);
  for (const auto& cls : universe)
    if (!prev.count(cls)) report.missing.push_back(cls);
  return report;
}

}  // namespace picard3
