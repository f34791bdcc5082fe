#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "picard3/frobenius.hpp"

using namespace picard3;

namespace {

bool next_residue(Vec& g, const Int& p) {
  for (auto& x : g) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

Int int_pow(Int base, int exp) {
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

TEST_CASE("chart inverts the ray matrix") {
  const Fan fan = build_family_fan(3, 1);
  for (const auto& cone : fan.maximal_cones) {
    const ConeChart ch = chart(fan, cone);
    CHECK(mat_mul(ch.A, ch.B) == identity(3));
    CHECK(ch.span == cone);
  }
}

TEST_CASE("decompose solves C g + w = p h + r") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const Int p = 2 + trial % 5;
    Mat c(n, Vec(n));
    for (auto& row : c)
      for (auto& x : row) x = coef(rng);
    Vec g(n), w(n);
    for (auto& x : g) x = coef(rng);
    for (auto& x : w) x = coef(rng);
    const Decomposition d = decompose(c, g, w, p);
    const Vec cg = mat_vec(c, g);
    for (int i = 0; i < n; ++i) {
      CHECK(d.r[i] >= 0);
      CHECK(d.r[i] < p);
      CHECK(cg[i] + w[i] == p * d.h[i] + d.r[i]);
    }
  }
  CHECK_THROWS_AS(decompose(identity(2), {0, 0}, {0, 0}, 1), std::invalid_argument);
}

TEST_CASE("pushforward of O at p=2 on X(2,0), pinned") {
  const Fan fan = build_family_fan(2, 0);
  const FrobeniusSplit s = pushforward_split(fan, trivial_cartier(fan), 2);
  CHECK(s.total == 4);
  REQUIRE(s.summands.size() == 4);
  const std::vector<DivisorClass> expect = {
      {-1, 0, -1}, {-1, 0, 0}, {0, -1, -1}, {0, 0, 0}};
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(s.summands[i].cls == expect[i]);
    CHECK(s.summands[i].multiplicity == 1);
  }
}

TEST_CASE("split multiset is independent of the reference cone") {
  const Fan fan = build_family_fan(2, 1);
  const CartierData cart = trivial_cartier(fan);
  const FrobeniusSplit base = pushforward_split(fan, cart, 3, 0);
  for (int l = 1; l < static_cast<int>(fan.maximal_cones.size()); ++l) {
    const FrobeniusSplit other = pushforward_split(fan, cart, 3, l);
    REQUIRE(other.summands.size() == base.summands.size());
    for (size_t i = 0; i < base.summands.size(); ++i) {
      CHECK(other.summands[i].cls == base.summands[i].cls);
      CHECK(other.summands[i].multiplicity == base.summands[i].multiplicity);
    }
  }
}

TEST_CASE("per-residue summand class is independent of the reference cone") {
  const Fan fan = build_family_fan(2, 1);
  const CartierData cart = trivial_cartier(fan);
  const Int p = 3;
  Vec g(fan.dimension, 0);
  do {
    const DivisorClass anchor = reduce(fan, split_divisor(fan, cart, p, g, 0));
    for (int l = 1; l < static_cast<int>(fan.maximal_cones.size()); ++l)
      CHECK(reduce(fan, split_divisor(fan, cart, p, g, l)) == anchor);
  } while (next_residue(g, p));
}

TEST_CASE("split sets B1, B2, B3") {
  const FamilySplitSets s20 = family_split_sets({2, 0});
  CHECK(s20.B1 == std::vector<DivisorClass>{{0, -1, -1}, {-1, -1, -1}});
  CHECK(s20.B2 == std::vector<DivisorClass>{{-1, 0, -1}});
  CHECK(s20.B3 == std::vector<DivisorClass>{{0, 0, 0}, {-1, 0, 0}});
  CHECK(s20.all().size() == 5);  // 3n+2b-1

  for (auto [n, b] : {std::pair{2, 2}, {3, 1}, {5, 3}}) {
    const FamilySplitSets s = family_split_sets({n, b});
    CHECK(static_cast<int>(s.B1.size()) == n + b);
    CHECK(static_cast<int>(s.B2.size()) == n + b - 1);
    CHECK(static_cast<int>(s.B3.size()) == n);
    CHECK(static_cast<int>(s.all().size()) == 3 * n + 2 * b - 1);
  }
}

TEST_CASE("summands of F_* O live inside the split sets") {
  for (auto [n, b] : {std::pair{2, 0}, {2, 2}, {3, 1}}) {
    CAPTURE(n);
    CAPTURE(b);
    const Fan fan = build_family_fan(n, b);
    const std::vector<DivisorClass> all = family_split_sets({n, b}).all();
    for (Int p : {2, 3, 5}) {
      const FrobeniusSplit s = pushforward_split(fan, trivial_cartier(fan), p);
      Int total = 0;
      for (const SplitSummand& sm : s.summands) {
        CHECK(sm.multiplicity >= 1);
        total += sm.multiplicity;
        CHECK(std::binary_search(all.begin(), all.end(), sm.cls));
      }
      CHECK(total == int_pow(p, n));
      CHECK(s.total == total);
    }
  }
}

TEST_CASE("saturation: b=0 reaches the whole split set") {
  const SaturationReport r20 = saturation_search({2, 0}, 5);
  CHECK(r20.monotone);
  CHECK(r20.contained);
  CHECK(r20.cardinality_ok);
  CHECK(r20.equals_split_sets);
  CHECK(r20.p_stable == 3);
  CHECK(r20.missing.empty());

  const SaturationReport r30 = saturation_search({3, 0}, 6);
  CHECK(r30.equals_split_sets);
  CHECK(r30.p_stable == 4);
}

TEST_CASE("saturation: b>=1 misses exactly (0,-1,-1)") {
  for (auto [n, b] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    CAPTURE(n);
    CAPTURE(b);
    const SaturationReport r = saturation_search({n, b}, n + b + 3);
    CHECK(r.monotone);
    CHECK(r.contained);
    CHECK(r.cardinality_ok);
    CHECK_FALSE(r.equals_split_sets);
    CHECK(r.missing == std::vector<DivisorClass>{{0, -1, -1}});
    CHECK(r.p_stable == n + b + 1);
  }
}

TEST_CASE("pushforward of a nontrivial bundle keeps the multiset invariants") {
  const Fan fan = build_family_fan(2, 1);
  const CartierData cart = cartier_from_divisor(fan, family_section(fan, {-1, 0, -1}));
  for (Int p : {2, 3}) {
    const FrobeniusSplit a = pushforward_split(fan, cart, p, 0);
    Int total = 0;
    for (const SplitSummand& sm : a.summands) total += sm.multiplicity;
    CHECK(total == int_pow(p, 2));
    for (int l = 1; l < 5; ++l) {
      const FrobeniusSplit c = pushforward_split(fan, cart, p, l);
      REQUIRE(c.summands.size() == a.summands.size());
      for (size_t i = 0; i < a.summands.size(); ++i) {
        CHECK(c.summands[i].cls == a.summands[i].cls);
        CHECK(c.summands[i].multiplicity == a.summands[i].multiplicity);
      }
    }
  }
}
