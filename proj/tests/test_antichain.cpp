#include <doctest.h>

#include "support.hpp"
#include "uclab/antichain.hpp"
#include "uclab/bounds.hpp"
#include "uclab/setfam.hpp"

using namespace uclab;
using namespace uclab::test;

namespace {

// Every antichain on n points, the empty one included, from a scan of all
// subfamilies of 2^X.
std::vector<SetFamily> allAntichains(int n) {
  GroundSet g(n);
  std::vector<SetFamily> out{SetFamily(g)};
  for (const SetFamily& f : allFamilies(n))
    if (isAntichain(f)) out.push_back(f);
  return out;
}

std::set<Mask> oracleShade(const std::set<Mask>& a, int n) {
  std::set<Mask> out;
  for (Mask x : a)
    for (int i = 0; i < n; ++i)
      if (!contains(x, i)) out.insert(x | bit(i));
  return out;
}

std::set<Mask> oracleShadow(const std::set<Mask>& a, int n) {
  std::set<Mask> out;
  for (Mask x : a)
    for (int i = 0; i < n; ++i)
      if (contains(x, i)) out.insert(x & ~bit(i));
  return out;
}

long objective(const SetFamily& a) {
  if (a.empty()) return 0;
  return 2 * static_cast<long>(a.size()) + static_cast<long>(oracleMinimal(oracleShade(asSet(a), a.n())).size());
}

}  // namespace

TEST_CASE("shade and shadow") {
  GroundSet g(3);
  CHECK(asSet(shade(fam(3, {"ab"}))) == masks(g, {"abc"}));
  CHECK(asSet(shadow(fam(3, {"ab"}))) == masks(g, {"a", "b"}));
  CHECK(shade(level(g, 1)) == level(g, 2));
  CHECK(shade(fam(3, {"abc"})).empty());
  CHECK(asSet(shade(fam(3, {"{}"}))) == masks(g, {"a", "b", "c"}));
  for (const SetFamily& a : allAntichains(3)) {
    CHECK(asSet(shade(a)) == oracleShade(asSet(a), 3));
    CHECK(asSet(shadow(a)) == oracleShadow(asSet(a), 3));
  }
}

TEST_CASE("first upward level and foils") {
  GroundSet g(3);
  CHECK(asSet(firstUpwardLevel(fam(3, {"a"}))) == masks(g, {"ab", "ac"}));
  CHECK(firstUpwardLevel(level(GroundSet(4), 2)) == level(GroundSet(4), 3));
  std::vector<SetFamily> fs = foils(fam(3, {"a"}));
  REQUIRE(fs.size() == 3);
  CHECK(asSet(fs[0]) == masks(g, {"a"}));
  CHECK(asSet(fs[1]) == masks(g, {"ab", "ac"}));
  CHECK(asSet(fs[2]) == masks(g, {"abc"}));
  CHECK(foils(fam(3, {"a"}), 2).size() == 2);
  CHECK_THROWS_AS(firstUpwardLevel(fam(3, {"a", "ab"})), Error);

  for (int n = 1; n <= 4; ++n)
    for (const SetFamily& a : allAntichains(n)) {
      if (a.empty()) continue;
      std::set<Mask> all;
      std::size_t total = 0;
      for (const SetFamily& f : foils(a)) {
        all.insert(f.begin(), f.end());
        total += f.size();
      }
      CHECK(total == all.size());
      CHECK(all == asSet(upset(a)));
    }
}

TEST_CASE("Dedekind counts of antichains") {
  CHECK(allAntichains(1).size() == 3);
  CHECK(allAntichains(2).size() == 6);
  CHECK(allAntichains(3).size() == 20);
  CHECK(allAntichains(4).size() == 168);
}

TEST_CASE("first upward level properties over antichain pairs") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<SetFamily> all = allAntichains(n);
    const Mask full = GroundSet(n).full();
    for (const SetFamily& a : all) {
      std::set<Mask> as = asSet(a), nab = oracleShade(as, n), bar = oracleMinimal(nab);
      // property 3
      for (Mask x : bar) CHECK(nab.count(x));
      for (Mask x : nab) {
        bool below = std::any_of(nab.begin(), nab.end(), [x](Mask y) { return isProperSubset(y, x); });
        CHECK(below == !bar.count(x));
      }
      if (!a.empty()) CHECK(asSet(firstUpwardLevel(a)) == bar);
      // property 1, second half: needs the empty set and X left out.
      if (!as.count(0)) {
        std::set<Mask> there = oracleShade(oracleShadow(as, n), n);
        CHECK(std::includes(there.begin(), there.end(), as.begin(), as.end()));
      }
      if (!as.count(full)) {
        std::set<Mask> back = oracleShadow(nab, n);
        CHECK(std::includes(back.begin(), back.end(), as.begin(), as.end()));
      }
    }
    for (const SetFamily& a : all)
      for (const SetFamily& b : all) {
        std::set<Mask> as = asSet(a), bs = asSet(b), u = as;
        u.insert(bs.begin(), bs.end());
        // property 1
        std::set<Mask> na = oracleShade(as, n), nb = oracleShade(bs, n), nu = oracleShade(u, n);
        std::set<Mask> joined = na;
        joined.insert(nb.begin(), nb.end());
        CHECK(nu == joined);
        std::set<Mask> da = oracleShadow(as, n), db = oracleShadow(bs, n), dj = da;
        dj.insert(db.begin(), db.end());
        CHECK(oracleShadow(u, n) == dj);
        const bool sub = std::includes(bs.begin(), bs.end(), as.begin(), as.end());
        std::set<Mask> barA = oracleMinimal(na), barB = oracleMinimal(nb);
        // property 2
        if (sub)
          for (Mask x : na)
            CHECK(std::any_of(barB.begin(), barB.end(), [x](Mask y) { return isSubset(y, x); }));
        // property 4
        if (isAntichain(SetFamily(GroundSet(n), {u.begin(), u.end()}))) {
          bool clear = std::none_of(barA.begin(), barA.end(), [&](Mask x) {
            return std::any_of(barB.begin(), barB.end(), [x](Mask y) { return isProperSubset(y, x); });
          });
          if (clear) {
            std::set<Mask> barU = oracleMinimal(nu);
            CHECK(std::includes(barU.begin(), barU.end(), barA.begin(), barA.end()));
          }
        }
        // property 5
        if (sub) {
          std::set<Mask> rest;
          std::set_difference(bs.begin(), bs.end(), as.begin(), as.end(), std::inserter(rest, rest.end()));
          std::set<Mask> nr = oracleShade(rest, n);
          bool dominated = std::all_of(na.begin(), na.end(), [&](Mask x) {
            return std::any_of(nr.begin(), nr.end(), [x](Mask y) { return isSubset(y, x); });
          });
          if (dominated) CHECK(oracleMinimal(nr) == barB);
        }
      }
  }
}

TEST_CASE("normalized matching on levels") {
  for (int n = 1; n <= 5; ++n) {
    GroundSet g(n);
    for (int k = 0; k <= n; ++k) {
      SetFamily lvl = level(g, k);
      const std::size_t size = lvl.size();
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << size); ++bits) {
        std::vector<Mask> chosen;
        for (std::size_t i = 0; i < size; ++i)
          if ((bits >> i) & 1U) chosen.push_back(lvl[i]);
        SetFamily part(g, chosen);
        if (2 * k < n) CHECK(shade(part).size() >= part.size());
        if (2 * k > n) CHECK(shadow(part).size() >= part.size());
      }
    }
  }
}

TEST_CASE("antichain objective theorem on n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    long best = 0;
    for (const SetFamily& a : allAntichains(n)) {
      if (a.empty()) continue;
      AntichainState s = AntichainState::of(a);
      CHECK(s.objective == objective(a));
      CHECK(static_cast<std::uint64_t>(s.objective) <= spernerBound(n));
      best = std::max(best, s.objective);
    }
    CHECK(static_cast<std::uint64_t>(best) == spernerBound(n));
  }
  CHECK(AntichainState::of(level(GroundSet(4), 2)).objective == 16);
  CHECK(AntichainState::of(level(GroundSet(3), 1)).objective == 9);
}

TEST_CASE("augmentable closure") {
  GroundSet g(3);
  AntichainState before = AntichainState::of(fam(3, {"a"}));
  CHECK(before.objective == 4);
  AntichainState s = augmentableClosure(fam(3, {"a"}));
  CHECK(asSet(s.antichain) == masks(g, {"a", "b", "c"}));
  CHECK(s.objective == 9);
  CHECK(isAugmentable(s.antichain));
  SetFamily mid = level(GroundSet(4), 2);
  CHECK(isAugmentable(mid));
  CHECK(augmentableClosure(mid).antichain == mid);
  CHECK_THROWS_AS(augmentableClosure(fam(3, {"a", "ab"})), Error);

  for (int n = 1; n <= 4; ++n)
    for (const SetFamily& a : allAntichains(n)) {
      if (a.empty()) continue;
      AntichainState c = augmentableClosure(a);
      AntichainState o = AntichainState::of(a);
      CHECK(isAntichain(c.antichain));
      CHECK(isSubfamily(a, c.antichain));
      CHECK(isAugmentable(c.antichain));
      CHECK(c.objective >= o.objective);
      CHECK(c.minLen == o.minLen);
      CHECK(c.maxLen == o.maxLen);
    }
}

TEST_CASE("augmentation maps") {
  GroundSet g(4);
  AntichainState empty = AntichainState::of(fam(4, {"{}"}));
  CHECK(empty.objective == 6);
  AntichainState up = augmentStep(empty, Direction::Up);
  CHECK(up.antichain == level(g, 1));
  CHECK(up.objective == 14);

  AntichainState mid = AntichainState::of(level(g, 2));
  CHECK(augmentStep(mid, Direction::Up).antichain == mid.antichain);
  CHECK(augmentStep(mid, Direction::Down).antichain == mid.antichain);

  CHECK_THROWS_AS(augmentStep(AntichainState::of(level(GroundSet(3), 1)), Direction::Up), Error);
  CHECK_THROWS_AS(augmentStep(AntichainState::of(fam(4, {"a"})), Direction::Up), Error);

  for (int n : {2, 4}) {
    for (const SetFamily& a : allAntichains(n)) {
      if (a.empty()) continue;
      AntichainState s = augmentableClosure(a);
      for (Direction d : {Direction::Up, Direction::Down}) {
        AntichainState t = augmentStep(s, d);
        CHECK(isAntichain(t.antichain));
        CHECK(t.objective >= s.objective);
        if (t.antichain == s.antichain) continue;
        if (d == Direction::Up) CHECK(t.minLen > s.minLen);
        else CHECK(t.maxLen < s.maxLen);
      }
    }
  }
}

TEST_CASE("maximizing the objective") {
  MaximizeRun four = maximizeObjective(4);
  CHECK(four.best.objective == 16);
  CHECK(four.bound == 16);
  CHECK(maximizeObjective(3).best.objective == 9);
  CHECK(maximizeObjective(3).best.antichain == level(GroundSet(3), 1));
  CHECK(maximizeObjective(2).best.objective == 5);
  MaximizeRun six = maximizeObjective(6);
  CHECK(six.best.objective == 55);
  CHECK(six.best.antichain == level(GroundSet(6), 3));
  CHECK_THROWS_AS(maximizeObjective(1), Error);
  CHECK_THROWS_AS(maximizeObjective(9), Error);

  for (int n : {2, 4, 6, 8}) {
    MaximizeRun r = maximizeObjective(n);
    CHECK(2 * r.fixpoint.maxLen <= n);
    CHECK(2 * r.fixpoint.minLen >= n - 2);
    CHECK(static_cast<std::uint64_t>(r.fixpoint.objective) <= r.bound);
    for (const AugmentRecord& step : r.steps) {
      CHECK(isAntichain(step.after.antichain));
      CHECK(step.after.objective >= step.before.objective);
    }
  }
}

TEST_CASE("symmetric chain decomposition") {
  SymmetricChainDecomposition two = symmetricChains(2);
  REQUIRE(two.chains.size() == 2);
  CHECK(two.chains[0] == std::vector<Mask>{0b00, 0b01, 0b11});
  CHECK(two.chains[1] == std::vector<Mask>{0b10});
  CHECK(specular(two, 0b10) == 0b10);

  SymmetricChainDecomposition three = symmetricChains(3);
  std::multiset<std::size_t> sizes;
  for (const auto& c : three.chains) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 4});

  SymmetricChainDecomposition four = symmetricChains(4);
  for (Mask z = 0; z < 16; ++z)
    if (cardinality(z) == 1) {
      CHECK(cardinality(specular(four, z)) == 3);
      CHECK(isSubset(z, specular(four, z)));
    }

  for (int n = 1; n <= 10; ++n) {
    SymmetricChainDecomposition d = symmetricChains(n);
    std::vector<int> seen(std::size_t{1} << n, 0);
    for (const auto& c : d.chains) {
      CHECK(cardinality(c.front()) + cardinality(c.back()) == n);
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        CHECK(isProperSubset(c[i], c[i + 1]));
        CHECK(cardinality(c[i + 1]) == cardinality(c[i]) + 1);
      }
      for (Mask z : c) ++seen[z];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    for (Mask z = 0; z < (Mask{1} << n); ++z) {
      Mask s = specular(d, z);
      CHECK(cardinality(z) + cardinality(s) == n);
      CHECK(specular(d, s) == z);
      if (2 * cardinality(z) < n) CHECK(isProperSubset(z, s));
    }
  }
}
