#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "uclab/bounds.hpp"
#include "uclab/harness.hpp"
#include "uclab/setfam.hpp"

using namespace uclab;
using namespace uclab::test;

namespace {

const SetFamily kExample = fam(3, {"a", "abc"});
const SetFamily kChain = fam(3, {"a", "ab", "abc"});

}  // namespace

TEST_CASE("Frankl witness") {
  CHECK(franklWitness(kExample) == 0);
  CHECK(franklWitness(fam(3, {"abc"})) == 0);
  CHECK(franklWitness(atLeast(GroundSet(3), 2)) == 0);
  CHECK(franklWitness(fam(3, {"b", "bc"})) == 1);
  CHECK_THROWS_AS(franklWitness(fam(3, {"{}"})), Error);
  CHECK_THROWS_AS(franklWitness(SetFamily(GroundSet(3))), Error);
  CHECK_THROWS_AS(franklWitness(fam(3, {"a", "b"})), Error);
}

TEST_CASE("exact comparison with log2") {
  // Ties: log2 of powers of two.
  CHECK(compareWithLog2(3, 8, 1) == 0);
  CHECK(compareWithLog2(3, 24, 3) == 0);
  CHECK(compareWithLog2(0, 5, 5) == 0);
  CHECK(compareWithLog2(Rational(1, 2), 2, 1) == -1);
  CHECK(compareWithLog2(Rational(3, 2), 2, 1) == 1);
  CHECK(compareWithLog2(Rational(3, 2), 8, 1) == -1);
  CHECK(compareWithLog2(-1, 1, 1) == -1);
  // log2(3) = 1.58496...
  CHECK(compareWithLog2(Rational(158, 100), 3, 1) == -1);
  CHECK(compareWithLog2(Rational(159, 100), 3, 1) == 1);
  CHECK_THROWS_AS(compareWithLog2(1, 1, 2), Error);

  // Against floating point wherever the gap is clear.
  for (int p = -6; p <= 24; ++p)
    for (int q = 1; q <= 6; ++q)
      for (std::uint64_t den = 1; den <= 5; ++den)
        for (std::uint64_t num = den; num <= 40; ++num) {
          const double gap = static_cast<double>(p) / q - std::log2(static_cast<double>(num) / den);
          if (std::abs(gap) < 1e-9) continue;
          CHECK(compareWithLog2(Rational(p, q), num, den) == (gap > 0 ? 1 : -1));
        }
}

TEST_CASE("LogBound ordering") {
  LogBound b{Rational(3), 4, 1};  // 3 - 1 = 2
  CHECK(b.compare(2) == 0);
  CHECK(b.compare(Rational(19, 10)) == 1);
  CHECK(b.compare(Rational(21, 10)) == -1);
  CHECK(b.approx() == doctest::Approx(2.0));
}

TEST_CASE("average report of the worked example") {
  const GroundSet& g = kExample.ground();
  AverageReport r = averageReport(kExample, minimal(kExample), Word::parse(g, "abc"));
  CHECK(r.idealSize == 2);
  CHECK(r.lengthSum == 4);
  CHECK(r.average() == 2);
  CHECK(r.piCount == 3);
  CHECK(r.sigmaCount == 1);
  CHECK(r.boundLocal == 2);
  CHECK(r.boundHyper == 2);
  CHECK(r.upsetSize == 4);
  // 3/2 + 3/4 - (1/2) log2(4/2) = 7/4
  CHECK(r.boundGeneral.base == Rational(9, 4));
  CHECK(r.boundGeneral.compare(Rational(7, 4)) == 0);
  CHECK(r.checks.ok());
  CHECK_FALSE(r.boundMaxAntichain.has_value());
  CHECK(reimerHolds(kExample));

  CHECK_THROWS_AS(averageReport(kExample, fam(3, {"b"}), Word::identity(3)), Error);
  CHECK_THROWS_AS(averageReport(kExample, kExample, Word::identity(3)), Error);
}

TEST_CASE("local averaging is exact at min(F)") {
  // sum |f| = (n/2) N + (1/2) sum_a (|pi(a)| - |sigma(a)|), recomputed from a
  // simulated run.
  for (int n = 1; n <= 3; ++n)
    for (const SetFamily& f : enumerateUnionClosed(n)) {
      std::vector<Mask> members(f.begin(), f.end());
      for (const auto& p : permutations(n)) {
        std::vector<Mask> img = oracleRise(members, p);
        std::set<Mask> image(img.begin(), img.end());
        long pi = 0, sigma = 0, length = 0;
        for (std::size_t i = 0; i < img.size(); ++i) {
          length += cardinality(members[i]);
          for (int a = 0; a < n; ++a) {
            if (contains(img[i], a) && !contains(members[i], a)) ++sigma;
            if (contains(members[i], a) && !image.count(img[i] & ~bit(a))) ++pi;
          }
        }
        const long N = static_cast<long>(members.size());
        CHECK(2 * length == n * N + pi - sigma);
        AverageReport r = averageReport(f, minimal(f), Word(p));
        CHECK(r.boundLocal == r.average());
        CHECK(r.checks.ok());
      }
    }
}

TEST_CASE("bounds are attained for upward-closed families") {
  GroundSet g(4);
  for (const SetFamily& f : {atLeast(g, 2), upset(fam(4, {"ab", "cd"})), upset(fam(4, {"a", "bcd"}))}) {
    AverageReport r = averageReport(f, minimal(f), Word::identity(4));
    CHECK(r.boundGeneral.compare(r.average()) == 0);
    CHECK(r.boundHyper == r.average());
    CHECK(r.checks.ok());
  }
  AverageReport top = averageReport(fam(3, {"abc"}), fam(3, {"abc"}), Word::identity(3));
  CHECK(top.average() == 3);
  CHECK(top.boundHyper == 3);
}

TEST_CASE("maximal antichain bound") {
  // min(F) = all 2-subsets of n=3 is a maximal antichain with k = 2.
  SetFamily f = atLeast(GroundSet(3), 2);
  AverageReport r = averageReport(f, minimal(f), Word::identity(3));
  REQUIRE(r.boundMaxAntichain.has_value());
  CHECK(*r.boundMaxAntichain <= r.average());
  REQUIRE(r.boundMaxAntichainSearch.has_value());
  CHECK(*r.boundMaxAntichainSearch <= r.average());
  // With the empty set as the only minimal member the bound is not offered.
  SetFamily withEmpty = fam(4, {"{}", "abcd"});
  AverageReport e = averageReport(withEmpty, minimal(withEmpty), Word::identity(4));
  CHECK_FALSE(e.boundMaxAntichain.has_value());
  CHECK(e.checks.ok());
}

TEST_CASE("hyper average report") {
  HyperAverageReport h = hyperAverageReport(kExample, minimal(kExample));
  CHECK(h.hyperSigmaCount == 0);
  CHECK(h.hyperPiCount == 2);
  CHECK(h.boundHyper == 2);
  CHECK(h.average() == 2);
  CHECK(h.checks.ok());

  HyperAverageReport top = hyperAverageReport(fam(3, {"abc"}), fam(3, {"abc"}));
  CHECK(top.boundHyper == 3);
  CHECK(top.checks.ok());
}

TEST_CASE("Reimer's bound") {
  for (int n = 1; n <= 3; ++n)
    for (const SetFamily& f : enumerateUnionClosed(n)) {
      const double avg = static_cast<double>(f.lengthSum()) / static_cast<double>(f.size());
      const double half = 0.5 * std::log2(static_cast<double>(f.size()));
      if (std::abs(avg - half) > 1e-9) CHECK(reimerHolds(f) == (avg > half));
    }
  CHECK(reimerHolds(fam(2, {"{}", "a"})));  // 1/2 = (1/2) log2 2
}

TEST_CASE("removal trace of the worked example") {
  const GroundSet& g = kChain.ground();
  RemovalTrace t = removalTrace(kChain, m(g, "ab"), Word::parse(g, "abc"));
  CHECK(asSet(t.image) == masks(g, {"ab", "ac", "abc"}));
  CHECK(asSet(t.reducedImage) == masks(g, {"ab", "abc"}));
  REQUIRE(t.swapChain.size() == 2);
  CHECK(t.swapChain[0] == m(g, "ab"));
  CHECK(t.swapChain[1] == m(g, "a"));
  // phi'_1(a) + b = ab = phi_1(ab): the swap happens at step 2.
  CHECK(t.swapIndices == std::vector<int>{2});
  CHECK(t.missingElements.back() == m(g, "ac"));
  REQUIRE(t.caseTag.has_value());
  CHECK(*t.caseTag == SwapCase::BarSwap);
  CHECK(t.checks.ok());

  RemovalTrace top = removalTrace(kChain, m(g, "a"), Word::parse(g, "abc"));
  CHECK(top.checks.ok());

  CHECK_THROWS_AS(removalTrace(kChain, m(g, "b"), Word::identity(3)), Error);
  CHECK_THROWS_AS(removalTrace(fam(3, {"a"}), m(g, "a"), Word::identity(3)), Error);
}

TEST_CASE("removal images differ by one minimal member") {
  for (const SetFamily& f : allFamilies(3)) {
    if (f.size() < 2) continue;
    std::vector<Mask> members(f.begin(), f.end());
    for (const auto& p : permutations(3))
      for (Mask x : members) {
        std::vector<Mask> rest;
        for (Mask y : members)
          if (y != x) rest.push_back(y);
        std::vector<Mask> a = oracleRise(members, p), b = oracleRise(rest, p);
        std::set<Mask> sa(a.begin(), a.end()), sb(b.begin(), b.end());
        RemovalTrace t = removalTrace(f, x, Word(p));
        REQUIRE(asSet(t.image) == sa);
        REQUIRE(asSet(t.reducedImage) == sb);
        std::set<Mask> gone;
        std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(gone, gone.end()));
        REQUIRE(gone.size() == 1);
        CHECK(oracleMinimal(sa).count(*gone.begin()));
        CHECK(t.missingElements.back() == *gone.begin());
        CHECK(t.checks.ok());
      }
  }
}

TEST_CASE("irreducible members keep swap chains short") {
  for (int n = 1; n <= 4; ++n)
    for (const SetFamily& f : enumerateUnionClosed(n)) {
      if (f.size() < 2) continue;
      SetFamily j = joinIrreducibles(f);
      for (const Word& w : n <= 3 ? allWords(n) : std::vector<Word>{Word::identity(n)})
        for (Mask x : j) {
          RemovalTrace t = removalTrace(f, x, w);
          CHECK(t.swapChain.size() <= 2);
          REQUIRE(t.caseTag.has_value());
          CHECK((*t.caseTag == SwapCase::NoSwap) == (t.swapChain.size() == 1));
          CHECK(t.checks.ok());
        }
    }
}

TEST_CASE("irreducible bound") {
  const GroundSet& g = kChain.ground();
  IrreducibleBoundReport r = irreducibleBound(kChain, Word::parse(g, "abc"));
  CHECK(r.jCount == 3);
  CHECK(r.minImage == 2);
  CHECK(r.secondLevel == 1);
  CHECK(r.imageBound == 5);
  CHECK(r.spernerBound == 9);
  CHECK(r.checks.ok());

  SetFamily big = atLeast(GroundSet(4), 2);
  IrreducibleBoundReport b = irreducibleBound(big, Word::identity(4));
  CHECK(b.jCount == choose(4, 2));
  CHECK(b.imageBound <= 16);
  CHECK(b.jCount <= b.imageBound);
  CHECK(b.spernerBound == 16);

  IrreducibleBoundReport top = irreducibleBound(fam(3, {"abc"}), Word::identity(3));
  CHECK(top.jCount == 1);
  CHECK(top.checks.ok());
  CHECK_THROWS_AS(irreducibleBound(fam(2, {"a", "b"}), Word::identity(2)), Error);
}

TEST_CASE("middle-level bound") {
  for (int n = 1; n <= 12; ++n)
    CHECK(spernerBound(n) == 2 * choose(n, n / 2) + choose(n, n / 2 + 1));
  CHECK(spernerBound(3) == 9);
  CHECK(spernerBound(4) == 16);
  CHECK(spernerBound(6) == 55);
}
