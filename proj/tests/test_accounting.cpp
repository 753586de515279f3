#include <doctest.h>

#include <map>

#include "support.hpp"
#include "uclab/accounting.hpp"
#include "uclab/harness.hpp"
#include "uclab/setfam.hpp"

using namespace uclab;
using namespace uclab::test;

namespace {

const SetFamily kExample = fam(3, {"a", "abc"});

// sigma/pi per element straight from the definitions over a simulated run.
struct OracleAccounts {
  std::vector<std::set<Mask>> sigma, pi;
  std::map<Mask, Mask> pre;  // image member -> input member
};

OracleAccounts oracleAccounts(const SetFamily& f, const std::vector<int>& word) {
  std::vector<Mask> members(f.begin(), f.end());
  std::vector<Mask> img = oracleRise(members, word);
  std::set<Mask> image(img.begin(), img.end());
  OracleAccounts out{std::vector<std::set<Mask>>(f.n()), std::vector<std::set<Mask>>(f.n()), {}};
  for (std::size_t i = 0; i < img.size(); ++i) out.pre[img[i]] = members[i];
  for (int a = 0; a < f.n(); ++a) {
    const Mask b = Mask{1} << a;
    for (std::size_t i = 0; i < img.size(); ++i) {
      if ((img[i] & b) && !(members[i] & b)) out.sigma[a].insert(img[i]);
      if ((members[i] & b) && !image.count(img[i] & ~b)) out.pi[a].insert(img[i]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("S and P counts") {
  GroundSet g(3);
  SetFamily big = atLeast(g, 2);
  SPCounts a = spCounts(big, 0);
  CHECK(a.S.empty());
  CHECK(asSet(a.P) == masks(g, {"ab", "ac"}));
  CHECK(a.withCount == 3);
  CHECK(a.withoutCount == 1);
  CHECK(a.identityHolds());

  SPCounts top = spCounts(fam(3, {"abc"}), 1);
  CHECK(top.S.empty());
  CHECK(asSet(top.P) == masks(g, {"abc"}));

  SPCounts b = spCounts(kExample, 1);
  CHECK(asSet(b.S) == masks(g, {"a"}));
  CHECK(asSet(b.P) == masks(g, {"abc"}));
  CHECK(b.identityHolds());
  CHECK_THROWS_AS(spCounts(kExample, 3), Error);
}

TEST_CASE("S and P identity for every family on n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const SetFamily& h : allFamilies(n)) {
      std::set<Mask> hs = asSet(h);
      for (int a = 0; a < n; ++a) {
        const Mask b = Mask{1} << a;
        long with = 0, without = 0, s = 0, p = 0;
        for (Mask z : hs) {
          (z & b ? with : without) += 1;
          if (!hs.count(z | b)) ++s;
          if ((z & b) && !hs.count(z & ~b)) ++p;
        }
        SPCounts r = spCounts(h, a);
        CHECK(static_cast<long>(r.S.size()) == s);
        CHECK(static_cast<long>(r.P.size()) == p);
        CHECK(with - without == p - s);
        CHECK(r.identityHolds());
      }
    }
}

TEST_CASE("rising accounts of the worked example") {
  const GroundSet& g = kExample.ground();
  RisingAccounts acc = risingAccounts(kExample, Word::parse(g, "abc"));
  CHECK(acc.sigmaByElement[0].empty());
  CHECK(asSet(acc.sigmaByElement[1]) == masks(g, {"ab"}));
  CHECK(acc.sigmaByElement[2].empty());
  CHECK(asSet(acc.piByElement[0]) == masks(g, {"ab", "abc"}));
  CHECK(asSet(acc.piByElement[1]) == masks(g, {"abc"}));
  CHECK(acc.piByElement[2].empty());
  CHECK(acc.sigmaAt(m(g, "ab")) == m(g, "b"));
  CHECK(acc.piAt(m(g, "ab")) == m(g, "a"));
  CHECK(acc.piAt(m(g, "abc")) == m(g, "ab"));
  CHECK(acc.checks.ok());

  // |C_b| = |C_b̄| + |pi(b)| + |sigma(b)|: 2 = 0 + 1 + 1
  const SetFamily& img = acc.transcript.image();
  CHECK(img.withElement(1).size() == 2);
  CHECK(img.withoutElement(1).size() == 0);

  CHECK_THROWS_AS(risingAccounts(fam(2, {"a", "b"}), Word::identity(2)), Error);
}

TEST_CASE("upward-closed families have no spurious elements") {
  SetFamily up = upset(fam(4, {"ab", "c"}));
  std::set<Mask> ups = asSet(up);
  for (const Word& w : allWords(4)) {
    RisingAccounts acc = risingAccounts(up, w);
    for (int a = 0; a < 4; ++a) {
      CHECK(acc.sigmaByElement[a].empty());
      std::set<Mask> expect;
      for (Mask x : up)
        if (contains(x, a) && !ups.count(x & ~bit(a))) expect.insert(x);
      CHECK(asSet(acc.piByElement[a]) == expect);
    }
  }
}

TEST_CASE("rising accounts match the definitions for every union-closed family on n <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const SetFamily& f : enumerateUnionClosed(n))
      for (const auto& p : permutations(n)) {
        RisingAccounts acc = risingAccounts(f, Word(p));
        OracleAccounts o = oracleAccounts(f, p);
        for (int a = 0; a < n; ++a) {
          REQUIRE(asSet(acc.sigmaByElement[a]) == o.sigma[a]);
          REQUIRE(asSet(acc.piByElement[a]) == o.pi[a]);
        }
        for (auto [eta, pre] : o.pre) CHECK(acc.sigmaAt(eta) == (eta & ~pre));
        CHECK(acc.checks.ok());
        CHECK(localCharacterization(f, Word(p)).ok());
        CHECK(pureLowerBound(f, Word(p)).checks.ok());
      }
}

TEST_CASE("pure lower bound") {
  const GroundSet& g = kExample.ground();
  PureLowerBound r = pureLowerBound(kExample, Word::parse(g, "abc"));
  CHECK(asSet(r.byElement[0]) == masks(g, {"ab", "abc"}));
  CHECK(r.checks.ok());

  SetFamily up = upset(fam(3, {"ab"}));
  PureLowerBound u = pureLowerBound(up, Word::identity(3));
  CHECK(u.byElement[0].contains(m(g, "ab")));
  CHECK(u.checks.ok());
}

TEST_CASE("hyper accounts of the worked example") {
  const GroundSet& g = kExample.ground();
  HyperAccounts h = hyperAccounts(kExample);
  CHECK(h.sigmaAt(m(g, "a")) == 0);
  CHECK(h.sigmaAt(m(g, "abc")) == 0);
  for (int a = 0; a < 3; ++a) CHECK(h.sigmaByElement[a].empty());
  CHECK(asSet(h.piByElement[0]) == masks(g, {"a", "abc"}));
  CHECK(h.piByElement[1].empty());
  CHECK(h.piByElement[2].empty());
  CHECK(asSet(h.cov(1, m(g, "a"))) == masks(g, {"abc"}));
  CHECK(asSet(h.cov(2, m(g, "a"))) == masks(g, {"abc"}));
  CHECK(h.checks.ok());
}

TEST_CASE("hyper sets are the meets over all words") {
  for (int n = 1; n <= 4; ++n)
    for (const SetFamily& f : enumerateUnionClosed(n)) {
      std::vector<Mask> members(f.begin(), f.end());
      std::vector<Mask> sigma(members.size(), f.ground().full()), pi(members.size(), f.ground().full());
      for (const auto& p : permutations(n)) {
        std::vector<Mask> img = oracleRise(members, p);
        std::set<Mask> image(img.begin(), img.end());
        for (std::size_t i = 0; i < members.size(); ++i) {
          sigma[i] &= img[i] & ~members[i];
          Mask localPi = 0;
          for (int a = 0; a < n; ++a)
            if (contains(members[i], a) && !image.count(img[i] & ~bit(a))) localPi |= bit(a);
          pi[i] &= localPi;
        }
      }
      HyperAccounts h = hyperAccounts(f);
      for (std::size_t i = 0; i < members.size(); ++i) {
        REQUIRE(h.sigmaAt(members[i]) == sigma[i]);
        REQUIRE(h.piAt(members[i]) == pi[i]);
      }
      // Cov_a(g) by its definition.
      std::set<Mask> fs = asSet(f);
      for (int a = 0; a < n; ++a)
        for (Mask x : members) {
          std::set<Mask> cov;
          for (Mask y : members)
            if (contains(y, a) && oracleStar(fs, y & ~bit(a)) == x) cov.insert(y);
          CHECK(asSet(h.cov(a, x)) == cov);
        }
      CHECK(h.checks.ok());
      if (n <= 3) CHECK(coveringEquivalences(f).ok());
    }
}

TEST_CASE("covering equivalences") {
  CHECK(coveringEquivalences(kExample).ok());
  CHECK(coveringEquivalences(fam(3, {"abc"})).ok());
  for (const SetFamily& f : sampleUnionClosed(4, 40, 11)) CHECK(coveringEquivalences(f).ok());
}

TEST_CASE("spurious monotonicity witness") {
  const GroundSet& g = kExample.ground();
  Word w = spuriousMonotonicity(kExample, m(g, "a"), m(g, "abc"));
  CHECK(w.size() == 3);
  CHECK_THROWS_AS(spuriousMonotonicity(kExample, m(g, "abc"), m(g, "a")), Error);
  CHECK_THROWS_AS(spuriousMonotonicity(kExample, m(g, "b"), m(g, "abc")), Error);

  // The witness satisfies the inclusion; some word does too, by brute force.
  for (const SetFamily& f : enumerateUnionClosed(3)) {
    std::vector<Mask> members(f.begin(), f.end());
    for (Mask lo : members)
      for (Mask hi : members) {
        if (!isSubset(lo, hi)) continue;
        Word wit = spuriousMonotonicity(f, lo, hi);
        std::vector<Mask> img = oracleRise(members, wit.order());
        Mask sigLo = 0, sigHi = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (members[i] == lo) sigLo = img[i] & ~lo;
          if (members[i] == hi) sigHi = img[i] & ~hi;
        }
        CHECK(isSubset(sigHi, sigLo));
      }
  }
}
