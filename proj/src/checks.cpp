#include "checks.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "uclab/accounting.hpp"
#include "uclab/antichain.hpp"
#include "uclab/bounds.hpp"
#include "uclab/harness.hpp"
#include "uclab/rising.hpp"
#include "uclab/setfam.hpp"

namespace uclab::detail {

namespace {

using Failure = std::optional<std::string>;
using WordFn = std::function<Failure(const SetFamily&, const Word&)>;
using FamilyFn = std::function<Failure(const SetFamily&)>;

std::string fmt(const SetFamily& f, Mask m) { return f.ground().formatCompact(m); }

// Runs fn for each supplied word and reports the first failing word.
std::function<Outcome(const SetFamily&, std::span<const Word>)> perWord(WordFn fn) {
  return [fn = std::move(fn)](const SetFamily& f, std::span<const Word> words) {
    for (const Word& w : words)
      if (Failure e = fn(f, w)) return Outcome{Status::Fail, w, *e};
    return Outcome{};
  };
}

std::function<Outcome(const SetFamily&, std::span<const Word>)> perFamily(FamilyFn fn) {
  return [fn = std::move(fn)](const SetFamily& f, std::span<const Word>) {
    if (Failure e = fn(f)) return Outcome{Status::Fail, std::nullopt, *e};
    return Outcome{};
  };
}

Failure fromReport(const AssertionReport& r) {
  for (const IdentityCheck& c : r.checks)
    if (!c.holds) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return std::nullopt;
}

std::uint64_t familyHash(const SetFamily& f) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(f.n()));
  for (Mask m : f) mix(m);
  return h;
}

// min(F) followed by five antichains drawn from a family-derived seed.
std::vector<SetFamily> localizers(const SetFamily& f) {
  std::vector<SetFamily> out{minimal(f)};
  Rng rng(familyHash(f));
  for (int i = 0; i < 5; ++i) out.push_back(randomAntichainWithin(f, rng));
  return out;
}

// Images of every member under every word: images[i] = distinct phi(f[i]).
std::vector<std::set<Mask>> orbitImages(const SetFamily& f) {
  std::vector<std::set<Mask>> images(f.size());
  for (const Word& w : allWords(f.n())) {
    RisingTranscript t = rise(f, w);
    for (std::size_t i = 0; i < f.size(); ++i) images[i].insert(t.forwardAt(i));
  }
  return images;
}

Failure riseBasic(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  const int n = f.n();
  if (static_cast<int>(t.sections().size()) != n + 1) return "wrong number of sections";
  if (!(t.sections()[0] == f)) return "first section differs from the input";
  for (const SetFamily& s : t.sections())
    if (s.size() != f.size()) return "a rising step was not injective";
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto traj = t.trajectory(i);
    for (int s = 0; s < n; ++s) {
      if (!isSubset(traj[s], traj[s + 1]) || !isSubset(traj[s + 1] & ~traj[s], bit(w.at(s))))
        return "trajectory of " + fmt(f, f[i]) + " breaks at step " + std::to_string(s + 1);
    }
  }
  if (!isUpwardClosed(t.image())) return "image is not upward-closed";
  for (Mask g : f)
    if (t.inverse(t.forward(g)) != g) return "forward map is not injective at " + fmt(f, g);
  if (isUpwardClosed(f))
    for (Mask g : f)
      if (t.forward(g) != g) return "upward-closed family moved at " + fmt(f, g);
  return std::nullopt;
}

Failure riseMatching(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  for (int i = 0; i < f.n(); ++i) {
    const Mask b = bit(w.at(i));
    std::map<Mask, std::size_t> at;
    for (std::size_t x = 0; x < f.size(); ++x) at.emplace(t.trajectory(x)[i], x);
    for (std::size_t x = 0; x < f.size(); ++x) {
      const Mask zi = t.trajectory(x)[i];
      if (!(zi & b)) continue;
      auto it = at.find(zi & ~b);
      if (it == at.end()) continue;
      const Mask other = f[it->second];
      if (!(f[x] & b) || (t.forwardAt(it->second) & b))
        return "step " + std::to_string(i + 1) + ": " + fmt(f, f[x]) + " over " + fmt(f, other);
    }
  }
  return std::nullopt;
}

Failure riseSections(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  for (std::size_t i = 0; i < t.sections().size(); ++i) {
    const SetFamily& s = t.sections()[i];
    if (!isUnionClosed(s)) return "section " + std::to_string(i) + " is not union-closed";
    MembershipTable table(s);
    for (Mask x : s)
      for (Mask g : f)
        if (!table.test(x | g))
          return "section " + std::to_string(i) + " misses " + fmt(f, x) + " ∪ " + fmt(f, g);
  }
  return std::nullopt;
}

Failure riseInverse(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  StarOperator st(f);
  for (Mask eta : t.image())
    if (st(eta) != *t.inverse(eta)) return "star of " + fmt(f, eta) + " is not its preimage";
  return std::nullopt;
}

Failure riseIdeal(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  for (Mask g : f) {
    SetFamily principal = ideal(f, SetFamily(f.ground(), {g}));
    SetFamily above = t.image().filter([g](Mask eta) { return isSubset(g, eta); });
    if (!(t.forwardImage(principal) == above)) return "ideal of " + fmt(f, g) + " not preserved";
  }
  return std::nullopt;
}

Failure riseFixed(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  for (Mask g : f) {
    bool closedUp = true;
    for (int a = 0; a < f.n(); ++a)
      if (!contains(g, a) && !f.contains(g | bit(a))) closedUp = false;
    if ((t.forward(g) == g) != closedUp) return "fixed-point test fails at " + fmt(f, g);
  }
  return std::nullopt;
}

Failure riseEmbedding(const SetFamily& f, const Word& w) {
  RisingTranscript t = rise(f, w);
  for (int a = 0; a < f.n(); ++a) {
    SetFamily target = t.forwardImage(f.withElement(a));
    for (Mask eta : t.image())
      if (!contains(eta, a) && !target.contains(eta | bit(a)))
        return fmt(f, eta) + " + " + f.ground().label(a) + " is not an image of F_a";
  }
  return std::nullopt;
}

Failure riseInterval(const SetFamily& f) {
  auto images = orbitImages(f);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (Mask x : images[i])
        for (Mask y : images[j])
          if (isSubset(f[i] | f[j], x & y))
            return "intervals of " + fmt(f, f[i]) + " and " + fmt(f, f[j]) + " meet";
  return std::nullopt;
}

Failure orbitTheorem(const SetFamily& f) {
  auto images = orbitImages(f);
  auto fibers = allFibers(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Mask> orbit(images[i].begin(), images[i].end());
    if (!(SetFamily::fromCanonical(f.ground(), orbit) == fibers[i].maxFiber))
      return "orbit of " + fmt(f, f[i]) + " differs from its maximal fiber";
  }
  return std::nullopt;
}

Failure fiberPartition(const SetFamily& f) {
  auto images = orbitImages(f);
  auto fibers = allFibers(f);
  std::vector<Mask> all;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::vector<Mask> intervals;
    for (Mask top : images[i])
      for (Mask z = top;; z = (z - 1) & top) {
        if (isSubset(f[i], z)) intervals.push_back(z);
        if (z == 0) break;
      }
    if (!(SetFamily(f.ground(), intervals) == fibers[i].fiber))
      return "fiber of " + fmt(f, f[i]) + " is not the union of its orbit intervals";
    all.insert(all.end(), fibers[i].fiber.begin(), fibers[i].fiber.end());
  }
  const std::size_t total = all.size();
  SetFamily joined(f.ground(), std::move(all));
  if (joined.size() != total) return "fibers overlap";
  if (!(joined == upset(minimal(f)))) return "fibers do not cover upset(min F)";
  return std::nullopt;
}

Failure invariantRoutes(const SetFamily& f) {
  InvariantFamily a = invariantFamily(f);
  InvariantFamily b = invariantFamilyAllWords(f);
  if (!(a.family == b.family) || a.orbitIndex != b.orbitIndex) return "fiber and word routes differ";
  if (!isUpwardClosed(a.family)) return "invariant family is not upward-closed";
  if (!isSubfamily(a.family, upset(minimal(f)))) return "invariant family leaves upset(min F)";
  const int n = f.n();
  std::uint64_t upper = 0;
  for (int i = a.rank; i <= n; ++i) upper += binomial(n, i);
  if ((std::uint64_t{1} << (n - a.rank)) > f.size() || f.size() > upper)
    return "rank bounds fail with rank " + std::to_string(a.rank);
  return std::nullopt;
}

Failure burnside(const SetFamily& f) {
  BurnsideReport r = burnsideReport(f);
  if (r.orbitCount != f.size()) return "orbit count " + std::to_string(r.orbitCount);
  if (r.wordStabilizerSum != f.size() * factorial(f.n()))
    return "stabilizer sum " + std::to_string(r.wordStabilizerSum);
  if (r.inequalityLHS > 1) return "inequality left side " + formatRational(r.inequalityLHS);
  return std::nullopt;
}

Failure wordsRealizingCheck(const SetFamily& f) {
  const int n = f.n();
  auto fibers = allFibers(f);
  std::vector<Word> words = allWords(n);
  std::vector<RisingTranscript> runs;
  for (const Word& w : words) runs.push_back(rise(f, w));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (Mask eta : fibers[i].maxFiber) {
      const Mask gap = eta & ~f[i];
      const int d = cardinality(gap);
      std::uint64_t count = 0;
      for (std::size_t k = 0; k < words.size(); ++k) {
        bool hit = runs[k].forwardAt(i) == eta;
        count += hit;
        Mask prefix = 0;
        for (int j = 0; j < d; ++j) prefix |= bit(words[k].at(j));
        if (prefix == gap && !hit)
          return "word " + words[k].format(f.ground()) + " has prefix " + fmt(f, gap) +
                 " but misses " + fmt(f, eta);
      }
      if (count < factorial(d) * factorial(n - d))
        return "too few words reach " + fmt(f, eta) + " from " + fmt(f, f[i]);
    }
  }
  return std::nullopt;
}

Failure unionClosedCriterion(const SetFamily& h) {
  StarOperator st = StarOperator::unchecked(h);
  bool maps = true;
  for (Mask z : upset(minimal(h)))
    if (!h.contains(st(z))) maps = false;
  if (maps != isUnionClosed(h)) return "star criterion disagrees with union-closedness";
  return std::nullopt;
}

Failure spIdentity(const SetFamily& h) {
  for (int a = 0; a < h.n(); ++a) {
    SPCounts sp = spCounts(h, a);
    if (!sp.identityHolds()) return "identity fails for element " + h.ground().label(a);
    if (!isSubfamily(minimal(h).withElement(a), sp.P)) return "min(H)_a not inside P";
  }
  return std::nullopt;
}

Failure hyperIdentities(const SetFamily& f) {
  HyperAccounts h = hyperAccounts(f);
  const Mask full = f.ground().full();
  std::vector<Mask> sigma(f.size(), full), pi(f.size(), full);
  for (const Word& w : allWords(f.n())) {
    RisingAccounts acc = risingAccounts(f, w);
    for (std::size_t i = 0; i < f.size(); ++i) {
      Mask eta = acc.transcript.forwardAt(i);
      sigma[i] &= acc.sigmaAt(eta);
      pi[i] &= acc.piAt(eta);
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sigma[i] != h.sigmaLocal[i])
      return "Sigma(" + fmt(f, f[i]) + ") = " + fmt(f, h.sigmaLocal[i]) + " but word meet is " +
             fmt(f, sigma[i]);
    if (pi[i] != h.piLocal[i])
      return "Pi(" + fmt(f, f[i]) + ") = " + fmt(f, h.piLocal[i]) + " but word meet is " +
             fmt(f, pi[i]);
  }
  return std::nullopt;
}

Failure spuriousCheck(const SetFamily& f) {
  for (Mask lo : f)
    for (Mask hi : f) {
      if (!isSubset(lo, hi)) continue;
      Word w = spuriousMonotonicity(f, lo, hi);
      RisingTranscript t = rise(f, w);
      if (!isSubset(t.forward(hi) & ~hi, t.forward(lo) & ~lo))
        return "witness for " + fmt(f, lo) + " ⊆ " + fmt(f, hi) + " fails";
    }
  return std::nullopt;
}

Failure averageBounds(const SetFamily& f, const Word& w) {
  for (const SetFamily& s : localizers(f)) {
    AverageReport r = averageReport(f, s, w);
    if (Failure e = fromReport(r.checks)) {
      std::string loc;
      for (Mask m : s) loc += (loc.empty() ? "" : " ") + fmt(f, m);
      return "localizer {" + loc + "}: " + *e;
    }
  }
  return std::nullopt;
}

Failure hyperAverage(const SetFamily& f) {
  for (const SetFamily& s : localizers(f)) {
    HyperAverageReport r = hyperAverageReport(f, s);
    if (Failure e = fromReport(r.checks)) {
      std::string loc;
      for (Mask m : s) loc += (loc.empty() ? "" : " ") + fmt(f, m);
      return "localizer {" + loc + "}: " + *e;
    }
  }
  return std::nullopt;
}

Failure removal(const SetFamily& f, const Word& w) {
  if (f.size() < 2) return std::nullopt;
  for (Mask m : f) {
    RemovalTrace tr = removalTrace(f, m, w);
    if (Failure e = fromReport(tr.checks)) return "removing " + fmt(f, m) + ": " + *e;
  }
  return std::nullopt;
}

// The swap can land on the last letter, e.g. F = {a, ab}, m = ab, w = ab.
Outcome swapLastStep(const SetFamily& f, std::span<const Word> words) {
  if (f.size() < 2) return {};
  for (const Word& w : words)
    for (Mask m : f) {
      RemovalTrace tr = removalTrace(f, m, w);
      if (!tr.swapIndices.empty() && tr.swapIndices.back() == f.n())
        return {Status::Finding, w, "removing " + fmt(f, m) + " swaps at the last step"};
    }
  return {};
}

Outcome frankl(const SetFamily& f, std::span<const Word>) {
  if (f.size() == 1 && f[0] == 0) return {Status::Skip, std::nullopt, {}};
  if (franklWitness(f)) return {};
  return {Status::Finding, std::nullopt, "no element lies in half of the members"};
}

Failure antichainBound(const SetFamily& a) {
  AntichainState s = AntichainState::of(a);
  if (static_cast<std::uint64_t>(s.objective) > spernerBound(a.n()))
    return "objective " + std::to_string(s.objective);
  return std::nullopt;
}

Failure antichainFoils(const SetFamily& a) {
  SetFamily nab = shade(a);
  SetFamily bar = firstUpwardLevel(a);
  if (!isSubfamily(bar, nab)) return "first upward level leaves the shade";
  for (Mask g : nab) {
    bool below = std::any_of(nab.begin(), nab.end(), [g](Mask x) { return isProperSubset(x, g); });
    if (below == bar.contains(g)) return "minimality test fails at " + fmt(a, g);
  }
  std::vector<Mask> all;
  for (const SetFamily& foil : foils(a)) all.insert(all.end(), foil.begin(), foil.end());
  if (!(SetFamily(a.ground(), all) == upset(a))) return "foils do not partition the upset";
  if (!(minimal(familyDifference(upset(a), a)) == bar)) return "first upward level differs from min(upset \\ A)";

  AntichainState s = AntichainState::of(a);
  for (Mask h : levelOf(a, s.minLen))
    for (int i = 0; i < a.n(); ++i)
      if (!contains(h, i) && !bar.contains(h | bit(i)))
        return "minimum-level member " + fmt(a, h) + " lifts outside the first upward level";
  AntichainState c = augmentableClosure(a);
  if (!isAntichain(c.antichain) || !isSubfamily(a, c.antichain)) return "closure broke the antichain";
  if (!isAugmentable(c.antichain)) return "closure is not augmentable";
  if (c.minLen != s.minLen || c.maxLen != s.maxLen) return "closure moved the levels";
  if (c.objective < s.objective) return "closure lowered the objective";
  return std::nullopt;
}

Failure antichainAugment(const SetFamily& a) {
  if (a.n() % 2 != 0) return std::nullopt;
  AntichainState s = augmentableClosure(a);
  for (Direction d : {Direction::Up, Direction::Down}) {
    AntichainState t = augmentStep(s, d);
    const char* name = d == Direction::Up ? "up" : "down";
    if (!isAntichain(t.antichain)) return std::string(name) + " step broke the antichain";
    if (t.objective < s.objective) return std::string(name) + " step lowered the objective";
    if (t.antichain == s.antichain) continue;
    if (d == Direction::Up && t.minLen <= s.minLen) return "up step did not raise the bottom level";
    if (d == Direction::Down && t.maxLen >= s.maxLen) return "down step did not lower the top level";
  }
  return std::nullopt;
}

std::vector<Check> buildRegistry() {
  using D = Domain;
  std::vector<Check> r;
  auto add = [&r](std::string id, std::string desc, D domain, int maxN, WordUse use, auto fn) {
    r.push_back({std::move(id), std::move(desc), domain, maxN, use, std::move(fn)});
  };
  add("setfam-closure", "closure is union-closed, contains its generators, is idempotent", D::Any, 16, WordUse::None,
      perFamily([](const SetFamily& f) -> Failure {
        SetFamily c = closeUnderUnion(f);
        if (!isUnionClosed(c) || !isSubfamily(f, c)) return "closure is not a union-closed superfamily";
        if (!(closeUnderUnion(c) == c)) return "closure is not idempotent";
        if (isUnionClosed(f) && !(c == f)) return "closure moved a union-closed family";
        return std::nullopt;
      }));
  add("setfam-order", "extremes are antichains, upsets are upward-closed, ideal(F, min F) = F",
      D::Any, 8, WordUse::None, perFamily([](const SetFamily& f) -> Failure {
        Extremes e = extremes(f);
        if (!isAntichain(e.min) || !isAntichain(e.max)) return "extremes are not antichains";
        if (!isUpwardClosed(upset(f))) return "upset is not upward-closed";
        if (!(ideal(f, e.min) == f)) return "ideal of min(F) is not F";
        return std::nullopt;
      }));
  add("setfam-irreducibles", "join-irreducibles generate F and are union-independent",
      D::UnionClosed, 16, WordUse::None, perFamily([](const SetFamily& f) -> Failure {
        SetFamily j = joinIrreducibles(f);
        if (!(closeUnderUnion(j) == f)) return "irreducibles do not generate F";
        if (!isUnionIndependent(j)) return "irreducibles are not union-independent";
        if (!isSubfamily(minimal(f), j)) return "a minimal member is reducible";
        for (Mask g : f) {
          bool split = false;
          for (Mask h : f)
            for (Mask t : f)
              split = split || (isProperSubset(h, g) && isProperSubset(t, g) && (h | t) == g);
          if (split == j.contains(g)) return "pairwise test disagrees at " + fmt(f, g);
        }
        return std::nullopt;
      }));
  add("rise-basic", "sections, trajectories, upward-closed image and bijectivity", D::Any, 16, WordUse::Each,
      perWord(riseBasic));
  add("rise-matching", "matching property of colliding trajectories", D::Any, 16, WordUse::Each,
      perWord(riseMatching));
  add("rise-sections", "sections are union-closed and closed under union with F",
      D::UnionClosed, 16, WordUse::Each, perWord(riseSections));
  add("rise-inverse", "star inverts the rising bijection", D::UnionClosed, 16, WordUse::Each,
      perWord(riseInverse));
  add("rise-ideal", "rising maps principal ideals onto image filters", D::UnionClosed, 16, WordUse::Each,
      perWord(riseIdeal));
  add("rise-fixed", "fixed points are the members closed under single additions",
      D::UnionClosed, 16, WordUse::Each, perWord(riseFixed));
  add("rise-embedding", "image members without a lift into forward(F_a)", D::UnionClosed, 16, WordUse::Each,
      perWord(riseEmbedding));
  add("rise-interval", "orbit intervals of distinct members are disjoint", D::UnionClosed, 5, WordUse::All,
      perFamily(riseInterval));
  add("orbit-theorem", "the images of g over all words are max Fib(g)", D::UnionClosed, 5, WordUse::All,
      perFamily(orbitTheorem));
  add("fiber-partition", "fibers partition upset(min F) and are unions of orbit intervals",
      D::UnionClosed, 5, WordUse::All, perFamily(fiberPartition));
  add("invariant-routes", "fiber and all-words invariant families agree; rank bounds",
      D::UnionClosed, 5, WordUse::All, perFamily(invariantRoutes));
  add("burnside", "word stabilizers sum to |F| n! and the orbit inequality holds", D::UnionClosed, 5, WordUse::All,
      perFamily(burnside));
  add("words-realizing", "every word with prefix eta - g realizes eta", D::UnionClosed, 5, WordUse::All,
      perFamily(wordsRealizingCheck));
  add("uc-criterion", "union-closed iff star maps upset(min H) into H", D::Any, 3, WordUse::None,
      perFamily(unionClosedCriterion));
  add("sp-identity", "|H_a| - |H_ā| = |P| - |S| for any family", D::Any, 16, WordUse::None,
      perFamily(spIdentity));
  add("rising-accounts", "partition, alternative formulation and double counting of sigma/pi",
      D::UnionClosed, 16, WordUse::Each,
      perWord([](const SetFamily& f, const Word& w) { return fromReport(risingAccounts(f, w).checks); }));
  add("pure-lower", "members with nothing below g - a rise into pi(a)", D::UnionClosed, 16, WordUse::Each,
      perWord([](const SetFamily& f, const Word& w) { return fromReport(pureLowerBound(f, w).checks); }));
  add("local-characterization", "sigma and pi as meets over image members below",
      D::UnionClosed, 16, WordUse::Each, perWord([](const SetFamily& f, const Word& w) {
        return fromReport(localCharacterization(f, w));
      }));
  add("hyper-accounts", "Sigma via covers and the Cov sandwich", D::UnionClosed, 8, WordUse::None,
      perFamily([](const SetFamily& f) { return fromReport(hyperAccounts(f).checks); }));
  add("hyper-identities", "Sigma and Pi are the meets of sigma and pi over all words",
      D::UnionClosed, 5, WordUse::All, perFamily(hyperIdentities));
  add("covering", "three-way covering equivalence", D::UnionClosed, 5, WordUse::None,
      perFamily([](const SetFamily& f) { return fromReport(coveringEquivalences(f)); }));
  add("spurious-monotonicity", "constructed words shrink sigma along inclusions",
      D::UnionClosed, 8, WordUse::None, perFamily(spuriousCheck));
  add("average-bounds", "average bounds below the localized average", D::UnionClosed, 8, WordUse::Each,
      perWord(averageBounds));
  add("hyper-average", "hyper bound, its cover form and the pure floor", D::UnionClosed, 8, WordUse::None,
      perFamily(hyperAverage));
  add("reimer", "average member size at least half of log2 |F|", D::UnionClosed, 16, WordUse::None,
      perFamily([](const SetFamily& f) -> Failure {
        if (!reimerHolds(f)) return "average below half of log2 |F|";
        return std::nullopt;
      }));
  add("removal-trace", "swap chain invariants for every removed member", D::Any, 16, WordUse::Each,
      perWord(removal));
  add("swap-last-step", "removal traces whose last swap uses the final letter", D::Any, 16, WordUse::Each,
      swapLastStep);
  add("irreducible-bound", "join-irreducibles bounded by the image levels", D::UnionClosed, 16, WordUse::Each,
      perWord([](const SetFamily& f, const Word& w) { return fromReport(irreducibleBound(f, w).checks); }));
  add("frankl-witness", "some element lies in at least half the members", D::UnionClosed, 16, WordUse::None, frankl);
  add("antichain-bound", "2|A| + |first upward level| within the middle-level bound",
      D::Antichain, 16, WordUse::None, perFamily(antichainBound));
  add("antichain-foils", "first upward level, foils and augmentable closure", D::Antichain, 6, WordUse::None,
      perFamily(antichainFoils));
  add("antichain-augment", "augmentation maps keep antichains and never lower the objective",
      D::Antichain, 8, WordUse::None, perFamily(antichainAugment));
  return r;
}

}  // namespace

const std::vector<Check>& registry() {
  static const std::vector<Check> r = buildRegistry();
  return r;
}

const Check* findCheck(std::string_view id) {
  for (const Check& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

Outcome runGuarded(const Check& c, const SetFamily& f, std::span<const Word> words) {
  try {
    if (c.words == WordUse::All) {
      static const std::vector<std::vector<Word>> cache = [] {
        std::vector<std::vector<Word>> v;
        for (int n = 0; n <= 5; ++n) v.push_back(n == 0 ? std::vector<Word>{} : allWords(n));
        return v;
      }();
      if (f.n() > 5) return {Status::Skip, std::nullopt, {}};
      return c.run(f, cache[f.n()]);
    }
    return c.run(f, words);
  } catch (const std::exception& e) {
    return {Status::Fail, words.size() == 1 ? std::optional<Word>(words[0]) : std::nullopt, e.what()};
  }
}

}  // namespace uclab::detail
