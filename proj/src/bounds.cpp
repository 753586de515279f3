#include "uclab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "uclab/antichain.hpp"
#include "uclab/setfam.hpp"

namespace uclab {

std::optional<int> franklWitness(const SetFamily& f) {
  if (f.empty()) throw Error("empty family");
  if (f.size() == 1 && f[0] == 0) throw Error("family is {{}}");
  requireUnionClosed(f);
  for (int a = 0; a < f.n(); ++a)
    if (2 * f.withElement(a).size() >= f.size()) return a;
  return std::nullopt;
}

int compareWithLog2(const Rational& d, std::uint64_t num, std::uint64_t den) {
  if (num < den || den == 0) throw Error("log argument below one");
  BigInt p = boost::multiprecision::numerator(d);
  BigInt q = boost::multiprecision::denominator(d);
  if (p <= 0) {
    if (num == den) return p == 0 ? 0 : -1;
    return -1;
  }
  // d = p/q > 0: compare 2^p * den^q with num^q.
  const auto qi = q.convert_to<unsigned>();
  const auto pi = p.convert_to<unsigned>();
  BigInt lhs = boost::multiprecision::pow(BigInt(den), qi) << pi;
  BigInt rhs = boost::multiprecision::pow(BigInt(num), qi);
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

double LogBound::approx() const {
  return toDouble(base) - 0.5 * std::log2(static_cast<double>(num) / static_cast<double>(den));
}

int LogBound::compare(const Rational& x) const {
  // base - log/2 - x has the sign of 2(base - x) - log.
  return compareWithLog2(2 * (base - x), num, den);
}

Rational AverageReport::average() const {
  return Rational(static_cast<long long>(lengthSum), static_cast<long long>(idealSize));
}

Rational HyperAverageReport::average() const {
  return Rational(static_cast<long long>(lengthSum), static_cast<long long>(idealSize));
}

bool reimerHolds(const SetFamily& f) {
  Rational twiceAvg(2 * static_cast<long long>(f.lengthSum()), static_cast<long long>(f.size()));
  return compareWithLog2(twiceAvg, f.size(), 1) >= 0;
}

namespace {

void requireLocalizer(const SetFamily& f, const SetFamily& s) {
  requireUnionClosed(f);
  if (s.empty()) throw Error("localizer is empty");
  if (!isAntichain(s)) throw Error("localizer is not an antichain");
  if (!isSubfamily(s, f)) throw Error("localizer is not contained in the family");
}

bool isMaximalAntichain(const SetFamily& a) {
  const Mask top = a.ground().full();
  for (Mask z = 0;; ++z) {
    bool comparable = std::any_of(a.begin(), a.end(), [z](Mask m) {
      return isSubset(m, z) || isSubset(z, m);
    });
    if (!comparable) return false;
    if (z == top) break;
  }
  return true;
}

// Smallest max member size over maximal antichains of 2^X inside F that
// avoid the empty set.
std::optional<int> smallestMaximalAntichainWithin(const SetFamily& f) {
  std::vector<Mask> members;
  for (Mask m : f)
    if (m != 0) members.push_back(m);
  std::optional<int> best;
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == members.size()) {
      if (chosen.empty()) return;
      SetFamily a(f.ground(), chosen);
      if (!isMaximalAntichain(a)) return;
      int k = 0;
      for (Mask m : chosen) k = std::max(k, cardinality(m));
      if (!best || k < *best) best = k;
      return;
    }
    walk(i + 1);
    Mask x = members[i];
    if (std::none_of(chosen.begin(), chosen.end(), [x](Mask c) {
          return isSubset(c, x) || isSubset(x, c);
        })) {
      chosen.push_back(x);
      walk(i + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return best;
}

// (n - k)/2 + pi/(2N)
Rational halfGapBound(int n, long long k, std::size_t pi, std::size_t ideal) {
  return Rational(n - k, 2) + Rational(static_cast<long long>(pi), 2 * static_cast<long long>(ideal));
}

std::size_t hyperSigmaSum(const HyperAccounts& h, const SetFamily& idealSet) {
  std::size_t s = 0;
  for (Mask g : idealSet) s += cardinality(h.sigmaAt(g));
  return s;
}

std::size_t hyperPiSum(const HyperAccounts& h, const SetFamily& idealSet) {
  std::size_t s = 0;
  for (Mask g : idealSet) s += cardinality(h.piAt(g));
  return s;
}

}  // namespace

AverageReport averageReport(const SetFamily& f, const SetFamily& s, const Word& w) {
  requireLocalizer(f, s);
  const int n = f.n();
  SetFamily idealSet = ideal(f, s);
  SetFamily up = upset(s);
  RisingAccounts acc = risingAccounts(f, w);
  HyperAccounts hyper = hyperAccounts(f);

  AverageReport r{s, idealSet.size(), idealSet.lengthSum(), up.size(), 0, 0, 0, 0, {}, std::nullopt,
                  std::nullopt, 0, 0, {}};
  const long long N = static_cast<long long>(r.idealSize);
  MembershipTable inUp(up);
  for (int a = 0; a < n; ++a) {
    for (Mask eta : acc.piByElement[a]) r.piCount += inUp.test(eta);
    for (Mask eta : acc.sigmaByElement[a]) r.sigmaCount += inUp.test(eta);
  }
  for (Mask g : s)
    for (Mask eta : hyper.fibers[*f.indexOf(g)].maxFiber)
      r.sigmaS = std::max(r.sigmaS, cardinality(eta & ~g));

  const Rational avg = r.average();
  const bool atMin = s == minimal(f);
  const bool upward = isUpwardClosed(f);

  r.boundLocal = Rational(n, 2) + Rational(static_cast<long long>(r.piCount) -
                                               static_cast<long long>(r.sigmaCount),
                                           2 * N);
  r.boundGeneral = {halfGapBound(n, 0, r.piCount, r.idealSize), r.upsetSize, r.idealSize};
  r.boundInvariant = halfGapBound(n, r.sigmaS, r.piCount, r.idealSize);
  SetFamily mins = minimal(f);
  if (!mins.contains(0) && isMaximalAntichain(mins)) {
    int k = 0;
    for (Mask g : mins) k = std::max(k, cardinality(g));
    r.boundMaxAntichain = halfGapBound(n, k, r.piCount, r.idealSize);
  }
  if (n <= 4) {
    if (auto k = smallestMaximalAntichainWithin(f))
      r.boundMaxAntichainSearch = halfGapBound(n, *k, r.piCount, r.idealSize);
  }
  r.boundHyper = Rational(n, 2) -
                 Rational(static_cast<long long>(hyperSigmaSum(hyper, idealSet)), 2 * N) +
                 Rational(static_cast<long long>(hyperPiSum(hyper, idealSet)), 2 * N);

  AssertionReport& c = r.checks;
  c.add("local averaging bound", r.boundLocal <= avg,
        formatRational(r.boundLocal) + " vs " + formatRational(avg));
  if (atMin)
    c.add("local averaging equality at min(F)", r.boundLocal == avg,
          formatRational(r.boundLocal) + " vs " + formatRational(avg));
  c.add("general bound", r.boundGeneral.compare(avg) <= 0,
        std::to_string(r.boundGeneral.approx()) + " vs " + formatRational(avg));
  if (atMin && upward)
    c.add("general bound attained", r.boundGeneral.compare(avg) == 0,
          std::to_string(r.boundGeneral.approx()) + " vs " + formatRational(avg));
  c.add("invariant bound", r.boundInvariant <= avg,
        formatRational(r.boundInvariant) + " vs " + formatRational(avg));
  if (r.boundMaxAntichain)
    c.add("maximal antichain bound", *r.boundMaxAntichain <= avg,
          formatRational(*r.boundMaxAntichain) + " vs " + formatRational(avg));
  if (r.boundMaxAntichainSearch)
    c.add("maximal antichain inside F bound", *r.boundMaxAntichainSearch <= avg,
          formatRational(*r.boundMaxAntichainSearch) + " vs " + formatRational(avg));
  c.add("hyper bound", r.boundHyper <= avg,
        formatRational(r.boundHyper) + " vs " + formatRational(avg));
  if (atMin && upward)
    c.add("hyper bound attained", r.boundHyper == avg,
          formatRational(r.boundHyper) + " vs " + formatRational(avg));
  if (atMin) c.add("Reimer bound", reimerHolds(f));
  return r;
}

HyperAverageReport hyperAverageReport(const SetFamily& f, const SetFamily& s) {
  requireLocalizer(f, s);
  const int n = f.n();
  SetFamily idealSet = ideal(f, s);
  HyperAccounts hyper = hyperAccounts(f);
  StarOperator st(f);
  std::vector<CoverPair> covers = coverPairs(f);

  HyperAverageReport r{s, idealSet.size(), idealSet.lengthSum(), hyperSigmaSum(hyper, idealSet),
                       hyperPiSum(hyper, idealSet), 0, 0, 0, 0, {}};
  for (Mask g : idealSet) {
    Mask u = g;
    for (const CoverPair& p : covers)
      if (p.lower == g) u |= p.upper;
    r.coverUnionCount += cardinality(u);
    for (int a = 0; a < n; ++a)
      if (contains(g, a) && !st.above(g & ~bit(a))) ++r.pureFloor;
  }
  const long long N = static_cast<long long>(r.idealSize);
  r.boundHyper = Rational(n, 2) - Rational(static_cast<long long>(r.hyperSigmaCount), 2 * N) +
                 Rational(static_cast<long long>(r.hyperPiCount), 2 * N);
  r.boundCovers = Rational(static_cast<long long>(r.coverUnionCount + r.hyperPiCount), 2 * N);

  const Rational avg = r.average();
  AssertionReport& c = r.checks;
  c.add("hyper bound", r.boundHyper <= avg,
        formatRational(r.boundHyper) + " vs " + formatRational(avg));
  c.add("cover form equals hyper bound", r.boundCovers == r.boundHyper,
        formatRational(r.boundCovers) + " vs " + formatRational(r.boundHyper));
  c.add("hyper-pure count floor", r.hyperPiCount >= r.pureFloor,
        std::to_string(r.hyperPiCount) + " vs " + std::to_string(r.pureFloor));
  if (s == minimal(f) && isUpwardClosed(f))
    c.add("hyper bound attained", r.boundHyper == avg,
          formatRational(r.boundHyper) + " vs " + formatRational(avg));
  return r;
}

RemovalTrace removalTrace(const SetFamily& f, Mask m, const Word& w) {
  if (!f.contains(m)) throw Error("removed set is not a member of the family");
  if (f.size() < 2) throw Error("removal would leave an empty family");
  const int n = f.n();
  const GroundSet& ground = f.ground();
  SetFamily reduced = f.filter([m](Mask x) { return x != m; });
  RisingTranscript t = rise(f, w);
  RisingTranscript tr = rise(reduced, w);
  RemovalTrace out{m, w, {m}, {}, {}, std::nullopt, t.image(), tr.image(), {}};
  AssertionReport& c = out.checks;

  bool erasing = true;
  for (int i = 0; i <= n; ++i) {
    SetFamily missing = familyDifference(t.sections()[i], tr.sections()[i]);
    bool single = missing.size() == 1 && isSubfamily(tr.sections()[i], t.sections()[i]);
    erasing = erasing && single;
    out.missingElements.push_back(missing.empty() ? 0 : missing[0]);
  }
  c.add("one missing element per section", erasing);
  if (!erasing) return out;

  auto reducedAt = [&](Mask z, int step) { return tr.trajectoryOf(z)[step]; };
  auto fullAt = [&](Mask z, int step) { return t.trajectoryOf(z)[step]; };

  for (int i = 1; i <= n; ++i) {
    const int a = w.at(i - 1);
    const Mask mu = out.missingElements[i - 1];
    if (!contains(mu, a)) continue;
    const Mask z = mu & ~bit(a);
    if (!tr.sections()[i - 1].contains(z)) continue;
    for (Mask y : reduced) {
      if (reducedAt(y, i - 1) == z) {
        out.swapChain.push_back(y);
        out.swapIndices.push_back(i);
        break;
      }
    }
  }
  const std::size_t k = out.swapIndices.size();
  const std::string trace = "k=" + std::to_string(k);

  bool distinct = true;
  for (std::size_t x = 0; x < out.swapChain.size(); ++x)
    for (std::size_t y = x + 1; y < out.swapChain.size(); ++y)
      distinct = distinct && out.swapChain[x] != out.swapChain[y];
  c.add("chain members distinct", distinct, trace);
  c.add("swap indices within the word", k == 0 || out.swapIndices.back() <= n, trace);

  bool shifted = true, steady = true, hinge = true, matching = true;
  for (std::size_t j = 1; j <= k; ++j) {
    const Mask cur = out.swapChain[j], prev = out.swapChain[j - 1];
    const int step = out.swapIndices[j - 1];
    const int a = w.at(step - 1);
    shifted = shifted && tr.forward(cur) == t.forward(prev);
    hinge = hinge && (reducedAt(cur, step - 1) | bit(a)) == fullAt(prev, step - 1);
    matching = matching && contains(prev, a) && !contains(t.forward(cur), a);
  }
  for (Mask z : reduced)
    if (std::find(out.swapChain.begin(), out.swapChain.end(), z) == out.swapChain.end())
      steady = steady && tr.forward(z) == t.forward(z);
  c.add("chain images shift by one", shifted, trace);
  c.add("members off the chain keep their image", steady, trace);
  c.add("swap step joins the previous trajectory", hinge, trace);
  c.add("swap letter in previous member, not in image", matching, trace);

  bool missingTracks = true;
  for (int i = 0; i <= n; ++i) {
    std::size_t s = 0;
    while (s < k && out.swapIndices[s] <= i) ++s;
    missingTracks = missingTracks && out.missingElements[i] == fullAt(out.swapChain[s], i);
  }
  c.add("missing element follows the chain", missingTracks, trace);

  const Mask last = t.forward(out.swapChain.back());
  SetFamily expected = t.image().filter([last](Mask x) { return x != last; });
  c.add("reduced image drops the last chain image", expected == tr.image(), trace);
  c.add("dropped image member is minimal", minimal(t.image()).contains(last),
        "dropped " + ground.formatCompact(last));

  if (isUnionClosed(f) && joinIrreducibles(f).contains(m)) {
    c.add("irreducible removal swaps at most once", k <= 1, trace);
    if (k == 0) {
      out.caseTag = SwapCase::NoSwap;
    } else if (k == 1) {
      out.caseTag = SwapCase::BarSwap;
      Mask bar = 0;
      bool below = false;
      for (Mask x : f) {
        if (isProperSubset(x, m)) {
          bar |= x;
          below = true;
        }
      }
      const Mask m1 = out.swapChain[1];
      c.add("bar swap partner is the union below m",
            below && m1 == bar && tr.forward(bar) == t.forward(m) &&
                minimal(t.image()).contains(t.forward(bar)),
            "partner " + ground.formatCompact(m1) + ", union below " + ground.formatCompact(bar));
    }
  }
  return out;
}

std::uint64_t spernerBound(int n) { return 2 * binomial(n, n / 2) + binomial(n, n / 2 + 1); }

IrreducibleBoundReport irreducibleBound(const SetFamily& f, const Word& w) {
  requireUnionClosed(f);
  RisingTranscript t = rise(f, w);
  SetFamily mins = minimal(t.image());
  SetFamily second = minimal(familyDifference(t.image(), mins));
  IrreducibleBoundReport r;
  r.jCount = joinIrreducibles(f).size();
  r.minImage = mins.size();
  r.secondLevel = second.size();
  r.imageBound = 2 * r.minImage + r.secondLevel;
  r.spernerBound = spernerBound(f.n());
  r.checks.add("irreducibles within image bound", r.jCount <= r.imageBound,
               std::to_string(r.jCount) + " vs " + std::to_string(r.imageBound));
  r.checks.add("image bound within Sperner bound", r.imageBound <= r.spernerBound,
               std::to_string(r.imageBound) + " vs " + std::to_string(r.spernerBound));
  r.checks.add("second level is the first upward level", second == firstUpwardLevel(mins));
  return r;
}

}  // namespace uclab
