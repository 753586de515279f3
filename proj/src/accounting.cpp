#include "uclab/accounting.hpp"

#include <algorithm>

#include "uclab/setfam.hpp"

namespace uclab {

void AssertionReport::add(std::string name, bool holds, std::string detail) {
  for (IdentityCheck& c : checks) {
    if (c.name != name) continue;
    if (c.holds && !holds) {
      c.holds = false;
      c.detail = std::move(detail);
    }
    return;
  }
  checks.push_back({std::move(name), holds, holds ? std::string{} : std::move(detail)});
}

bool AssertionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

std::vector<IdentityCheck> AssertionReport::failures() const {
  std::vector<IdentityCheck> out;
  for (const IdentityCheck& c : checks)
    if (!c.holds) out.push_back(c);
  return out;
}

bool SPCounts::identityHolds() const {
  return static_cast<long long>(withCount) - static_cast<long long>(withoutCount) ==
         static_cast<long long>(P.size()) - static_cast<long long>(S.size());
}

SPCounts spCounts(const SetFamily& h, int a) {
  if (a < 0 || a >= h.n()) throw Error("element outside the ground set");
  const Mask b = bit(a);
  SPCounts out{a, h.filter([&](Mask z) { return !h.contains(z | b); }),
               h.filter([&](Mask z) { return (z & b) && !h.contains(z & ~b); }), 0, 0};
  for (Mask z : h) ++((z & b) ? out.withCount : out.withoutCount);
  return out;
}

namespace {

std::string fmt(const GroundSet& g, Mask m) { return g.formatCompact(m); }

}  // namespace

Mask RisingAccounts::sigmaAt(Mask eta) const {
  auto j = transcript.image().indexOf(eta);
  if (!j) throw Error("mask is not in the image");
  return sigmaLocal[*j];
}

Mask RisingAccounts::piAt(Mask eta) const {
  auto j = transcript.image().indexOf(eta);
  if (!j) throw Error("mask is not in the image");
  return piLocal[*j];
}

RisingAccounts risingAccounts(const SetFamily& f, const Word& w) {
  requireUnionClosed(f);
  RisingAccounts acc{rise(f, w), {}, {}, {}, {}, {}};
  const SetFamily& image = acc.transcript.image();
  const GroundSet& ground = f.ground();
  const int n = f.n();
  MembershipTable inImage(image);
  std::vector<std::vector<Mask>> sigma(n), pi(n);
  acc.sigmaLocal.resize(image.size());
  acc.piLocal.resize(image.size());
  for (std::size_t j = 0; j < image.size(); ++j) {
    const Mask eta = image[j];
    const Mask pre = *acc.transcript.inverse(eta);
    Mask piMask = 0;
    for (int a = 0; a < n; ++a)
      if (contains(pre, a) && !inImage.test(eta & ~bit(a))) piMask |= bit(a);
    acc.sigmaLocal[j] = eta & ~pre;
    acc.piLocal[j] = piMask;
    for (int a = 0; a < n; ++a) {
      if (contains(acc.sigmaLocal[j], a)) sigma[a].push_back(eta);
      if (contains(piMask, a)) pi[a].push_back(eta);
    }
  }
  for (int a = 0; a < n; ++a) {
    acc.sigmaByElement.push_back(SetFamily::fromCanonical(ground, std::move(sigma[a])));
    acc.piByElement.push_back(SetFamily::fromCanonical(ground, std::move(pi[a])));
  }

  AssertionReport& r = acc.checks;
  std::size_t sigmaTotal = 0, piTotal = 0, sigmaLocalTotal = 0, piLocalTotal = 0;
  bool franklSide = false, pureSide = false;
  for (int a = 0; a < n; ++a) {
    const Mask b = bit(a);
    const std::string el = ground.label(a);
    const SetFamily& sg = acc.sigmaByElement[a];
    const SetFamily& pa = acc.piByElement[a];
    SetFamily imageA = image.withElement(a);
    SetFamily lifted = image.withoutElement(a);
    {
      std::vector<Mask> up;
      for (Mask eta : lifted) up.push_back(eta | b);
      lifted = SetFamily(ground, std::move(up));
    }
    SetFamily forwardA = acc.transcript.forwardImage(f.withElement(a));
    r.add("sigma within image_a", isSubfamily(sg, imageA), "element " + el);
    r.add("pi within forward(F_a)", isSubfamily(pa, forwardA), "element " + el);
    r.add("sigma and pi disjoint", familyIntersection(sg, pa).empty(), "element " + el);

    // The three parts must be pairwise disjoint and cover image_a.
    bool partition = familyIntersection(lifted, pa).empty() &&
                     familyIntersection(lifted, sg).empty() &&
                     familyUnion(familyUnion(lifted, pa), sg) == imageA;
    r.add("partition of image_a", partition, "element " + el);
    r.add("partition count",
          imageA.size() == image.size() - imageA.size() + pa.size() + sg.size(),
          "element " + el);

    SPCounts sp = spCounts(f, a);
    long long lhs = static_cast<long long>(pa.size()) - static_cast<long long>(sg.size());
    long long rhs = static_cast<long long>(sp.P.size()) - static_cast<long long>(sp.S.size());
    r.add("pi - sigma = P - S", lhs == rhs,
          "element " + el + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    r.add("pi <= P", pa.size() <= sp.P.size(), "element " + el);
    r.add("sigma <= S", sg.size() <= sp.S.size(), "element " + el);

    sigmaTotal += sg.size();
    piTotal += pa.size();
    std::size_t withA = f.withElement(a).size();
    franklSide = franklSide || 2 * withA >= f.size();
    pureSide = pureSide || pa.size() >= sg.size();
  }
  for (std::size_t j = 0; j < image.size(); ++j) {
    sigmaLocalTotal += cardinality(acc.sigmaLocal[j]);
    piLocalTotal += cardinality(acc.piLocal[j]);
    r.add("local sigma and pi disjoint", (acc.sigmaLocal[j] & acc.piLocal[j]) == 0,
          "image member " + fmt(ground, image[j]));
  }
  r.add("sigma double counting", sigmaTotal == sigmaLocalTotal);
  r.add("pi double counting", piTotal == piLocalTotal);
  r.add("Frankl reformulation", franklSide == pureSide,
        std::string("half-frequency element ") + (franklSide ? "exists" : "missing") +
            ", pure-dominant element " + (pureSide ? "exists" : "missing"));
  return acc;
}

PureLowerBound pureLowerBound(const SetFamily& f, const Word& w) {
  RisingAccounts acc = risingAccounts(f, w);
  StarOperator st(f);
  SetFamily mins = minimal(f);
  PureLowerBound out;
  for (int a = 0; a < f.n(); ++a) {
    std::vector<Mask> members;
    for (Mask g : f.withElement(a))
      if (!st.above(g & ~bit(a))) members.push_back(acc.transcript.forward(g));
    SetFamily fam(f.ground(), std::move(members));
    const std::string el = f.ground().label(a);
    out.checks.add("contained in pi", isSubfamily(fam, acc.piByElement[a]), "element " + el);
    SetFamily minA = mins.withElement(a);
    out.checks.add("contains forward(min(F)_a)", isSubfamily(acc.transcript.forwardImage(minA), fam),
                   "element " + el);
    out.byElement.push_back(std::move(fam));
  }
  return out;
}

AssertionReport localCharacterization(const SetFamily& f, const Word& w) {
  RisingAccounts acc = risingAccounts(f, w);
  const SetFamily& image = acc.transcript.image();
  AssertionReport r;
  for (std::size_t j = 0; j < image.size(); ++j) {
    const Mask eta = image[j];
    Mask sigmaMeet = f.ground().full();
    Mask meet = f.ground().full();
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (!isSubset(image[k], eta)) continue;
      sigmaMeet &= acc.sigmaLocal[k];
      meet &= image[k];
    }
    const std::string at = "eta=" + fmt(f.ground(), eta);
    r.add("sigma(eta) = meet of sigma below", acc.sigmaLocal[j] == sigmaMeet,
          at + ": sigma " + fmt(f.ground(), acc.sigmaLocal[j]) + ", meet " +
              fmt(f.ground(), sigmaMeet));
    r.add("pi(eta) = meet below within preimage",
          acc.piLocal[j] == (meet & *acc.transcript.inverse(eta)),
          at + ": pi " + fmt(f.ground(), acc.piLocal[j]));
  }
  return r;
}

Mask HyperAccounts::sigmaAt(Mask g) const {
  auto i = family.indexOf(g);
  if (!i) throw Error("mask is not a member of the family");
  return sigmaLocal[*i];
}

Mask HyperAccounts::piAt(Mask g) const {
  auto i = family.indexOf(g);
  if (!i) throw Error("mask is not a member of the family");
  return piLocal[*i];
}

const SetFamily& HyperAccounts::cov(int a, Mask g) const {
  auto i = family.indexOf(g);
  if (!i) throw Error("mask is not a member of the family");
  return covers.at(a)[*i];
}

HyperAccounts hyperAccounts(const SetFamily& f) {
  requireUnionClosed(f);
  const int n = f.n();
  const GroundSet& ground = f.ground();
  const Mask full = ground.full();
  HyperAccounts h{f, invariantFamily(f), {}, {}, {}, {}, allFibers(f), {}, {}};
  StarOperator st(f);
  MembershipTable inU(h.invariant.family);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Mask g = f[i];
    Mask sigma = full & ~g;
    Mask pi = g;
    for (Mask eta : h.fibers[i].maxFiber) {
      sigma &= eta & ~g;
      for (int a = 0; a < n; ++a)
        if (inU.test(eta & ~bit(a))) pi &= ~bit(a);
    }
    h.sigmaLocal.push_back(sigma);
    h.piLocal.push_back(pi);
  }
  h.covers.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<Mask> sg, pa;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (contains(h.sigmaLocal[i], a)) sg.push_back(f[i]);
      if (contains(h.piLocal[i], a)) pa.push_back(f[i]);
      h.covers[a].push_back(f.withElement(a).filter([&](Mask x) {
        return st.above(x & ~bit(a)) && st(x & ~bit(a)) == f[i];
      }));
    }
    h.sigmaByElement.push_back(SetFamily::fromCanonical(ground, std::move(sg)));
    h.piByElement.push_back(SetFamily::fromCanonical(ground, std::move(pa)));
  }

  AssertionReport& r = h.checks;
  std::vector<CoverPair> coversRel = coverPairs(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Mask g = f[i];
    const std::string at = "g=" + fmt(ground, g);
    r.add("Sigma(g) avoids g", (h.sigmaLocal[i] & g) == 0, at);
    r.add("Pi(g) within g", isSubset(h.piLocal[i], g), at);
    Mask emptyCov = 0;
    for (int a = 0; a < n; ++a) {
      bool empty = h.covers[a][i].empty();
      if (!contains(g, a) && empty) emptyCov |= bit(a);
      r.add("Cov_a(g) non-empty iff a outside Sigma(g) and g", !empty == !contains(h.sigmaLocal[i] | g, a),
            at + ", a=" + ground.label(a));
    }
    r.add("Sigma(g) = elements with empty Cov", h.sigmaLocal[i] == emptyCov,
          at + ": " + fmt(ground, h.sigmaLocal[i]) + " vs " + fmt(ground, emptyCov));
    Mask coverUnion = g;
    for (const CoverPair& p : coversRel)
      if (p.lower == g) coverUnion |= p.upper;
    r.add("Sigma(g) = X minus g and its upper covers", h.sigmaLocal[i] == (full & ~coverUnion),
          at + ": " + fmt(ground, h.sigmaLocal[i]) + " vs " + fmt(ground, full & ~coverUnion));
  }
  for (int a = 0; a < n; ++a) {
    SetFamily without = f.withoutElement(a);
    std::size_t middle = 0;
    for (Mask g : without) {
      if (h.sigmaByElement[a].contains(g)) continue;
      middle += maximal(h.cov(a, g)).size();
    }
    std::size_t lower = without.size() - h.sigmaByElement[a].size();
    std::size_t upper = f.size() - without.size() - h.piByElement[a].size();
    r.add("Cov sandwich", lower <= middle && middle <= upper,
          "element " + ground.label(a) + ": " + std::to_string(lower) + " <= " +
              std::to_string(middle) + " <= " + std::to_string(upper));
  }
  return h;
}

AssertionReport coveringEquivalences(const SetFamily& f) {
  requireUnionClosed(f);
  if (f.n() > 5) throw Error("covering equivalences require n <= 5");
  std::vector<FiberReport> fibers = allFibers(f);
  std::vector<CoverPair> coversRel = coverPairs(f);
  StarOperator st(f);
  const GroundSet& ground = f.ground();
  AssertionReport r;
  for (int a = 0; a < f.n(); ++a) {
    const Mask b = bit(a);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Mask g = f[i];
      if (g & b) continue;
      const std::string at = "g=" + fmt(ground, g) + ", a=" + ground.label(a);
      bool missing = false;
      for (Mask eta : fibers[i].maxFiber) {
        bool etaMisses = !(eta & b);
        missing = missing || etaMisses;
        bool witness = std::any_of(coversRel.begin(), coversRel.end(), [&](const CoverPair& p) {
          return p.lower == g && (p.upper & b) && isSubset(p.upper, eta | b);
        });
        r.add("a outside eta iff a cover below eta+a", etaMisses == witness,
              at + ", eta=" + fmt(ground, eta));
      }
      bool covered = std::any_of(coversRel.begin(), coversRel.end(), [&](const CoverPair& p) {
        return p.lower == g && (p.upper & b);
      });
      bool cov = std::any_of(f.begin(), f.end(), [&](Mask x) {
        return (x & b) && st.above(x & ~b) && st(x & ~b) == g;
      });
      r.add("fiber misses a iff covered in a", missing == covered, at);
      r.add("covered in a iff Cov_a(g) non-empty", covered == cov, at);
    }
  }
  return r;
}

Word spuriousMonotonicity(const SetFamily& f, Mask lower, Mask upper) {
  requireUnionClosed(f);
  if (!f.contains(lower) || !f.contains(upper)) throw Error("sets must be members of the family");
  if (!isSubset(lower, upper)) throw Error("lower set is not contained in upper set");
  FiberReport fu = fiber(f, upper);
  FiberReport fl = fiber(f, lower);
  const Mask eta = fu.maxFiber[0];
  const Mask etaPrime = (eta & ~upper) | lower;
  auto nu = std::find_if(fl.maxFiber.begin(), fl.maxFiber.end(),
                         [&](Mask x) { return isSubset(etaPrime, x); });
  if (nu == fl.maxFiber.end()) throw Error("no maximal fiber element above the shifted set");
  const Mask first = eta & ~upper;
  const Mask second = *nu & ~lower & ~first;
  std::vector<int> order;
  for (Mask part : {first, second, f.ground().full() & ~(first | second)})
    for (int i = 0; i < f.n(); ++i)
      if (contains(part, i)) order.push_back(i);
  Word w(std::move(order));
  RisingTranscript t = rise(f, w);
  Mask su = t.forward(upper) & ~upper;
  Mask sl = t.forward(lower) & ~lower;
  if (t.forward(upper) != eta || !isSubset(su, sl))
    throw Error("constructed word does not witness the inclusion");
  return w;
}

}  // namespace uclab
