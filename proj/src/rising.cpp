#include "uclab/rising.hpp"

#include <algorithm>
#include <map>

#include "uclab/setfam.hpp"

namespace uclab {

RisingTranscript rise(const SetFamily& f, const Word& w) {
  if (f.empty()) throw Error("empty family");
  if (w.size() != f.n())
    throw Error("word length " + std::to_string(w.size()) + " does not match ground size " +
                std::to_string(f.n()));
  RisingTranscript t(f, w);
  const std::size_t count = f.size();
  const std::size_t stride = t.stride();
  t.traj_.resize(count * stride);
  std::vector<Mask> cur(f.begin(), f.end());
  MembershipTable section(f);
  t.sections_.reserve(stride);
  t.sections_.push_back(f);
  std::vector<Mask> next(count);
  for (std::size_t i = 0; i < count; ++i) t.traj_[i * stride] = cur[i];
  for (int step = 0; step < w.size(); ++step) {
    const Mask b = bit(w.at(step));
    for (std::size_t i = 0; i < count; ++i) {
      Mask z = cur[i];
      next[i] = (!(z & b) && !section.test(z | b)) ? (z | b) : z;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (next[i] != cur[i]) section.reset(cur[i]);
    }
    for (std::size_t i = 0; i < count; ++i) {
      section.set(next[i]);
      t.traj_[i * stride + step + 1] = next[i];
    }
    cur.swap(next);
    t.sections_.emplace_back(f.ground(), cur);
  }
  t.preimage_.resize(count);
  const SetFamily& image = t.sections_.back();
  for (std::size_t i = 0; i < count; ++i) t.preimage_[*image.indexOf(cur[i])] = i;
  return t;
}

std::span<const Mask> RisingTranscript::trajectoryOf(Mask g) const {
  auto i = input_.indexOf(g);
  if (!i) throw Error("mask is not a member of the risen family");
  return trajectory(*i);
}

Mask RisingTranscript::forward(Mask g) const {
  auto i = input_.indexOf(g);
  if (!i) throw Error("mask is not a member of the risen family");
  return forwardAt(*i);
}

std::optional<Mask> RisingTranscript::inverse(Mask eta) const {
  auto j = image().indexOf(eta);
  if (!j) return std::nullopt;
  return input_[preimage_[*j]];
}

SetFamily RisingTranscript::forwardImage(const SetFamily& sub) const {
  std::vector<Mask> out;
  out.reserve(sub.size());
  for (Mask g : sub) out.push_back(forward(g));
  return SetFamily(input_.ground(), std::move(out));
}

void StarOperator::build(const SetFamily& f) {
  const std::size_t size = f.ground().powersetSize();
  star_.assign(size, 0);
  above_.assign(size, 0);
  for (Mask m : f) {
    star_[m] = m;
    above_[m] = 1;
  }
  // Subsets of z are reached through the n immediate subsets z \ {i}.
  for (std::size_t z = 1; z < size; ++z) {
    for (int i = 0; i < f.n(); ++i) {
      if (!contains(static_cast<Mask>(z), i)) continue;
      std::size_t lower = z & ~static_cast<std::size_t>(bit(i));
      star_[z] |= star_[lower];
      above_[z] |= above_[lower];
    }
  }
}

StarOperator::StarOperator(const SetFamily& f) {
  requireUnionClosed(f);
  build(f);
}

StarOperator StarOperator::unchecked(const SetFamily& f) {
  StarOperator s;
  s.build(f);
  return s;
}

Mask star(const SetFamily& f, Mask z) {
  requireUnionClosed(f);
  if (z > f.ground().full()) throw Error("mask outside the ground set");
  Mask u = 0;
  for (Mask h : f)
    if (isSubset(h, z)) u |= h;
  return u;
}

std::vector<FiberReport> allFibers(const SetFamily& f) {
  StarOperator st(f);
  std::vector<std::vector<Mask>> buckets(f.size());
  const Mask top = f.ground().full();
  for (Mask z = 0;; ++z) {
    if (st.above(z)) buckets[*f.indexOf(st(z))].push_back(z);
    if (z == top) break;
  }
  std::vector<FiberReport> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    SetFamily fib = SetFamily::fromCanonical(f.ground(), std::move(buckets[i]));
    SetFamily mx = maximal(fib);
    out.push_back({f[i], std::move(fib), std::move(mx)});
  }
  return out;
}

FiberReport fiber(const SetFamily& f, Mask g) {
  requireUnionClosed(f);
  if (!f.contains(g)) throw Error("owner is not a member of the family");
  StarOperator st = StarOperator::unchecked(f);
  std::vector<Mask> members;
  const Mask top = f.ground().full();
  for (Mask z = g;; ++z) {
    if (isSubset(g, z) && st.above(z) && st(z) == g) members.push_back(z);
    if (z == top) break;
  }
  SetFamily fib = SetFamily::fromCanonical(f.ground(), std::move(members));
  SetFamily mx = maximal(fib);
  return {g, std::move(fib), std::move(mx)};
}

std::vector<Word> wordsRealizing(const SetFamily& f, Mask g, Mask eta) {
  FiberReport rep = fiber(f, g);
  if (!rep.maxFiber.contains(eta)) throw Error("target is not a maximal element of the fiber");
  if (f.n() > 8) throw Error("all-words sweep requires n <= 8");
  std::vector<Word> out;
  for (const Word& w : allWords(f.n()))
    if (rise(f, w).forward(g) == eta) out.push_back(w);
  return out;
}

Mask InvariantFamily::ownerOf(Mask x) const {
  auto it = std::lower_bound(orbitIndex.begin(), orbitIndex.end(), std::pair<Mask, Mask>{x, 0},
                             [](const auto& p, const auto& q) { return p.first < q.first; });
  if (it == orbitIndex.end() || it->first != x) throw Error("mask is not in the invariant family");
  return it->second;
}

namespace {

InvariantFamily assemble(const SetFamily& f, std::map<Mask, Mask> owners) {
  InvariantFamily inv{SetFamily(f.ground()), 0, {}};
  std::vector<Mask> members;
  for (const auto& [x, g] : owners) {
    members.push_back(x);
    inv.orbitIndex.emplace_back(x, g);
  }
  inv.family = SetFamily::fromCanonical(f.ground(), std::move(members));
  inv.rank = f.n() + 1;
  for (Mask x : minimal(inv.family)) inv.rank = std::min(inv.rank, cardinality(x));
  return inv;
}

}  // namespace

InvariantFamily invariantFamily(const SetFamily& f) {
  std::map<Mask, Mask> owners;
  for (const FiberReport& rep : allFibers(f))
    for (Mask x : rep.maxFiber) owners.emplace(x, rep.owner);
  return assemble(f, std::move(owners));
}

InvariantFamily invariantFamilyAllWords(const SetFamily& f) {
  requireUnionClosed(f);
  if (f.n() > 8) throw Error("all-words sweep requires n <= 8; use the fiber route");
  std::map<Mask, Mask> owners;
  for (const Word& w : allWords(f.n())) {
    RisingTranscript t = rise(f, w);
    for (std::size_t i = 0; i < f.size(); ++i) owners.emplace(t.forwardAt(i), f[i]);
  }
  return assemble(f, std::move(owners));
}

BurnsideReport burnsideReport(const SetFamily& f) {
  if (f.n() > 7) throw Error("Burnside report requires n <= 7");
  std::vector<FiberReport> fibers = allFibers(f);
  InvariantFamily inv = invariantFamily(f);
  BurnsideReport rep;
  std::vector<Mask> owners;
  for (const auto& p : inv.orbitIndex) owners.push_back(p.second);
  std::sort(owners.begin(), owners.end());
  rep.orbitCount = static_cast<std::size_t>(std::unique(owners.begin(), owners.end()) - owners.begin());
  for (const Word& w : allWords(f.n())) {
    RisingTranscript t = rise(f, w);
    for (std::size_t i = 0; i < f.size(); ++i) {
      Mask x = t.forwardAt(i);
      if (inv.family.contains(x) && inv.ownerOf(x) == f[i]) ++rep.wordStabilizerSum;
    }
  }
  Rational sum = 0;
  for (const FiberReport& fr : fibers)
    for (Mask x : fr.maxFiber)
      sum += Rational(1, binomial(f.n(), cardinality(x & ~fr.owner)));
  rep.inequalityLHS = sum / static_cast<long long>(f.size());
  return rep;
}

}  // namespace uclab
