#include "uclab/antichain.hpp"

#include <algorithm>

#include "uclab/bounds.hpp"
#include "uclab/setfam.hpp"

namespace uclab {

SetFamily shade(const SetFamily& a) {
  std::vector<Mask> out;
  for (Mask m : a)
    for (int i = 0; i < a.n(); ++i)
      if (!contains(m, i)) out.push_back(m | bit(i));
  return SetFamily(a.ground(), std::move(out));
}

SetFamily shadow(const SetFamily& a) {
  std::vector<Mask> out;
  for (Mask m : a)
    for (int i = 0; i < a.n(); ++i)
      if (contains(m, i)) out.push_back(m & ~bit(i));
  return SetFamily(a.ground(), std::move(out));
}

SetFamily firstUpwardLevel(const SetFamily& a) {
  if (!isAntichain(a)) throw Error("family is not an antichain");
  return minimal(shade(a));
}

std::vector<SetFamily> foils(const SetFamily& a, int depth) {
  std::vector<SetFamily> out{a};
  while (depth < 0 || static_cast<int>(out.size()) < depth) {
    SetFamily next = firstUpwardLevel(out.back());
    if (next.empty()) break;
    out.push_back(std::move(next));
  }
  return out;
}

SetFamily levelOf(const SetFamily& a, int k) {
  return a.filter([k](Mask m) { return cardinality(m) == k; });
}

AntichainState AntichainState::of(const SetFamily& a) {
  if (a.empty()) throw Error("empty family");
  AntichainState s{a, firstUpwardLevel(a)};
  s.objective = 2 * static_cast<long>(a.size()) + static_cast<long>(s.nablaBar.size());
  s.minLen = a.ground().size();
  s.maxLen = 0;
  for (Mask m : a) {
    s.minLen = std::min(s.minLen, cardinality(m));
    s.maxLen = std::max(s.maxLen, cardinality(m));
  }
  for (Mask m : s.nablaBar) s.nablaMaxLen = std::max(s.nablaMaxLen, cardinality(m));
  return s;
}

namespace {

// First (h, a) breaking the second closure property, smallest h then a.
std::optional<Mask> firstViolation(const AntichainState& s) {
  const int k = s.nablaMaxLen;
  if (k < 0 || s.maxLen >= k) return std::nullopt;
  for (Mask h : levelOf(s.nablaBar, k))
    for (int a = 0; a < s.antichain.n(); ++a)
      if (contains(h, a) && !s.antichain.contains(h & ~bit(a))) return h & ~bit(a);
  return std::nullopt;
}

SetFamily replaceLevel(const SetFamily& a, int k, const SetFamily& with) {
  return familyUnion(a.filter([k](Mask m) { return cardinality(m) != k; }), with);
}

}  // namespace

bool isAugmentable(const SetFamily& a) {
  AntichainState s = AntichainState::of(a);
  for (Mask h : levelOf(a, s.minLen))
    for (int i = 0; i < a.n(); ++i)
      if (!contains(h, i) && !s.nablaBar.contains(h | bit(i))) return false;
  return !firstViolation(s).has_value();
}

AntichainState augmentableClosure(const SetFamily& a) {
  AntichainState s = AntichainState::of(a);
  while (auto add = firstViolation(s)) {
    std::vector<Mask> grown(s.antichain.begin(), s.antichain.end());
    grown.push_back(*add);
    s = AntichainState::of(SetFamily(a.ground(), std::move(grown)));
  }
  return s;
}

AntichainState augmentStep(const AntichainState& s, Direction d) {
  const int n = s.antichain.n();
  if (n % 2 != 0) throw Error("augmentation maps require an even ground size");
  if (!isAugmentable(s.antichain)) throw Error("antichain is not augmentable");
  if (d == Direction::Up) {
    const int lo = s.minLen;
    if (2 * lo < n - 2) return AntichainState::of(replaceLevel(s.antichain, lo, shade(levelOf(s.antichain, lo))));
    return s;
  }
  const int k = s.nablaMaxLen;
  const int top = s.maxLen;
  if (top >= k && 2 * top >= n + 2)
    return AntichainState::of(replaceLevel(s.antichain, top, shadow(levelOf(s.antichain, top))));
  if (top < k && 2 * k > n + 2) {
    if (top != k - 1) throw Error("augmentable antichain with top level below k - 1");
    SetFamily lvl = levelOf(s.antichain, k - 1);
    if (lvl.empty()) return s;
    return AntichainState::of(replaceLevel(s.antichain, k - 1, shadow(lvl)));
  }
  return s;
}

MaximizeRun maximizeObjective(const SetFamily& seed) {
  const int n = seed.n();
  if (n < 2 || n > 8) throw Error("maximizeObjective requires 2 <= n <= 8");
  if (n % 2 != 0) throw Error("augmentation loop requires an even ground size");
  AntichainState state = AntichainState::of(seed);
  MaximizeRun run{seed, {}, state, state, spernerBound(n)};
  // Every non-identity map moves a level strictly, so the loop is short.
  for (int guard = 0;; ++guard) {
    if (guard > 4 * n + 4) throw Error("augmentation loop did not terminate");
    AntichainState closed = augmentableClosure(state.antichain);
    if (!(closed.antichain == state.antichain)) {
      run.steps.push_back({"closure", state, closed});
      state = closed;
    }
    AntichainState up = augmentStep(state, Direction::Up);
    if (!(up.antichain == state.antichain)) {
      run.steps.push_back({"up", state, up});
      state = up;
      continue;
    }
    AntichainState down = augmentStep(state, Direction::Down);
    if (!(down.antichain == state.antichain)) {
      run.steps.push_back({"down", state, down});
      state = down;
      continue;
    }
    break;
  }
  run.fixpoint = state;
  AntichainState middle = AntichainState::of(level(seed.ground(), n / 2));
  run.best = state.objective > middle.objective ? state : middle;
  return run;
}

MaximizeRun maximizeObjective(int n) {
  if (n < 2 || n > 8) throw Error("maximizeObjective requires 2 <= n <= 8");
  GroundSet ground(n);
  if (n % 2 == 0) return maximizeObjective(SetFamily(ground, {0}));
  // Odd n: both A and its first upward level are antichains, so Sperner
  // bounds each and the (n-1)/2 level attains the sum.
  AntichainState s = AntichainState::of(level(ground, (n - 1) / 2));
  return {s.antichain, {}, s, s, spernerBound(n)};
}

SymmetricChainDecomposition symmetricChains(int n) {
  if (n < 1 || n > kMaxGround) throw Error("ground size must be between 1 and 16");
  SymmetricChainDecomposition d;
  d.n = n;
  const std::size_t size = std::size_t{1} << n;
  d.location.assign(size, {-1, -1});
  std::vector<int> open;
  for (std::size_t raw = 0; raw < size; ++raw) {
    const Mask start = static_cast<Mask>(raw);
    // Scan bits as brackets: 0 opens, 1 closes the nearest open.
    open.clear();
    bool unmatchedClose = false;
    for (int i = 0; i < n; ++i) {
      if (!contains(start, i)) {
        open.push_back(i);
      } else if (!open.empty()) {
        open.pop_back();
      } else {
        unmatchedClose = true;
        break;
      }
    }
    if (unmatchedClose) continue;
    std::vector<Mask> chain{start};
    Mask cur = start;
    for (int pos : open) {
      cur |= bit(pos);
      chain.push_back(cur);
    }
    const int idx = static_cast<int>(d.chains.size());
    for (std::size_t j = 0; j < chain.size(); ++j) d.location[chain[j]] = {idx, static_cast<int>(j)};
    d.chains.push_back(std::move(chain));
  }
  return d;
}

Mask specular(const SymmetricChainDecomposition& d, Mask z) {
  if (z >= d.location.size()) throw Error("mask outside the ground set");
  const auto [c, pos] = d.location[z];
  const auto& chain = d.chains[c];
  const int target = d.n - cardinality(z) - cardinality(chain.front());
  return chain.at(target);
}

}  // namespace uclab
