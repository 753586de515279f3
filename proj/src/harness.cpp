#include "uclab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "checks.hpp"
#include "uclab/setfam.hpp"

namespace uclab {

namespace {

using detail::Check;
using detail::Domain;
using detail::Outcome;
using detail::Status;
using detail::WordUse;

// splitmix64 finalizer, used to derive per-family word seeds.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SetFamily familyFromIndex(const GroundSet& ground, std::uint64_t index) {
  std::vector<Mask> members;
  for (Mask m = 0; index != 0; ++m, index >>= 1)
    if (index & 1U) members.push_back(m);
  return SetFamily::fromCanonical(ground, std::move(members));
}

struct Item {
  std::optional<SetFamily> any;
  std::optional<SetFamily> unionClosed;
  std::optional<SetFamily> antichain;
};

struct LocalTally {
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  std::size_t findings = 0;
  std::uint64_t failureAt = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t findingAt = std::numeric_limits<std::uint64_t>::max();
  std::optional<Counterexample> firstFailure;
  std::optional<Counterexample> firstFinding;

  void merge(LocalTally&& o) {
    evaluated += o.evaluated;
    failed += o.failed;
    findings += o.findings;
    if (o.failureAt < failureAt) {
      failureAt = o.failureAt;
      firstFailure = std::move(o.firstFailure);
    }
    if (o.findingAt < findingAt) {
      findingAt = o.findingAt;
      firstFinding = std::move(o.firstFinding);
    }
  }
};

Counterexample makeCounterexample(const Check& c, const SetFamily& f, const Outcome& o) {
  return {c.id, formatFam(f),
          o.word ? std::optional<std::string>(o.word->format(f.ground())) : std::nullopt, o.detail};
}

// Per-word checks run one word at a time so every failure names its word.
Outcome evaluate(const Check& c, const SetFamily& f, std::span<const Word> words) {
  if (c.words != WordUse::Each) return detail::runGuarded(c, f, {});
  Outcome last{Status::Skip, std::nullopt, {}};
  for (const Word& w : words) {
    Outcome o = detail::runGuarded(c, f, std::span<const Word>(&w, 1));
    if (o.status == Status::Fail || o.status == Status::Finding) {
      if (!o.word) o.word = w;
      return o;
    }
    if (o.status == Status::Pass) last = o;
  }
  return last;
}

void record(LocalTally& t, const Check& c, const SetFamily& f, const Outcome& o, std::uint64_t at) {
  if (o.status == Status::Skip) return;
  ++t.evaluated;
  if (o.status == Status::Fail) {
    ++t.failed;
    if (at < t.failureAt) {
      t.failureAt = at;
      t.firstFailure = makeCounterexample(c, f, o);
    }
  } else if (o.status == Status::Finding) {
    ++t.findings;
    if (at < t.findingAt) {
      t.findingAt = at;
      t.firstFinding = makeCounterexample(c, f, o);
    }
  }
}

std::vector<const Check*> selectChecks(const std::vector<std::string>& ids) {
  std::vector<const Check*> out;
  if (ids.empty()) {
    for (const Check& c : detail::registry()) out.push_back(&c);
    return out;
  }
  for (const std::string& id : ids) {
    const Check* c = detail::findCheck(id);
    if (!c) throw Error("unknown check: " + id);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.mode == FamilyMode::Explicit) {
    if (cfg.families.empty()) throw Error("explicit mode needs at least one family");
    for (const SetFamily& f : cfg.families)
      if (cfg.wordMode == WordMode::All && f.n() > 5) throw Error("all-words mode requires n <= 5");
    return;
  }
  if (cfg.n < 1 || cfg.n > kMaxGround) throw Error("n must be in [1, 16]");
  if (cfg.mode == FamilyMode::Exhaustive && cfg.n > 4) throw Error("exhaustive mode requires n <= 4");
  if (cfg.wordMode == WordMode::All && cfg.n > 5) throw Error("all-words mode requires n <= 5");
  if (cfg.wordMode == WordMode::Sample && cfg.wordsPerFamily == 0)
    throw Error("sampled words need wordsPerFamily >= 1");
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below: empty range");
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

Word Rng::word(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[below(static_cast<std::uint64_t>(i) + 1)]);
  return Word(std::move(order));
}

std::vector<SetFamily> enumerateUnionClosed(int n) {
  if (n < 0 || n > 4) throw Error("enumerateUnionClosed requires n <= 4");
  GroundSet ground(n);
  const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
  std::vector<SetFamily> out;
  for (std::uint64_t k = 1; k < count; ++k) {
    SetFamily f = familyFromIndex(ground, k);
    if (isUnionClosed(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<SampleDraw> sampleDraws(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1 || n > kMaxGround) throw Error("sampling requires 1 <= n <= 16");
  GroundSet ground(n);
  Rng rng(seed);
  const std::uint64_t nonEmpty = (std::uint64_t{1} << n) - 1;
  std::vector<SampleDraw> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t g = 1 + rng.below(2 * static_cast<std::uint64_t>(n));
    std::vector<Mask> gens;
    for (std::uint64_t j = 0; j < g; ++j) gens.push_back(static_cast<Mask>(1 + rng.below(nonEmpty)));
    SetFamily generators(ground, std::move(gens));
    SetFamily family = closeUnderUnion(generators);
    out.push_back({std::move(generators), std::move(family)});
  }
  return out;
}

std::vector<SetFamily> sampleUnionClosed(int n, std::size_t count, std::uint64_t seed) {
  std::vector<SetFamily> out;
  for (SampleDraw& d : sampleDraws(n, count, seed)) out.push_back(std::move(d.family));
  return out;
}

SetFamily randomAntichainWithin(const SetFamily& f, Rng& rng) {
  if (f.empty()) throw Error("empty family");
  std::vector<Mask> order(f.begin(), f.end());
  for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  std::vector<Mask> chosen;
  for (Mask m : order)
    if (std::none_of(chosen.begin(), chosen.end(),
                     [m](Mask c) { return isSubset(c, m) || isSubset(m, c); }))
      chosen.push_back(m);
  return SetFamily(f.ground(), std::move(chosen));
}

const std::vector<CheckInfo>& listChecks() {
  static const std::vector<CheckInfo> info = [] {
    std::vector<CheckInfo> v;
    for (const Check& c : detail::registry()) v.push_back({c.id, c.description});
    return v;
  }();
  return info;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.failed == 0; });
}

VerificationReport runSuite(const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  validate(cfg);
  const std::vector<const Check*> selected = selectChecks(cfg.checks);

  std::vector<SampleDraw> draws;
  std::uint64_t total = 0;
  switch (cfg.mode) {
    case FamilyMode::Exhaustive:
      total = (std::uint64_t{1} << (std::size_t{1} << cfg.n)) - 1;
      break;
    case FamilyMode::Sample:
      draws = sampleDraws(cfg.n, cfg.sampleCount, cfg.seed);
      total = draws.size();
      break;
    case FamilyMode::Explicit:
      total = cfg.families.size();
      break;
  }

  std::vector<std::vector<Word>> allWordsByN(6);
  if (cfg.wordMode == WordMode::All)
    for (int n = 1; n <= 5; ++n) allWordsByN[n] = allWords(n);

  // Stream position i maps to the exhaustive index i + 1, the i-th draw, or
  // the i-th explicit family.
  auto itemAt = [&](std::uint64_t i) {
    Item item;
    switch (cfg.mode) {
      case FamilyMode::Exhaustive: {
        SetFamily f = familyFromIndex(GroundSet(cfg.n), i + 1);
        if (isUnionClosed(f)) item.unionClosed = f;
        if (isAntichain(f)) item.antichain = f;
        item.any = std::move(f);
        break;
      }
      case FamilyMode::Sample:
        item.any = draws[i].generators;
        item.unionClosed = draws[i].family;
        item.antichain = minimal(draws[i].family);
        break;
      case FamilyMode::Explicit:
        // Union-closed checks see the family as given so a broken input fails;
        // antichain checks get its minimal members, as in sample mode.
        item.any = item.unionClosed = cfg.families[i];
        item.antichain = minimal(cfg.families[i]);
        break;
    }
    return item;
  };

  auto wordsFor = [&](int n, std::uint64_t i) {
    if (cfg.wordMode == WordMode::All) return allWordsByN[n];
    Rng rng(mix64(cfg.seed ^ mix64(i)));
    std::vector<Word> words;
    for (std::size_t k = 0; k < cfg.wordsPerFamily; ++k) words.push_back(rng.word(n));
    return words;
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::mutex mergeLock;
  std::vector<LocalTally> merged(selected.size());
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<LocalTally> local(selected.size());
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= total) break;
        const std::uint64_t end = std::min(total, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          Item item = itemAt(i);
          const int n = item.any->n();
          std::vector<Word> words;
          bool haveWords = false;
          for (std::size_t k = 0; k < selected.size(); ++k) {
            const Check& c = *selected[k];
            if (n > c.maxN) continue;
            const std::optional<SetFamily>& f = c.domain == Domain::Any           ? item.any
                                                : c.domain == Domain::UnionClosed ? item.unionClosed
                                                                                  : item.antichain;
            if (!f) continue;
            if (c.words == WordUse::Each && !haveWords) {
              words = wordsFor(n, i);
              haveWords = true;
            }
            record(local[k], c, *f, evaluate(c, *f, words), i);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mergeLock);
      if (!failure) failure = std::current_exception();
      return;
    }
    std::lock_guard lock(mergeLock);
    for (std::size_t k = 0; k < selected.size(); ++k) merged[k].merge(std::move(local[k]));
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  VerificationReport report{cfg, {}, static_cast<std::size_t>(total), 0};
  for (std::size_t k = 0; k < selected.size(); ++k) {
    LocalTally& t = merged[k];
    report.checks.push_back({selected[k]->id, t.evaluated, t.failed, t.findings,
                             std::move(t.firstFailure), std::move(t.firstFinding)});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<Counterexample> replay(const Counterexample& c) {
  const Check* check = detail::findCheck(c.check);
  if (!check) throw Error("unknown check: " + c.check);
  SetFamily f = parseFam(c.family);
  std::vector<Word> words;
  if (c.word) words.push_back(Word::parse(f.ground(), *c.word));
  if (check->words == WordUse::Each && words.empty()) throw Error("counterexample is missing its word");
  Outcome o = evaluate(*check, f, words);
  if (o.status != Status::Fail && o.status != Status::Finding) return std::nullopt;
  return makeCounterexample(*check, f, o);
}

}  // namespace uclab
