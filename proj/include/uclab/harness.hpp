#pragma once

// Family streams (exhaustive and seeded samples) and the verification suite
// that runs registered property checks over them.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "uclab/core.hpp"

namespace uclab {

// std::mt19937_64 (fully specified by the C++ standard) with bounded draws
// by rejection, so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  // Fisher-Yates shuffle of the identity word.
  Word word(int n);

 private:
  std::mt19937_64 engine_;
};

// Every non-empty union-closed family on n <= 4 points.
std::vector<SetFamily> enumerateUnionClosed(int n);

struct SampleDraw {
  SetFamily generators;
  SetFamily family;  // closeUnderUnion(generators)
};

// Per draw: g uniform in [1, 2n], then g uniform non-empty masks, then closure.
std::vector<SampleDraw> sampleDraws(int n, std::size_t count, std::uint64_t seed);
std::vector<SetFamily> sampleUnionClosed(int n, std::size_t count, std::uint64_t seed);

// Greedy antichain inside f from a seeded shuffle of its members.
SetFamily randomAntichainWithin(const SetFamily& f, Rng& rng);

enum class FamilyMode { Exhaustive, Sample, Explicit };
enum class WordMode { All, Sample };

struct SuiteConfig {
  int n = 3;
  FamilyMode mode = FamilyMode::Exhaustive;
  std::size_t sampleCount = 1000;
  std::uint64_t seed = 42;
  WordMode wordMode = WordMode::All;
  std::size_t wordsPerFamily = 3;
  std::vector<std::string> checks;  // empty selects every check
  std::string output;
  unsigned threads = 0;  // 0 uses hardware concurrency
  // Explicit mode: run every selected check on these, skipping domain filters.
  std::vector<SetFamily> families;
};

struct CheckInfo {
  std::string id;
  std::string description;
};

const std::vector<CheckInfo>& listChecks();

struct Counterexample {
  std::string check;
  std::string family;  // .fam text
  std::optional<std::string> word;
  std::string detail;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckTally {
  std::string id;
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  std::size_t findings = 0;
  std::optional<Counterexample> firstFailure;
  std::optional<Counterexample> firstFinding;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckTally> checks;
  std::size_t familiesScanned = 0;
  double seconds = 0;

  bool passed() const;
};

// Throws on unknown check ids or invalid configuration before any work.
VerificationReport runSuite(const SuiteConfig& cfg);

// Re-runs the named check on the recorded family (and word, if any).
// Returns the counterexample it produces, or nothing if the check passes.
std::optional<Counterexample> replay(const Counterexample& c);

}  // namespace uclab
