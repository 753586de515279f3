#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uclab/core.hpp"

namespace uclab::detail {

enum class Domain { Any, UnionClosed, Antichain };
enum class Status { Pass, Fail, Finding, Skip };
// None: one run per family. Each: one run per supplied word. All: the check
// sweeps every word itself (n <= 5).
enum class WordUse { None, Each, All };

struct Outcome {
  Status status = Status::Pass;
  std::optional<Word> word;
  std::string detail;
};

struct Check {
  std::string id;
  std::string description;
  Domain domain = Domain::UnionClosed;
  int maxN = kMaxGround;
  WordUse words = WordUse::None;
  std::function<Outcome(const SetFamily&, std::span<const Word>)> run;
};

const std::vector<Check>& registry();
const Check* findCheck(std::string_view id);

// Runs the check; exceptions become failures.
Outcome runGuarded(const Check& c, const SetFamily& f, std::span<const Word> words);

}  // namespace uclab::detail
