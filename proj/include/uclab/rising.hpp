#pragma once

// The rising operator phi_w, the star closure z* and the fiber/orbit
// structure it induces on a union-closed family.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uclab/core.hpp"
#include "uclab/rational.hpp"

namespace uclab {

class RisingTranscript {
 public:
  const SetFamily& input() const { return input_; }
  const Word& word() const { return word_; }
  // sections()[i] is the family after i steps; sections().back() is the image.
  const std::vector<SetFamily>& sections() const { return sections_; }
  const SetFamily& image() const { return sections_.back(); }

  // z_0..z_n for the input member at canonical position i.
  std::span<const Mask> trajectory(std::size_t i) const {
    return {traj_.data() + i * stride(), stride()};
  }
  std::span<const Mask> trajectoryOf(Mask g) const;
  Mask forwardAt(std::size_t i) const { return traj_[i * stride() + stride() - 1]; }
  Mask forward(Mask g) const;
  std::optional<Mask> inverse(Mask eta) const;
  // forward(F_a): images of the members containing a.
  SetFamily forwardImage(const SetFamily& sub) const;

 private:
  friend RisingTranscript rise(const SetFamily& f, const Word& w);
  RisingTranscript(SetFamily input, Word word) : input_(std::move(input)), word_(std::move(word)) {}
  std::size_t stride() const { return static_cast<std::size_t>(word_.size()) + 1; }

  SetFamily input_;
  Word word_;
  std::vector<SetFamily> sections_;
  std::vector<Mask> traj_;
  // Aligned with image members: canonical index of the preimage.
  std::vector<std::size_t> preimage_;
};

// Works for any non-empty family; union-closedness is not needed.
RisingTranscript rise(const SetFamily& f, const Word& w);

// z* = union of the members of F contained in z, tabulated over 2^n.
class StarOperator {
 public:
  // Requires F union-closed.
  explicit StarOperator(const SetFamily& f);
  // Same table without the union-closed precondition.
  static StarOperator unchecked(const SetFamily& f);

  Mask operator()(Mask z) const { return star_[z]; }
  // True when some member lies below z, i.e. z is in upset(min F).
  bool above(Mask z) const { return above_[z] != 0; }

 private:
  StarOperator() = default;
  void build(const SetFamily& f);
  std::vector<Mask> star_;
  std::vector<std::uint8_t> above_;
};

Mask star(const SetFamily& f, Mask z);

struct FiberReport {
  Mask owner;
  SetFamily fiber;
  SetFamily maxFiber;
};

FiberReport fiber(const SetFamily& f, Mask g);
// One report per member, in canonical order.
std::vector<FiberReport> allFibers(const SetFamily& f);

// Every word w' with phi_w'(g) = eta. Requires n <= 8.
std::vector<Word> wordsRealizing(const SetFamily& f, Mask g, Mask eta);

struct InvariantFamily {
  SetFamily family;
  int rank = 0;
  // (x, x*) sorted by x.
  std::vector<std::pair<Mask, Mask>> orbitIndex;

  Mask ownerOf(Mask x) const;
};

// Union of the maximal fibers.
InvariantFamily invariantFamily(const SetFamily& f);
// Union of the images over all n! words. Requires n <= 8.
InvariantFamily invariantFamilyAllWords(const SetFamily& f);

struct BurnsideReport {
  std::size_t orbitCount = 0;
  std::uint64_t wordStabilizerSum = 0;
  Rational inequalityLHS;
};

// Requires n <= 7.
BurnsideReport burnsideReport(const SetFamily& f);

}  // namespace uclab
