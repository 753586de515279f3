#pragma once

// Counting sets around an element a: S/P for arbitrary families, the
// spurious/pure sets of one rising run, and their word-independent
// (hyper) versions.

#include <string>
#include <vector>

#include "uclab/core.hpp"
#include "uclab/rising.hpp"

namespace uclab {

struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct AssertionReport {
  std::vector<IdentityCheck> checks;

  void add(std::string name, bool holds, std::string detail = {});
  bool ok() const;
  std::vector<IdentityCheck> failures() const;
};

struct SPCounts {
  int element = 0;
  SetFamily S;  // z in H with z + a not in H
  SetFamily P;  // z in H containing a with z - a not in H
  std::size_t withCount = 0;
  std::size_t withoutCount = 0;

  // |H_a| - |H_ā| = |P| - |S|
  bool identityHolds() const;
};

// H may be any family.
SPCounts spCounts(const SetFamily& h, int a);

struct RisingAccounts {
  RisingTranscript transcript;
  std::vector<SetFamily> sigmaByElement;
  std::vector<SetFamily> piByElement;
  // Aligned with transcript.image() members.
  std::vector<Mask> sigmaLocal;
  std::vector<Mask> piLocal;
  AssertionReport checks;

  Mask sigmaAt(Mask eta) const;
  Mask piAt(Mask eta) const;
};

RisingAccounts risingAccounts(const SetFamily& f, const Word& w);

struct PureLowerBound {
  // Per element a: images of the g in F_a with no member below g - a.
  std::vector<SetFamily> byElement;
  AssertionReport checks;
};

PureLowerBound pureLowerBound(const SetFamily& f, const Word& w);

// sigma(eta) and pi(eta) against intersections over image members below eta.
AssertionReport localCharacterization(const SetFamily& f, const Word& w);

struct HyperAccounts {
  SetFamily family;
  InvariantFamily invariant;
  std::vector<SetFamily> sigmaByElement;
  std::vector<SetFamily> piByElement;
  // Aligned with family members.
  std::vector<Mask> sigmaLocal;
  std::vector<Mask> piLocal;
  std::vector<FiberReport> fibers;
  // covers[a][i] = Cov_a(family[i]).
  std::vector<std::vector<SetFamily>> covers;
  AssertionReport checks;

  Mask sigmaAt(Mask g) const;
  Mask piAt(Mask g) const;
  const SetFamily& cov(int a, Mask g) const;
};

HyperAccounts hyperAccounts(const SetFamily& f);

// For g not containing a: some maximal fiber element misses a, some member
// containing a covers g, and Cov_a(g) is non-empty, all or none.
AssertionReport coveringEquivalences(const SetFamily& f);

// A word w' with sigma(phi_w'(g)) contained in sigma(phi_w'(f)), for f ⊆ g.
Word spuriousMonotonicity(const SetFamily& f, Mask lower, Mask upper);

}  // namespace uclab
