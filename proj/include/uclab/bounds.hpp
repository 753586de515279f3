#pragma once

// Frankl witnesses, lower bounds on the localized average member size, the
// single-member removal trace, and counting bounds for join-irreducibles.

#include <optional>
#include <vector>

#include "uclab/accounting.hpp"
#include "uclab/core.hpp"
#include "uclab/rational.hpp"

namespace uclab {

// Smallest a with 2|F_a| >= |F|.
std::optional<int> franklWitness(const SetFamily& f);

// Sign of d - log2(num/den) computed exactly; num >= den >= 1.
int compareWithLog2(const Rational& d, std::uint64_t num, std::uint64_t den);

// A value of the form base - (1/2) log2(num/den).
struct LogBound {
  Rational base;
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  double approx() const;
  // Sign of (this - x).
  int compare(const Rational& x) const;
};

struct AverageReport {
  SetFamily localizer;
  std::size_t idealSize = 0;
  std::size_t lengthSum = 0;
  std::size_t upsetSize = 0;  // |S↑| in 2^X
  // Sum over a of |pi_w(a) ∩ S↑| and |sigma_w(a) ∩ S↑|.
  std::size_t piCount = 0;
  std::size_t sigmaCount = 0;
  int sigmaS = 0;
  Rational boundLocal;
  LogBound boundGeneral;
  // Present when min(F) is a maximal antichain of 2^X not containing the empty set.
  std::optional<Rational> boundMaxAntichain;
  // Same bound with the smallest k over maximal antichains inside F; n <= 4.
  std::optional<Rational> boundMaxAntichainSearch;
  Rational boundInvariant;
  Rational boundHyper;
  AssertionReport checks;

  Rational average() const;
};

// F union-closed, S an antichain inside F.
AverageReport averageReport(const SetFamily& f, const SetFamily& s, const Word& w);

struct HyperAverageReport {
  SetFamily localizer;
  std::size_t idealSize = 0;
  std::size_t lengthSum = 0;
  std::size_t hyperSigmaCount = 0;  // sum over F[S] of |Sigma(F,f)|
  std::size_t hyperPiCount = 0;     // sum over a of |Pi(F,a) ∩ S↑|
  std::size_t coverUnionCount = 0;  // sum over F[S] of |f ∪ upper covers of f|
  std::size_t pureFloor = 0;        // sum over F[S] of |{a in g : nothing below g - a}|
  Rational boundHyper;
  Rational boundCovers;
  AssertionReport checks;

  Rational average() const;
};

HyperAverageReport hyperAverageReport(const SetFamily& f, const SetFamily& s);

// Reimer: the average member size of F is at least (1/2) log2 |F|.
bool reimerHolds(const SetFamily& f);

enum class SwapCase { NoSwap, BarSwap };

struct RemovalTrace {
  Mask removed = 0;
  Word word;
  std::vector<Mask> swapChain;      // m_0 = removed, m_1, ..., m_k
  std::vector<int> swapIndices;     // i_1 < ... < i_k, 1-based steps
  std::vector<Mask> missingElements;  // mu_0 .. mu_n
  std::optional<SwapCase> caseTag;  // when F is union-closed and m is join-irreducible
  SetFamily image;
  SetFamily reducedImage;
  AssertionReport checks;
};

// F need not be union-closed.
RemovalTrace removalTrace(const SetFamily& f, Mask m, const Word& w);

struct IrreducibleBoundReport {
  std::size_t jCount = 0;
  std::size_t minImage = 0;
  std::size_t secondLevel = 0;
  std::uint64_t imageBound = 0;
  std::uint64_t spernerBound = 0;
  AssertionReport checks;
};

IrreducibleBoundReport irreducibleBound(const SetFamily& f, const Word& w);

// 2 C(n, n/2) + C(n, n/2 + 1), with n/2 rounded down.
std::uint64_t spernerBound(int n);

}  // namespace uclab
