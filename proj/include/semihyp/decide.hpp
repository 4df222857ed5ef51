// The hyperbolicity decision: classification of principal factors, the
// sandwich-size constraints on Rees factors, the verdict for a semigroup, and
// the cross-check of every verdict against the exact algebra oracle.

#ifndef SEMIHYP_DECIDE_HPP_
#define SEMIHYP_DECIDE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semihyp/algebra.hpp"
#include "semihyp/green.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

enum class VerdictKind {
  HigmanGroup,
  ExceptionalNull,
  ExceptionalRightZero,
  ExceptionalTwoByTwo,
  ExceptionalAbelianGroup,
  ExceptionalNonabelianGroup,
  Fails
};

enum class FailReason {
  None,
  RadicalTooBig,       // null factor with >= 2 nonzero elements
  GroupNotHyperbolic,  // group factor neither Higman nor exceptional
  NontrivialGroup,     // Rees factor with |G| > 1 and nm > 1
  BadDimensions,       // nm not 1, 2 or 4, or the excluded 1x4 shape
  AllOnesSandwich,     // the excluded all-ones 2x2 sandwich
  SandwichSingular     // 2x2 sandwich with rank < 2 over Q
};

const char* verdict_kind_name(VerdictKind kind);
const char* fail_reason_name(FailReason reason);

struct FactorClassification {
  int factorIndex = 0;
  VerdictKind kind = VerdictKind::Fails;
  FailReason reason = FailReason::None;
  std::string detail;
  std::optional<std::string> groupLabel;    // for Exceptional*Group
  std::optional<IntMatrix> sandwich;        // normalized 0/1, for TwoByTwo
  std::optional<std::string> orientation;   // "right-zero" or "left-zero"
};

struct Verdict {
  bool hyperbolic = false;
  bool notUnital = false;
  std::vector<FactorClassification> classifications;
  std::optional<int> exceptionalIndex;  // index of the factor playing K
  std::optional<std::string> oracleSummary;
};

/// Classifies one principal factor against the exceptional list.
FactorClassification classify_factor(const PrincipalFactor& factor,
                                     int factorIndex = 0);

/// The decision procedure. Q0S not unital yields hyperbolic = false with the
/// notUnital flag set; every other verdict follows the factor classification:
/// hyperbolic iff all factors are Higman groups except at most one, which
/// must be exceptional.
Verdict decide(const FiniteSemigroup& s);

struct LemmaReport {
  bool allowed = false;
  int predictedRadicalDim = 0;       // mn - t^2 for the trivialized sandwich
  std::string predictedQuotient;     // "Q" for t = 1, else "Mt(Q)"
};

/// The sandwich-size constraints on a Rees factor of a hyperbolic algebra:
/// nm in {1, 2, 4}, trivial group when nm > 1, the 1x4 shape excluded, and a
/// 2x2 sandwich invertible over Q (in particular not all-ones).
LemmaReport lemma_constraints(const ReesMatrixData& data);

struct CrossCheckReport {
  bool consistent = false;
  Verdict verdict;
  int algebraDim = 0;
  int radicalDim = 0;
  std::optional<bool> t2Witness;
  std::optional<bool> munnCollapse;
  std::vector<std::string> violations;
};

/// Runs decide and the oracle on the same semigroup and checks that they
/// agree: a yes needs radical dimension at most 1 (exactly 1 for a null or
/// right-zero K, exactly 0 for a group K or no K), radical dimension at
/// least 2 forces a no, a 3-dimensional algebra with a right-zero K carries
/// the T2(Q) witness, and a 2x2 K passes the Munn collapse. Throws NotUnital.
CrossCheckReport cross_check(const FiniteSemigroup& s);

}  // namespace semihyp

#endif  // SEMIHYP_DECIDE_HPP_
