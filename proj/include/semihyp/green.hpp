// Green's relations, the J-class order, principal series and principal
// factors of a finite semigroup.

#ifndef SEMIHYP_GREEN_HPP_
#define SEMIHYP_GREEN_HPP_

#include <optional>
#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Partitions of the element set into R-, L-, H- and J-classes, plus the
/// partial order on J-classes by containment of principal two-sided ideals.
/// Classes are listed in increasing order of their minimum element.
struct GreenStructure {
  std::vector<std::vector<int>> rClasses, lClasses, hClasses, jClasses;
  std::vector<int> rOf, lOf, hOf, jOf;  // element -> class id
  // jLeq[c][d]: the ideal of class c is contained in the ideal of class d.
  std::vector<std::vector<bool>> jLeq;
};

GreenStructure compute_green(const FiniteSemigroup& s);

/// Ideals {theta} = S_n c ... c S_1 = S, ascending, consecutive ones differing
/// by exactly one J-class. The default linear extension picks, at each step,
/// the addable class with the smallest minimum element. Throws NoZero.
std::vector<std::vector<int>> principal_series(const FiniteSemigroup& s);

/// Up to `maxCount` distinct principal series (distinct linear extensions of
/// the J-order). The first one is the default series.
std::vector<std::vector<std::vector<int>>> principal_series_variants(
    const FiniteSemigroup& s, int maxCount);

enum class FactorKind { Null, Group, ZeroSimple };

const char* factor_kind_name(FactorKind kind);

/// One principal factor S_i/S_{i+1}: the Rees quotient of a nonzero J-class,
/// with products falling outside the class sent to theta. reesData is filled
/// for Group (m = n = 1) and ZeroSimple factors.
struct PrincipalFactor {
  FactorKind kind = FactorKind::Null;
  std::vector<int> elements;  // the J-class, ascending, in the parent's indices
  FiniteSemigroup asSemigroup;  // elements remapped to 0..k-1, theta = k
  std::optional<ReesMatrixData> reesData;
  int nonzeroCount = 0;
};

/// The principal factors along the default principal series, bottom factor
/// first. A zero is adjoined internally when S lacks one.
std::vector<PrincipalFactor> principal_factors(const FiniteSemigroup& s);

/// Factors along a caller-chosen series (as returned by
/// principal_series_variants), bottom factor first.
std::vector<PrincipalFactor> principal_factors(
    const FiniteSemigroup& s, const std::vector<std::vector<int>>& series);

}  // namespace semihyp

#endif  // SEMIHYP_GREEN_HPP_
