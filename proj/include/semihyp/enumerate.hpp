// Exhaustive enumeration of small semigroups up to isomorphism, by
// backtracking over tables with associativity pruning and canonical-form
// deduplication (lexicographically minimal table over all relabelings).

#ifndef SEMIHYP_ENUMERATE_HPP_
#define SEMIHYP_ENUMERATE_HPP_

#include <functional>
#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp {

inline constexpr int kEnumerationOrderCap = 4;

struct EnumerateFilters {
  bool withZero = false;    // keep only semigroups with an absorbing element
  bool unitalOnly = false;  // keep only semigroups with Q0S unital
};

/// Visits every semigroup of the given order up to isomorphism, each as its
/// canonical representative, in a fixed deterministic order.
/// Throws OrderTooLarge above kEnumerationOrderCap.
void enumerate_semigroups(int order, const EnumerateFilters& filters,
                          const std::function<void(const FiniteSemigroup&)>& visit);

std::vector<FiniteSemigroup> enumerate_semigroups(
    int order, const EnumerateFilters& filters = {});

/// Lexicographically minimal relabeling of the table (row-major order).
IntMatrix canonical_table(const IntMatrix& table);

}  // namespace semihyp

#endif  // SEMIHYP_ENUMERATE_HPP_
