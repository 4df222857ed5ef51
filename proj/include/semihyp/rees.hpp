// Rees matrix coordinates for 0-simple principal factors: extraction of
// M0(G; m, n; P), normalization of the sandwich matrix, and the rank of its
// trivialization over the rationals.

#ifndef SEMIHYP_REES_HPP_
#define SEMIHYP_REES_HPP_

#include "semihyp/green.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Puts a non-null principal factor into Rees coordinates. G is the maximal
/// subgroup at the lowest-index idempotent, m the number of R-classes, n the
/// number of L-classes; the sandwich entries are products of the class
/// representatives. The result is verified internally: reconstructing the
/// Rees semigroup gives a semigroup isomorphic to the factor.
///
/// Throws NotZeroSimple when the factor is null or has more than one nonzero
/// J-class; NoIdempotent cannot occur for a finite 0-simple factor and is
/// raised as an internal error.
ReesMatrixData decompose_zero_simple(const PrincipalFactor& factor);

/// The sandwich with theta entries replaced by 0 and group entries by 1.
IntMatrix trivialize(const IntMatrix& sandwich);

/// Rank of the trivialized sandwich over Q, computed exactly.
int trivialized_rank(const ReesMatrixData& data);

struct SandwichAnalysis {
  ReesMatrixData original;
  ReesMatrixData normalized;  // p_{1,1} = group identity
  IntMatrix trivialized;
  int rankOverQ = 0;
};

/// Permutes a nonzero entry into position (1,1) and scales rows and columns
/// by group elements so that the first row and column of the sandwich consist
/// of identity entries wherever nonzero. The normalized data generates a
/// semigroup isomorphic to the original's. Throws IrregularSandwich.
SandwichAnalysis normalize_sandwich(const ReesMatrixData& data);

}  // namespace semihyp

#endif  // SEMIHYP_REES_HPP_
