// The contracted rational semigroup algebra Q0S as exact structure constants,
// its identity, the Jacobson radical via the trace form of the left regular
// representation, and the explicit isomorphism witnesses (Munn collapse,
// upper-triangular 2x2 relations).

#ifndef SEMIHYP_ALGEBRA_HPP_
#define SEMIHYP_ALGEBRA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semihyp/linalg.hpp"
#include "semihyp/rational.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Q0S in the basis of nonzero elements of S. Products of basis elements are
/// again basis elements or zero, so the structure constants reduce to an
/// index table: product(i, j) is a basis index, or -1 when the semigroup
/// product is theta.
struct AlgebraRep {
  int dim = 0;
  std::vector<int> basisElements;  // basis index -> element index in S
  std::vector<std::string> basisLabels;
  IntMatrix product;
  std::optional<QVector> identityCoords;
};

/// Throws NoZero when S has no zero (callers adjoin one first; note that
/// Q0(S with adjoined theta) is QS).
AlgebraRep structure_constants(const FiniteSemigroup& s);

/// The unique two-sided identity of A, if A is unital.
std::optional<QVector> find_identity(const AlgebraRep& a);

/// Product of two coordinate vectors under the algebra multiplication.
QVector multiply(const AlgebraRep& a, const QVector& x, const QVector& y);

/// Matrix of left multiplication by the coordinate vector x.
QMatrix left_multiplication(const AlgebraRep& a, const QVector& x);

struct RadicalData {
  int dimension = 0;
  std::vector<QVector> basis;
  int nilpotencyIndex = 1;  // least k with J^k = 0
};

/// J(A) as the kernel of the Gram matrix G_ij = trace(L_i L_j) of the left
/// regular representation; over Q this radical of the trace form equals the
/// Jacobson radical (Dickson's criterion). Throws NotUnital.
RadicalData radical_basis(const AlgebraRep& a);

/// Dimension of the trace-form kernel of the quotient algebra A/J on a
/// complement of the radical; 0 when the quotient is semisimple.
int quotient_radical_dimension(const AlgebraRep& a, const RadicalData& rad);

/// For a square sandwich over the trivial group: whether the trivialized
/// sandwich is invertible over Q, with the collapse map X -> X * Pbar checked
/// multiplicative on all pairs of Munn basis matrix units.
/// Throws WrongDimension when m != n.
bool munn_collapse_check(const ReesMatrixData& data);

/// Whether a 3-dimensional unital algebra is the upper triangular 2x2
/// matrices: looks for E1, E2 = 1 - E1 and N spanning the radical with
/// E1 + E2 = 1, E1^2 = E1, E2^2 = E2, E1 E2 = E2 E1 = 0, N^2 = 0,
/// E1 N = N, N E2 = N, N E1 = E2 N = 0.
/// Throws WrongDimension when dim != 3, NotUnital when A has no identity.
bool t2_witness_check(const AlgebraRep& a);

/// Radical dimension of the Munn algebra of a 0/1 sandwich, computed inside
/// the Munn ideal: the Rees semigroup over the trivial group is built, an
/// identity is adjoined at the semigroup level when Q0 of it is not unital,
/// and the radical is verified to lie inside the Munn ideal.
int munn_radical_dimension(const IntMatrix& trivializedSandwich);

/// Everything the oracle reports for one semigroup.
struct OracleReport {
  int dim = 0;
  bool unital = false;
  std::optional<QVector> identity;
  std::optional<RadicalData> radical;   // present iff unital
  std::optional<bool> t2Witness;        // present iff unital and dim == 3
  std::vector<std::string> basisLabels;
};

/// Runs structure_constants / find_identity / radical_basis /
/// t2_witness_check on S (zero adjoined internally when missing).
OracleReport oracle_report(const FiniteSemigroup& s);

}  // namespace semihyp

#endif  // SEMIHYP_ALGEBRA_HPP_
