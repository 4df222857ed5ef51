// Finite semigroups as multiplication tables, plus the basic constructions:
// validation, adjoining a zero or identity, Rees matrix semigroups, 0-disjoint
// unions, and isomorphism testing for small orders.

#ifndef SEMIHYP_SEMIGROUP_HPP_
#define SEMIHYP_SEMIGROUP_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semihyp/rational.hpp"

namespace semihyp {

enum class ErrorKind {
  NotAssociative,
  IndexOutOfRange,
  ZeroNotAbsorbing,
  IdentityNotNeutral,
  IrregularSandwich,
  OrderTooLarge,
  NotZeroSimple,
  NoIdempotent,
  NotAGroup,
  NoZero,
  NotUnital,
  WrongDimension,
  ParseError,
  Internal
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " +
                           message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// A finite semigroup on elements {0, ..., order-1}. table(i, j) is the index
/// of the product x_i * x_j. The zero element, when present, is an ordinary
/// element flagged by `zero`; likewise `identity`.
struct FiniteSemigroup {
  int order = 0;
  IntMatrix table;
  std::optional<int> zero;
  std::optional<int> identity;
  std::vector<std::string> names;  // empty, or one label per element

  int mul(int a, int b) const { return table(a, b); }

  std::string name_of(int i) const {
    if (i >= 0 && i < static_cast<int>(names.size()) && !names[i].empty())
      return names[i];
    return "x" + std::to_string(i);
  }
};

/// Checks a raw table and returns the validated semigroup. A zero or identity
/// passed in is verified; one not passed in is auto-detected (both are unique
/// when they exist, so detection is unambiguous).
///
/// Throws Error with kind IndexOutOfRange, NotAssociative (message carries a
/// witness triple), ZeroNotAbsorbing or IdentityNotNeutral.
FiniteSemigroup validate_table(const IntMatrix& table,
                               std::optional<int> zero = std::nullopt,
                               std::optional<int> identity = std::nullopt,
                               std::vector<std::string> names = {});

/// First associativity violation (i, j, k), if any.
std::optional<std::array<int, 3>> associativity_witness(const IntMatrix& table);

enum class Adjoin { Zero, Identity };

/// S with a new absorbing or neutral element appended; S itself when it
/// already has the requested distinguished element.
FiniteSemigroup adjoin(const FiniteSemigroup& s, Adjoin kind);

/// Relabels S by a permutation: element i becomes perm[i].
FiniteSemigroup relabel(const FiniteSemigroup& s, const std::vector<int>& perm);

/// 0-disjoint union: both zeros are glued, every cross product is zero.
FiniteSemigroup zero_union(const FiniteSemigroup& a, const FiniteSemigroup& b);

/// Rees matrix data M0(G; m, n; P): a group table, dimensions, and an n x m
/// sandwich matrix over G union {theta}; entry -1 encodes theta, any other
/// entry is a group element index.
struct ReesMatrixData {
  FiniteSemigroup group;
  int m = 0;
  int n = 0;
  IntMatrix sandwich;
  bool regular = false;
};

/// Whether each row and column of the sandwich has a non-theta entry.
bool sandwich_is_regular(const IntMatrix& sandwich);

ReesMatrixData make_rees_data(FiniteSemigroup group, int m, int n,
                              IntMatrix sandwich);

/// The Rees matrix semigroup on {(g, i, j)} union {theta} with product
/// (g,i,j)(h,k,l) = (g p_{j,k} h, i, l), theta when p_{j,k} is theta.
/// Element (g,i,j) has index (i*n + j)*|G| + g; theta is the last element.
///
/// Throws IrregularSandwich when a row or column of P is all theta.
FiniteSemigroup rees_matrix_construct(const ReesMatrixData& data);

inline constexpr int kDefaultIsoBound = 16;

/// A multiplication-preserving bijection A -> B, if one exists.
/// Anti-isomorphisms do not count. Throws OrderTooLarge above the bound.
std::optional<std::vector<int>> isomorphism(const FiniteSemigroup& a,
                                            const FiniteSemigroup& b,
                                            int maxOrder = kDefaultIsoBound);

bool is_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b,
                   int maxOrder = kDefaultIsoBound);

/// Indices of the idempotent elements.
std::vector<int> idempotents(const FiniteSemigroup& s);

}  // namespace semihyp

#endif  // SEMIHYP_SEMIGROUP_HPP_
