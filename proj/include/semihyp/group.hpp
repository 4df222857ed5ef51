// Group-side analysis: fingerprints, the Higman test, and recognition of the
// exceptional groups C5, C8, C12, S3, D4, Q12 and C4:C4.

#ifndef SEMIHYP_GROUP_HPP_
#define SEMIHYP_GROUP_HPP_

#include <map>
#include <optional>
#include <string>

#include "semihyp/semigroup.hpp"

namespace semihyp {

/// Whether the table satisfies the group axioms (identity + inverses;
/// associativity is part of being a validated FiniteSemigroup).
bool is_group(const FiniteSemigroup& s);

/// Isomorphism-invariant data of a finite group.
struct GroupFingerprint {
  int order = 0;
  bool abelian = false;
  int exponent = 1;
  std::map<int, int> orderMultiset;  // element order -> count
  int centerOrder = 0;
  bool dedekind = false;  // every cyclic subgroup normal
  std::optional<std::string> label;

  friend bool operator==(const GroupFingerprint& a, const GroupFingerprint& b) {
    return a.order == b.order && a.abelian == b.abelian &&
           a.exponent == b.exponent && a.orderMultiset == b.orderMultiset &&
           a.centerOrder == b.centerOrder && a.dedekind == b.dedekind;
  }
};

/// Throws NotAGroup. The label is left empty; recognition fills it.
GroupFingerprint fingerprint(const FiniteSemigroup& g);

/// Abelian of exponent dividing 4 or 6, or a Hamiltonian 2-group
/// (nonabelian, Dedekind, order a power of 2). Throws NotAGroup.
bool is_higman(const FiniteSemigroup& g);

/// The catalog label when G is isomorphic to one of the seven exceptional
/// groups, nothing otherwise. Throws NotAGroup.
std::optional<std::string> recognize_exceptional_group(const FiniteSemigroup& g);

/// Multiplicative order of an element of a group.
int element_order(const FiniteSemigroup& g, int a);

}  // namespace semihyp

#endif  // SEMIHYP_GROUP_HPP_
