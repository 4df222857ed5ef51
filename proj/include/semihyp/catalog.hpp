// Named groups and semigroups used by the decision procedure, the CLI and the
// test suites, plus the constructions that build them.

#ifndef SEMIHYP_CATALOG_HPP_
#define SEMIHYP_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp {

struct CatalogEntry {
  std::string name;
  FiniteSemigroup object;
  std::string description;
};

/// All named objects, in a fixed order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& name);

// Group constructions.
FiniteSemigroup cyclic_group(int n);
FiniteSemigroup dihedral_group(int n);      // order 2n (n >= 3; D3 = S3)
FiniteSemigroup dicyclic_group(int n);      // order 4n; n=2 is Q8, n=3 is Q12
FiniteSemigroup c4_semidirect_c4();         // a^4 = b^4 = 1, b a b^-1 = a^-1
FiniteSemigroup alternating_group_4();
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

// Semigroup constructions.
FiniteSemigroup null_semigroup(int nonzeroCount);
FiniteSemigroup right_zero_with_zero();     // T = M0({1},1,2;(1 1)^t)
FiniteSemigroup brandt_b2();                // M0({1},2,2;I)
FiniteSemigroup trivial_group_with_zero();  // the 2-element semilattice {1, 0}

}  // namespace semihyp

#endif  // SEMIHYP_CATALOG_HPP_
