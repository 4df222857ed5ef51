// Shared helpers for the test suites: hand-written reference tables and
// independent brute-force oracles (exhaustive associativity checks,
// permutation-search isomorphism) kept deliberately separate from the
// library's own algorithms.

#ifndef SEMIHYP_TESTS_SUPPORT_HPP_
#define SEMIHYP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "semihyp/semigroup.hpp"

namespace semihyp::testing {

// T1 = {1, e, f, 0} with ef = f, fe = e, written out by hand.
inline IntMatrix t1_table() {
  IntMatrix t(4, 4);
  t << 0, 1, 2, 3,
       1, 1, 2, 3,
       2, 1, 2, 3,
       3, 3, 3, 3;
  return t;
}

// T = {e, f, 0}, the bottom factor of T1.
inline IntMatrix t_table() {
  IntMatrix t(3, 3);
  t << 0, 1, 2,
       0, 1, 2,
       2, 2, 2;
  return t;
}

// B2 matrix units {e11, e12, e21, e22, 0}.
inline IntMatrix b2_table() {
  IntMatrix t(5, 5);
  t << 0, 1, 4, 4, 4,
       4, 4, 0, 1, 4,
       2, 3, 4, 4, 4,
       4, 4, 2, 3, 4,
       4, 4, 4, 4, 4;
  return t;
}

// Exhaustive triple check, independent of validate_table.
inline bool brute_associative(const IntMatrix& t) {
  const int n = static_cast<int>(t.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t(t(i, j), k) != t(i, t(j, k))) return false;
  return true;
}

// Isomorphism by trying every bijection; usable up to order ~8.
inline bool brute_isomorphic(const FiniteSemigroup& a,
                             const FiniteSemigroup& b) {
  if (a.order != b.order) return false;
  std::vector<int> perm(a.order);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.order && ok; ++i)
      for (int j = 0; j < a.order && ok; ++j)
        ok = perm[a.table(i, j)] == b.table(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline int brute_idempotent_count(const IntMatrix& t) {
  int count = 0;
  for (int i = 0; i < t.rows(); ++i)
    if (t(i, i) == i) ++count;
  return count;
}

// All associative tables of the given order, one canonical representative
// per relabeling class, by plain brute force over every table. Practical for
// order <= 3 (3^9 = 19683 candidates).
inline std::set<std::vector<int>> brute_semigroup_classes(int n) {
  std::set<std::vector<int>> classes;
  std::vector<int> cells(n * n, 0);
  std::vector<int> perm(n);
  while (true) {
    IntMatrix t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = cells[i * n + j];
    if (brute_associative(t)) {
      std::vector<int> best;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        std::vector<int> flat(n * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            flat[a * n + b] = perm[t(inv[a], inv[b])];
        if (best.empty() || flat < best) best = flat;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    int pos = n * n - 1;
    while (pos >= 0 && cells[pos] == n - 1) cells[pos--] = 0;
    if (pos < 0) break;
    ++cells[pos];
  }
  return classes;
}

inline std::mt19937 test_rng(unsigned seed = 20240817) {
  return std::mt19937(seed);
}

}  // namespace semihyp::testing

#endif  // SEMIHYP_TESTS_SUPPORT_HPP_
