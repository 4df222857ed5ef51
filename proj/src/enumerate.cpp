#include "semihyp/enumerate.hpp"

#include <algorithm>
#include <set>

#include "semihyp/algebra.hpp"

namespace semihyp {

IntMatrix canonical_table(const IntMatrix& table) {
  const int n = static_cast<int>(table.rows());
  std::vector<int> perm(n), inv(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  std::vector<int> best, flat(n * n);
  IntMatrix bestTable = table;
  do {
    // Relabeled entry (a, b) = perm[table(perm^{-1}(a), perm^{-1}(b))].
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        flat[a * n + b] = perm[table(inv[a], inv[b])];
    if (best.empty() || flat < best) {
      best = flat;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) bestTable(a, b) = flat[a * n + b];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return bestTable;
}

namespace {

// Backtracking over row-major cells; a partial table is rejected as soon as
// some fully determined associativity triple fails.
struct TableSearch {
  int n;
  IntMatrix table;
  std::set<std::vector<int>>* seen;

  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = table(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          const int bc = table(b, c);
          if (bc < 0) continue;
          const int left = table(ab, c);
          const int right = table(a, bc);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    return true;
  }

  void run(int cell) {
    if (cell == n * n) {
      const IntMatrix canon = canonical_table(table);
      std::vector<int> key;
      key.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) key.push_back(canon(i, j));
      seen->insert(std::move(key));
      return;
    }
    const int i = cell / n, j = cell % n;
    for (int v = 0; v < n; ++v) {
      table(i, j) = v;
      if (consistent()) run(cell + 1);
    }
    table(i, j) = -1;
  }
};

bool has_unital_q0(const FiniteSemigroup& s) {
  const FiniteSemigroup base = s.zero ? s : adjoin(s, Adjoin::Zero);
  return structure_constants(base).identityCoords.has_value();
}

}  // namespace

void enumerate_semigroups(
    int order, const EnumerateFilters& filters,
    const std::function<void(const FiniteSemigroup&)>& visit) {
  if (order < 1 || order > kEnumerationOrderCap)
    throw Error(ErrorKind::OrderTooLarge,
                "enumeration is capped at order " +
                    std::to_string(kEnumerationOrderCap) +
                    "; asked for " + std::to_string(order));

  std::set<std::vector<int>> seen;
  TableSearch search{order, IntMatrix::Constant(order, order, -1), &seen};
  search.run(0);

  // seen is sorted by the canonical key, making the stream deterministic.
  std::vector<IntMatrix> tables;
  for (const auto& key : seen) {
    IntMatrix t(order, order);
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) t(i, j) = key[i * order + j];
    tables.push_back(std::move(t));
  }

  for (const IntMatrix& t : tables) {
    FiniteSemigroup s = validate_table(t);
    if (filters.withZero && !s.zero) continue;
    if (filters.unitalOnly && !has_unital_q0(s)) continue;
    visit(s);
  }
}

std::vector<FiniteSemigroup> enumerate_semigroups(
    int order, const EnumerateFilters& filters) {
  std::vector<FiniteSemigroup> result;
  enumerate_semigroups(order, filters,
                       [&](const FiniteSemigroup& s) { result.push_back(s); });
  return result;
}

}  // namespace semihyp
