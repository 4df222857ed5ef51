#include "semihyp/catalog.hpp"

#include <array>

namespace semihyp {

FiniteSemigroup cyclic_group(int n) {
  IntMatrix table(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table(i, j) = (i + j) % n;
  std::vector<std::string> names(n);
  names[0] = "1";
  for (int i = 1; i < n; ++i) names[i] = "a" + std::to_string(i);
  return validate_table(table, std::nullopt, 0, std::move(names));
}

namespace {

// Groups on pairs (i, j) with i modulo `ni`: generic two-generator builder.
template <typename Mul>
FiniteSemigroup two_generator_group(int ni, int nj, Mul&& mul,
                                    const std::string& a,
                                    const std::string& b) {
  const int n = ni * nj;
  IntMatrix table(n, n);
  auto id = [&](int i, int j) { return i * nj + j; };
  for (int i1 = 0; i1 < ni; ++i1)
    for (int j1 = 0; j1 < nj; ++j1)
      for (int i2 = 0; i2 < ni; ++i2)
        for (int j2 = 0; j2 < nj; ++j2) {
          auto [i, j] = mul(i1, j1, i2, j2);
          table(id(i1, j1), id(i2, j2)) = id(i, j);
        }
  std::vector<std::string> names(n);
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nj; ++j) {
      std::string s;
      if (i) s += a + (i > 1 ? std::to_string(i) : "");
      if (j) s += b + (j > 1 ? std::to_string(j) : "");
      names[id(i, j)] = s.empty() ? "1" : s;
    }
  return validate_table(table, std::nullopt, 0, std::move(names));
}

int mod(int x, int n) { return ((x % n) + n) % n; }

}  // namespace

FiniteSemigroup dihedral_group(int n) {
  // Elements r^i s^j with s r = r^-1 s.
  return two_generator_group(
      n, 2,
      [n](int i1, int j1, int i2, int j2) {
        return std::pair<int, int>(mod(i1 + (j1 ? -i2 : i2), n), (j1 + j2) % 2);
      },
      "r", "s");
}

FiniteSemigroup dicyclic_group(int n) {
  // Elements a^i b^j, i mod 2n, j in {0,1}: a^{2n} = 1, b^2 = a^n,
  // b a b^-1 = a^-1.
  return two_generator_group(
      2 * n, 2,
      [n](int i1, int j1, int i2, int j2) {
        int i = mod(i1 + (j1 ? -i2 : i2), 2 * n);
        int j = j1 + j2;
        if (j >= 2) {
          j -= 2;
          i = mod(i + n, 2 * n);
        }
        return std::pair<int, int>(i, j);
      },
      "a", "b");
}

FiniteSemigroup c4_semidirect_c4() {
  // a^4 = b^4 = 1 with b a b^-1 = a^-1: b^j a = a^{(-1)^j} b^j.
  return two_generator_group(
      4, 4,
      [](int i1, int j1, int i2, int j2) {
        return std::pair<int, int>(mod(i1 + (j1 % 2 ? -i2 : i2), 4),
                                   (j1 + j2) % 4);
      },
      "a", "b");
}

FiniteSemigroup alternating_group_4() {
  // Even permutations of {0,1,2,3}, composed left-to-right on indices.
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::array<int, 4>& q) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == q) return i;
    return -1;
  };
  IntMatrix table(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 4> q;
      for (int x = 0; x < 4; ++x) q[x] = perms[j][perms[i][x]];
      table(i, j) = find(q);
    }
  return validate_table(table);
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  const int n = a.order * b.order;
  auto id = [&](int x, int y) { return x * b.order + y; };
  IntMatrix table(n, n);
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          table(id(x1, y1), id(x2, y2)) =
              id(a.table(x1, x2), b.table(y1, y2));
  std::vector<std::string> names(n);
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y)
      names[id(x, y)] = "(" + a.name_of(x) + "," + b.name_of(y) + ")";
  return validate_table(table, std::nullopt, std::nullopt, std::move(names));
}

FiniteSemigroup null_semigroup(int nonzeroCount) {
  const int n = nonzeroCount + 1;
  IntMatrix table = IntMatrix::Constant(n, n, n - 1);
  std::vector<std::string> names(n);
  for (int i = 0; i + 1 < n; ++i) names[i] = "n" + std::to_string(i + 1);
  names[n - 1] = "0";
  return validate_table(table, n - 1, std::nullopt, std::move(names));
}

FiniteSemigroup right_zero_with_zero() {
  IntMatrix sandwich(2, 1);
  sandwich << 0, 0;
  return rees_matrix_construct(make_rees_data(cyclic_group(1), 1, 2, sandwich));
}

FiniteSemigroup brandt_b2() {
  IntMatrix sandwich(2, 2);
  sandwich << 0, -1, -1, 0;
  return rees_matrix_construct(make_rees_data(cyclic_group(1), 2, 2, sandwich));
}

FiniteSemigroup trivial_group_with_zero() {
  // Not expressible as adjoin(C1, Zero): the lone element of C1 is already
  // absorbing, so adjoin returns C1 unchanged.
  IntMatrix table(2, 2);
  table << 0, 1,
           1, 1;
  return validate_table(table, 1, 0, {"1", "0"});
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, FiniteSemigroup s, std::string desc) {
    c.push_back({std::move(name), std::move(s), std::move(desc)});
  };

  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16})
    add("C" + std::to_string(n), cyclic_group(n),
        "cyclic group of order " + std::to_string(n));

  add("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)),
      "elementary abelian group of order 4");
  add("C2xC2xC2",
      direct_product(cyclic_group(2),
                     direct_product(cyclic_group(2), cyclic_group(2))),
      "elementary abelian group of order 8");
  add("C2xC2xC2xC2",
      direct_product(
          direct_product(cyclic_group(2), cyclic_group(2)),
          direct_product(cyclic_group(2), cyclic_group(2))),
      "elementary abelian group of order 16");
  add("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)),
      "abelian group C4 x C2");
  add("C4xC4", direct_product(cyclic_group(4), cyclic_group(4)),
      "abelian group C4 x C4");
  add("C4xC2xC2",
      direct_product(cyclic_group(4),
                     direct_product(cyclic_group(2), cyclic_group(2))),
      "abelian group C4 x C2 x C2");
  add("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)),
      "elementary abelian group of order 9");
  add("C6xC2", direct_product(cyclic_group(6), cyclic_group(2)),
      "abelian group C6 x C2");

  add("S3", dihedral_group(3), "symmetric group of degree 3");
  add("D4", dihedral_group(4), "dihedral group of order 8");
  add("D5", dihedral_group(5), "dihedral group of order 10");
  add("Q8", dicyclic_group(2), "quaternion group of order 8");
  add("Q12", dicyclic_group(3), "dicyclic group of order 12");
  add("C4:C4", c4_semidirect_c4(),
      "semidirect product C4:C4 with the inverting action");
  add("A4", alternating_group_4(), "alternating group of degree 4");
  add("Q8xC2", direct_product(dicyclic_group(2), cyclic_group(2)),
      "Hamiltonian 2-group Q8 x C2");

  add("T", right_zero_with_zero(),
      "two-element right-zero semigroup with zero: M0({1},1,2;(1 1)^t)");
  add("T1", adjoin(right_zero_with_zero(), Adjoin::Identity),
      "the smallest monoid containing T");
  add("B2", brandt_b2(), "Brandt semigroup of 2x2 matrix units");

  add("null1", null_semigroup(1), "null semigroup with 1 nonzero element");
  add("null2", null_semigroup(2), "null semigroup with 2 nonzero elements");
  add("null3", null_semigroup(3), "null semigroup with 3 nonzero elements");

  add("C2uC3",
      zero_union(adjoin(cyclic_group(2), Adjoin::Zero),
                 adjoin(cyclic_group(3), Adjoin::Zero)),
      "0-disjoint union of C2^0 and C3^0");
  add("TuC1",
      zero_union(right_zero_with_zero(), trivial_group_with_zero()),
      "0-disjoint union of T and the trivial group with zero");
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> kCatalog = build_catalog();
  return kCatalog;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace semihyp
