#include "semihyp/group.hpp"

#include <numeric>
#include <vector>

#include "semihyp/catalog.hpp"

namespace semihyp {

bool is_group(const FiniteSemigroup& s) {
  if (!s.identity) return false;
  const int e = *s.identity;
  for (int a = 0; a < s.order; ++a) {
    bool invertible = false;
    for (int b = 0; b < s.order && !invertible; ++b)
      invertible = s.table(a, b) == e && s.table(b, a) == e;
    if (!invertible) return false;
  }
  return true;
}

namespace {

void require_group(const FiniteSemigroup& g) {
  if (!is_group(g))
    throw Error(ErrorKind::NotAGroup, "table does not satisfy the group axioms");
}

}  // namespace

int element_order(const FiniteSemigroup& g, int a) {
  const int e = *g.identity;
  int x = a, ord = 1;
  while (x != e) {
    x = g.table(x, a);
    ++ord;
  }
  return ord;
}

GroupFingerprint fingerprint(const FiniteSemigroup& g) {
  require_group(g);
  GroupFingerprint fp;
  fp.order = g.order;
  fp.abelian = g.table == g.table.transpose().eval();

  std::vector<int> orders(g.order);
  for (int a = 0; a < g.order; ++a) {
    orders[a] = element_order(g, a);
    ++fp.orderMultiset[orders[a]];
    fp.exponent = std::lcm(fp.exponent, orders[a]);
  }

  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b)
      central = g.table(a, b) == g.table(b, a);
    if (central) ++fp.centerOrder;
  }

  // Dedekind: g a g^-1 stays inside <a> for all g, a.
  fp.dedekind = true;
  std::vector<int> inverse(g.order);
  const int e = *g.identity;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.table(a, b) == e) inverse[a] = b;
  for (int a = 0; a < g.order && fp.dedekind; ++a) {
    std::vector<bool> cyclic(g.order, false);
    int x = a;
    cyclic[e] = true;
    while (!cyclic[x]) {
      cyclic[x] = true;
      x = g.table(x, a);
    }
    for (int h = 0; h < g.order && fp.dedekind; ++h)
      fp.dedekind = cyclic[g.table(g.table(h, a), inverse[h])];
  }
  return fp;
}

bool is_higman(const FiniteSemigroup& g) {
  const GroupFingerprint fp = fingerprint(g);
  if (fp.abelian) return 4 % fp.exponent == 0 || 6 % fp.exponent == 0;
  const bool twoPower = (fp.order & (fp.order - 1)) == 0;
  return fp.dedekind && twoPower;
}

std::optional<std::string> recognize_exceptional_group(
    const FiniteSemigroup& g) {
  struct Candidate {
    const char* label;
    FiniteSemigroup table;
  };
  static const std::vector<Candidate> kExceptional = [] {
    std::vector<Candidate> list;
    list.push_back({"C5", cyclic_group(5)});
    list.push_back({"C8", cyclic_group(8)});
    list.push_back({"C12", cyclic_group(12)});
    list.push_back({"S3", dihedral_group(3)});
    list.push_back({"D4", dihedral_group(4)});
    list.push_back({"Q12", dicyclic_group(3)});
    list.push_back({"C4:C4", c4_semidirect_c4()});
    return list;
  }();
  static const std::vector<GroupFingerprint> kFingerprints = [] {
    std::vector<GroupFingerprint> fps;
    for (const auto& c : kExceptional) fps.push_back(fingerprint(c.table));
    return fps;
  }();

  const GroupFingerprint fp = fingerprint(g);
  for (std::size_t i = 0; i < kExceptional.size(); ++i) {
    if (!(fp == kFingerprints[i])) continue;
    if (is_isomorphic(g, kExceptional[i].table))
      return std::string(kExceptional[i].label);
  }
  return std::nullopt;
}

}  // namespace semihyp
