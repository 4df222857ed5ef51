#include "semihyp/green.hpp"

#include <algorithm>
#include <map>

#include "semihyp/rees.hpp"

namespace semihyp {

const char* factor_kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::Null: return "null";
    case FactorKind::Group: return "group";
    case FactorKind::ZeroSimple: return "0-simple";
  }
  return "unknown";
}

namespace {

using Mask = std::vector<bool>;

// Principal right ideal a S^1 = {a} union a S.
Mask right_ideal(const FiniteSemigroup& s, int a) {
  Mask m(s.order, false);
  m[a] = true;
  for (int x = 0; x < s.order; ++x) m[s.table(a, x)] = true;
  return m;
}

Mask left_ideal(const FiniteSemigroup& s, int a) {
  Mask m(s.order, false);
  m[a] = true;
  for (int x = 0; x < s.order; ++x) m[s.table(x, a)] = true;
  return m;
}

// Principal two-sided ideal S^1 a S^1 = {a} union aS union Sa union SaS.
Mask two_sided_ideal(const FiniteSemigroup& s, int a) {
  Mask m(s.order, false);
  m[a] = true;
  for (int x = 0; x < s.order; ++x) {
    m[s.table(a, x)] = true;
    m[s.table(x, a)] = true;
    for (int y = 0; y < s.order; ++y) m[s.table(s.table(x, a), y)] = true;
  }
  return m;
}

// Groups elements by equal key masks; classes ordered by minimum element.
void partition_by(const std::vector<Mask>& keys,
                  std::vector<std::vector<int>>& classes,
                  std::vector<int>& classOf) {
  const int n = static_cast<int>(keys.size());
  classes.clear();
  classOf.assign(n, -1);
  std::map<Mask, int> ids;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = ids.emplace(keys[i], static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classOf[i] = it->second;
    classes[it->second].push_back(i);
  }
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

GreenStructure compute_green(const FiniteSemigroup& s) {
  const int n = s.order;
  std::vector<Mask> rIdeals(n), lIdeals(n), jIdeals(n), hKeys(n);
  for (int a = 0; a < n; ++a) {
    rIdeals[a] = right_ideal(s, a);
    lIdeals[a] = left_ideal(s, a);
    jIdeals[a] = two_sided_ideal(s, a);
    hKeys[a] = rIdeals[a];
    hKeys[a].insert(hKeys[a].end(), lIdeals[a].begin(), lIdeals[a].end());
  }

  GreenStructure g;
  partition_by(rIdeals, g.rClasses, g.rOf);
  partition_by(lIdeals, g.lClasses, g.lOf);
  partition_by(hKeys, g.hClasses, g.hOf);
  partition_by(jIdeals, g.jClasses, g.jOf);

  const int jc = static_cast<int>(g.jClasses.size());
  g.jLeq.assign(jc, std::vector<bool>(jc, false));
  for (int c = 0; c < jc; ++c)
    for (int d = 0; d < jc; ++d)
      g.jLeq[c][d] = subset(jIdeals[g.jClasses[c][0]], jIdeals[g.jClasses[d][0]]);
  return g;
}

namespace {

// All linear extensions of the J-order from the bottom, as sequences of
// J-class ids, lazily cut off at maxCount. The first sequence follows the
// deterministic smallest-minimum-element rule.
void extensions_rec(const GreenStructure& g, std::vector<int>& order,
                    std::vector<bool>& used, int maxCount,
                    std::vector<std::vector<int>>& out) {
  const int jc = static_cast<int>(g.jClasses.size());
  if (static_cast<int>(order.size()) == jc) {
    out.push_back(order);
    return;
  }
  for (int c = 0; c < jc && static_cast<int>(out.size()) < maxCount; ++c) {
    if (used[c]) continue;
    bool addable = true;
    for (int d = 0; d < jc && addable; ++d)
      if (!used[d] && d != c && g.jLeq[d][c]) addable = false;
    if (!addable) continue;
    used[c] = true;
    order.push_back(c);
    extensions_rec(g, order, used, maxCount, out);
    order.pop_back();
    used[c] = false;
  }
}

std::vector<std::vector<int>> series_from_extension(
    const FiniteSemigroup& s, const GreenStructure& g,
    const std::vector<int>& extension) {
  std::vector<std::vector<int>> series;
  std::vector<int> ideal;
  for (int c : extension) {
    ideal.insert(ideal.end(), g.jClasses[c].begin(), g.jClasses[c].end());
    std::sort(ideal.begin(), ideal.end());
    series.push_back(ideal);
  }
  (void)s;
  return series;
}

GreenStructure green_with_zero_check(const FiniteSemigroup& s) {
  if (!s.zero)
    throw Error(ErrorKind::NoZero, "a principal series needs a zero element");
  return compute_green(s);
}

}  // namespace

std::vector<std::vector<int>> principal_series(const FiniteSemigroup& s) {
  return principal_series_variants(s, 1).front();
}

std::vector<std::vector<std::vector<int>>> principal_series_variants(
    const FiniteSemigroup& s, int maxCount) {
  const GreenStructure g = green_with_zero_check(s);
  // Classes are already ordered by minimum element, so the recursive
  // enumeration tries the smallest addable class first: the first extension
  // found is the deterministic default.
  std::vector<std::vector<int>> extensions;
  std::vector<int> order;
  std::vector<bool> used(g.jClasses.size(), false);
  extensions_rec(g, order, used, maxCount, extensions);

  std::vector<std::vector<std::vector<int>>> result;
  result.reserve(extensions.size());
  for (const auto& ext : extensions)
    result.push_back(series_from_extension(s, g, ext));
  return result;
}

namespace {

FiniteSemigroup rees_quotient(const FiniteSemigroup& s,
                              const std::vector<int>& jclass) {
  const int k = static_cast<int>(jclass.size());
  std::vector<int> local(s.order, -1);
  for (int i = 0; i < k; ++i) local[jclass[i]] = i;

  IntMatrix table = IntMatrix::Constant(k + 1, k + 1, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int p = s.table(jclass[i], jclass[j]);
      table(i, j) = local[p] >= 0 ? local[p] : k;
    }
  std::vector<std::string> names(k + 1);
  for (int i = 0; i < k; ++i) names[i] = s.name_of(jclass[i]);
  names[k] = "0";
  return validate_table(table, k, std::nullopt, std::move(names));
}

PrincipalFactor build_factor(const FiniteSemigroup& s,
                             const std::vector<int>& jclass) {
  PrincipalFactor f;
  f.elements = jclass;
  f.nonzeroCount = static_cast<int>(jclass.size());
  f.asSemigroup = rees_quotient(s, jclass);

  const int k = f.nonzeroCount;
  bool null = true;
  for (int i = 0; i < k && null; ++i)
    for (int j = 0; j < k && null; ++j)
      if (f.asSemigroup.table(i, j) != k) null = false;
  if (null) {
    f.kind = FactorKind::Null;
    return f;
  }
  f.reesData = decompose_zero_simple(f);
  f.kind = (f.reesData->m == 1 && f.reesData->n == 1) ? FactorKind::Group
                                                      : FactorKind::ZeroSimple;
  return f;
}

}  // namespace

std::vector<PrincipalFactor> principal_factors(
    const FiniteSemigroup& s, const std::vector<std::vector<int>>& series) {
  std::vector<PrincipalFactor> factors;
  for (std::size_t i = 1; i < series.size(); ++i) {
    // S_i \ S_{i+1} is a single J-class; both ideals are sorted.
    std::vector<int> jclass;
    std::set_difference(series[i].begin(), series[i].end(),
                        series[i - 1].begin(), series[i - 1].end(),
                        std::back_inserter(jclass));
    factors.push_back(build_factor(s, jclass));
  }
  return factors;
}

std::vector<PrincipalFactor> principal_factors(const FiniteSemigroup& s) {
  const FiniteSemigroup& base = s.zero ? s : adjoin(s, Adjoin::Zero);
  return principal_factors(base, principal_series(base));
}

}  // namespace semihyp
