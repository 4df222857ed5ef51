#include "semihyp/rees.hpp"

#include <algorithm>

#include "semihyp/linalg.hpp"

namespace semihyp {

namespace {

// The classes of the nonzero part of a 0-simple factor, via the parent
// Green structure restricted to the class elements.
struct FactorClasses {
  std::vector<std::vector<int>> rClasses, lClasses;
  std::vector<int> rOf, lOf;
};

FactorClasses nonzero_classes(const FiniteSemigroup& factor) {
  const GreenStructure g = compute_green(factor);
  const int theta = *factor.zero;
  FactorClasses fc;
  fc.rOf.assign(factor.order, -1);
  fc.lOf.assign(factor.order, -1);
  for (const auto& cls : g.rClasses) {
    if (cls.size() == 1 && cls[0] == theta) continue;
    for (int x : cls) fc.rOf[x] = static_cast<int>(fc.rClasses.size());
    fc.rClasses.push_back(cls);
  }
  for (const auto& cls : g.lClasses) {
    if (cls.size() == 1 && cls[0] == theta) continue;
    for (int x : cls) fc.lOf[x] = static_cast<int>(fc.lClasses.size());
    fc.lClasses.push_back(cls);
  }
  return fc;
}

}  // namespace

ReesMatrixData decompose_zero_simple(const PrincipalFactor& factor) {
  const FiniteSemigroup& a = factor.asSemigroup;
  const int theta = *a.zero;
  const int k = factor.nonzeroCount;

  const GreenStructure g = compute_green(a);
  if (static_cast<int>(g.jClasses.size()) != 2)
    throw Error(ErrorKind::NotZeroSimple,
                "factor does not have a single nonzero J-class");
  bool allTheta = true;
  for (int i = 0; i < k && allTheta; ++i)
    for (int j = 0; j < k && allTheta; ++j) allTheta = a.table(i, j) == theta;
  if (allTheta)
    throw Error(ErrorKind::NotZeroSimple, "factor is a null semigroup");

  // Maximal subgroup at the lowest-index idempotent.
  int e = -1;
  for (int i = 0; i < k; ++i)
    if (a.table(i, i) == i) {
      e = i;
      break;
    }
  if (e < 0)
    throw Error(ErrorKind::NoIdempotent,
                "0-simple factor without idempotent (internal error)");

  const FactorClasses fc = nonzero_classes(a);
  const int m = static_cast<int>(fc.rClasses.size());
  const int n = static_cast<int>(fc.lClasses.size());

  // G = H_e, the H-class of e.
  std::vector<int> hOfE;
  for (int x = 0; x < k; ++x)
    if (fc.rOf[x] == fc.rOf[e] && fc.lOf[x] == fc.lOf[e]) hOfE.push_back(x);
  std::vector<int> groupIndex(a.order, -1);
  for (std::size_t i = 0; i < hOfE.size(); ++i)
    groupIndex[hOfE[i]] = static_cast<int>(i);

  IntMatrix groupTable(hOfE.size(), hOfE.size());
  std::vector<std::string> groupNames;
  for (std::size_t i = 0; i < hOfE.size(); ++i) {
    groupNames.push_back(a.name_of(hOfE[i]));
    for (std::size_t j = 0; j < hOfE.size(); ++j) {
      const int p = a.table(hOfE[i], hOfE[j]);
      if (groupIndex[p] < 0)
        throw Error(ErrorKind::Internal, "H-class of the idempotent not closed");
      groupTable(i, j) = groupIndex[p];
    }
  }
  FiniteSemigroup group =
      validate_table(groupTable, std::nullopt, std::nullopt, groupNames);

  // Representatives: r_i in R_i intersect L_e, q_j in L_j intersect R_e;
  // the sandwich entry p_{j,i} = q_j r_i lies in H_e union {theta}.
  std::vector<int> reps(m, -1), coreps(n, -1);
  for (int x = 0; x < k; ++x) {
    if (fc.lOf[x] == fc.lOf[e] && reps[fc.rOf[x]] < 0) reps[fc.rOf[x]] = x;
    if (fc.rOf[x] == fc.rOf[e] && coreps[fc.lOf[x]] < 0) coreps[fc.lOf[x]] = x;
  }
  for (int i = 0; i < m; ++i)
    if (reps[i] < 0)
      throw Error(ErrorKind::NotZeroSimple,
                  "an R-class misses the idempotent's L-class");
  for (int j = 0; j < n; ++j)
    if (coreps[j] < 0)
      throw Error(ErrorKind::NotZeroSimple,
                  "an L-class misses the idempotent's R-class");

  IntMatrix sandwich(n, m);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      const int p = a.table(coreps[j], reps[i]);
      if (p == theta) {
        sandwich(j, i) = -1;
      } else if (groupIndex[p] >= 0) {
        sandwich(j, i) = groupIndex[p];
      } else {
        throw Error(ErrorKind::Internal,
                    "sandwich product fell outside H_e union {theta}");
      }
    }

  ReesMatrixData data = make_rees_data(std::move(group), m, n, sandwich);

  // Round-trip guarantee: the coordinates reconstruct the factor.
  const FiniteSemigroup rebuilt = rees_matrix_construct(data);
  if (!is_isomorphic(rebuilt, a, std::max(a.order, kDefaultIsoBound)))
    throw Error(ErrorKind::Internal,
                "Rees coordinates do not reconstruct the factor");
  return data;
}

IntMatrix trivialize(const IntMatrix& sandwich) {
  IntMatrix out(sandwich.rows(), sandwich.cols());
  for (Eigen::Index r = 0; r < sandwich.rows(); ++r)
    for (Eigen::Index c = 0; c < sandwich.cols(); ++c)
      out(r, c) = sandwich(r, c) >= 0 ? 1 : 0;
  return out;
}

int trivialized_rank(const ReesMatrixData& data) {
  return rank_of(trivialize(data.sandwich));
}

namespace {

struct GroupOps {
  const FiniteSemigroup& g;
  int identity;
  std::vector<int> inverse;
};

GroupOps group_ops(const FiniteSemigroup& g) {
  if (!g.identity)
    throw Error(ErrorKind::NotAGroup, "group table has no identity");
  GroupOps ops{g, *g.identity, std::vector<int>(g.order, -1)};
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b)
      if (g.table(a, b) == ops.identity && g.table(b, a) == ops.identity) {
        ops.inverse[a] = b;
        break;
      }
    if (ops.inverse[a] < 0)
      throw Error(ErrorKind::NotAGroup,
                  "element " + std::to_string(a) + " has no inverse");
  }
  return ops;
}

}  // namespace

SandwichAnalysis normalize_sandwich(const ReesMatrixData& data) {
  if (!sandwich_is_regular(data.sandwich))
    throw Error(ErrorKind::IrregularSandwich,
                "a row or column of the sandwich matrix is all theta");
  const GroupOps ops = group_ops(data.group);
  const int m = data.m, n = data.n;

  // Put a nonzero entry at (0, 0): lexicographically first candidate.
  IntMatrix p = data.sandwich;
  int pr = -1, pc = -1;
  for (int j = 0; j < n && pr < 0; ++j)
    for (int i = 0; i < m && pr < 0; ++i)
      if (p(j, i) >= 0) {
        pr = j;
        pc = i;
      }
  if (pr > 0) p.row(0).swap(p.row(pr));
  if (pc > 0) p.col(0).swap(p.col(pc));

  // q_{j,i} = u_j p_{j,i} v_i with u, v chosen so the first column and first
  // row become identity wherever nonzero; M0(G;m,n;P) and M0(G;m,n;Q) are
  // isomorphic via (g,i,j) -> (v_i^{-1} g u_j^{-1}, i, j).
  std::vector<int> u(n, ops.identity), v(m, ops.identity);
  for (int i = 0; i < m; ++i)
    if (p(0, i) >= 0) v[i] = ops.inverse[p(0, i)];
  for (int j = 1; j < n; ++j)
    if (p(j, 0) >= 0) u[j] = ops.inverse[data.group.mul(p(j, 0), v[0])];
  IntMatrix q(n, m);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      q(j, i) = p(j, i) < 0
                    ? -1
                    : data.group.mul(u[j], data.group.mul(p(j, i), v[i]));

  SandwichAnalysis out;
  out.original = data;
  out.normalized = make_rees_data(data.group, m, n, q);
  out.trivialized = trivialize(q);
  out.rankOverQ = rank_of(out.trivialized);
  return out;
}

}  // namespace semihyp
