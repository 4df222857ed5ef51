#include "semihyp/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace semihyp {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroNotAbsorbing: return "ZeroNotAbsorbing";
    case ErrorKind::IdentityNotNeutral: return "IdentityNotNeutral";
    case ErrorKind::IrregularSandwich: return "IrregularSandwich";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotZeroSimple: return "NotZeroSimple";
    case ErrorKind::NoIdempotent: return "NoIdempotent";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NoZero: return "NoZero";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

std::optional<std::array<int, 3>> associativity_witness(
    const IntMatrix& table) {
  const int n = static_cast<int>(table.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table(table(i, j), k) != table(i, table(j, k)))
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

namespace {

std::optional<int> detect_zero(const IntMatrix& table) {
  const int n = static_cast<int>(table.rows());
  for (int z = 0; z < n; ++z) {
    bool absorbing = true;
    for (int i = 0; i < n && absorbing; ++i)
      absorbing = table(z, i) == z && table(i, z) == z;
    if (absorbing) return z;
  }
  return std::nullopt;
}

std::optional<int> detect_identity(const IntMatrix& table) {
  const int n = static_cast<int>(table.rows());
  for (int e = 0; e < n; ++e) {
    bool neutral = true;
    for (int i = 0; i < n && neutral; ++i)
      neutral = table(e, i) == i && table(i, e) == i;
    if (neutral) return e;
  }
  return std::nullopt;
}

}  // namespace

FiniteSemigroup validate_table(const IntMatrix& table, std::optional<int> zero,
                               std::optional<int> identity,
                               std::vector<std::string> names) {
  const int n = static_cast<int>(table.rows());
  if (n == 0 || table.cols() != n)
    throw Error(ErrorKind::IndexOutOfRange,
                "table must be a non-empty square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table(i, j) < 0 || table(i, j) >= n) {
        std::ostringstream os;
        os << "table[" << i << "][" << j << "] = " << table(i, j)
           << " outside [0, " << n << ")";
        throw Error(ErrorKind::IndexOutOfRange, os.str());
      }
  if (auto w = associativity_witness(table)) {
    const auto [i, j, k] = *w;
    std::ostringstream os;
    os << "(x" << i << " x" << j << ") x" << k << " = "
       << table(table(i, j), k) << " but x" << i << " (x" << j << " x" << k
       << ") = " << table(i, table(j, k)) << "; witness (" << i << ", " << j
       << ", " << k << ")";
    throw Error(ErrorKind::NotAssociative, os.str());
  }
  if (zero) {
    if (*zero < 0 || *zero >= n)
      throw Error(ErrorKind::IndexOutOfRange, "zero index outside table");
    for (int i = 0; i < n; ++i)
      if (table(*zero, i) != *zero || table(i, *zero) != *zero)
        throw Error(ErrorKind::ZeroNotAbsorbing,
                    "declared zero " + std::to_string(*zero) +
                        " is not absorbing at element " + std::to_string(i));
  } else {
    zero = detect_zero(table);
  }
  if (identity) {
    if (*identity < 0 || *identity >= n)
      throw Error(ErrorKind::IndexOutOfRange, "identity index outside table");
    for (int i = 0; i < n; ++i)
      if (table(*identity, i) != i || table(i, *identity) != i)
        throw Error(ErrorKind::IdentityNotNeutral,
                    "declared identity " + std::to_string(*identity) +
                        " is not neutral at element " + std::to_string(i));
  } else {
    identity = detect_identity(table);
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::IndexOutOfRange,
                "names list does not match the order");

  FiniteSemigroup s;
  s.order = n;
  s.table = table;
  s.zero = zero;
  s.identity = identity;
  s.names = std::move(names);
  return s;
}

FiniteSemigroup adjoin(const FiniteSemigroup& s, Adjoin kind) {
  if (kind == Adjoin::Zero && s.zero) return s;
  if (kind == Adjoin::Identity && s.identity) return s;

  const int n = s.order;
  IntMatrix table(n + 1, n + 1);
  table.topLeftCorner(n, n) = s.table;
  if (kind == Adjoin::Zero) {
    for (int i = 0; i <= n; ++i) {
      table(n, i) = n;
      table(i, n) = n;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      table(n, i) = i;
      table(i, n) = i;
    }
    table(n, n) = n;
  }
  std::vector<std::string> names = s.names;
  if (!names.empty()) names.push_back(kind == Adjoin::Zero ? "0" : "1");
  return validate_table(table,
                        kind == Adjoin::Zero ? std::optional<int>(n) : s.zero,
                        kind == Adjoin::Identity ? std::optional<int>(n)
                                                 : s.identity,
                        std::move(names));
}

FiniteSemigroup relabel(const FiniteSemigroup& s,
                        const std::vector<int>& perm) {
  const int n = s.order;
  IntMatrix table(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table(perm[i], perm[j]) = perm[s.table(i, j)];
  std::vector<std::string> names;
  if (!s.names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[perm[i]] = s.names[i];
  }
  return validate_table(table, std::nullopt, std::nullopt, std::move(names));
}

FiniteSemigroup zero_union(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  if (!a.zero || !b.zero)
    throw Error(ErrorKind::NoZero, "zero_union needs a zero on both sides");
  const int na = a.order - 1, nb = b.order - 1;
  const int n = na + nb + 1, theta = na + nb;

  // Map nonzero elements of a to [0, na), of b to [na, na+nb).
  std::vector<int> mapA(a.order), mapB(b.order);
  int next = 0;
  for (int i = 0; i < a.order; ++i) mapA[i] = (i == *a.zero) ? theta : next++;
  for (int i = 0; i < b.order; ++i) mapB[i] = (i == *b.zero) ? theta : next++;

  IntMatrix table = IntMatrix::Constant(n, n, theta);
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < a.order; ++j)
      table(mapA[i], mapA[j]) = mapA[a.table(i, j)];
  for (int i = 0; i < b.order; ++i)
    for (int j = 0; j < b.order; ++j)
      table(mapB[i], mapB[j]) = mapB[b.table(i, j)];

  std::vector<std::string> names(n);
  for (int i = 0; i < a.order; ++i)
    if (i != *a.zero) names[mapA[i]] = a.name_of(i) + "'";
  for (int i = 0; i < b.order; ++i)
    if (i != *b.zero) names[mapB[i]] = b.name_of(i) + "''";
  names[theta] = "0";
  return validate_table(table, theta, std::nullopt, std::move(names));
}

bool sandwich_is_regular(const IntMatrix& sandwich) {
  for (Eigen::Index r = 0; r < sandwich.rows(); ++r)
    if ((sandwich.row(r).array() == -1).all()) return false;
  for (Eigen::Index c = 0; c < sandwich.cols(); ++c)
    if ((sandwich.col(c).array() == -1).all()) return false;
  return true;
}

ReesMatrixData make_rees_data(FiniteSemigroup group, int m, int n,
                              IntMatrix sandwich) {
  ReesMatrixData data;
  data.group = std::move(group);
  data.m = m;
  data.n = n;
  data.sandwich = std::move(sandwich);
  if (data.sandwich.rows() != n || data.sandwich.cols() != m)
    throw Error(ErrorKind::WrongDimension, "sandwich must be n x m");
  for (Eigen::Index r = 0; r < data.sandwich.rows(); ++r)
    for (Eigen::Index c = 0; c < data.sandwich.cols(); ++c) {
      const int e = data.sandwich(r, c);
      if (e < -1 || e >= data.group.order)
        throw Error(ErrorKind::IndexOutOfRange,
                    "sandwich entry outside G union {theta}");
    }
  data.regular = sandwich_is_regular(data.sandwich);
  return data;
}

FiniteSemigroup rees_matrix_construct(const ReesMatrixData& data) {
  if (!sandwich_is_regular(data.sandwich))
    throw Error(ErrorKind::IrregularSandwich,
                "a row or column of the sandwich matrix is all theta");
  const int g = data.group.order, m = data.m, n = data.n;
  const int theta = g * m * n;
  const int order = theta + 1;

  auto index = [&](int gg, int i, int j) { return (i * n + j) * g + gg; };

  IntMatrix table = IntMatrix::Constant(order, order, theta);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) {
          const int p = data.sandwich(j, k);
          if (p < 0) continue;  // product is theta
          for (int x = 0; x < g; ++x)
            for (int y = 0; y < g; ++y)
              table(index(x, i, j), index(y, k, l)) =
                  index(data.group.mul(data.group.mul(x, p), y), i, l);
        }

  std::vector<std::string> names(order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int x = 0; x < g; ++x)
        names[index(x, i, j)] = "(" + data.group.name_of(x) + "," +
                                std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")";
  names[theta] = "0";
  return validate_table(table, theta, std::nullopt, std::move(names));
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> result;
  for (int i = 0; i < s.order; ++i)
    if (s.table(i, i) == i) result.push_back(i);
  return result;
}

namespace {

// Index and period of the monogenic subsemigroup of a.
std::pair<int, int> index_period(const FiniteSemigroup& s, int a) {
  std::vector<int> seen(s.order, -1);
  int x = a, step = 1;
  while (seen[x] < 0) {
    seen[x] = step;
    x = s.table(x, a);
    ++step;
  }
  const int first = seen[x];
  return {first, step - first};
}

// Iterated refinement of element colors by multiplication profiles; the
// resulting classes are preserved by any isomorphism.
std::vector<int> color_classes(const FiniteSemigroup& s) {
  const int n = s.order;
  std::vector<long> colors(n);
  for (int i = 0; i < n; ++i) {
    const auto [idx, per] = index_period(s, i);
    long c = idx * 97 + per;
    if (s.zero && *s.zero == i) c += 1 << 20;
    if (s.identity && *s.identity == i) c += 1 << 21;
    if (s.table(i, i) == i) c += 1 << 22;
    colors[i] = c;
  }
  auto normalize = [&](std::vector<long>& raw) {
    std::map<long, int> ids;
    for (long c : raw) ids.emplace(c, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = ids[raw[i]];
    return out;
  };
  std::vector<int> cls = normalize(colors);
  for (int round = 0; round < n; ++round) {
    std::vector<long> refined(n);
    for (int i = 0; i < n; ++i) {
      std::vector<long> profile;
      profile.reserve(2 * n);
      for (int b = 0; b < n; ++b) {
        profile.push_back(cls[b] * 1009L + cls[s.table(i, b)]);
        profile.push_back(cls[b] * 2003L + cls[s.table(b, i)] + 500000L);
      }
      std::sort(profile.begin(), profile.end());
      long h = cls[i];
      for (long p : profile) h = h * 1000003L + p;
      refined[i] = h;
    }
    std::vector<int> nextCls = normalize(refined);
    if (nextCls == cls) break;
    cls = nextCls;
  }
  return cls;
}

struct IsoSearch {
  const FiniteSemigroup& a;
  const FiniteSemigroup& b;
  const std::vector<int>& colorA;
  const std::vector<int>& colorB;
  std::vector<int> aToB, bToA;

  bool assign(int x, int y, std::vector<std::pair<int, int>>& trail) {
    if (aToB[x] >= 0) return aToB[x] == y;
    if (bToA[y] >= 0) return false;
    if (colorA[x] != colorB[y]) return false;
    aToB[x] = y;
    bToA[y] = x;
    trail.emplace_back(x, y);
    return true;
  }

  // Closes the partial map under products; false on conflict.
  bool propagate(std::vector<std::pair<int, int>>& trail) {
    for (std::size_t done = 0; done < trail.size(); ++done) {
      const int x = trail[done].first;
      for (int z = 0; z < a.order; ++z) {
        if (aToB[z] < 0) continue;
        if (!assign(a.table(x, z), b.table(aToB[x], aToB[z]), trail))
          return false;
        if (!assign(a.table(z, x), b.table(aToB[z], aToB[x]), trail))
          return false;
      }
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      auto [x, y] = trail.back();
      trail.pop_back();
      aToB[x] = -1;
      bToA[y] = -1;
    }
  }

  bool search() {
    int next = -1;
    for (int x = 0; x < a.order; ++x)
      if (aToB[x] < 0) {
        next = x;
        break;
      }
    if (next < 0) return true;
    for (int y = 0; y < b.order; ++y) {
      if (bToA[y] >= 0 || colorA[next] != colorB[y]) continue;
      std::vector<std::pair<int, int>> trail;
      if (assign(next, y, trail) && propagate(trail) && search()) return true;
      undo(trail, 0);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> isomorphism(const FiniteSemigroup& a,
                                            const FiniteSemigroup& b,
                                            int maxOrder) {
  if (a.order > maxOrder || b.order > maxOrder)
    throw Error(ErrorKind::OrderTooLarge,
                "isomorphism search is bounded at order " +
                    std::to_string(maxOrder));
  if (a.order != b.order) return std::nullopt;
  if (a.zero.has_value() != b.zero.has_value()) return std::nullopt;
  if (a.identity.has_value() != b.identity.has_value()) return std::nullopt;

  const std::vector<int> colorA = color_classes(a);
  const std::vector<int> colorB = color_classes(b);
  std::vector<int> sortedA = colorA, sortedB = colorB;
  std::sort(sortedA.begin(), sortedA.end());
  std::sort(sortedB.begin(), sortedB.end());
  if (sortedA != sortedB) return std::nullopt;

  IsoSearch search{a, b, colorA, colorB,
                   std::vector<int>(a.order, -1),
                   std::vector<int>(b.order, -1)};
  if (!search.search()) return std::nullopt;
  return search.aToB;
}

bool is_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b,
                   int maxOrder) {
  return isomorphism(a, b, maxOrder).has_value();
}

}  // namespace semihyp
