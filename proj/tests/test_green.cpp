#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "semihyp/catalog.hpp"
#include "semihyp/green.hpp"
#include "support.hpp"

using namespace semihyp;
namespace st = semihyp::testing;

namespace {

bool is_ideal(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  std::vector<bool> in(s.order, false);
  for (int x : ideal) in[x] = true;
  for (int x : ideal)
    for (int y = 0; y < s.order; ++y)
      if (!in[s.table(x, y)] || !in[s.table(y, x)]) return false;
  return true;
}

std::multiset<std::pair<FactorKind, int>> factor_profile(
    const std::vector<PrincipalFactor>& factors) {
  std::multiset<std::pair<FactorKind, int>> profile;
  for (const auto& f : factors) profile.insert({f.kind, f.nonzeroCount});
  return profile;
}

}  // namespace

TEST_CASE("Green classes of T: one nonzero R-class, two L-classes") {
  const FiniteSemigroup t = validate_table(st::t_table());  // {e, f, 0}
  const GreenStructure g = compute_green(t);
  CHECK(g.rOf[0] == g.rOf[1]);
  CHECK(g.rOf[0] != g.rOf[2]);
  CHECK(g.lOf[0] != g.lOf[1]);
  CHECK(g.jOf[0] == g.jOf[1]);
  CHECK(g.jOf[0] != g.jOf[2]);
  CHECK(g.jClasses.size() == 2);
}

TEST_CASE("Green classes of B2: one nonzero J-class, 2 R- and 2 L-classes") {
  const FiniteSemigroup b2 = brandt_b2();
  const GreenStructure g = compute_green(b2);
  CHECK(g.jClasses.size() == 2);
  int nonzeroR = 0, nonzeroL = 0;
  for (const auto& cls : g.rClasses)
    if (!(cls.size() == 1 && cls[0] == *b2.zero)) ++nonzeroR;
  for (const auto& cls : g.lClasses)
    if (!(cls.size() == 1 && cls[0] == *b2.zero)) ++nonzeroL;
  CHECK(nonzeroR == 2);
  CHECK(nonzeroL == 2);
}

TEST_CASE("a group is a single J-class") {
  const GreenStructure g = compute_green(catalog_find("Q8")->object);
  CHECK(g.jClasses.size() == 1);
  CHECK(g.jClasses[0].size() == 8);
}

TEST_CASE("H refines R and L; R and L refine J; zero class is the minimum") {
  for (const char* name : {"T1", "B2", "C2uC3", "null3"}) {
    const FiniteSemigroup s = catalog_find(name)->object;
    const GreenStructure g = compute_green(s);
    for (int a = 0; a < s.order; ++a)
      for (int b = 0; b < s.order; ++b) {
        if (g.hOf[a] == g.hOf[b]) {
          CHECK(g.rOf[a] == g.rOf[b]);
          CHECK(g.lOf[a] == g.lOf[b]);
        }
        if (g.rOf[a] == g.rOf[b]) CHECK(g.jOf[a] == g.jOf[b]);
        if (g.lOf[a] == g.lOf[b]) CHECK(g.jOf[a] == g.jOf[b]);
      }
    // Partial order: antisymmetry and transitivity on class ids.
    const int jc = static_cast<int>(g.jClasses.size());
    for (int c = 0; c < jc; ++c)
      for (int d = 0; d < jc; ++d) {
        if (c != d && g.jLeq[c][d]) CHECK(!g.jLeq[d][c]);
        for (int e = 0; e < jc; ++e)
          if (g.jLeq[c][d] && g.jLeq[d][e]) CHECK(g.jLeq[c][e]);
      }
    REQUIRE(s.zero.has_value());
    const int zc = g.jOf[*s.zero];
    for (int c = 0; c < jc; ++c) CHECK(g.jLeq[zc][c]);
  }
}

TEST_CASE("principal series of T1") {
  const FiniteSemigroup t1 = validate_table(st::t1_table());
  const auto series = principal_series(t1);
  REQUIRE(series.size() == 3);
  CHECK(series[0] == std::vector<int>{3});
  CHECK(series[1] == std::vector<int>{1, 2, 3});
  CHECK(series[2] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("principal series of C5 with adjoined zero") {
  const auto series = principal_series(adjoin(cyclic_group(5), Adjoin::Zero));
  REQUIRE(series.size() == 2);
  CHECK(series[0].size() == 1);
  CHECK(series[1].size() == 6);
}

TEST_CASE("principal series of B2 with adjoined identity is a 3-chain") {
  const FiniteSemigroup s = adjoin(brandt_b2(), Adjoin::Identity);
  const auto series = principal_series(s);
  REQUIRE(series.size() == 3);
  CHECK(series[0].size() == 1);
  CHECK(series[1].size() == 5);
  CHECK(series[2].size() == 6);
}

TEST_CASE("principal series needs a zero") {
  CHECK_THROWS_AS(principal_series(cyclic_group(3)), Error);
}

TEST_CASE("every series member is a two-sided ideal") {
  for (const char* name : {"T1", "B2", "C2uC3", "null3", "TuC1"}) {
    const FiniteSemigroup s = catalog_find(name)->object;
    for (const auto& series : principal_series_variants(s, 3))
      for (const auto& ideal : series) CHECK(is_ideal(s, ideal));
  }
}

TEST_CASE("principal factors of T1: the Rees factor T, then the trivial group") {
  const FiniteSemigroup t1 = validate_table(st::t1_table());
  const auto factors = principal_factors(t1);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].kind == FactorKind::ZeroSimple);
  REQUIRE(factors[0].reesData.has_value());
  CHECK(factors[0].reesData->group.order == 1);
  CHECK(factors[0].reesData->m * factors[0].reesData->n == 2);
  CHECK(factors[1].kind == FactorKind::Group);
  CHECK(factors[1].reesData->group.order == 1);
}

TEST_CASE("two isolated null elements give two null factors") {
  // {a, b, 0} with every product 0: the J-classes {a} and {b} are separate
  // since S^1 a S^1 = {a, 0} differs from S^1 b S^1 = {b, 0}.
  const auto factors = principal_factors(null_semigroup(2));
  REQUIRE(factors.size() == 2);
  for (const auto& f : factors) {
    CHECK(f.kind == FactorKind::Null);
    CHECK(f.nonzeroCount == 1);
  }
}

TEST_CASE("S3 with adjoined zero is a single group factor") {
  const auto factors =
      principal_factors(adjoin(dihedral_group(3), Adjoin::Zero));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].kind == FactorKind::Group);
  CHECK(factors[0].reesData->group.order == 6);
  CHECK(factors[0].reesData->m == 1);
  CHECK(factors[0].reesData->n == 1);
  CHECK(factors[0].reesData->sandwich(0, 0) != -1);
}

TEST_CASE("null factor iff the factor squares to theta") {
  for (const char* name : {"T1", "null2", "C2uC3", "TuC1", "B2"}) {
    const FiniteSemigroup s = catalog_find(name)->object;
    for (const auto& f : principal_factors(s)) {
      const int theta = *f.asSemigroup.zero;
      bool squaresToTheta = true;
      for (int i = 0; i < f.nonzeroCount && squaresToTheta; ++i)
        for (int j = 0; j < f.nonzeroCount && squaresToTheta; ++j)
          squaresToTheta = f.asSemigroup.table(i, j) == theta;
      CHECK((f.kind == FactorKind::Null) == squaresToTheta);
    }
  }
}

TEST_CASE("factor nonzero counts add up to order - 1") {
  for (const char* name : {"T1", "B2", "C2uC3", "null3", "TuC1", "Q8"}) {
    const FiniteSemigroup raw = catalog_find(name)->object;
    const FiniteSemigroup s = raw.zero ? raw : adjoin(raw, Adjoin::Zero);
    int total = 0;
    for (const auto& f : principal_factors(s)) total += f.nonzeroCount;
    CHECK(total == s.order - 1);
  }
}

TEST_CASE("factor multiset is invariant across linear extensions") {
  for (const auto& entry : catalog()) {
    const FiniteSemigroup s =
        entry.object.zero ? entry.object : adjoin(entry.object, Adjoin::Zero);
    const auto variants = principal_series_variants(s, 3);
    const auto reference = factor_profile(principal_factors(s, variants[0]));
    for (std::size_t i = 1; i < variants.size(); ++i)
      CHECK(factor_profile(principal_factors(s, variants[i])) == reference);
  }
}

TEST_CASE("multiple extensions exist for incomparable classes") {
  const FiniteSemigroup s = catalog_find("null3")->object;
  CHECK(principal_series_variants(s, 3).size() == 3);
  const FiniteSemigroup chain = catalog_find("T1")->object;
  CHECK(principal_series_variants(chain, 3).size() == 1);
}
