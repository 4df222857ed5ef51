#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "semihyp/catalog.hpp"
#include "semihyp/decide.hpp"
#include "semihyp/rees.hpp"
#include "support.hpp"

using namespace semihyp;
namespace st = semihyp::testing;

namespace {

FactorClassification classify_only_factor(const FiniteSemigroup& s) {
  const auto factors = principal_factors(s);
  REQUIRE(factors.size() == 1);
  return classify_factor(factors[0], 0);
}

std::multiset<VerdictKind> kind_multiset(const Verdict& v) {
  std::multiset<VerdictKind> kinds;
  for (const auto& fc : v.classifications) kinds.insert(fc.kind);
  return kinds;
}

}  // namespace

TEST_CASE("classify T as the exceptional right-zero factor") {
  const FactorClassification fc = classify_only_factor(right_zero_with_zero());
  CHECK(fc.kind == VerdictKind::ExceptionalRightZero);
  CHECK(fc.orientation == "right-zero");
}

TEST_CASE("classify the left-zero orientation") {
  IntMatrix row(1, 2);
  row << 0, 0;
  const FiniteSemigroup leftZero =
      rees_matrix_construct(make_rees_data(cyclic_group(1), 2, 1, row));
  const FactorClassification fc = classify_only_factor(leftZero);
  CHECK(fc.kind == VerdictKind::ExceptionalRightZero);
  CHECK(fc.orientation == "left-zero");
}

TEST_CASE("classify the 1x4 column of ones: BadDimensions") {
  IntMatrix column(4, 1);
  column << 0, 0, 0, 0;
  const FiniteSemigroup s =
      rees_matrix_construct(make_rees_data(cyclic_group(1), 1, 4, column));
  const FactorClassification fc = classify_only_factor(s);
  CHECK(fc.kind == VerdictKind::Fails);
  CHECK(fc.reason == FailReason::BadDimensions);
}

TEST_CASE("classify M0(C2,1,2,P): NontrivialGroup") {
  IntMatrix column(2, 1);
  column << 0, 1;
  const FiniteSemigroup s =
      rees_matrix_construct(make_rees_data(cyclic_group(2), 1, 2, column));
  const FactorClassification fc = classify_only_factor(s);
  CHECK(fc.kind == VerdictKind::Fails);
  CHECK(fc.reason == FailReason::NontrivialGroup);
}

TEST_CASE("classify the all-ones 2x2 sandwich: AllOnesSandwich") {
  const FiniteSemigroup s = rees_matrix_construct(
      make_rees_data(cyclic_group(1), 2, 2, IntMatrix::Zero(2, 2)));
  const FactorClassification fc = classify_only_factor(s);
  CHECK(fc.kind == VerdictKind::Fails);
  CHECK(fc.reason == FailReason::AllOnesSandwich);
}

TEST_CASE("classify the 2x2 identity and triangular sandwiches") {
  IntMatrix identity(2, 2), triangular(2, 2);
  identity << 0, -1, -1, 0;
  triangular << 0, 0, -1, 0;
  for (const IntMatrix& p : {identity, triangular}) {
    const FiniteSemigroup s =
        rees_matrix_construct(make_rees_data(cyclic_group(1), 2, 2, p));
    const FactorClassification fc = classify_only_factor(s);
    CHECK(fc.kind == VerdictKind::ExceptionalTwoByTwo);
    REQUIRE(fc.sandwich.has_value());
    CHECK(rank_of(*fc.sandwich) == 2);
  }
}

TEST_CASE("normal forms of the 2x2 sandwiches are the two listed matrices") {
  IntMatrix antidiagonal(2, 2), lower(2, 2);
  antidiagonal << -1, 0, 0, -1;
  lower << 0, -1, 0, 0;
  IntMatrix expectedIdentity(2, 2), expectedTriangular(2, 2);
  expectedIdentity << 1, 0, 0, 1;
  expectedTriangular << 1, 1, 0, 1;

  const auto normal_form = [](const IntMatrix& p) {
    const FiniteSemigroup s =
        rees_matrix_construct(make_rees_data(cyclic_group(1), 2, 2, p));
    const auto factors = principal_factors(s);
    return *classify_factor(factors[0], 0).sandwich;
  };
  CHECK(normal_form(antidiagonal) == expectedIdentity);
  CHECK(normal_form(lower) == expectedTriangular);
}

TEST_CASE("classify null factors: one nonzero element passes, more fail") {
  const auto single = classify_only_factor(null_semigroup(1));
  CHECK(single.kind == VerdictKind::ExceptionalNull);

  // One J-class with two nonzero null elements: {a, b, 0} with ab = ba = 0
  // and a, b J-equivalent needs a bigger ambient semigroup; the direct
  // two-element null factor comes from a table where a and b generate the
  // same ideal. Use B2's nilpotent part: elements e12, e21 of B2 form no
  // such class, so build the 3-element null semigroup where a*anything = 0
  // and check the multi-element null factor through a custom table instead.
  IntMatrix t(3, 3);
  t << 2, 2, 2,
       2, 2, 2,
       2, 2, 2;
  // All products zero: J-classes are {a}, {b}, {0}; factors have one nonzero
  // element each. A genuinely 2-element null J-class appears inside B2^0
  // quotients, covered by the RadicalTooBig path below via a hand-made
  // factor.
  PrincipalFactor fake;
  fake.kind = FactorKind::Null;
  fake.nonzeroCount = 2;
  fake.elements = {0, 1};
  fake.asSemigroup = validate_table(t);
  const FactorClassification fc = classify_factor(fake, 0);
  CHECK(fc.kind == VerdictKind::Fails);
  CHECK(fc.reason == FailReason::RadicalTooBig);
}

TEST_CASE("classify group factors") {
  const auto higman = classify_only_factor(adjoin(cyclic_group(4), Adjoin::Zero));
  CHECK(higman.kind == VerdictKind::HigmanGroup);

  const auto c5 = classify_only_factor(adjoin(cyclic_group(5), Adjoin::Zero));
  CHECK(c5.kind == VerdictKind::ExceptionalAbelianGroup);
  CHECK(c5.groupLabel == "C5");

  const auto s3 = classify_only_factor(adjoin(dihedral_group(3), Adjoin::Zero));
  CHECK(s3.kind == VerdictKind::ExceptionalNonabelianGroup);
  CHECK(s3.groupLabel == "S3");

  const auto c7 = classify_only_factor(adjoin(cyclic_group(7), Adjoin::Zero));
  CHECK(c7.kind == VerdictKind::Fails);
  CHECK(c7.reason == FailReason::GroupNotHyperbolic);
}

TEST_CASE("decide T1: hyperbolic with the right-zero K") {
  const Verdict v = decide(validate_table(st::t1_table()));
  CHECK(v.hyperbolic);
  CHECK(!v.notUnital);
  REQUIRE(v.exceptionalIndex.has_value());
  CHECK(v.classifications[*v.exceptionalIndex].kind ==
        VerdictKind::ExceptionalRightZero);
  const auto kinds = kind_multiset(v);
  CHECK(kinds.count(VerdictKind::HigmanGroup) == 1);
}

TEST_CASE("decide C7 with adjoined zero: not hyperbolic") {
  const Verdict v = decide(cyclic_group(7));
  CHECK(!v.hyperbolic);
  CHECK(!v.notUnital);
  CHECK(v.classifications.size() == 1);
  CHECK(v.classifications[0].kind == VerdictKind::Fails);
}

TEST_CASE("decide B2 with adjoined identity: hyperbolic via the 2x2 K") {
  const Verdict v = decide(adjoin(brandt_b2(), Adjoin::Identity));
  CHECK(v.hyperbolic);
  REQUIRE(v.exceptionalIndex.has_value());
  const auto& k = v.classifications[*v.exceptionalIndex];
  CHECK(k.kind == VerdictKind::ExceptionalTwoByTwo);
  IntMatrix expected(2, 2);
  expected << 1, 0, 0, 1;
  CHECK(*k.sandwich == expected);
}

TEST_CASE("decide flags non-unital algebras and refuses to call them hyperbolic") {
  const Verdict v = decide(catalog_find("TuC1")->object);
  CHECK(v.notUnital);
  CHECK(!v.hyperbolic);
  // The factor classifications alone would have allowed a yes.
  int nonHigman = 0;
  for (const auto& fc : v.classifications)
    if (fc.kind != VerdictKind::HigmanGroup) ++nonHigman;
  CHECK(nonHigman == 1);
}

TEST_CASE("decide rejects two exceptional factors") {
  const FiniteSemigroup s =
      zero_union(right_zero_with_zero(), right_zero_with_zero());
  const Verdict v = decide(adjoin(s, Adjoin::Identity));
  CHECK(!v.hyperbolic);
  CHECK(!v.exceptionalIndex.has_value());
}

TEST_CASE("verdict invariants hold across the catalog") {
  for (const auto& entry : catalog()) {
    const Verdict v = decide(entry.object);
    int nonHigman = 0, fails = 0;
    for (const auto& fc : v.classifications) {
      if (fc.kind != VerdictKind::HigmanGroup) ++nonHigman;
      if (fc.kind == VerdictKind::Fails) ++fails;
    }
    if (v.hyperbolic) {
      CHECK(nonHigman <= 1);
      CHECK(fails == 0);
      if (v.exceptionalIndex)
        CHECK(v.classifications[*v.exceptionalIndex].kind !=
              VerdictKind::Fails);
    } else {
      CHECK((v.notUnital || fails > 0 || nonHigman >= 2));
    }
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  auto rng = st::test_rng(41);
  for (const char* name : {"T1", "B2", "C2uC3", "Q8", "null2"}) {
    const FiniteSemigroup s = catalog_find(name)->object;
    const Verdict before = decide(s);
    std::vector<int> perm(s.order);
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 3; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Verdict after = decide(relabel(s, perm));
      CHECK(before.hyperbolic == after.hyperbolic);
      CHECK(before.notUnital == after.notUnital);
      CHECK(kind_multiset(before) == kind_multiset(after));
    }
  }
}

TEST_CASE("lemma constraints: the three spec rows") {
  IntMatrix one(1, 1), column(2, 1), identity(2, 2), allOnes(2, 2);
  one << 0;
  column << 0, 0;
  identity << 0, -1, -1, 0;

  const LemmaReport r1 =
      lemma_constraints(make_rees_data(cyclic_group(1), 1, 1, one));
  CHECK(r1.allowed);
  CHECK(r1.predictedRadicalDim == 0);
  CHECK(r1.predictedQuotient == "Q");

  const LemmaReport r2 =
      lemma_constraints(make_rees_data(cyclic_group(1), 1, 2, column));
  CHECK(r2.allowed);
  CHECK(r2.predictedRadicalDim == 1);
  CHECK(r2.predictedQuotient == "Q");

  const LemmaReport r3 =
      lemma_constraints(make_rees_data(cyclic_group(1), 2, 2, identity));
  CHECK(r3.allowed);
  CHECK(r3.predictedRadicalDim == 0);
  CHECK(r3.predictedQuotient == "M2(Q)");

  allOnes << 0, 0, 0, 0;
  const LemmaReport r4 =
      lemma_constraints(make_rees_data(cyclic_group(1), 2, 2, allOnes));
  CHECK(!r4.allowed);
  CHECK(r4.predictedRadicalDim == 3);

  const LemmaReport r5 =
      lemma_constraints(make_rees_data(cyclic_group(2), 1, 2, column));
  CHECK(!r5.allowed);
}

TEST_CASE("cross-check on T1: consistent with the T2 witness") {
  const CrossCheckReport report = cross_check(validate_table(st::t1_table()));
  CHECK(report.consistent);
  CHECK(report.algebraDim == 3);
  CHECK(report.radicalDim == 1);
  REQUIRE(report.t2Witness.has_value());
  CHECK(*report.t2Witness);
}

TEST_CASE("cross-check on two nulls with identity: no, dim J = 2, consistent") {
  const FiniteSemigroup s = adjoin(null_semigroup(2), Adjoin::Identity);
  const CrossCheckReport report = cross_check(s);
  CHECK(!report.verdict.hyperbolic);
  CHECK(report.radicalDim == 2);
  CHECK(report.consistent);
}

TEST_CASE("cross-check on C5 with zero: yes, dim J = 0, consistent") {
  const CrossCheckReport report = cross_check(cyclic_group(5));
  CHECK(report.verdict.hyperbolic);
  CHECK(report.radicalDim == 0);
  CHECK(report.consistent);
}

TEST_CASE("cross-check on B2 with identity runs the Munn collapse") {
  const CrossCheckReport report =
      cross_check(adjoin(brandt_b2(), Adjoin::Identity));
  CHECK(report.consistent);
  CHECK(report.radicalDim == 0);
  REQUIRE(report.munnCollapse.has_value());
  CHECK(*report.munnCollapse);
}

TEST_CASE("cross-check refuses non-unital input") {
  CHECK_THROWS_AS(cross_check(null_semigroup(1)), Error);
}

TEST_CASE("semisimple split: unions of Higman group factors have dim J = 0") {
  const FiniteSemigroup a = adjoin(cyclic_group(4), Adjoin::Zero);
  const FiniteSemigroup b = adjoin(dicyclic_group(2), Adjoin::Zero);
  const FiniteSemigroup u = zero_union(a, b);
  const CrossCheckReport report = cross_check(u);
  CHECK(report.verdict.hyperbolic);
  CHECK(report.radicalDim == 0);
  CHECK(report.consistent);
}
