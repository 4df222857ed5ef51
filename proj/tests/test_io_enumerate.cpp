#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semihyp/catalog.hpp"
#include "semihyp/decide.hpp"
#include "semihyp/enumerate.hpp"
#include "semihyp/io.hpp"
#include "support.hpp"

using namespace semihyp;
namespace st = semihyp::testing;

TEST_CASE("parse the T1 JSON object") {
  const std::string bytes = R"({
    "order": 4,
    "table": [[0,1,2,3],[1,1,2,3],[2,1,2,3],[3,3,3,3]],
    "zero": 3, "identity": 0, "names": ["1","e","f","0"]
  })";
  const FiniteSemigroup s = parse_input(bytes, InputFormat::Json);
  CHECK(s.order == 4);
  CHECK(s.zero == 3);
  CHECK(s.identity == 0);
  CHECK(s.names[1] == "e");
  CHECK(s.table == st::t1_table());
}

TEST_CASE("parse the 2-element null text table") {
  const FiniteSemigroup s = parse_input("2\n0 0\n0 0\n", InputFormat::Text);
  CHECK(s.order == 2);
  CHECK(s.zero == 0);
}

TEST_CASE("parse errors carry positions; validation errors pass through") {
  try {
    parse_input("3\n0 1 2\n1 7 0\n2 0 1\n", InputFormat::Text);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
  try {
    parse_input("not a number\n", InputFormat::Text);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_input("{ broken json", InputFormat::Json), Error);
  CHECK_THROWS_AS(parse_input_auto("   "), Error);
}

TEST_CASE("format sniffing picks JSON for objects, text otherwise") {
  CHECK(parse_input_auto("  {\"order\":1,\"table\":[[0]]}").order == 1);
  CHECK(parse_input_auto("\n1\n0\n").order == 1);
}

TEST_CASE("parse-render round trips preserve the semigroup") {
  for (const char* name : {"T1", "B2", "Q12", "null2"}) {
    const FiniteSemigroup s = catalog_find(name)->object;
    const FiniteSemigroup viaJson =
        parse_input(render_semigroup(s, true), InputFormat::Json);
    CHECK(viaJson.table == s.table);
    CHECK(viaJson.zero == s.zero);
    CHECK(viaJson.identity == s.identity);
    const FiniteSemigroup viaText =
        parse_input(render_semigroup(s, false), InputFormat::Text);
    CHECK(viaText.table == s.table);
    // Distinguished elements are re-detected from the table alone.
    CHECK(viaText.zero == s.zero);
    CHECK(viaText.identity == s.identity);
  }
}

TEST_CASE("verdict rendering contracts") {
  const Verdict yes = decide(catalog_find("T1")->object);
  const std::string text = render_verdict(yes, false);
  CHECK(text.find("hyperbolic: yes") != std::string::npos);
  CHECK(text.find("K: right-zero factor") != std::string::npos);

  const Verdict no = decide(catalog_find("TuC1")->object);
  const std::string notUnital = render_verdict(no, false);
  CHECK(notUnital.find("hyperbolic: no") != std::string::npos);
  CHECK(notUnital.find("Q0S is not unital") != std::string::npos);

  const std::string json = render_verdict(yes, true);
  CHECK(json.find("\"schemaVersion\": 1") != std::string::npos);
  CHECK(json.find("\"hyperbolic\": true") != std::string::npos);
  CHECK(json.find("\"exceptional\": 0") != std::string::npos);
}

TEST_CASE("oracle rendering carries radicalDim") {
  const std::string json =
      render_oracle(oracle_report(catalog_find("T1")->object), true);
  CHECK(json.find("\"radicalDim\": 1") != std::string::npos);
  CHECK(json.find("\"t2Witness\": true") != std::string::npos);
  const std::string text =
      render_oracle(oracle_report(catalog_find("T1")->object), false);
  CHECK(text.find("dim J(Q0S): 1") != std::string::npos);
}

TEST_CASE("enumeration counts match the independent brute force, orders 2 and 3") {
  CHECK(enumerate_semigroups(1).size() == 1);
  CHECK(enumerate_semigroups(2).size() == st::brute_semigroup_classes(2).size());
  CHECK(enumerate_semigroups(3).size() == st::brute_semigroup_classes(3).size());
  // Published values: 5 and 24 classes up to isomorphism (OEIS A027851).
  CHECK(enumerate_semigroups(2).size() == 5);
  CHECK(enumerate_semigroups(3).size() == 24);
}

TEST_CASE("enumeration at order 4 matches the published class count") {
  // 188 classes up to isomorphism (OEIS A027851); a 4^16 brute force is not
  // practical here, so the published value is the cross-check.
  CHECK(enumerate_semigroups(4).size() == 188);
}

TEST_CASE("enumeration rejects order 5") {
  CHECK_THROWS_AS(enumerate_semigroups(5), Error);
}

TEST_CASE("enumerated streams are deterministic and pairwise non-isomorphic") {
  const auto first = enumerate_semigroups(3);
  const auto second = enumerate_semigroups(3);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    CHECK(first[i].table == second[i].table);
  for (std::size_t i = 0; i < first.size(); ++i)
    for (std::size_t j = i + 1; j < first.size(); ++j)
      CHECK(!is_isomorphic(first[i], first[j]));
}

TEST_CASE("enumeration filters behave") {
  EnumerateFilters withZero{true, false};
  for (const auto& s : enumerate_semigroups(3, withZero))
    CHECK(s.zero.has_value());

  EnumerateFilters both{true, true};
  for (const auto& s : enumerate_semigroups(3, both)) {
    CHECK(s.zero.has_value());
    const AlgebraRep a = structure_constants(s);
    CHECK(a.identityCoords.has_value());
  }
  // The filters really cut the stream down.
  CHECK(enumerate_semigroups(3, both).size() <
        enumerate_semigroups(3).size());
}

TEST_CASE("canonical tables are relabeling-invariant") {
  auto rng = st::test_rng(3);
  const FiniteSemigroup t1 = catalog_find("T1")->object;
  std::vector<int> perm(t1.order);
  std::iota(perm.begin(), perm.end(), 0);
  const IntMatrix reference = canonical_table(t1.table);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_table(relabel(t1, perm).table) == reference);
  }
}
