// Command line front end: decide, oracle, factors, catalog, iso, enumerate.
// Exit codes: 0 success (the verdict lives in the output), 1 internal error,
// 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "semihyp/algebra.hpp"
#include "semihyp/catalog.hpp"
#include "semihyp/decide.hpp"
#include "semihyp/enumerate.hpp"
#include "semihyp/io.hpp"

namespace {

using namespace semihyp;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Internal:
    case ErrorKind::NoIdempotent:
      return 1;
    default:
      return 2;  // bad or unsupported input
  }
}

struct OutputOptions {
  bool json = false;
  std::string format;  // "text" or "json"; set by --format

  bool want_json() const {
    if (!format.empty()) return format == "json";
    return json;
  }
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_flag("--json", out.json, "emit JSON");
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolicity of contracted rational semigroup algebras"};
  app.require_subcommand(1);

  OutputOptions out;

  std::string decideFile;
  bool decideCross = false;
  auto* cmdDecide =
      app.add_subcommand("decide", "decide the hyperbolic property of Q0S");
  cmdDecide->add_option("file", decideFile, "semigroup file (JSON or text, - for stdin)")
      ->required();
  cmdDecide->add_flag("--cross-check", decideCross,
                      "verify the verdict against the algebra oracle");
  add_output_flags(cmdDecide, out);

  std::string oracleFile;
  auto* cmdOracle = app.add_subcommand(
      "oracle", "dimensions, identity and radical of Q0S, with witnesses");
  cmdOracle->add_option("file", oracleFile, "semigroup file")->required();
  add_output_flags(cmdOracle, out);

  std::string factorsFile;
  auto* cmdFactors =
      app.add_subcommand("factors", "principal factors with Rees data");
  cmdFactors->add_option("file", factorsFile, "semigroup file")->required();
  add_output_flags(cmdFactors, out);

  std::string catalogName;
  bool catalogList = false;
  auto* cmdCatalog =
      app.add_subcommand("catalog", "emit a named catalog semigroup as JSON");
  cmdCatalog->add_option("name", catalogName, "catalog entry name");
  cmdCatalog->add_flag("--list", catalogList, "list catalog entries");
  add_output_flags(cmdCatalog, out);

  std::string isoA, isoB;
  auto* cmdIso = app.add_subcommand("iso", "test two semigroups for isomorphism");
  cmdIso->add_option("fileA", isoA, "first semigroup file")->required();
  cmdIso->add_option("fileB", isoB, "second semigroup file")->required();
  add_output_flags(cmdIso, out);

  int enumOrder = 0;
  bool enumZero = false, enumUnital = false, enumCross = false;
  auto* cmdEnum = app.add_subcommand(
      "enumerate", "all semigroups of a given order up to isomorphism");
  cmdEnum->add_option("--order", enumOrder, "order (at most 4)")->required();
  cmdEnum->add_flag("--with-zero", enumZero, "only semigroups with a zero");
  cmdEnum->add_flag("--unital-only", enumUnital, "only semigroups with Q0S unital");
  cmdEnum->add_flag("--cross-check", enumCross,
                    "cross-check decide against the oracle for each one");
  add_output_flags(cmdEnum, out);

  CLI11_PARSE(app, argc, argv);

  try {
    const bool json = out.want_json();
    if (*cmdDecide) {
      const FiniteSemigroup s = parse_input_auto(slurp(decideFile));
      if (decideCross) {
        const AlgebraRep a =
            structure_constants(s.zero ? s : adjoin(s, Adjoin::Zero));
        if (!a.identityCoords) {
          Verdict v = decide(s);
          std::cout << render_verdict(v, json);
          if (!json)
            std::cout << "cross-check skipped: Q0S is not unital\n";
        } else {
          std::cout << render_cross_check(cross_check(s), json);
        }
      } else {
        std::cout << render_verdict(decide(s), json);
      }
    } else if (*cmdOracle) {
      const FiniteSemigroup s = parse_input_auto(slurp(oracleFile));
      std::cout << render_oracle(oracle_report(s), json);
    } else if (*cmdFactors) {
      const FiniteSemigroup s = parse_input_auto(slurp(factorsFile));
      std::cout << render_factors(principal_factors(s), json);
    } else if (*cmdCatalog) {
      if (catalogList || catalogName.empty()) {
        for (const auto& entry : catalog())
          std::cout << entry.name << "  (order " << entry.object.order
                    << "): " << entry.description << "\n";
      } else {
        const CatalogEntry* entry = catalog_find(catalogName);
        if (!entry)
          throw Error(ErrorKind::ParseError,
                      "no catalog entry named '" + catalogName + "'");
        std::cout << render_semigroup(entry->object, true);
      }
    } else if (*cmdIso) {
      const FiniteSemigroup a = parse_input_auto(slurp(isoA));
      const FiniteSemigroup b = parse_input_auto(slurp(isoB));
      const auto witness = isomorphism(a, b);
      std::cout << render_iso(witness ? &*witness : nullptr, json);
    } else if (*cmdEnum) {
      EnumerateFilters filters{enumZero, enumUnital};
      int count = 0, inconsistent = 0;
      enumerate_semigroups(enumOrder, filters, [&](const FiniteSemigroup& s) {
        ++count;
        if (json) {
          std::cout << render_semigroup(s, true);
        } else {
          std::cout << "# " << count << "\n" << render_semigroup(s, false);
        }
        if (enumCross) {
          const FiniteSemigroup base =
              s.zero ? s : adjoin(s, Adjoin::Zero);
          if (!structure_constants(base).identityCoords) {
            if (!json) std::cout << "cross-check: skipped (Q0S not unital)\n";
          } else {
            const CrossCheckReport report = cross_check(s);
            if (!report.consistent) ++inconsistent;
            if (!json)
              std::cout << "cross-check: "
                        << (report.consistent ? "consistent" : "INCONSISTENT")
                        << "\n";
          }
        }
      });
      if (!json) {
        std::cout << "total: " << count << "\n";
        if (enumCross) std::cout << "inconsistent: " << inconsistent << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
