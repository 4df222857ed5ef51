// Parsing of semigroup input files (JSON and plain text) and rendering of
// semigroups, verdicts, oracle reports and factor lists in text or JSON.

#ifndef SEMIHYP_IO_HPP_
#define SEMIHYP_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "semihyp/algebra.hpp"
#include "semihyp/decide.hpp"
#include "semihyp/green.hpp"
#include "semihyp/semigroup.hpp"

namespace semihyp {

inline constexpr int kJsonSchemaVersion = 1;

enum class InputFormat { Json, Text };

/// JSON: {"order": N, "table": [[...]], "zero": i?, "identity": i?,
/// "names": [...]?}. Text: first line N, then N lines of N 0-based indices.
/// Errors carry line/column diagnostics; validation errors pass through.
FiniteSemigroup parse_input(std::string_view bytes, InputFormat format);

/// Picks the format by the first non-space byte ('{' means JSON).
FiniteSemigroup parse_input_auto(std::string_view bytes);

std::string render_semigroup(const FiniteSemigroup& s, bool json);
std::string render_verdict(const Verdict& v, bool json);
std::string render_cross_check(const CrossCheckReport& report, bool json);
std::string render_oracle(const OracleReport& report, bool json);
std::string render_factors(const std::vector<PrincipalFactor>& factors,
                           bool json);
std::string render_iso(const std::vector<int>* witness, bool json);

}  // namespace semihyp

#endif  // SEMIHYP_IO_HPP_
