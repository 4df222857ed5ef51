#include "semihyp/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace semihyp {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << what;
  throw Error(ErrorKind::ParseError, os.str());
}

std::pair<int, int> position_of(std::string_view bytes, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < bytes.size(); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

FiniteSemigroup parse_json(std::string_view bytes) {
  ordered_json j;
  try {
    j = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = position_of(bytes, e.byte ? e.byte - 1 : 0);
    parse_fail(line, column, e.what());
  }
  try {
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
      throw Error(ErrorKind::ParseError,
                  "expected an object with \"order\" and \"table\"");
    const int order = j.at("order").get<int>();
    const auto& rows = j.at("table");
    if (!rows.is_array() || static_cast<int>(rows.size()) != order)
      throw Error(ErrorKind::ParseError, "\"table\" must have `order` rows");
    IntMatrix table(order, order);
    for (int i = 0; i < order; ++i) {
      const auto& row = rows.at(i);
      if (!row.is_array() || static_cast<int>(row.size()) != order)
        throw Error(ErrorKind::ParseError,
                    "row " + std::to_string(i) + " must have `order` entries");
      for (int k = 0; k < order; ++k) table(i, k) = row.at(k).get<int>();
    }
    std::optional<int> zero, identity;
    if (j.contains("zero") && !j.at("zero").is_null())
      zero = j.at("zero").get<int>();
    if (j.contains("identity") && !j.at("identity").is_null())
      identity = j.at("identity").get<int>();
    std::vector<std::string> names;
    if (j.contains("names") && !j.at("names").is_null())
      names = j.at("names").get<std::vector<std::string>>();
    return validate_table(table, zero, identity, std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

FiniteSemigroup parse_text(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  std::string lineText;
  int line = 0;

  auto next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, lineText)) {
      ++line;
      if (lineText.find_first_not_of(" \t\r") != std::string::npos)
        return lineText;
    }
    ++line;
    return std::nullopt;
  };

  auto first = next_line();
  if (!first) parse_fail(line, 1, "missing order line");
  int order = 0;
  {
    std::istringstream ls(*first);
    if (!(ls >> order) || order <= 0)
      parse_fail(line, 1, "the first line must hold a positive order");
    std::string rest;
    if (ls >> rest) parse_fail(line, 1, "unexpected token after the order");
  }
  IntMatrix table(order, order);
  for (int i = 0; i < order; ++i) {
    auto row = next_line();
    if (!row) parse_fail(line, 1, "missing table row " + std::to_string(i));
    std::istringstream ls(*row);
    for (int k = 0; k < order; ++k) {
      if (!(ls >> table(i, k)))
        parse_fail(line, static_cast<int>(ls.tellg()) < 0
                             ? static_cast<int>(row->size()) + 1
                             : static_cast<int>(ls.tellg()) + 1,
                   "row " + std::to_string(i) + " needs " +
                       std::to_string(order) + " entries");
    }
    std::string rest;
    if (ls >> rest)
      parse_fail(line, 1, "trailing token on row " + std::to_string(i));
  }
  return validate_table(table);
}

ordered_json semigroup_json(const FiniteSemigroup& s) {
  ordered_json j;
  j["order"] = s.order;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < s.order; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < s.order; ++k) row.push_back(s.table(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (s.zero) j["zero"] = *s.zero;
  if (s.identity) j["identity"] = *s.identity;
  if (!s.names.empty()) j["names"] = s.names;
  return j;
}

ordered_json vector_json(const QVector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_string(v(i)));
  return arr;
}

ordered_json sandwich_json(const IntMatrix& p) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < p.cols(); ++c) row.push_back(p(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string kind_phrase(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::HigmanGroup: return "Higman group";
    case VerdictKind::ExceptionalNull: return "null factor";
    case VerdictKind::ExceptionalRightZero: return "right-zero factor";
    case VerdictKind::ExceptionalTwoByTwo: return "2x2 matrix factor";
    case VerdictKind::ExceptionalAbelianGroup: return "exceptional abelian group";
    case VerdictKind::ExceptionalNonabelianGroup:
      return "exceptional nonabelian group";
    case VerdictKind::Fails: return "failing factor";
  }
  return "unknown";
}

ordered_json classification_json(const FactorClassification& fc) {
  ordered_json j;
  j["index"] = fc.factorIndex;
  j["kind"] = verdict_kind_name(fc.kind);
  if (fc.kind == VerdictKind::Fails) j["reason"] = fail_reason_name(fc.reason);
  j["detail"] = fc.detail;
  if (fc.groupLabel) j["group"] = *fc.groupLabel;
  if (fc.sandwich) j["sandwich"] = sandwich_json(*fc.sandwich);
  if (fc.orientation) j["orientation"] = *fc.orientation;
  return j;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["schemaVersion"] = kJsonSchemaVersion;
  j["hyperbolic"] = v.hyperbolic;
  j["notUnital"] = v.notUnital;
  ordered_json factors = ordered_json::array();
  for (const auto& fc : v.classifications)
    factors.push_back(classification_json(fc));
  j["factors"] = std::move(factors);
  if (v.exceptionalIndex)
    j["exceptional"] = *v.exceptionalIndex;
  else
    j["exceptional"] = nullptr;
  return j;
}

void verdict_text(std::ostream& os, const Verdict& v) {
  os << "hyperbolic: " << (v.hyperbolic ? "yes" : "no") << "\n";
  if (v.notUnital) os << "Q0S is not unital\n";
  if (v.exceptionalIndex) {
    const auto& k = v.classifications[*v.exceptionalIndex];
    os << "K: " << kind_phrase(k.kind) << " (factor " << k.factorIndex << ")\n";
  }
  os << "factors:\n";
  for (const auto& fc : v.classifications) {
    os << "  [" << fc.factorIndex << "] " << kind_phrase(fc.kind) << " — "
       << fc.detail;
    if (fc.kind == VerdictKind::Fails)
      os << " (" << fail_reason_name(fc.reason) << ")";
    os << "\n";
  }
}

}  // namespace

FiniteSemigroup parse_input(std::string_view bytes, InputFormat format) {
  return format == InputFormat::Json ? parse_json(bytes) : parse_text(bytes);
}

FiniteSemigroup parse_input_auto(std::string_view bytes) {
  for (char c : bytes) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return parse_input(bytes,
                       c == '{' ? InputFormat::Json : InputFormat::Text);
  }
  throw Error(ErrorKind::ParseError, "empty input");
}

std::string render_semigroup(const FiniteSemigroup& s, bool json) {
  if (json) return semigroup_json(s).dump(2) + "\n";
  std::ostringstream os;
  os << s.order << "\n";
  for (int i = 0; i < s.order; ++i) {
    for (int k = 0; k < s.order; ++k)
      os << s.table(i, k) << (k + 1 < s.order ? " " : "");
    os << "\n";
  }
  if (s.zero) os << "# zero: " << *s.zero << "\n";
  if (s.identity) os << "# identity: " << *s.identity << "\n";
  return os.str();
}

std::string render_verdict(const Verdict& v, bool json) {
  if (json) return verdict_json(v).dump(2) + "\n";
  std::ostringstream os;
  verdict_text(os, v);
  if (v.oracleSummary) os << "oracle: " << *v.oracleSummary << "\n";
  return os.str();
}

std::string render_cross_check(const CrossCheckReport& report, bool json) {
  if (json) {
    ordered_json j = verdict_json(report.verdict);
    j["radicalDim"] = report.radicalDim;
    j["algebraDim"] = report.algebraDim;
    j["consistent"] = report.consistent;
    if (report.t2Witness) j["t2Witness"] = *report.t2Witness;
    if (report.munnCollapse) j["munnCollapse"] = *report.munnCollapse;
    if (!report.violations.empty()) j["violations"] = report.violations;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  verdict_text(os, report.verdict);
  os << "dim Q0S: " << report.algebraDim << "\n";
  os << "dim J(Q0S): " << report.radicalDim << "\n";
  if (report.t2Witness)
    os << "T2(Q) witness: " << (*report.t2Witness ? "found" : "missing") << "\n";
  if (report.munnCollapse)
    os << "Munn collapse: " << (*report.munnCollapse ? "ok" : "failed") << "\n";
  os << "consistent: " << (report.consistent ? "yes" : "no") << "\n";
  for (const auto& violation : report.violations)
    os << "  violation: " << violation << "\n";
  return os.str();
}

std::string render_oracle(const OracleReport& report, bool json) {
  if (json) {
    ordered_json j;
    j["schemaVersion"] = kJsonSchemaVersion;
    j["dim"] = report.dim;
    j["unital"] = report.unital;
    j["identity"] = report.identity ? vector_json(*report.identity)
                                    : ordered_json(nullptr);
    if (report.radical) {
      j["radicalDim"] = report.radical->dimension;
      ordered_json basis = ordered_json::array();
      for (const QVector& v : report.radical->basis)
        basis.push_back(vector_json(v));
      j["radicalBasis"] = std::move(basis);
      j["nilpotencyIndex"] = report.radical->nilpotencyIndex;
    }
    if (report.t2Witness) j["t2Witness"] = *report.t2Witness;
    j["basis"] = report.basisLabels;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "dim Q0S: " << report.dim << "\n";
  if (!report.unital) {
    os << "Q0S is not unital\n";
    return os.str();
  }
  os << "identity: ";
  for (Eigen::Index i = 0; i < report.identity->size(); ++i) {
    const Rational& c = (*report.identity)(i);
    if (c == 0) continue;
    os << to_string(c) << "*" << report.basisLabels[i] << " ";
  }
  if (*report.identity == QVector::Zero(report.identity->size()))
    os << "0 (zero algebra)";
  os << "\n";
  os << "dim J(Q0S): " << report.radical->dimension << "\n";
  for (const QVector& v : report.radical->basis) {
    os << "  radical basis vector: ";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) == 0) continue;
      os << (v(i) > 0 ? "+" : "") << to_string(v(i)) << "*"
         << report.basisLabels[i] << " ";
    }
    os << "\n";
  }
  os << "nilpotency index: " << report.radical->nilpotencyIndex << "\n";
  if (report.t2Witness)
    os << "T2(Q) witness: " << (*report.t2Witness ? "found" : "missing") << "\n";
  return os.str();
}

std::string render_factors(const std::vector<PrincipalFactor>& factors,
                           bool json) {
  if (json) {
    ordered_json j;
    j["schemaVersion"] = kJsonSchemaVersion;
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      ordered_json fj;
      fj["index"] = i;
      fj["kind"] = factor_kind_name(f.kind);
      fj["nonzeroCount"] = f.nonzeroCount;
      fj["elements"] = f.elements;
      if (f.reesData) {
        ordered_json rj;
        rj["groupOrder"] = f.reesData->group.order;
        rj["m"] = f.reesData->m;
        rj["n"] = f.reesData->n;
        rj["sandwich"] = sandwich_json(f.reesData->sandwich);
        fj["rees"] = std::move(rj);
      }
      arr.push_back(std::move(fj));
    }
    j["factors"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    os << "[" << i << "] " << factor_kind_name(f.kind) << " factor, "
       << f.nonzeroCount << " nonzero element"
       << (f.nonzeroCount == 1 ? "" : "s");
    if (f.reesData)
      os << ", M0(G(order " << f.reesData->group.order << "),"
         << f.reesData->m << "," << f.reesData->n << ";P)";
    os << "\n";
  }
  return os.str();
}

std::string render_iso(const std::vector<int>* witness, bool json) {
  if (json) {
    ordered_json j;
    j["schemaVersion"] = kJsonSchemaVersion;
    j["isomorphic"] = witness != nullptr;
    if (witness) j["witness"] = *witness;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "isomorphic: " << (witness ? "yes" : "no") << "\n";
  if (witness) {
    os << "witness:";
    for (std::size_t i = 0; i < witness->size(); ++i)
      os << " " << i << "->" << (*witness)[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace semihyp
