#include "semihyp/decide.hpp"

#include <algorithm>
#include <sstream>

#include "semihyp/catalog.hpp"
#include "semihyp/group.hpp"
#include "semihyp/rees.hpp"

namespace semihyp {

const char* verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::HigmanGroup: return "HigmanGroup";
    case VerdictKind::ExceptionalNull: return "ExceptionalNull";
    case VerdictKind::ExceptionalRightZero: return "ExceptionalRightZero";
    case VerdictKind::ExceptionalTwoByTwo: return "ExceptionalTwoByTwo";
    case VerdictKind::ExceptionalAbelianGroup: return "ExceptionalAbelianGroup";
    case VerdictKind::ExceptionalNonabelianGroup:
      return "ExceptionalNonabelianGroup";
    case VerdictKind::Fails: return "Fails";
  }
  return "Unknown";
}

const char* fail_reason_name(FailReason reason) {
  switch (reason) {
    case FailReason::None: return "None";
    case FailReason::RadicalTooBig: return "RadicalTooBig";
    case FailReason::GroupNotHyperbolic: return "GroupNotHyperbolic";
    case FailReason::NontrivialGroup: return "NontrivialGroup";
    case FailReason::BadDimensions: return "BadDimensions";
    case FailReason::AllOnesSandwich: return "AllOnesSandwich";
    case FailReason::SandwichSingular: return "SandwichSingular";
  }
  return "Unknown";
}

namespace {

std::string sandwich_to_string(const IntMatrix& p) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    os << "[";
    for (Eigen::Index c = 0; c < p.cols(); ++c)
      os << p(r, c) << (c + 1 < p.cols() ? "," : "");
    os << "]" << (r + 1 < p.rows() ? "," : "");
  }
  os << "]";
  return os.str();
}

// Row/column permutation normal form of a square 0/1 matrix: maximize the
// diagonal, then the row-major word. The two allowed 2x2 sandwiches
// normalize to the identity and to the upper unitriangular [[1,1],[0,1]].
IntMatrix permutation_normal_form(const IntMatrix& p) {
  const int rows = static_cast<int>(p.rows());
  const int cols = static_cast<int>(p.cols());
  std::vector<int> rowPerm(rows), colPerm(cols);
  for (int i = 0; i < rows; ++i) rowPerm[i] = i;
  auto key_of = [&](const std::vector<int>& rp, const std::vector<int>& cp) {
    std::vector<int> key;
    key.reserve(std::min(rows, cols) + rows * cols);
    for (int r = 0; r < std::min(rows, cols); ++r) key.push_back(p(rp[r], cp[r]));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) key.push_back(p(rp[r], cp[c]));
    return key;
  };
  std::vector<int> bestKey;
  IntMatrix best = p;
  do {
    for (int i = 0; i < cols; ++i) colPerm[i] = i;
    do {
      std::vector<int> key = key_of(rowPerm, colPerm);
      if (bestKey.empty() || key > bestKey) {
        bestKey = key;
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c) best(r, c) = p(rowPerm[r], colPerm[c]);
      }
    } while (std::next_permutation(colPerm.begin(), colPerm.end()));
  } while (std::next_permutation(rowPerm.begin(), rowPerm.end()));
  return best;
}

FactorClassification classify_group_factor(const PrincipalFactor& factor,
                                           int index) {
  FactorClassification fc;
  fc.factorIndex = index;
  const FiniteSemigroup& g = factor.reesData->group;
  if (is_higman(g)) {
    fc.kind = VerdictKind::HigmanGroup;
    fc.detail = "Higman group of order " + std::to_string(g.order);
    return fc;
  }
  if (auto label = recognize_exceptional_group(g)) {
    const bool abelian = fingerprint(g).abelian;
    fc.kind = abelian ? VerdictKind::ExceptionalAbelianGroup
                      : VerdictKind::ExceptionalNonabelianGroup;
    fc.groupLabel = *label;
    fc.detail = "exceptional group " + *label;
    return fc;
  }
  fc.kind = VerdictKind::Fails;
  fc.reason = FailReason::GroupNotHyperbolic;
  fc.detail = "group of order " + std::to_string(g.order) +
              " is neither Higman nor exceptional";
  return fc;
}

FactorClassification classify_zero_simple(const PrincipalFactor& factor,
                                          int index) {
  FactorClassification fc;
  fc.factorIndex = index;
  const ReesMatrixData& data = *factor.reesData;
  const int m = data.m, n = data.n;
  const bool shape12 = (m == 1 && n == 2) || (m == 2 && n == 1);
  const bool shape22 = m == 2 && n == 2;

  if (!shape12 && !shape22) {
    fc.kind = VerdictKind::Fails;
    fc.reason = FailReason::BadDimensions;
    fc.detail = "Rees factor with m = " + std::to_string(m) +
                ", n = " + std::to_string(n) + " cannot be hyperbolic";
    return fc;
  }
  if (data.group.order != 1) {
    fc.kind = VerdictKind::Fails;
    fc.reason = FailReason::NontrivialGroup;
    fc.detail = "Rees factor over a group of order " +
                std::to_string(data.group.order);
    return fc;
  }
  if (shape12) {
    // Regularity forces the sandwich (1;1) (or its transpose).
    fc.kind = VerdictKind::ExceptionalRightZero;
    fc.orientation = (m == 1) ? "right-zero" : "left-zero";
    fc.detail = std::string("M0({1},") + std::to_string(m) + "," +
                std::to_string(n) + ";(1 1)) — " + *fc.orientation;
    return fc;
  }
  const IntMatrix pbar = trivialize(data.sandwich);
  if ((pbar.array() == 1).all()) {
    fc.kind = VerdictKind::Fails;
    fc.reason = FailReason::AllOnesSandwich;
    fc.detail = "2x2 Rees factor with the all-ones sandwich";
    return fc;
  }
  if (rank_of(pbar) != 2) {
    fc.kind = VerdictKind::Fails;
    fc.reason = FailReason::SandwichSingular;
    fc.detail = "2x2 Rees factor with a singular sandwich";
    return fc;
  }
  fc.kind = VerdictKind::ExceptionalTwoByTwo;
  fc.sandwich = permutation_normal_form(pbar);
  fc.detail = "M0({1},2,2;P), normalized sandwich " +
              sandwich_to_string(*fc.sandwich);
  return fc;
}

}  // namespace

FactorClassification classify_factor(const PrincipalFactor& factor,
                                     int factorIndex) {
  if (factor.kind == FactorKind::Null) {
    FactorClassification fc;
    fc.factorIndex = factorIndex;
    if (factor.nonzeroCount == 1) {
      fc.kind = VerdictKind::ExceptionalNull;
      fc.detail = "null factor with 1 nonzero element";
    } else {
      fc.kind = VerdictKind::Fails;
      fc.reason = FailReason::RadicalTooBig;
      fc.detail = "null factor with " + std::to_string(factor.nonzeroCount) +
                  " nonzero elements forces a radical of that dimension";
    }
    return fc;
  }
  if (factor.kind == FactorKind::Group)
    return classify_group_factor(factor, factorIndex);
  return classify_zero_simple(factor, factorIndex);
}

Verdict decide(const FiniteSemigroup& s) {
  const FiniteSemigroup base = s.zero ? s : adjoin(s, Adjoin::Zero);

  Verdict v;
  const AlgebraRep algebra = structure_constants(base);
  v.notUnital = !algebra.identityCoords.has_value();

  const std::vector<PrincipalFactor> factors = principal_factors(base);
  int nonHigman = 0;
  bool anyFails = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    FactorClassification fc = classify_factor(factors[i], static_cast<int>(i));
    if (fc.kind != VerdictKind::HigmanGroup) {
      ++nonHigman;
      if (fc.kind == VerdictKind::Fails)
        anyFails = true;
      else
        v.exceptionalIndex = fc.factorIndex;
    }
    v.classifications.push_back(std::move(fc));
  }
  v.hyperbolic = !v.notUnital && !anyFails && nonHigman <= 1;
  if (!v.hyperbolic) v.exceptionalIndex.reset();
  return v;
}

LemmaReport lemma_constraints(const ReesMatrixData& data) {
  LemmaReport report;
  const int t = trivialized_rank(data);
  report.predictedRadicalDim = data.m * data.n - t * t;
  report.predictedQuotient = t == 1 ? "Q" : "M" + std::to_string(t) + "(Q)";

  const int m = data.m, n = data.n;
  if (m * n == 1) {
    report.allowed = true;
  } else if (data.group.order != 1) {
    report.allowed = false;
  } else if ((m == 1 && n == 2) || (m == 2 && n == 1)) {
    report.allowed = true;
  } else if (m == 2 && n == 2) {
    report.allowed = t == 2;  // invertible over Q; excludes all-ones
  } else {
    report.allowed = false;
  }
  return report;
}

namespace {

std::string summarize(const CrossCheckReport& report) {
  std::ostringstream os;
  os << "dim A = " << report.algebraDim << ", dim J = " << report.radicalDim;
  if (report.t2Witness) os << ", T2 witness " << (*report.t2Witness ? "found" : "missing");
  if (report.munnCollapse)
    os << ", Munn collapse " << (*report.munnCollapse ? "ok" : "failed");
  os << ", " << (report.consistent ? "consistent" : "INCONSISTENT");
  return os.str();
}

}  // namespace

CrossCheckReport cross_check(const FiniteSemigroup& s) {
  const FiniteSemigroup base = s.zero ? s : adjoin(s, Adjoin::Zero);
  const AlgebraRep algebra = structure_constants(base);
  if (!algebra.identityCoords)
    throw Error(ErrorKind::NotUnital, "cross_check needs Q0S unital");

  CrossCheckReport report;
  report.verdict = decide(base);
  report.algebraDim = algebra.dim;
  const RadicalData rad = radical_basis(algebra);
  report.radicalDim = rad.dimension;

  auto violate = [&](const std::string& what) {
    report.violations.push_back(what);
  };

  const Verdict& v = report.verdict;
  if (v.hyperbolic && rad.dimension > 1)
    violate("decide = yes but dim J = " + std::to_string(rad.dimension));
  if (rad.dimension >= 2 && v.hyperbolic)
    violate("dim J >= 2 must force decide = no");

  std::optional<VerdictKind> kKind;
  if (v.exceptionalIndex)
    kKind = v.classifications[*v.exceptionalIndex].kind;

  if (v.hyperbolic) {
    const bool groupOrNoK =
        !kKind || *kKind == VerdictKind::ExceptionalAbelianGroup ||
        *kKind == VerdictKind::ExceptionalNonabelianGroup;
    if (groupOrNoK && rad.dimension != 0)
      violate("all-group verdict needs dim J = 0, got " +
              std::to_string(rad.dimension));
    if (kKind == VerdictKind::ExceptionalNull && rad.dimension != 1)
      violate("null K needs dim J = 1, got " + std::to_string(rad.dimension));
    if (kKind == VerdictKind::ExceptionalRightZero) {
      if (rad.dimension != 1)
        violate("nm = 2 K needs dim J = 1, got " +
                std::to_string(rad.dimension));
      if (algebra.dim == 3) {
        report.t2Witness = t2_witness_check(algebra);
        if (!*report.t2Witness) violate("T2(Q) witness not found");
      }
    }
    if (kKind == VerdictKind::ExceptionalTwoByTwo) {
      const FactorClassification& fc = v.classifications[*v.exceptionalIndex];
      ReesMatrixData munn =
          make_rees_data(cyclic_group(1), 2, 2, [&] {
            IntMatrix s22 = *fc.sandwich;
            for (int r = 0; r < 2; ++r)
              for (int c = 0; c < 2; ++c) s22(r, c) = s22(r, c) ? 0 : -1;
            return s22;
          }());
      report.munnCollapse = munn_collapse_check(munn);
      if (!*report.munnCollapse) violate("Munn collapse check failed");
    }
  }

  report.consistent = report.violations.empty();
  report.verdict.oracleSummary = summarize(report);
  return report;
}

}  // namespace semihyp
