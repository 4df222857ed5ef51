#include "semihyp/algebra.hpp"

#include <algorithm>

#include "semihyp/catalog.hpp"
#include "semihyp/rees.hpp"

namespace semihyp {

AlgebraRep structure_constants(const FiniteSemigroup& s) {
  if (!s.zero)
    throw Error(ErrorKind::NoZero,
                "Q0S needs a zero element; adjoin one first");
  AlgebraRep a;
  a.dim = s.order - 1;
  std::vector<int> basisOf(s.order, -1);
  for (int x = 0; x < s.order; ++x) {
    if (x == *s.zero) continue;
    basisOf[x] = static_cast<int>(a.basisElements.size());
    a.basisElements.push_back(x);
    a.basisLabels.push_back(s.name_of(x));
  }
  a.product = IntMatrix::Constant(a.dim, a.dim, -1);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      a.product(i, j) = basisOf[s.table(a.basisElements[i], a.basisElements[j])];
  a.identityCoords = find_identity(a);
  return a;
}

std::optional<QVector> find_identity(const AlgebraRep& a) {
  const int d = a.dim;
  if (d == 0) return QVector(0);  // the zero algebra, trivially unital
  // u b_j = b_j and b_j u = b_j for all j: 2*d*d equations in d unknowns.
  QMatrix system = QMatrix::Zero(2 * d * d, d);
  QVector rhs = QVector::Zero(2 * d * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const int left = a.product(i, j);   // coefficient of u_i in u b_j
      if (left >= 0) system(j * d + left, i) += 1;
      const int right = a.product(j, i);  // coefficient of u_i in b_j u
      if (right >= 0) system(d * d + j * d + right, i) += 1;
    }
    rhs(j * d + j) = 1;
    rhs(d * d + j * d + j) = 1;
  }
  return solve_consistent(system, rhs);
}

QVector multiply(const AlgebraRep& a, const QVector& x, const QVector& y) {
  QVector z = QVector::Zero(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (y(j) == 0) continue;
      const int k = a.product(i, j);
      if (k >= 0) z(k) += x(i) * y(j);
    }
  }
  return z;
}

QMatrix left_multiplication(const AlgebraRep& a, const QVector& x) {
  QMatrix lm = QMatrix::Zero(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    for (int i = 0; i < a.dim; ++i) {
      if (x(i) == 0) continue;
      const int k = a.product(i, j);
      if (k >= 0) lm(k, j) += x(i);
    }
  }
  return lm;
}

namespace {

// Kernel dimension (and basis) of the Gram matrix G_ij = trace(L_i L_j) for
// the given left multiplication matrices. This is Dickson's trace-form
// radical, which over Q equals the Jacobson radical.
std::vector<QVector> gram_kernel(const std::vector<QMatrix>& leftMult) {
  const int d = static_cast<int>(leftMult.size());
  QMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rational tr = 0;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) tr += leftMult[i](r, c) * leftMult[j](c, r);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  return kernel_basis(std::move(gram));
}

QMatrix radical_row_matrix(const RadicalData& rad, int dim) {
  return stack_rows(rad.basis, dim);
}

}  // namespace

RadicalData radical_basis(const AlgebraRep& a) {
  if (!a.identityCoords && !find_identity(a))
    throw Error(ErrorKind::NotUnital, "the trace-form radical needs a unital algebra");

  // trace(L_i L_j) = trace(L_{b_i b_j}) since L is multiplicative; the trace
  // of L_k counts the fixed basis points of left multiplication by b_k.
  const int d = a.dim;
  std::vector<int> traceOfBasis(d, 0);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      if (a.product(k, j) == j) ++traceOfBasis[k];
  QMatrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int k = a.product(i, j);
      gram(i, j) = k >= 0 ? Rational(traceOfBasis[k]) : Rational(0);
    }

  RadicalData rad;
  rad.basis = kernel_basis(std::move(gram));
  rad.dimension = static_cast<int>(rad.basis.size());

  // Nilpotency index: least k with J^k = 0, via iterated span products.
  rad.nilpotencyIndex = 1;
  if (rad.dimension > 0) {
    std::vector<QVector> power = rad.basis;
    int k = 1;
    while (!power.empty()) {
      std::vector<QVector> next;
      for (const QVector& p : power)
        for (const QVector& v : rad.basis) {
          QVector w = multiply(a, p, v);
          if (w != QVector::Zero(d) &&
              !in_row_span(stack_rows(next, d), w))
            next.push_back(std::move(w));
        }
      power = std::move(next);
      ++k;
      if (k > d + 1)
        throw Error(ErrorKind::Internal,
                    "trace-form kernel is not nilpotent (internal error)");
    }
    rad.nilpotencyIndex = k;
  }
  return rad;
}

int quotient_radical_dimension(const AlgebraRep& a, const RadicalData& rad) {
  const int d = a.dim;
  const QMatrix jRows = radical_row_matrix(rad, d);
  std::vector<int> jPivots;
  {
    QMatrix tmp = jRows;
    row_reduce(tmp, &jPivots);
  }
  std::vector<bool> isPivot(d, false);
  for (int p : jPivots) isPivot[p] = true;
  std::vector<int> complement;
  for (int i = 0; i < d; ++i)
    if (!isPivot[i]) complement.push_back(i);
  const int q = static_cast<int>(complement.size());

  // Coordinates on the complement, modulo J: solve [J^T | C^T] c = w and keep
  // the complement part.
  QMatrix basisCols(d, rad.dimension + q);
  for (int i = 0; i < rad.dimension; ++i) basisCols.col(i) = rad.basis[i];
  for (int i = 0; i < q; ++i) {
    QVector unit = QVector::Zero(d);
    unit(complement[i]) = 1;
    basisCols.col(rad.dimension + i) = unit;
  }
  auto project = [&](const QVector& w) {
    auto sol = solve_consistent(basisCols, w);
    if (!sol)
      throw Error(ErrorKind::Internal, "radical + complement do not span");
    QVector out(q);
    for (int i = 0; i < q; ++i) out(i) = (*sol)(rad.dimension + i);
    return out;
  };

  // Left multiplication on the quotient, one matrix per complement basis
  // vector, then the generic trace-form kernel.
  std::vector<std::vector<QVector>> products(q);
  for (int i = 0; i < q; ++i) {
    QVector bi = QVector::Zero(d);
    bi(complement[i]) = 1;
    for (int j = 0; j < q; ++j) {
      QVector bj = QVector::Zero(d);
      bj(complement[j]) = 1;
      products[i].push_back(project(multiply(a, bi, bj)));
    }
  }
  std::vector<QMatrix> leftMult(q, QMatrix::Zero(q, q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) leftMult[i].col(j) = products[i][j];
  return static_cast<int>(gram_kernel(leftMult).size());
}

bool munn_collapse_check(const ReesMatrixData& data) {
  if (data.m != data.n)
    throw Error(ErrorKind::WrongDimension,
                "the Munn collapse check needs a square sandwich");
  const int m = data.m;
  const QMatrix pbar = to_rational(trivialize(data.sandwich));
  if (rank_of(pbar) != m) return false;

  // X -> X * Pbar must carry the Munn product A o Pbar o B to the matrix
  // product; checked on all pairs of matrix units.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          QMatrix eij = QMatrix::Zero(m, m), ekl = QMatrix::Zero(m, m);
          eij(i, j) = 1;
          ekl(k, l) = 1;
          const QMatrix lhs = (eij * pbar) * (ekl * pbar);
          const QMatrix rhs = (eij * pbar * ekl) * pbar;
          if (!(lhs == rhs)) return false;
        }
  return true;
}

bool t2_witness_check(const AlgebraRep& a) {
  if (a.dim != 3)
    throw Error(ErrorKind::WrongDimension,
                "the T2(Q) witness needs a 3-dimensional algebra");
  const std::optional<QVector> one =
      a.identityCoords ? a.identityCoords : find_identity(a);
  if (!one)
    throw Error(ErrorKind::NotUnital, "the T2(Q) witness needs an identity");

  const RadicalData rad = radical_basis(a);
  if (rad.dimension != 1) return false;
  const QVector n = rad.basis[0];

  // Any idempotent E1 with E1 N = N and N E1 = 0 completes the witness with
  // E2 = 1 - E1; when the algebra is T2(Q) the solution set of the linear
  // conditions is an affine line of idempotents, so one particular solution
  // suffices.
  const int d = 3;
  QMatrix system(2 * d, d);
  QVector rhs(2 * d);
  const QMatrix rightByN = [&] {
    QMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
      QVector unit = QVector::Zero(d);
      unit(i) = 1;
      m.col(i) = multiply(a, unit, n);
    }
    return m;
  }();
  const QMatrix leftByN = left_multiplication(a, n);
  system.topRows(d) = rightByN;
  system.bottomRows(d) = leftByN;
  rhs.head(d) = n;
  rhs.tail(d) = QVector::Zero(d);
  const auto e1 = solve_consistent(system, rhs);
  if (!e1) return false;

  const QVector& one_v = *one;
  const QVector e2 = one_v - *e1;
  auto is_zero = [&](const QVector& v) { return v == QVector::Zero(d); };
  return multiply(a, *e1, *e1) == *e1 && multiply(a, e2, e2) == e2 &&
         is_zero(multiply(a, *e1, e2)) && is_zero(multiply(a, e2, *e1)) &&
         is_zero(multiply(a, n, n)) && multiply(a, *e1, n) == n &&
         multiply(a, n, e2) == n && is_zero(multiply(a, n, *e1)) &&
         is_zero(multiply(a, e2, n)) && *e1 + e2 == one_v && !is_zero(n);
}

int munn_radical_dimension(const IntMatrix& trivializedSandwich) {
  IntMatrix sandwich = trivializedSandwich;
  for (Eigen::Index r = 0; r < sandwich.rows(); ++r)
    for (Eigen::Index c = 0; c < sandwich.cols(); ++c)
      sandwich(r, c) = sandwich(r, c) != 0 ? 0 : -1;  // 1 -> trivial group id
  const int m = static_cast<int>(sandwich.cols());
  const int n = static_cast<int>(sandwich.rows());
  FiniteSemigroup munn =
      rees_matrix_construct(make_rees_data(cyclic_group(1), m, n, sandwich));

  AlgebraRep a = structure_constants(munn);
  int adjoined = -1;
  if (!a.identityCoords) {
    const FiniteSemigroup unital = adjoin(munn, Adjoin::Identity);
    a = structure_constants(unital);
    adjoined = m * n;  // basis index of the adjoined identity
    if (!a.identityCoords)
      throw Error(ErrorKind::Internal, "monoid algebra must be unital");
  }
  const RadicalData rad = radical_basis(a);
  if (adjoined >= 0)
    for (const QVector& v : rad.basis)
      if (v(adjoined) != 0)
        throw Error(ErrorKind::Internal,
                    "radical vector escapes the Munn ideal");
  return rad.dimension;
}

OracleReport oracle_report(const FiniteSemigroup& s) {
  const FiniteSemigroup base = s.zero ? s : adjoin(s, Adjoin::Zero);
  const AlgebraRep a = structure_constants(base);
  OracleReport report;
  report.dim = a.dim;
  report.basisLabels = a.basisLabels;
  report.unital = a.identityCoords.has_value();
  report.identity = a.identityCoords;
  if (report.unital) {
    report.radical = radical_basis(a);
    if (a.dim == 3) report.t2Witness = t2_witness_check(a);
  }
  return report;
}

}  // namespace semihyp
