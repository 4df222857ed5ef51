// Exact rational scalar and dense matrix aliases used throughout semihyp.
//
// All linear algebra in this project is exact: the scalar is GMP's mpq_class
// (always canonical: gcd(num, den) = 1, den > 0), plugged into Eigen via the
// NumTraits protocol. Nothing here ever rounds.

#ifndef SEMIHYP_RATIONAL_HPP_
#define SEMIHYP_RATIONAL_HPP_

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace semihyp {

using Rational = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = DenseMatrix<Rational>;
using QVector = DenseVector<Rational>;
using IntMatrix = Eigen::MatrixXi;

/// Reduced rational from an integer pair.
inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Casts an integer matrix into exact rational entries.
inline QMatrix to_rational(const IntMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace semihyp

#endif  // SEMIHYP_RATIONAL_HPP_
