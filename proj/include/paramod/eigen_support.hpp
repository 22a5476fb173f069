#pragma once

#include <Eigen/Core>

#include "paramod/gaussian_rational.hpp"
#include "paramod/rational.hpp"

// NumTraits so that Eigen dense types can be instantiated over the exact
// scalars. Only ring operations are used on these matrices; inverses of
// exact 2x2 blocks are formed by adjugate, not by Eigen decompositions.
namespace Eigen {

template <>
struct NumTraits<paramod::Rational> : GenericNumTraits<paramod::Rational> {
  typedef paramod::Rational Real;
  typedef paramod::Rational NonInteger;
  typedef paramod::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<paramod::GaussianRational>
    : GenericNumTraits<paramod::GaussianRational> {
  typedef paramod::GaussianRational Real;
  typedef paramod::GaussianRational NonInteger;
  typedef paramod::GaussianRational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 60,
    MulCost = 120
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace paramod {

using Mat4q = Eigen::Matrix<Rational, 4, 4>;
using Mat2q = Eigen::Matrix<Rational, 2, 2>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Derived, typename OtherDerived>
bool mat_equal(const Eigen::MatrixBase<Derived>& a,
               const Eigen::MatrixBase<OtherDerived>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

}  // namespace paramod
