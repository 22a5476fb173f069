#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "paramod/eigen_support.hpp"
#include "paramod/symplectic.hpp"

namespace paramod {

// Scalar plug for the degree-2 upper half-space: one numeric instantiation
// over std::complex<double> and one exact instantiation over Q(i).
template <typename Scalar>
struct SiegelScalar;

template <>
struct SiegelScalar<std::complex<double>> {
  using Real = double;
  static std::complex<double> from_rational(const Rational& r) {
    return {r.to_double(), 0.0};
  }
  static Real imag_part(const std::complex<double>& z) { return z.imag(); }
  static bool denominator_singular(const std::complex<double>& det) {
    return std::abs(det) < 1e-12;
  }
};

template <>
struct SiegelScalar<GaussianRational> {
  using Real = Rational;
  static GaussianRational from_rational(const Rational& r) {
    return {r, Rational(0)};
  }
  static Real imag_part(const GaussianRational& z) { return z.im; }
  static bool denominator_singular(const GaussianRational& det) {
    return det.is_zero();
  }
};

// Point tau = [[tau1, tau2], [tau2, tau3]] of the degree-2 upper half-space.
template <typename Scalar>
struct SiegelPoint {
  Scalar tau1;
  Scalar tau2;
  Scalar tau3;

  Mat2<Scalar> matrix() const {
    Mat2<Scalar> z;
    z(0, 0) = tau1;
    z(0, 1) = tau2;
    z(1, 0) = tau2;
    z(1, 1) = tau3;
    return z;
  }

  friend bool operator==(const SiegelPoint& a, const SiegelPoint& b) {
    return a.tau1 == b.tau1 && a.tau2 == b.tau2 && a.tau3 == b.tau3;
  }
};

using SiegelPointD = SiegelPoint<std::complex<double>>;
using SiegelPointQ = SiegelPoint<GaussianRational>;

// Im(tau) positive definite: y1 > 0 and det Im(tau) > 0.
template <typename Scalar>
bool is_in_h2(const SiegelPoint<Scalar>& z) {
  using Traits = SiegelScalar<Scalar>;
  using Real = typename Traits::Real;
  Real y1 = Traits::imag_part(z.tau1);
  Real y2 = Traits::imag_part(z.tau2);
  Real y3 = Traits::imag_part(z.tau3);
  return y1 > Real(0) && y1 * y3 - y2 * y2 > Real(0);
}

// Fractional linear action (A tau + B)(C tau + D)^(-1) of a symplectic
// matrix in 2x2 block form. Throws when C tau + D is (numerically) singular.
template <typename Scalar>
SiegelPoint<Scalar> act(const Mat4q& gamma, const SiegelPoint<Scalar>& z) {
  using Traits = SiegelScalar<Scalar>;
  Mat2<Scalar> a, b, c, d;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      a(r, s) = Traits::from_rational(gamma(r, s));
      b(r, s) = Traits::from_rational(gamma(r, s + 2));
      c(r, s) = Traits::from_rational(gamma(r + 2, s));
      d(r, s) = Traits::from_rational(gamma(r + 2, s + 2));
    }
  Mat2<Scalar> zm = z.matrix();
  Mat2<Scalar> num = a * zm + b;
  Mat2<Scalar> den = c * zm + d;
  Scalar det = den(0, 0) * den(1, 1) - den(0, 1) * den(1, 0);
  if (Traits::denominator_singular(det))
    throw std::domain_error("C*tau + D is singular at this point");
  Mat2<Scalar> adj;
  adj(0, 0) = den(1, 1);
  adj(0, 1) = -den(0, 1);
  adj(1, 0) = -den(1, 0);
  adj(1, 1) = den(0, 0);
  Mat2<Scalar> w = num * adj;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) w(r, s) = w(r, s) / det;
  SiegelPoint<Scalar> out;
  out.tau1 = w(0, 0);
  // The image matrix is symmetric up to the arithmetic performed; fold the
  // two off-diagonal entries so the stored point is exactly symmetric.
  out.tau2 = (w(0, 1) + w(1, 0)) / Scalar(2);
  out.tau3 = w(1, 1);
  return out;
}

}  // namespace paramod
