#pragma once

#include <ostream>
#include <stdexcept>

#include "paramod/rational.hpp"

namespace paramod {

// Exact element of Q(i). Used as the scalar type for exact upper half-space
// computations, mirroring std::complex<double> in the numeric instantiation.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}
  GaussianRational(Rational real) : re(std::move(real)) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm2();
    if (n.is_zero())
      throw std::invalid_argument("gaussian rational division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational& b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.re.str() << (z.im.sign() < 0 ? " - " : " + ")
            << (z.im.sign() < 0 ? (-z.im).str() : z.im.str()) << "i";
}

}  // namespace paramod
