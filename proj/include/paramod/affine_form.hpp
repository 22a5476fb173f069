#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "paramod/rational.hpp"

namespace paramod {

// Affine form c0 + cn*n + ci*i in the two bookkeeping variables n (weight)
// and i (boundary offset). All coefficient arithmetic downstream of the
// divisor calculus stays inside this degree-1 model; products that would
// leave it throw.
struct AffineForm {
  Rational c0;
  Rational cn;
  Rational ci;

  AffineForm() = default;
  AffineForm(Rational constant) : c0(std::move(constant)) {}
  AffineForm(int constant) : c0(constant) {}
  AffineForm(Rational c0_, Rational cn_, Rational ci_)
      : c0(std::move(c0_)), cn(std::move(cn_)), ci(std::move(ci_)) {}

  static AffineForm var_n() { return {Rational(0), Rational(1), Rational(0)}; }
  static AffineForm var_i() { return {Rational(0), Rational(0), Rational(1)}; }

  bool is_zero() const { return c0.is_zero() && cn.is_zero() && ci.is_zero(); }
  bool is_constant() const { return cn.is_zero() && ci.is_zero(); }
  bool depends_on_i() const { return !ci.is_zero(); }

  Rational evaluate(const Rational& n, const Rational& i) const {
    return c0 + cn * n + ci * i;
  }

  AffineForm operator-() const { return {-c0, -cn, -ci}; }
  AffineForm& operator+=(const AffineForm& o) {
    c0 += o.c0;
    cn += o.cn;
    ci += o.ci;
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    c0 -= o.c0;
    cn -= o.cn;
    ci -= o.ci;
    return *this;
  }
  AffineForm& operator*=(const Rational& s) {
    c0 *= s;
    cn *= s;
    ci *= s;
    return *this;
  }

  friend AffineForm operator+(AffineForm a, const AffineForm& b) {
    return a += b;
  }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) {
    return a -= b;
  }
  friend AffineForm operator*(AffineForm a, const Rational& s) {
    return a *= s;
  }
  friend AffineForm operator*(const Rational& s, AffineForm a) {
    return a *= s;
  }
  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.c0 == b.c0 && a.cn == b.cn && a.ci == b.ci;
  }

  std::string str() const;
};

// Product of two affine forms, defined only when at least one factor is
// constant: anything else would leave the degree-1 model.
AffineForm operator*(const AffineForm& a, const AffineForm& b);

inline std::ostream& operator<<(std::ostream& os, const AffineForm& f) {
  return os << f.str();
}

// Maximum of f over integer i in [i_min, i_max(n)], as a form in n alone.
// i_max must not depend on i; the range must be nonempty for large n.
AffineForm max_over_i(const AffineForm& f, long long i_min,
                      const AffineForm& i_max);

// Maximum of f over all integers i >= i_min; requires the i coefficient to
// be nonpositive, otherwise the supremum is infinite.
AffineForm max_over_i_from(const AffineForm& f, long long i_min);

struct NegativityResult {
  bool negative_for_all = false;
  // Smallest admissible counterexample when the check fails.
  std::optional<long long> witness_n;
};

// Decides whether f(n) < 0 for every n in {divisibility, 2*divisibility, ...}.
// f must not depend on i.
NegativityResult negative_for_all_admissible_n(const AffineForm& f,
                                               long long divisibility);

}  // namespace paramod
