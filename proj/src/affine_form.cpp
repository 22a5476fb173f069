#include "paramod/affine_form.hpp"

#include <sstream>
#include <stdexcept>

namespace paramod {

AffineForm operator*(const AffineForm& a, const AffineForm& b) {
  if (a.is_constant()) return b * a.c0;
  if (b.is_constant()) return a * b.c0;
  throw std::invalid_argument(
      "affine form product would exceed degree 1 in (n, i)");
}

std::string AffineForm::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const char* var) {
    if (c.is_zero()) return;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (var == nullptr) {
      os << mag.str();
      return;
    }
    if (mag == Rational(1)) {
      os << var;
    } else if (mag.is_integer()) {
      os << mag.str() << "*" << var;
    } else {
      os << "(" << mag.str() << ")*" << var;
    }
  };
  emit(cn, "n");
  emit(ci, "i");
  emit(c0, nullptr);
  if (first) os << "0";
  return os.str();
}

AffineForm max_over_i(const AffineForm& f, long long i_min,
                      const AffineForm& i_max) {
  if (i_max.depends_on_i())
    throw std::invalid_argument("i_max must be a form in n alone");
  if (i_max.cn.sign() < 0)
    throw std::invalid_argument("empty i range for all large n");
  if (i_max.cn.is_zero() && i_max.c0 < Rational(i_min))
    throw std::invalid_argument("empty i range");
  if (f.ci.sign() >= 0) {
    // f is nondecreasing in i; the maximum sits at the upper endpoint.
    return AffineForm{f.c0 + f.ci * i_max.c0, f.cn + f.ci * i_max.cn,
                      Rational(0)};
  }
  return AffineForm{f.c0 + f.ci * Rational(i_min), f.cn, Rational(0)};
}

AffineForm max_over_i_from(const AffineForm& f, long long i_min) {
  if (f.ci.sign() > 0)
    throw std::invalid_argument("supremum over unbounded i is infinite");
  return AffineForm{f.c0 + f.ci * Rational(i_min), f.cn, Rational(0)};
}

namespace {

long long to_long_checked(const BigInt& v) {
  if (v > BigInt(9223372036854775807LL) || v < BigInt(-9223372036854775807LL))
    throw std::overflow_error("witness does not fit in 64 bits");
  return v.convert_to<long long>();
}

}  // namespace

NegativityResult negative_for_all_admissible_n(const AffineForm& f,
                                               long long divisibility) {
  if (f.depends_on_i())
    throw std::invalid_argument("form still depends on i");
  if (divisibility <= 0) throw std::invalid_argument("divisibility must be positive");
  Rational d(divisibility);
  if (f.cn.sign() < 0) {
    // Decreasing in n: the smallest admissible n is the worst case.
    if (f.evaluate(d, Rational(0)) < Rational(0)) return {true, std::nullopt};
    return {false, divisibility};
  }
  if (f.cn.is_zero()) {
    if (f.c0 < Rational(0)) return {true, std::nullopt};
    return {false, divisibility};
  }
  // Increasing in n: f(k*d) >= 0 once k >= -c0/(cn*d); report the smallest
  // admissible counterexample.
  Rational threshold = -f.c0 / (f.cn * d);
  BigInt k = threshold.ceil();
  if (k < 1) k = 1;
  return {false, to_long_checked(k * BigInt(divisibility))};
}

}  // namespace paramod
