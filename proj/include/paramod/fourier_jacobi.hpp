#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramod/rational.hpp"

namespace paramod {

// Opaque coefficient symbol theta[form, m]: the index-m Fourier-Jacobi
// coefficient of the named form. Nothing is assumed about its value; series
// arithmetic happens in the free commutative polynomial ring over these.
struct FJSymbol {
  std::string form;
  int index = 0;

  friend bool operator==(const FJSymbol&, const FJSymbol&) = default;
  friend auto operator<=>(const FJSymbol&, const FJSymbol&) = default;

  std::string str() const {
    return "theta[" + form + "," + std::to_string(index) + "]";
  }
};

class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return Monomial(); }
  static Monomial symbol(const FJSymbol& s) {
    Monomial m;
    m.factors_.emplace_back(s, 1);
    return m;
  }

  bool is_unit() const { return factors_.empty(); }
  Monomial times(const Monomial& o) const;
  const std::vector<std::pair<FJSymbol, int>>& factors() const {
    return factors_;
  }
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  // Sorted by symbol, exponents positive.
  std::vector<std::pair<FJSymbol, int>> factors_;
};

class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(Rational constant) { add_term(Monomial::unit(), constant); }
  CoeffPoly(int constant) : CoeffPoly(Rational(constant)) {}

  static CoeffPoly symbol(const FJSymbol& s) {
    CoeffPoly p;
    p.add_term(Monomial::symbol(s), Rational(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  CoeffPoly& operator+=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(const Rational& s, const CoeffPoly& p);
  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

// Formal Fourier-Jacobi expansion sum_m theta_m u^m truncated at order
// `truncation` (coefficients are tracked for m < truncation only).
class FJSeries {
 public:
  explicit FJSeries(int truncation);

  // Generic series for the named form: a fresh symbol theta[form, m] at
  // every m in [first_index, truncation).
  static FJSeries generic(const std::string& form, int first_index,
                          int truncation);
  static FJSeries one(int truncation);

  int truncation() const { return truncation_; }
  const CoeffPoly& coeff(int m) const;
  void set_coeff(int m, CoeffPoly p);

  friend FJSeries operator+(const FJSeries& a, const FJSeries& b);
  // Cauchy product; the result is truncated at min of the truncations.
  friend FJSeries operator*(const FJSeries& a, const FJSeries& b);

  friend bool operator==(const FJSeries&, const FJSeries&) = default;

 private:
  int truncation_;
  std::map<int, CoeffPoly> coeffs_;
};

FJSeries power(const FJSeries& f, int n);

struct VanishingOrder {
  // Empty when every tracked coefficient is zero; then all that is known is
  // "order >= truncation".
  std::optional<int> order;
  int truncation = 0;

  std::string str() const {
    if (order) return std::to_string(*order);
    return ">= " + std::to_string(truncation);
  }
  friend bool operator==(const VanishingOrder&, const VanishingOrder&) =
      default;
};

VanishingOrder vanishing_order(const FJSeries& f);

// Product expansion of phi = f_n * (f_2)^n for a generic weight-n form f_n
// (symbols from m = 0) and a generic cusp form f_2 (symbols from m = 1):
// coefficients below m = n must cancel identically and the coefficient at
// m = n must be the visibly nonzero monomial theta[fn,0] * theta[f2,1]^n.
struct ProductVanishingReport {
  int n = 0;
  int truncation = 0;
  bool low_coefficients_vanish = false;
  bool coefficient_at_n_nonzero = false;
  std::vector<std::pair<int, CoeffPoly>> coefficients;

  bool passed() const {
    return low_coefficients_vanish && coefficient_at_n_nonzero;
  }
};

// Throws unless truncation > n (the claim is unverifiable otherwise).
ProductVanishingReport check_product_vanishing(int n, int truncation);

}  // namespace paramod
