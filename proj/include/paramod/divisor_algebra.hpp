#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "paramod/affine_form.hpp"
#include "paramod/json_io.hpp"

namespace paramod {

// Generators of the Q-divisor bookkeeping lattice on the compactified
// moduli space: the canonical class, the five internal modular surfaces
// (E1P, E1PP, H1, H2, E2), the two exceptional curves' classes (EP, EPP),
// the modular weight-1 class LAMBDA, and the boundary pieces
// (DELTA1, H0, H0HAT).
enum class DivisorLabel {
  K,
  E1P,
  E1PP,
  H1,
  H2,
  E2,
  EP,
  EPP,
  LAMBDA,
  DELTA1,
  H0,
  H0HAT,
};

inline constexpr std::array<DivisorLabel, 12> kDivisorLabels = {
    DivisorLabel::K,      DivisorLabel::E1P, DivisorLabel::E1PP,
    DivisorLabel::H1,     DivisorLabel::H2,  DivisorLabel::E2,
    DivisorLabel::EP,     DivisorLabel::EPP, DivisorLabel::LAMBDA,
    DivisorLabel::DELTA1, DivisorLabel::H0,  DivisorLabel::H0HAT,
};

const char* to_string(DivisorLabel label);
std::optional<DivisorLabel> divisor_label_from_string(const std::string& name);

// Formal Q-linear combination of the generators with affine-form
// coefficients in (n, i). Zero coefficients are never stored.
class DivisorClass {
 public:
  DivisorClass() = default;

  static DivisorClass single(DivisorLabel label,
                             AffineForm coefficient = AffineForm(1));

  AffineForm coeff(DivisorLabel label) const;
  void set_coeff(DivisorLabel label, AffineForm coefficient);
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<DivisorLabel, AffineForm>& coeffs() const { return coeffs_; }

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  // Scales every coefficient; throws if any product leaves degree 1.
  DivisorClass scaled(const AffineForm& s) const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    return a += b;
  }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    return a -= b;
  }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string str() const;

 private:
  std::map<DivisorLabel, AffineForm> coeffs_;
};

// The weight-n obstruction bookkeeping class at level p^2 (per unit n):
//   K + (1/2)(E1P + E1PP + H1 + H2) + (1 - 2/p)E2 - (1/4)(EP + EPP).
// Only stated for p >= 5; smaller primes violate its hypotheses.
DivisorClass obstruction_class(long long p);

// The same class written through the modular weight-1 class:
//   3*LAMBDA - (1/p)*DELTA1 - ((p-1)/p)*(H0 + H0HAT).
// The lambda_scale hook replaces the leading 3 (used for the variant
// slope comparison); defaults to 3.
DivisorClass lambda_form(long long p);
DivisorClass lambda_form(long long p, const Rational& lambda_scale);

// Rewrites every occurrence of K in cls through the identity
// obstruction_class == lambda_form, leaving a K-free class.
DivisorClass eliminate_k(const DivisorClass& cls, long long p);
DivisorClass eliminate_k(const DivisorClass& cls, long long p,
                         const Rational& lambda_scale);

// Verifies, as an identity of formal classes, that
//   n*K - (n/4)(EP + EPP)
// equals
//   n*obstruction_class - (n/2)(E1P + E1PP + H1 + H2) - n(1 - 2/p)E2.
bool check_rearrangement(long long p);

Json divisor_class_to_json(const DivisorClass& cls);
DivisorClass divisor_class_from_json(const Json& j, const std::string& where);

namespace detail {
// Ungated builders: the identities above are formal in 1/p and remain
// meaningful below the stated hypotheses; the verifier uses these to run
// negative controls at small primes.
DivisorClass obstruction_class_any(long long p);
}  // namespace detail

}  // namespace paramod
