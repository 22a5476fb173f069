#include "paramod/divisor_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace paramod {

const char* to_string(DivisorLabel label) {
  switch (label) {
    case DivisorLabel::K: return "K";
    case DivisorLabel::E1P: return "E1P";
    case DivisorLabel::E1PP: return "E1PP";
    case DivisorLabel::H1: return "H1";
    case DivisorLabel::H2: return "H2";
    case DivisorLabel::E2: return "E2";
    case DivisorLabel::EP: return "EP";
    case DivisorLabel::EPP: return "EPP";
    case DivisorLabel::LAMBDA: return "LAMBDA";
    case DivisorLabel::DELTA1: return "DELTA1";
    case DivisorLabel::H0: return "H0";
    case DivisorLabel::H0HAT: return "H0HAT";
  }
  throw std::logic_error("unreachable divisor label");
}

std::optional<DivisorLabel> divisor_label_from_string(
    const std::string& name) {
  for (DivisorLabel label : kDivisorLabels)
    if (name == to_string(label)) return label;
  return std::nullopt;
}

DivisorClass DivisorClass::single(DivisorLabel label, AffineForm coefficient) {
  DivisorClass cls;
  cls.set_coeff(label, std::move(coefficient));
  return cls;
}

AffineForm DivisorClass::coeff(DivisorLabel label) const {
  auto it = coeffs_.find(label);
  return it == coeffs_.end() ? AffineForm() : it->second;
}

void DivisorClass::set_coeff(DivisorLabel label, AffineForm coefficient) {
  if (coefficient.is_zero())
    coeffs_.erase(label);
  else
    coeffs_[label] = std::move(coefficient);
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out;
  for (const auto& [label, c] : coeffs_) out.coeffs_.emplace(label, -c);
  return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (const auto& [label, c] : o.coeffs_) set_coeff(label, coeff(label) + c);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  for (const auto& [label, c] : o.coeffs_) set_coeff(label, coeff(label) - c);
  return *this;
}

DivisorClass DivisorClass::scaled(const AffineForm& s) const {
  DivisorClass out;
  for (const auto& [label, c] : coeffs_) out.set_coeff(label, c * s);
  return out;
}

std::string DivisorClass::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << to_string(label);
  }
  return os.str();
}

namespace detail {

DivisorClass obstruction_class_any(long long p) {
  if (p < 2) throw std::invalid_argument("need p >= 2");
  DivisorClass cls;
  Rational half(1, 2);
  cls.set_coeff(DivisorLabel::K, AffineForm(1));
  cls.set_coeff(DivisorLabel::E1P, AffineForm(half));
  cls.set_coeff(DivisorLabel::E1PP, AffineForm(half));
  cls.set_coeff(DivisorLabel::H1, AffineForm(half));
  cls.set_coeff(DivisorLabel::H2, AffineForm(half));
  cls.set_coeff(DivisorLabel::E2, AffineForm(Rational(1) - Rational(2, p)));
  cls.set_coeff(DivisorLabel::EP, AffineForm(Rational(-1, 4)));
  cls.set_coeff(DivisorLabel::EPP, AffineForm(Rational(-1, 4)));
  return cls;
}

}  // namespace detail

DivisorClass obstruction_class(long long p) {
  if (p < 5)
    throw std::invalid_argument(
        "obstruction class is only defined for primes p >= 5");
  return detail::obstruction_class_any(p);
}

DivisorClass lambda_form(long long p) { return lambda_form(p, Rational(3)); }

DivisorClass lambda_form(long long p, const Rational& lambda_scale) {
  if (p < 2) throw std::invalid_argument("need p >= 2");
  DivisorClass cls;
  cls.set_coeff(DivisorLabel::LAMBDA, AffineForm(lambda_scale));
  cls.set_coeff(DivisorLabel::DELTA1, AffineForm(Rational(-1, p)));
  Rational drop = -Rational(p - 1, p);
  cls.set_coeff(DivisorLabel::H0, AffineForm(drop));
  cls.set_coeff(DivisorLabel::H0HAT, AffineForm(drop));
  return cls;
}

DivisorClass eliminate_k(const DivisorClass& cls, long long p) {
  return eliminate_k(cls, p, Rational(3));
}

DivisorClass eliminate_k(const DivisorClass& cls, long long p,
                         const Rational& lambda_scale) {
  AffineForm k_coeff = cls.coeff(DivisorLabel::K);
  if (k_coeff.is_zero()) return cls;
  DivisorClass out = cls;
  out -= detail::obstruction_class_any(p).scaled(k_coeff);
  out += lambda_form(p, lambda_scale).scaled(k_coeff);
  return out;
}

bool check_rearrangement(long long p) {
  if (p < 2) throw std::invalid_argument("need p >= 2");
  AffineForm n = AffineForm::var_n();
  AffineForm half_n{Rational(0), Rational(1, 2), Rational(0)};
  AffineForm quarter_n{Rational(0), Rational(1, 4), Rational(0)};

  DivisorClass lhs = DivisorClass::single(DivisorLabel::K, n);
  lhs -= DivisorClass::single(DivisorLabel::EP, quarter_n);
  lhs -= DivisorClass::single(DivisorLabel::EPP, quarter_n);

  DivisorClass rhs = detail::obstruction_class_any(p).scaled(n);
  for (DivisorLabel label : {DivisorLabel::E1P, DivisorLabel::E1PP,
                             DivisorLabel::H1, DivisorLabel::H2})
    rhs -= DivisorClass::single(label, half_n);
  rhs -= DivisorClass::single(
      DivisorLabel::E2, n * (Rational(1) - Rational(2, p)));

  return lhs == rhs;
}

Json divisor_class_to_json(const DivisorClass& cls) {
  Json j = Json::object();
  for (DivisorLabel label : kDivisorLabels) {
    AffineForm c = cls.coeff(label);
    if (c.is_zero()) continue;
    if (c.is_constant())
      j[to_string(label)] = c.c0.str();
    else
      j[to_string(label)] = affine_to_json(c);
  }
  return j;
}

DivisorClass divisor_class_from_json(const Json& j, const std::string& where) {
  if (!j.is_object())
    throw std::runtime_error(where + ": expected an object of coefficients");
  DivisorClass cls;
  for (const auto& [key, value] : j.items()) {
    auto label = divisor_label_from_string(key);
    if (!label)
      throw std::runtime_error(where + ": unknown divisor label '" + key +
                               "'");
    cls.set_coeff(*label, affine_from_json(value, where + "." + key));
  }
  return cls;
}

}  // namespace paramod
