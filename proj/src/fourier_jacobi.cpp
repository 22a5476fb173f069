#include "paramod/fourier_jacobi.hpp"

#include <sstream>
#include <stdexcept>

namespace paramod {

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, exp] : factors_) {
    if (!first) os << "*";
    first = false;
    os << sym.str();
    if (exp != 1) os << "^" << exp;
  }
  return os.str();
}

void CoeffPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

CoeffPoly operator*(const Rational& s, const CoeffPoly& p) {
  CoeffPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, s * c);
  return out;
}

std::string CoeffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (m.is_unit()) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << m.str();
    } else {
      os << mag.str() << "*" << m.str();
    }
  }
  return os.str();
}

FJSeries::FJSeries(int truncation) : truncation_(truncation) {
  if (truncation <= 0)
    throw std::invalid_argument("series truncation must be positive");
}

FJSeries FJSeries::generic(const std::string& form, int first_index,
                           int truncation) {
  if (first_index < 0) throw std::invalid_argument("negative start index");
  FJSeries f(truncation);
  for (int m = first_index; m < truncation; ++m)
    f.coeffs_.emplace(m, CoeffPoly::symbol({form, m}));
  return f;
}

FJSeries FJSeries::one(int truncation) {
  FJSeries f(truncation);
  f.coeffs_.emplace(0, CoeffPoly(1));
  return f;
}

const CoeffPoly& FJSeries::coeff(int m) const {
  static const CoeffPoly zero;
  if (m < 0 || m >= truncation_)
    throw std::out_of_range("coefficient index beyond truncation");
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? zero : it->second;
}

void FJSeries::set_coeff(int m, CoeffPoly p) {
  if (m < 0 || m >= truncation_)
    throw std::out_of_range("coefficient index beyond truncation");
  if (p.is_zero())
    coeffs_.erase(m);
  else
    coeffs_[m] = std::move(p);
}

FJSeries operator+(const FJSeries& a, const FJSeries& b) {
  FJSeries out(std::min(a.truncation_, b.truncation_));
  for (int m = 0; m < out.truncation_; ++m) {
    CoeffPoly s = a.coeff(m);
    s += b.coeff(m);
    out.set_coeff(m, std::move(s));
  }
  return out;
}

FJSeries operator*(const FJSeries& a, const FJSeries& b) {
  FJSeries out(std::min(a.truncation_, b.truncation_));
  for (const auto& [ma, pa] : a.coeffs_) {
    if (ma >= out.truncation_) break;
    for (const auto& [mb, pb] : b.coeffs_) {
      if (ma + mb >= out.truncation_) break;
      CoeffPoly prod = pa * pb;
      if (prod.is_zero()) continue;
      CoeffPoly s = out.coeff(ma + mb);
      s += prod;
      out.set_coeff(ma + mb, std::move(s));
    }
  }
  return out;
}

FJSeries power(const FJSeries& f, int n) {
  if (n < 1) throw std::invalid_argument("power exponent must be >= 1");
  FJSeries out = f;
  for (int k = 1; k < n; ++k) out = out * f;
  return out;
}

VanishingOrder vanishing_order(const FJSeries& f) {
  for (int m = 0; m < f.truncation(); ++m)
    if (!f.coeff(m).is_zero()) return {m, f.truncation()};
  return {std::nullopt, f.truncation()};
}

ProductVanishingReport check_product_vanishing(int n, int truncation) {
  if (n < 1) throw std::invalid_argument("weight must be >= 1");
  if (truncation <= n)
    throw std::invalid_argument(
        "truncation must exceed the weight for the order claim to be visible");
  FJSeries fn = FJSeries::generic("fn", 0, truncation);
  FJSeries f2 = FJSeries::generic("f2", 1, truncation);
  FJSeries phi = fn * power(f2, n);

  ProductVanishingReport report;
  report.n = n;
  report.truncation = truncation;
  report.low_coefficients_vanish = true;
  for (int m = 0; m < truncation; ++m)
    report.coefficients.emplace_back(m, phi.coeff(m));
  for (int m = 0; m < n; ++m)
    if (!phi.coeff(m).is_zero()) report.low_coefficients_vanish = false;

  // The only composition of n as m0 + m1 + ... + mn with m0 >= 0 and every
  // mi >= 1 is (0, 1, ..., 1), so the coefficient at n must be exactly
  // theta[fn,0] * theta[f2,1]^n, which is visibly nonzero.
  Monomial lead = Monomial::symbol({"fn", 0});
  for (int k = 0; k < n; ++k) lead = lead.times(Monomial::symbol({"f2", 1}));
  CoeffPoly expected;
  expected.add_term(lead, Rational(1));
  report.coefficient_at_n_nonzero = phi.coeff(n) == expected;
  return report;
}

}  // namespace paramod
