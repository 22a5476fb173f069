#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paramod {

// Arbitrary-precision integers and rationals. Expression templates are
// disabled so the types behave as plain value scalars inside Eigen matrices.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

class Rational {
 public:
  using Backend = boost::multiprecision::number<
      boost::multiprecision::rational_adaptor<
          boost::multiprecision::cpp_int_backend<>>,
      boost::multiprecision::et_off>;

  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(static_cast<long>(v)) {}
  Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = Backend(num) / Backend(den);
  }
  Rational(long long num, long long den)
      : Rational(BigInt(num), BigInt(den)) {}

  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  // Floor and ceiling as exact integers.
  BigInt floor() const {
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
  }
  BigInt ceil() const {
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
  }

  double to_double() const { return v_.convert_to<double>(); }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational operator-() const { return Rational(Backend(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("bad rational literal '" + std::string(text) +
                                "'");
  };
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail();
  std::string_view body = text.substr(begin, end - begin + 1);
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) fail();
    size_t at = part[0] == '-' || part[0] == '+' ? 1 : 0;
    if (at == part.size()) fail();
    for (; at < part.size(); ++at)
      if (part[at] < '0' || part[at] > '9') fail();
    return BigInt(std::string(part));
  };
  size_t slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body));
  BigInt num = parse_int(body.substr(0, slash));
  BigInt den = parse_int(body.substr(slash + 1));
  if (den == 0) fail();
  return Rational(num, den);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace paramod
