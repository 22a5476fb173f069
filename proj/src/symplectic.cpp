#include "paramod/symplectic.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace paramod {

Mat4q symplectic_form_j() {
  Mat4q j;
  j.setZero();
  j(0, 2) = 1;
  j(1, 3) = 1;
  j(2, 0) = -1;
  j(3, 1) = -1;
  return j;
}

bool is_symplectic(const Mat4q& m) {
  static const Mat4q j = symplectic_form_j();
  Mat4q probe = m.transpose() * j * m;
  return mat_equal(probe, j);
}

namespace {

bool divisible_by(const Rational& r, long long d) {
  return r.is_integer() && r.numerator() % BigInt(d) == 0;
}

}  // namespace

bool in_paramodular(const Mat4q& m, long long t) {
  if (t <= 0) throw std::invalid_argument("paramodular level must be positive");
  if (!is_symplectic(m)) return false;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (r == 3 && c == 1) {
        if (!(m(r, c) * Rational(t)).is_integer()) return false;
      } else if (!m(r, c).is_integer()) {
        return false;
      }
    }
  static const std::array<std::pair<int, int>, 5> scaled = {
      {{0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 3}}};
  for (auto [r, c] : scaled)
    if (!divisible_by(m(r, c), t)) return false;
  return true;
}

bool in_prime_pattern(const Mat4q& m, long long p) {
  if (p <= 0) throw std::invalid_argument("pattern modulus must be positive");
  if (!is_symplectic(m)) return false;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!m(r, c).is_integer()) return false;
  static const std::array<std::pair<int, int>, 8> scaled = {
      {{0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}}};
  for (auto [r, c] : scaled)
    if (!divisible_by(m(r, c), p)) return false;
  return true;
}

Mat4q conjugator(long long p) {
  if (!is_prime(p)) throw std::invalid_argument("conjugator needs a prime");
  Mat4q r;
  r.setZero();
  r(0, 0) = 1;
  r(1, 1) = Rational(1, p);
  r(2, 2) = 1;
  r(3, 3) = Rational(p);
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt sp4_order_mod(long long q) {
  if (!is_prime(q)) throw std::invalid_argument("sp4_order_mod needs a prime");
  BigInt b(q);
  return b * b * b * b * (b * b - 1) * (b * b * b * b - 1);
}

namespace {

// <u, v> = u0 v2 + u1 v3 - u2 v0 - u3 v1 mod q, matching symplectic_form_j.
int symplectic_dot(const std::array<int, 4>& u, const std::array<int, 4>& v,
                   int q) {
  int s = u[0] * v[2] + u[1] * v[3] - u[2] * v[0] - u[3] * v[1];
  return ((s % q) + q) % q;
}

bool is_symplectic_mod(const std::array<std::array<int, 4>, 4>& m, int q) {
  // Columns are the images of the basis vectors; check all form values.
  std::array<std::array<int, 4>, 4> col;
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) col[c][r] = m[r][c];
  const int want[4][4] = {
      {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      int w = ((want[a][b] % q) + q) % q;
      if (symplectic_dot(col[a], col[b], q) != w) return false;
    }
  return true;
}

BigInt sp4_count_full_scan_f2() {
  BigInt count = 0;
  for (unsigned mask = 0; mask < 65536; ++mask) {
    std::array<std::array<int, 4>, 4> m{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m[r][c] = (mask >> (4 * r + c)) & 1u;
    if (is_symplectic_mod(m, 2)) ++count;
  }
  return count;
}

// Depth-first enumeration of columns m1, m3, m2, m4 with the symplectic
// inner products enforced as soon as both columns are placed.
BigInt sp4_count_column_dfs(int q) {
  std::array<std::array<int, 4>, 4> col{};
  const int order[4] = {0, 2, 1, 3};
  long long count = 0;
  auto pairing_ok = [&](int placed_upto) {
    const int want[4][4] = {
        {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    int idx = order[placed_upto];
    for (int k = 0; k < placed_upto; ++k) {
      int jdx = order[k];
      int a = std::min(idx, jdx), b = std::max(idx, jdx);
      int w = ((want[a][b] % q) + q) % q;
      const auto& u = col[a];
      const auto& v = col[b];
      if (symplectic_dot(u, v, q) != w) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 4) {
      ++count;
      return;
    }
    int idx = order[depth];
    std::array<int, 4>& v = col[idx];
    int total = q * q * q * q;
    for (int code = 0; code < total; ++code) {
      int rem = code;
      for (int r = 0; r < 4; ++r) {
        v[r] = rem % q;
        rem /= q;
      }
      if (pairing_ok(depth)) self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return BigInt(count);
}

}  // namespace

BigInt sp4_order_bruteforce(int q) {
  if (q == 2) return sp4_count_full_scan_f2();
  if (q == 3) return sp4_count_column_dfs(3);
  throw std::invalid_argument("brute-force enumeration only for q in {2, 3}");
}

BigInt sp4_pattern_count_bruteforce(int q) {
  if (q != 2 && q != 3)
    throw std::invalid_argument("pattern enumeration only for q in {2, 3}");
  // Free slots are the checkerboard complement of the eight scaled slots.
  const std::pair<int, int> free_slots[8] = {{0, 0}, {0, 2}, {1, 1}, {1, 3},
                                             {2, 0}, {2, 2}, {3, 1}, {3, 3}};
  long long total = 1;
  for (int k = 0; k < 8; ++k) total *= q;
  BigInt count = 0;
  for (long long code = 0; code < total; ++code) {
    std::array<std::array<int, 4>, 4> m{};
    long long rem = code;
    for (auto [r, c] : free_slots) {
      m[r][c] = static_cast<int>(rem % q);
      rem /= q;
    }
    if (is_symplectic_mod(m, q)) ++count;
  }
  return count;
}

Mat4q parse_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.size() != 16)
    throw std::runtime_error("matrix file must hold exactly 16 entries, got " +
                             std::to_string(tokens.size()));
  Mat4q m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      try {
        m(r, c) = Rational::parse(tokens[4 * r + c]);
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error("matrix entry (" + std::to_string(r + 1) +
                                 "," + std::to_string(c + 1) +
                                 "): " + e.what());
      }
    }
  return m;
}

Mat4q parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  try {
    return parse_matrix(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string matrix_to_string(const Mat4q& m) {
  std::ostringstream os;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (c) os << " ";
      os << m(r, c).str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace paramod
