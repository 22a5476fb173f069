#pragma once

#include <random>

#include "paramod/symplectic.hpp"

// Generator-built group elements for the membership and conjugation tests.
// Every factory below produces matrices that land in the indicated group by
// construction; the unit tests assert this before relying on it.
namespace paramod::testgen {

inline Mat4q identity4() { return Mat4q::Identity(); }

// [[I, B], [0, I]] for symmetric B.
inline Mat4q upper_translation(const Rational& b11, const Rational& b12,
                               const Rational& b22) {
  Mat4q m = Mat4q::Identity();
  m(0, 2) = b11;
  m(0, 3) = b12;
  m(1, 2) = b12;
  m(1, 3) = b22;
  return m;
}

// [[I, 0], [C, I]] for symmetric C.
inline Mat4q lower_translation(const Rational& c11, const Rational& c12,
                               const Rational& c22) {
  Mat4q m = Mat4q::Identity();
  m(2, 0) = c11;
  m(2, 1) = c12;
  m(3, 0) = c12;
  m(3, 1) = c22;
  return m;
}

// [[A, 0], [0, (A^T)^-1]] for A in GL_2(Q).
inline Mat4q gl_block(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d) {
  Rational det = a * d - b * c;
  if (det.is_zero()) throw std::invalid_argument("singular GL block");
  Mat4q m = Mat4q::Zero();
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  // (A^T)^-1 = (1/det) [[d, -c], [-b, a]]^T applied directly.
  m(2, 2) = d / det;
  m(2, 3) = -c / det;
  m(3, 2) = -b / det;
  m(3, 3) = a / det;
  return m;
}

inline Mat4q sign_torus(int s1, int s2) {
  Mat4q m = Mat4q::Zero();
  m(0, 0) = s1;
  m(1, 1) = s2;
  m(2, 2) = s1;
  m(3, 3) = s2;
  return m;
}

// The standard involution [[0, I], [-I, 0]].
inline Mat4q standard_j() {
  Mat4q m = Mat4q::Zero();
  m(0, 2) = 1;
  m(1, 3) = 1;
  m(2, 0) = -1;
  m(3, 1) = -1;
  return m;
}

inline long long small(std::mt19937& rng, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  return dist(rng);
}

// Random word in generators of the level-t paramodular group: symmetric
// upper blocks [[b11, t b12], [t b12, t b22]], symmetric lower blocks
// [[c11, c12], [c12, c22/t]], unipotent GL blocks with the (2,1) slot in tZ,
// and sign tori.
inline Mat4q random_paramodular(std::mt19937& rng, long long t, int length) {
  Mat4q m = identity4();
  std::uniform_int_distribution<int> kind(0, 4);
  for (int k = 0; k < length; ++k) {
    switch (kind(rng)) {
      case 0:
        m = m * upper_translation(Rational(small(rng, 2)),
                                  Rational(t * small(rng, 2)),
                                  Rational(t * small(rng, 2)));
        break;
      case 1:
        m = m * lower_translation(Rational(small(rng, 2)),
                                  Rational(small(rng, 2)),
                                  Rational(small(rng, 2), t));
        break;
      case 2:
        m = m * gl_block(1, Rational(small(rng, 2)), 0, 1);
        break;
      case 3:
        m = m * gl_block(1, 0, Rational(t * small(rng, 2)), 1);
        break;
      default:
        m = m * sign_torus(small(rng, 1) >= 0 ? 1 : -1,
                           small(rng, 1) >= 0 ? 1 : -1);
        break;
    }
  }
  return m;
}

// Random word in generators of the integral checkerboard model at level p:
// symmetric blocks [[a, p b], [p b, c]] upstairs and downstairs, unipotent
// GL blocks with off-diagonal slots in pZ, and sign tori.
inline Mat4q random_prime_pattern(std::mt19937& rng, long long p, int length) {
  Mat4q m = identity4();
  std::uniform_int_distribution<int> kind(0, 4);
  for (int k = 0; k < length; ++k) {
    Rational pb(p * small(rng, 2));
    switch (kind(rng)) {
      case 0:
        m = m * upper_translation(Rational(small(rng, 2)), pb,
                                  Rational(small(rng, 2)));
        break;
      case 1:
        m = m * lower_translation(Rational(small(rng, 2)), pb,
                                  Rational(small(rng, 2)));
        break;
      case 2:
        m = m * gl_block(1, Rational(p * small(rng, 2)), 0, 1);
        break;
      case 3:
        m = m * gl_block(1, 0, Rational(p * small(rng, 2)), 1);
        break;
      default:
        m = m * sign_torus(small(rng, 1) >= 0 ? 1 : -1,
                           small(rng, 1) >= 0 ? 1 : -1);
        break;
    }
  }
  return m;
}

// Random integral symplectic word (level 1) including the involution, for
// the action and cocycle tests.
inline Mat4q random_sp4z(std::mt19937& rng, int length) {
  Mat4q m = identity4();
  std::uniform_int_distribution<int> kind(0, 3);
  for (int k = 0; k < length; ++k) {
    switch (kind(rng)) {
      case 0:
        m = m * upper_translation(Rational(small(rng, 2)),
                                  Rational(small(rng, 2)),
                                  Rational(small(rng, 2)));
        break;
      case 1:
        m = m * standard_j();
        break;
      case 2:
        m = m * gl_block(1, Rational(small(rng, 2)), 0, 1);
        break;
      default:
        m = m * gl_block(0, 1, -1, 0);
        break;
    }
  }
  return m;
}

}  // namespace paramod::testgen
