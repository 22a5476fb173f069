#pragma once

#include <iosfwd>
#include <string>

#include "paramod/eigen_support.hpp"

namespace paramod {

// The symplectic form J = [[0, I2], [-I2, 0]]. Every "symplectic" predicate
// in this library means  M^T J M = J  for this J; the sign convention is
// fixed here and nowhere else.
Mat4q symplectic_form_j();

bool is_symplectic(const Mat4q& m);

// Membership in the paramodular group of level t: symplectic, integral in
// every slot except (4,2) which only needs t*m(4,2) integral, with the five
// slots (1,4), (2,1), (2,3), (2,4), (3,4) divisible by t. Indices here are
// 1-based to match the display convention; code below is 0-based.
bool in_paramodular(const Mat4q& m, long long t);

// Membership in the conjugated integral model for level p^2: an integral
// symplectic matrix whose eight off-checkerboard slots
// (1,2),(1,4),(2,1),(2,3),(3,2),(3,4),(4,1),(4,3) are divisible by p.
bool in_prime_pattern(const Mat4q& m, long long p);

// diag(1, 1/p, 1, p): symplectic, and conjugation by it carries the level
// p^2 paramodular pattern onto the integral prime pattern and back.
Mat4q conjugator(long long p);

// |Sp(4, F_q)| = q^4 (q^2 - 1)(q^4 - 1) for prime q.
BigInt sp4_order_mod(long long q);

// Independent enumerations over F_q, used to anchor the closed form.
// q = 2 scans all 65536 binary matrices; q = 3 runs a column DFS that
// prunes on the symplectic inner products.
BigInt sp4_order_bruteforce(int q);

// Count of symplectic matrices over F_q supported on the checkerboard
// pattern of in_prime_pattern. The index of this subgroup inside Sp(4, F_q)
// is an enumeration oracle for the covering degree q^2(q^2 + 1).
BigInt sp4_pattern_count_bruteforce(int q);

bool is_prime(long long n);

// Reads a 4x4 matrix of rationals ("a" or "a/b", 16 whitespace-separated
// tokens) as written by the CLI's matrix file convention.
Mat4q parse_matrix(std::istream& in);
Mat4q parse_matrix_file(const std::string& path);

std::string matrix_to_string(const Mat4q& m);

}  // namespace paramod
