#pragma once

// Exact integer / rational scalars and the small amount of vector algebra
// over Weil-lattice coordinates that every other module needs.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seifert5 {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major, rows of equal length

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor-free modulus: result in [0, |n|).
Integer mod(const Integer& a, const Integer& n);

/// Extended Euclid. Returns g = gcd(a,b) >= 0 with x*a + y*b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

/// Solves sum coeffs[i] * x[i] = gcd(coeffs) and returns that gcd.
/// The solution is built by chaining ext_gcd left to right, so it is
/// deterministic for a given coefficient order.
Integer ext_gcd_many(std::span<const Integer> coeffs, IntVector& x);

/// gcd of all entries (0 for the zero / empty vector).
Integer content(std::span<const Integer> v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

RatVector to_rational(std::span<const Integer> v);

/// Returns true and fills out if every entry is an integer.
bool to_integer(std::span<const Rational> v, IntVector& out);

RatVector add(std::span<const Rational> a, std::span<const Rational> b);
RatVector scale(const Rational& c, std::span<const Rational> v);
IntVector scale(const Integer& c, std::span<const Integer> v);

/// Bilinear form u^T G v.
Rational pair(const RatMatrix& g, std::span<const Rational> u, std::span<const Rational> v);
Rational pair(const RatMatrix& g, std::span<const Integer> u, std::span<const Integer> v);

/// Determinant by fraction-exact Gaussian elimination.
Rational determinant(RatMatrix m);

/// Solves x * rows = target for x (rows square and invertible).
/// Returns false if rows are singular.
bool solve_left(const RatMatrix& rows, std::span<const Rational> target, RatVector& x);

/// True iff u and v are linearly dependent over Q.
bool proportional(std::span<const Rational> u, std::span<const Rational> v);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

/// Integer from a small machine value; avoids the long/long long ambiguity of mpz_class.
inline Integer make_int(std::int64_t v) { return Integer(std::to_string(v)); }
inline Rational make_rat(std::int64_t num, std::int64_t den = 1) {
    Rational q(make_int(num), make_int(den));
    q.canonicalize();
    return q;
}

bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace seifert5
