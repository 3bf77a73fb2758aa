#include "seifert5/arith.hpp"
#include "seifert5/errors.hpp"

#include <limits>
#include <utility>

namespace seifert5 {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer mod(const Integer& a, const Integer& n) {
    Integer r;
    Integer an = abs(n);
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), an.get_mpz_t());
    return r;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    Integer g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer ext_gcd_many(std::span<const Integer> coeffs, IntVector& x) {
    x.assign(coeffs.size(), Integer(0));
    if (coeffs.empty()) return Integer(0);
    Integer g = coeffs[0];
    x[0] = 1;
    if (g < 0) {
        g = -g;
        x[0] = -1;
    }
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        Integer s, t;
        Integer ng = ext_gcd(g, coeffs[i], s, t);
        // previous combination scales by s, new coefficient gets t
        for (std::size_t j = 0; j < i; ++j) x[j] *= s;
        x[i] = t;
        g = ng;
    }
    return g;
}

Integer content(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& e : v) g = gcd(g, e);
    return g;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

RatVector to_rational(std::span<const Integer> v) {
    RatVector r;
    r.reserve(v.size());
    for (const auto& e : v) r.emplace_back(e);
    return r;
}

bool to_integer(std::span<const Rational> v, IntVector& out) {
    out.clear();
    out.reserve(v.size());
    for (const auto& e : v) {
        if (e.get_den() != 1) return false;
        out.push_back(e.get_num());
    }
    return true;
}

RatVector add(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw StructuralError("vector length mismatch in add");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector scale(const Rational& c, std::span<const Rational> v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

IntVector scale(const Integer& c, std::span<const Integer> v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Rational pair(const RatMatrix& g, std::span<const Rational> u, std::span<const Rational> v) {
    if (g.size() != u.size() || g.size() != v.size())
        throw StructuralError("pairing dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (g[i].size() != v.size()) throw StructuralError("pairing is not square");
        Rational row = 0;
        for (std::size_t j = 0; j < v.size(); ++j) row += g[i][j] * v[j];
        acc += u[i] * row;
    }
    return acc;
}

Rational pair(const RatMatrix& g, std::span<const Integer> u, std::span<const Integer> v) {
    const RatVector ru = to_rational(u), rv = to_rational(v);
    return pair(g, ru, rv);
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw StructuralError("determinant of non-square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

bool solve_left(const RatMatrix& rows, std::span<const Rational> target, RatVector& x) {
    // x * R = t  <=>  R^T x^T = t^T; build augmented [R^T | t].
    const std::size_t n = rows.size();
    if (target.size() != n) throw StructuralError("solve_left dimension mismatch");
    RatMatrix a(n, RatVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw StructuralError("solve_left needs a square basis");
        for (std::size_t j = 0; j < n; ++j) a[j][i] = rows[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) a[j][n] = target[j];
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return true;
}

bool proportional(std::span<const Rational> u, std::span<const Rational> v) {
    if (u.size() != v.size()) throw StructuralError("vector length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

bool fits_int64(const Integer& z) {
    static const Integer lo = Integer(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi = Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) throw StructuralError("integer " + z.get_str() + " exceeds 64 bits");
    return std::stoll(z.get_str());
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error([&] {
          std::string msg = "validation failed:";
          for (const auto& v : violations) msg += "\n  - " + v;
          return msg;
      }()),
      violations_(std::move(violations)) {}

}  // namespace seifert5
