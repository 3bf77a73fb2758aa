#include "seifert5/abgroup.hpp"
#include "seifert5/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace seifert5 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw StructuralError("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw StructuralError("relation row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    IntMatrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw StructuralError("ragged matrix literal");
        std::size_t c = 0;
        for (long v : row) m(r, c++) = make_int(v);
        ++r;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw StructuralError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::append_row(const IntVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw StructuralError("append_row: wrong row length");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    IntMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Position of the smallest nonzero |entry| in the trailing block starting at (t, t).
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& v = a(i, j);
            if (v == 0) continue;
            if (!found || abs(v) < best) {
                best = abs(v);
                pr = i;
                pc = j;
                found = true;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(a, t, pr, pc)) break;
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            // clear column t below the pivot
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            // clear row t right of the pivot
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot survives; move the smallest one in
                std::size_t bi = t, bj = t;
                Integer best = abs(a(t, t));
                for (std::size_t i = t + 1; i < a.rows(); ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < best) {
                        best = abs(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < best) {
                        best = abs(a(t, j));
                        bi = t;
                        bj = j;
                    }
                a.swap_rows(t, bi);
                u.swap_rows(t, bi);
                a.swap_cols(t, bj);
                v.swap_cols(t, bj);
                continue;
            }
            // divisibility: the pivot must divide the whole trailing block
            bool bad = false;
            for (std::size_t i = t + 1; i < a.rows() && !bad; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(i, j) == 0) continue;
                    Integer r;
                    mpz_tdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), a(t, t).get_mpz_t());
                    if (r != 0) {
                        a.add_row(t, i, Integer(1));
                        u.add_row(t, i, Integer(1));
                        bad = true;
                        break;
                    }
                }
            if (!bad) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm out;
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

AbGroup AbGroup::free(std::size_t rank) { return AbGroup({}, rank); }

AbGroup AbGroup::cyclic(const Integer& n) { return from_cyclic_orders({n}); }

AbGroup AbGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
    IntMatrix rel(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = abs(orders[i]);
    return group_from_presentation(orders.size(), rel);
}

std::optional<Integer> AbGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    return torsion_order();
}

Integer AbGroup::torsion_order() const {
    Integer p = 1;
    for (const auto& d : factors_) p *= d;
    return p;
}

AbGroup AbGroup::torsion() const { return AbGroup(factors_, 0); }

Integer AbGroup::count_killed_by(const Integer& n) const {
    Integer c = 1;
    for (const auto& d : factors_) c *= gcd(n, d);
    return c;
}

AbGroup AbGroup::operator+(const AbGroup& rhs) const {
    std::vector<Integer> orders(factors_.begin(), factors_.end());
    orders.insert(orders.end(), rhs.factors_.begin(), rhs.factors_.end());
    AbGroup t = from_cyclic_orders(orders);
    t.free_rank_ = free_rank_ + rhs.free_rank_;
    return t;
}

AbGroup AbGroup::power(std::size_t k) const {
    AbGroup acc;
    for (std::size_t i = 0; i < k; ++i) acc = acc + *this;
    return acc;
}

std::string AbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (free_rank_ == 1) parts.emplace_back("Z");
    if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        const std::size_t k = j - i;
        if (k == 1)
            parts.push_back("Z/" + factors_[i].get_str());
        else
            parts.push_back("(Z/" + factors_[i].get_str() + ")^" + std::to_string(k));
        i = j;
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " + ";
        s += parts[i];
    }
    return s;
}

AbGroup group_from_presentation(std::size_t generators, const IntMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != generators)
        throw StructuralError("presentation has " + std::to_string(relations.cols()) + " columns but " +
                              std::to_string(generators) + " generators");
    if (relations.rows() == 0) return AbGroup::free(generators);
    const SmithForm snf = smith_normal_form(relations);
    IntVector factors;
    std::size_t rank = 0;
    for (const auto& d : snf.diagonal) {
        if (d == 0) continue;
        ++rank;
        if (d != 1) factors.push_back(d);
    }
    return AbGroup(std::move(factors), generators - rank);
}

namespace {

class GroupParser {
public:
    explicit GroupParser(std::string_view s) : s_(s) {}

    AbGroup parse() {
        skip();
        if (eat('0')) {
            skip();
            if (pos_ != s_.size()) fail("trailing input");
            return AbGroup::trivial();
        }
        AbGroup g = term();
        skip();
        while (eat('+')) {
            g = g + term();
            skip();
        }
        if (pos_ != s_.size()) fail("trailing input");
        return g;
    }

private:
    AbGroup term() {
        skip();
        AbGroup base;
        if (eat('(')) {
            base = parse_inner();
            skip();
            if (!eat(')')) fail("expected ')'");
        } else {
            base = cyclic_or_free();
        }
        skip();
        if (eat('^')) {
            const Integer k = number();
            base = base.power(to_int64(k));
        }
        return base;
    }

    AbGroup parse_inner() {
        AbGroup g = term();
        skip();
        while (eat('+')) {
            g = g + term();
            skip();
        }
        return g;
    }

    AbGroup cyclic_or_free() {
        skip();
        if (!(eat('Z') || eat('z'))) fail("expected 'Z'");
        skip();
        if (eat('/')) {
            const Integer n = number();
            if (n <= 0) fail("cyclic order must be positive");
            return AbGroup::cyclic(n);
        }
        return AbGroup::free(1);
    }

    Integer number() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw StructuralError("cannot parse group '" + std::string(s_) + "': " + what + " at offset " +
                              std::to_string(pos_));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

AbGroup parse_group(std::string_view text) { return GroupParser(text).parse(); }

}  // namespace seifert5
