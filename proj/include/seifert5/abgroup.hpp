#pragma once

#include "seifert5/arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seifert5 {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);
    /// Builds from nested rows; every row must have `cols` entries.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Integer>& entries() const noexcept { return data_; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f);
    /// col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& f);
    void negate_row(std::size_t r);

    void append_row(const IntVector& row);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
Integer determinant(const IntMatrix& m);

struct SmithForm {
    IntVector diagonal;  // length min(rows, cols); nonnegative, each divides the next nonzero one
    IntMatrix U;         // rows x rows, unimodular
    IntMatrix V;         // cols x cols, unimodular
};

/// Smith normal form with transforms: U * m * V = diag(diagonal).
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk, d1 | d2 | ... , each d >= 2.
class AbGroup {
public:
    AbGroup() = default;

    static AbGroup trivial() { return {}; }
    static AbGroup free(std::size_t rank);
    static AbGroup cyclic(const Integer& n);  // n = 0 gives Z, n = 1 the trivial group
    /// Normalizes an arbitrary list of cyclic orders (0 meaning Z) into invariant-factor form.
    static AbGroup from_cyclic_orders(const std::vector<Integer>& orders);

    const IntVector& invariant_factors() const noexcept { return factors_; }
    std::size_t free_rank() const noexcept { return free_rank_; }

    bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }
    /// Product of the invariant factors, or nullopt when the group is infinite.
    std::optional<Integer> order() const;
    /// Product of the invariant factors; the order of the torsion subgroup.
    Integer torsion_order() const;
    AbGroup torsion() const;

    /// Number of elements x with n*x = 0 in the torsion subgroup.
    Integer count_killed_by(const Integer& n) const;

    AbGroup operator+(const AbGroup& rhs) const;  // direct sum
    AbGroup power(std::size_t k) const;           // k-fold direct sum
    bool operator==(const AbGroup& rhs) const = default;

    /// e.g. "0", "Z^2", "Z/3", "Z + (Z/5)^2 + Z/10"
    std::string to_string() const;

private:
    AbGroup(IntVector factors, std::size_t free_rank)
        : factors_(std::move(factors)), free_rank_(free_rank) {}

    IntVector factors_;
    std::size_t free_rank_ = 0;

    friend AbGroup group_from_presentation(std::size_t, const IntMatrix&);
};

/// Cokernel of the relation matrix: rows are relations, columns generators.
AbGroup group_from_presentation(std::size_t generators, const IntMatrix& relations);

inline bool group_equal(const AbGroup& a, const AbGroup& b) { return a == b; }
inline bool is_trivial(const AbGroup& a) { return a.is_trivial(); }
/// nullopt encodes "infinite".
inline std::optional<Integer> torsion_order(const AbGroup& a) { return a.order(); }

/// Parses the notation produced by AbGroup::to_string, plus "Z/n^k" and "Z^r" shorthands.
AbGroup parse_group(std::string_view text);

}  // namespace seifert5
