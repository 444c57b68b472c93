#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bbhull/rational.hpp"

namespace bbhull {

using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    /// Builds a matrix from a list of equally long row vectors.
    static Matrix from_rows(std::span<const Vector> rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector operator*(const Vector& x) const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RankResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Rank of m and the pivot columns of its reduced row echelon form
/// (the lexicographically first independent column set).
RankResult gauss_rank(const Matrix& m);

/// Exact determinant by fraction-free elimination. Throws DimensionError for
/// non-square input.
Rational det(const Matrix& m);

/// Sign of the determinant: -1, 0 or +1.
int det_sign(const Matrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    Vector solution;  // set only for SolveStatus::unique
};

/// Solves a x = b exactly. Throws DimensionError if b does not match the
/// row count of a.
SolveResult solve_linear(const Matrix& a, const Vector& b);

// ---------------------------------------------------------------------------
// Integer kernels. The rational entry points above clear denominators row by
// row and delegate here; the hull engine calls these directly.

using IntMatrix = std::vector<IntVector>;

/// Result of fraction-free Gauss-Jordan elimination. Every pivot entry of the
/// reduced matrix equals `pivot_value`, every non-pivot row below `rank` is
/// zero in all eliminated columns.
struct FractionFreeForm {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    Integer pivot_value{1};
    int row_swaps_parity = 0;  // 1 iff an odd number of row swaps happened
};

/// Reduces m in place. Only the first `elim_cols` columns are used as pivot
/// candidates (pass m[0].size() to use all). Pivots are chosen by smallest
/// bit size in each column.
FractionFreeForm fraction_free_reduce(IntMatrix& m, std::size_t elim_cols);

/// Scales a rational row by the least common multiple of its denominators.
IntVector clear_denominators(std::span<const Rational> row);

/// Divides an integer vector by the gcd of its entries (no-op for zero).
void make_primitive(IntVector& v);

/// Primitive integer generator of the kernel of an r x (r+1) integer matrix
/// of full row rank. Returns an empty vector if the rank is deficient.
IntVector kernel_vector(IntMatrix m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace bbhull
