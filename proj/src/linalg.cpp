#include "bbhull/linalg.hpp"

#include <algorithm>
#include <utility>

namespace bbhull {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) {
            throw DimensionError("rows of different length");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(cols_));
}

Vector Matrix::operator*(const Vector& x) const {
    if (x.size() != cols_) {
        throw DimensionError("matrix-vector size mismatch");
    }
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            y[r] += (*this)(r, c) * x[c];
        }
    }
    return y;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(a, c), (*this)(b, c));
    }
}

// ---------------------------------------------------------------------------

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    }
    return s;
}

IntVector clear_denominators(std::span<const Rational> row) {
    Integer l = 1;
    for (const auto& x : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    }
    IntVector out;
    out.reserve(row.size());
    for (const auto& x : row) {
        Integer v = l / x.raw().get_den();
        v *= x.raw().get_num();
        out.push_back(std::move(v));
    }
    return out;
}

void make_primitive(IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) {
            return;
        }
    }
    if (g == 0) {
        return;
    }
    for (auto& x : v) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

namespace {

std::size_t bits(const Integer& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Row among [from, m.size()) with the smallest nonzero entry in column col.
std::size_t choose_pivot(const IntMatrix& m, std::size_t from, std::size_t col) {
    std::size_t best = m.size();
    std::size_t best_bits = 0;
    for (std::size_t r = from; r < m.size(); ++r) {
        if (sgn(m[r][col]) == 0) {
            continue;
        }
        const std::size_t b = bits(m[r][col]);
        if (best == m.size() || b < best_bits) {
            best = r;
            best_bits = b;
        }
    }
    return best;
}

IntMatrix to_integer_rows(const Matrix& m) {
    IntMatrix out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Vector row = m.row(r);
        out.push_back(clear_denominators(row));
    }
    return out;
}

}  // namespace

FractionFreeForm fraction_free_reduce(IntMatrix& m, std::size_t elim_cols) {
    FractionFreeForm form;
    if (m.empty()) {
        return form;
    }
    const std::size_t cols = m.front().size();
    Integer prev = 1;
    Integer tmp;
    std::size_t row = 0;
    for (std::size_t col = 0; col < elim_cols && row < m.size(); ++col) {
        const std::size_t p = choose_pivot(m, row, col);
        if (p == m.size()) {
            continue;
        }
        if (p != row) {
            std::swap(m[p], m[row]);
            form.row_swaps_parity ^= 1;
        }
        const Integer piv = m[row][col];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row) {
                continue;
            }
            const Integer f = m[i][col];
            const bool f_zero = sgn(f) == 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == col) {
                    continue;
                }
                // m[i][j] = (piv * m[i][j] - f * m[row][j]) / prev, exact.
                tmp = piv * m[i][j];
                if (!f_zero) {
                    mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), m[row][j].get_mpz_t());
                }
                mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = piv;
        form.pivot_columns.push_back(col);
        ++row;
    }
    form.rank = row;
    form.pivot_value = prev;
    return form;
}

IntVector kernel_vector(IntMatrix m) {
    if (m.empty()) {
        return {};
    }
    const std::size_t cols = m.front().size();
    const FractionFreeForm form = fraction_free_reduce(m, cols);
    if (form.rank + 1 != cols) {
        return {};
    }
    std::size_t free_col = cols - 1;
    for (std::size_t c = 0, k = 0; c < cols; ++c) {
        if (k < form.pivot_columns.size() && form.pivot_columns[k] == c) {
            ++k;
        } else {
            free_col = c;
            break;
        }
    }
    IntVector v(cols);
    v[free_col] = form.pivot_value;
    for (std::size_t i = 0; i < form.rank; ++i) {
        v[form.pivot_columns[i]] = -m[i][free_col];
    }
    make_primitive(v);
    return v;
}

// ---------------------------------------------------------------------------

RankResult gauss_rank(const Matrix& m) {
    IntMatrix im = to_integer_rows(m);
    const FractionFreeForm form = fraction_free_reduce(im, m.cols());
    // Pivots chosen column by column give the lexicographically first basis
    // of the column space, independent of which row supplied each pivot.
    return {form.rank, form.pivot_columns};
}

namespace {

// Forward-only Bareiss elimination on a square integer matrix.
Integer integer_det(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    Integer prev = 1;
    Integer tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t p = choose_pivot(m, k, k);
        if (p == n) {
            return 0;
        }
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                tmp = m[k][k] * m[i][j];
                mpz_submul(tmp.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer d = m[n - 1][n - 1];
    if (sign < 0) {
        d = -d;
    }
    return d;
}

}  // namespace

Rational det(const Matrix& m) {
    if (!m.square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    Integer scale = 1;
    IntMatrix im;
    im.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Vector row = m.row(r);
        Integer l = 1;
        for (const auto& x : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
        }
        scale *= l;
        im.push_back(clear_denominators(row));
    }
    return Rational(integer_det(std::move(im)), scale);
}

int det_sign(const Matrix& m) {
    if (!m.square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    // Row scales are positive, so the integer determinant has the same sign.
    return sgn(integer_det(to_integer_rows(m)));
}

SolveResult solve_linear(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) {
        throw DimensionError("right-hand side length does not match row count");
    }
    const std::size_t n = a.cols();
    IntMatrix aug;
    aug.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Vector row = a.row(r);
        row.push_back(b[r]);
        aug.push_back(clear_denominators(row));
    }
    const FractionFreeForm form = fraction_free_reduce(aug, n);
    for (std::size_t r = form.rank; r < aug.size(); ++r) {
        if (sgn(aug[r][n]) != 0) {
            return {SolveStatus::inconsistent, {}};
        }
    }
    if (form.rank < n) {
        return {SolveStatus::underdetermined, {}};
    }
    Vector x(n);
    for (std::size_t i = 0; i < form.rank; ++i) {
        x[form.pivot_columns[i]] = Rational(aug[i][n], form.pivot_value);
    }
    return {SolveStatus::unique, std::move(x)};
}

}  // namespace bbhull
