#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "bbhull/geometry.hpp"

namespace bbhull::testing {

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 1) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, int lo, int hi,
                                        int max_den = 1) {
    std::vector<Point> pts(n, Point(d));
    for (auto& p : pts) {
        for (auto& c : p) {
            c = random_rational(rng, lo, hi, max_den);
        }
    }
    return pts;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi, int max_den = 1) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = random_rational(rng, lo, hi, max_den);
        }
    }
    return m;
}

// Laplace expansion; the reference the elimination code is checked against.
inline Rational cofactor_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0, k = 0; c < n; ++c) {
                if (c != j) {
                    minor(r - 1, k++) = m(r, c);
                }
            }
        }
        const Rational term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
    return {v.begin(), v.end()};
}

inline std::vector<Halfspace> sorted(std::vector<Halfspace> hs) {
    std::sort(hs.begin(), hs.end());
    return hs;
}

inline Point pt(std::initializer_list<Rational> xs) {
    return Point(xs);
}

}  // namespace bbhull::testing
