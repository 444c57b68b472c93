#include "bbhull/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bbhull {

namespace {

void check_dims(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) + ", got " +
                             std::to_string(got));
    }
}

}  // namespace

Halfspace& Halfspace::normalize() {
    Vector all;
    all.reserve(normal.size() + 1);
    all.push_back(offset);
    all.insert(all.end(), normal.begin(), normal.end());
    IntVector ints = clear_denominators(all);
    make_primitive(ints);
    if (std::all_of(ints.begin() + 1, ints.end(), [](const Integer& x) { return sgn(x) == 0; })) {
        throw DegenerateError("halfspace with zero normal");
    }
    *this = from_integer_coefficients(ints);
    return *this;
}

Halfspace& Halfspace::normalize_as_equation() {
    normalize();
    const Rational* first = offset.is_zero() ? nullptr : &offset;
    for (std::size_t i = 0; first == nullptr && i < normal.size(); ++i) {
        if (!normal[i].is_zero()) {
            first = &normal[i];
        }
    }
    if (first != nullptr && first->sign() < 0) {
        offset = -offset;
        for (auto& a : normal) {
            a = -a;
        }
    }
    return *this;
}

IntVector Halfspace::integer_coefficients() const {
    IntVector out;
    out.reserve(normal.size() + 1);
    out.push_back(offset.numerator());
    for (const auto& a : normal) {
        out.push_back(a.numerator());
    }
    return out;
}

Halfspace Halfspace::from_integer_coefficients(std::span<const Integer> coeffs) {
    Halfspace h;
    h.offset = Rational(coeffs[0]);
    h.normal.reserve(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        h.normal.emplace_back(coeffs[i]);
    }
    return h;
}

bool Simplex::contains(Index i) const {
    return std::binary_search(vertices.begin(), vertices.end(), i);
}

std::vector<Halfspace> Polytope::halfspaces() const {
    std::vector<Halfspace> out;
    out.reserve(facets.size());
    for (const auto& f : facets) {
        out.push_back(f.halfspace);
    }
    return out;
}

std::vector<Point> Polytope::vertices() const {
    std::vector<Point> out;
    out.reserve(vertex_indices.size());
    for (Index i : vertex_indices) {
        out.push_back(points[i]);
    }
    return out;
}

Rational evaluate(const Halfspace& h, const Point& p) {
    check_dims(h.normal.size(), p.size(), "evaluate");
    Rational v = h.offset;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!h.normal[i].is_zero()) {
            v += h.normal[i] * p[i];
        }
    }
    return v;
}

IntVector homogenize(const Point& p) {
    Vector row;
    row.reserve(p.size() + 1);
    row.emplace_back(1);
    row.insert(row.end(), p.begin(), p.end());
    IntVector h = clear_denominators(row);
    make_primitive(h);
    return h;
}

Point translate(const Point& p, const Point& by) {
    check_dims(p.size(), by.size(), "translate");
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i] + by[i];
    }
    return out;
}

bool AffineSpanBuilder::add(const Point& p) {
    check_dims(ambient_, p.size(), "affine span");
    if (!started_) {
        started_ = true;
        origin_ = p;
        return true;
    }
    if (rows_.size() == ambient_) {
        return false;
    }
    Vector v(ambient_);
    for (std::size_t c = 0; c < ambient_; ++c) {
        v[c] = p[c] - origin_[c];
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational f = v[pivots_[k]];
        if (f.is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (!rows_[k][c].is_zero()) {
                v[c] -= f * rows_[k][c];
            }
        }
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (nz == v.end()) {
        return false;
    }
    const auto pc = static_cast<std::size_t>(nz - v.begin());
    const Rational inv = Rational(1) / v[pc];
    for (auto& x : v) {
        x *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
}

AffineBasis affine_basis(std::span<const Point> points) {
    if (points.empty()) {
        throw DegenerateError("affine basis of an empty point set");
    }
    AffineSpanBuilder span(points.front().size());
    AffineBasis basis;
    for (std::size_t i = 0; i < points.size() && !span.full(); ++i) {
        if (span.add(points[i])) {
            basis.indices.push_back(static_cast<Index>(i));
        }
    }
    basis.dim = span.dim();
    return basis;
}

Point AffineEmbedding::project(const Point& p) const {
    check_dims(ambient_dim, p.size(), "project");
    Point out;
    out.reserve(kept.size());
    for (std::size_t c : kept) {
        out.push_back(p[c]);
    }
    return out;
}

Halfspace AffineEmbedding::lift(const Halfspace& h) const {
    check_dims(kept.size(), h.normal.size(), "lift");
    Halfspace out;
    out.offset = h.offset;
    out.normal.assign(ambient_dim, Rational(0));
    for (std::size_t k = 0; k < kept.size(); ++k) {
        out.normal[kept[k]] = h.normal[k];
    }
    out.normalize();
    return out;
}

bool AffineEmbedding::on_span(const Point& p) const {
    return std::all_of(equations.begin(), equations.end(),
                       [&](const Halfspace& e) { return evaluate(e, p).is_zero(); });
}

Projection project_to_span(std::span<const Point> points) {
    if (points.empty()) {
        throw DegenerateError("projection of an empty point set");
    }
    const Point& p0 = points.front();
    const std::size_t d = p0.size();
    IntMatrix diffs;
    diffs.reserve(points.size());
    Vector row(d);
    for (const auto& p : points) {
        check_dims(d, p.size(), "project_to_span");
        for (std::size_t c = 0; c < d; ++c) {
            row[c] = p[c] - p0[c];
        }
        IntVector r = clear_denominators(row);
        if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; })) {
            diffs.push_back(std::move(r));
        }
    }
    AffineEmbedding emb;
    emb.ambient_dim = d;
    FractionFreeForm form;
    if (!diffs.empty()) {
        form = fraction_free_reduce(diffs, d);
    }
    emb.kept = form.pivot_columns;

    // Column relations of the reduced form: column j equals
    // sum_k (m[k][j] / pivot) * column kept[k].
    for (std::size_t j = 0, k = 0; j < d; ++j) {
        if (k < emb.kept.size() && emb.kept[k] == j) {
            ++k;
            continue;
        }
        Halfspace eq;
        eq.normal.assign(d, Rational(0));
        eq.normal[j] = 1;
        eq.offset = -p0[j];
        for (std::size_t r = 0; r < emb.kept.size(); ++r) {
            const Rational lambda(diffs[r][j], form.pivot_value);
            if (lambda.is_zero()) {
                continue;
            }
            eq.normal[emb.kept[r]] -= lambda;
            eq.offset += lambda * p0[emb.kept[r]];
        }
        eq.normalize_as_equation();
        emb.equations.push_back(std::move(eq));
    }

    Projection out;
    out.points.reserve(points.size());
    for (const auto& p : points) {
        out.points.push_back(emb.project(p));
    }
    out.embedding = std::move(emb);
    return out;
}

Halfspace hyperplane_through(std::span<const Point> pts, const Point& inside) {
    const std::size_t d = inside.size();
    check_dims(d, pts.size(), "hyperplane_through point count");
    IntMatrix rows;
    rows.reserve(d);
    for (const auto& p : pts) {
        check_dims(d, p.size(), "hyperplane_through");
        rows.push_back(homogenize(p));
    }
    IntVector k = kernel_vector(std::move(rows));
    if (k.empty()) {
        throw DegenerateError("hyperplane through affinely dependent points");
    }
    const int s = sgn(dot(k, homogenize(inside)));
    if (s == 0) {
        throw DegenerateError("orientation point lies on the hyperplane");
    }
    if (s < 0) {
        for (auto& x : k) {
            x = -x;
        }
    }
    return Halfspace::from_integer_coefficients(k);
}

Rational simplex_volume(std::span<const Point> pts) {
    if (pts.empty()) {
        throw DimensionError("simplex_volume: no points");
    }
    const std::size_t d = pts.front().size();
    check_dims(d + 1, pts.size(), "simplex_volume point count");
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        check_dims(d, pts[i + 1].size(), "simplex_volume");
        for (std::size_t c = 0; c < d; ++c) {
            m(i, c) = pts[i + 1][c] - pts[0][c];
        }
    }
    Integer fact = 1;
    for (std::size_t i = 2; i <= d; ++i) {
        fact *= static_cast<unsigned long>(i);
    }
    return det(m).abs() / Rational(fact);
}

std::vector<Point> polar(std::span<const Halfspace> facets, const Point& interior) {
    std::vector<Point> out;
    out.reserve(facets.size());
    for (const auto& h : facets) {
        const Rational c = evaluate(h, interior);
        if (c.sign() <= 0) {
            throw DegenerateError("polar: point is not strictly interior");
        }
        Point q(h.normal.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = -h.normal[i] / c;
        }
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<Point> polar(const Polytope& p, const Point& interior) {
    if (!p.affine_hull.empty() || p.dim != p.ambient_dim) {
        throw DegenerateError("polar: polytope is not full-dimensional");
    }
    const auto hs = p.halfspaces();
    return polar(hs, interior);
}

void fill_incidences(Polytope& p) {
    if (p.vertex_indices.empty()) {
        p.vertex_indices.resize(p.points.size());
        std::iota(p.vertex_indices.begin(), p.vertex_indices.end(), Index{0});
    }
    for (auto& f : p.facets) {
        f.vertices.clear();
        for (Index i : p.vertex_indices) {
            if (evaluate(f.halfspace, p.points[i]).is_zero()) {
                f.vertices.push_back(i);
            }
        }
    }
}

}  // namespace bbhull
