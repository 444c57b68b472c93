#include "bbhull/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "bbhull/beneath_beyond.hpp"

namespace bbhull {

namespace {

// Plain Laplace expansion along the first row; only for small d.
Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m[0][0];
    }
    Integer total = 0;
    IntMatrix minor(n - 1, IntVector(n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(m[0][j]) == 0) {
            continue;
        }
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0, k = 0; c < n; ++c) {
                if (c != j) {
                    minor[r - 1][k++] = m[r][c];
                }
            }
        }
        const Integer term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

// Coefficients c with c . (1, x) = det[(1, x); rows], i.e. the hyperplane
// through the d homogenized points in `rows`.
IntVector cofactor_normal(const std::vector<const IntVector*>& rows) {
    const std::size_t d = rows.size();
    IntVector c(d + 1);
    IntMatrix minor(d, IntVector(d));
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t col = 0, k = 0; col <= d; ++col) {
                if (col != j) {
                    minor[r][k++] = (*rows[r])[col];
                }
            }
        }
        c[j] = cofactor_det(minor);
        if (j % 2 == 1) {
            c[j] = -c[j];
        }
    }
    return c;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) {
            return cap + 1;
        }
    }
    return r;
}

std::size_t affine_dim(const std::vector<const Point*>& pts) {
    if (pts.empty()) {
        return 0;
    }
    AffineSpanBuilder span(pts.front()->size());
    for (const Point* p : pts) {
        span.add(*p);
    }
    return span.dim();
}

}  // namespace

std::vector<Halfspace> brute_force_hull(std::span<const Point> points) {
    if (points.empty()) {
        throw DegenerateError("brute_force_hull: no points");
    }
    const std::size_t d = points.front().size();
    std::set<Point> distinct;
    for (const auto& p : points) {
        if (p.size() != d) {
            throw DimensionError("brute_force_hull: points of different dimensions");
        }
        distinct.insert(p);
    }
    if (d == 0 || affine_basis(points).dim != d) {
        throw DegenerateError("brute_force_hull: points are not full-dimensional");
    }
    const std::size_t n = distinct.size();
    if (binomial_capped(n, d, kBruteForceSubsetLimit) > kBruteForceSubsetLimit) {
        throw ParameterError("brute_force_hull: too many subsets (n=" + std::to_string(n) +
                             ", d=" + std::to_string(d) + ")");
    }
    std::vector<IntVector> hom;
    for (const auto& p : distinct) {
        hom.push_back(homogenize(p));
    }

    std::set<Halfspace> facets;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) {
        pick[i] = i;
    }
    std::vector<const IntVector*> rows(d);
    for (;;) {
        for (std::size_t i = 0; i < d; ++i) {
            rows[i] = &hom[pick[i]];
        }
        IntVector c = cofactor_normal(rows);
        if (std::any_of(c.begin() + 1, c.end(), [](const Integer& x) { return sgn(x) != 0; })) {
            int side = 0;
            bool separates = false;
            for (const auto& h : hom) {
                const int s = sgn(dot(c, h));
                if (s == 0) {
                    continue;
                }
                if (side == 0) {
                    side = s;
                } else if (s != side) {
                    separates = true;
                    break;
                }
            }
            if (!separates && side != 0) {
                if (side < 0) {
                    for (auto& x : c) {
                        x = -x;
                    }
                }
                facets.insert(Halfspace::from_integer_coefficients(c).normalize());
            }
        }
        std::size_t k = d;
        while (k > 0 && pick[k - 1] == n - d + k - 1) {
            --k;
        }
        if (k == 0) {
            break;
        }
        ++pick[k - 1];
        for (std::size_t i = k; i < d; ++i) {
            pick[i] = pick[i - 1] + 1;
        }
    }
    return {facets.begin(), facets.end()};
}

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool VertexSet::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i] &= o.words_[i];
    }
    return r;
}

IncidenceMatrix incidence_matrix(const Polytope& p) {
    IncidenceMatrix inc;
    inc.dim = p.dim;
    for (Index v : p.vertex_indices) {
        inc.vertices.push_back(p.points.at(v));
    }
    std::set<VertexSet> seen;
    for (const auto& f : p.facets) {
        VertexSet row(inc.vertices.size());
        for (std::size_t j = 0; j < inc.vertices.size(); ++j) {
            if (evaluate(f.halfspace, inc.vertices[j]).is_zero()) {
                row.set(j);
            }
        }
        if (row.count() < p.dim) {
            throw Error("facet with fewer than " + std::to_string(p.dim) + " vertices");
        }
        if (!seen.insert(row).second) {
            throw Error("duplicate facet in incidence matrix");
        }
        inc.rows.push_back(std::move(row));
    }
    return inc;
}

std::vector<std::size_t> enumerate_faces(const IncidenceMatrix& inc, std::size_t dim) {
    std::vector<std::size_t> f(dim, 0);
    if (dim == 0) {
        return f;
    }
    auto face_dim = [&](const VertexSet& s) {
        std::vector<const Point*> pts;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s.test(j)) {
                pts.push_back(&inc.vertices[j]);
            }
        }
        return affine_dim(pts);
    };

    std::set<VertexSet> faces;
    std::deque<VertexSet> queue;
    for (const auto& r : inc.rows) {
        if (r.size() != inc.vertices.size()) {
            throw Error("incidence row width does not match the vertex count");
        }
        if (face_dim(r) != dim - 1) {
            throw Error("facet row does not span a hyperplane");
        }
        if (faces.insert(r).second) {
            queue.push_back(r);
        }
    }
    while (!queue.empty()) {
        const VertexSet face = queue.front();
        queue.pop_front();
        for (const auto& r : inc.rows) {
            VertexSet meet = face & r;
            if (!meet.none() && faces.insert(meet).second) {
                queue.push_back(std::move(meet));
            }
        }
    }
    for (const auto& face : faces) {
        const std::size_t k = face_dim(face);
        if (k >= dim) {
            throw Error("proper face of full dimension");
        }
        ++f[k];
    }
    if (f[0] != inc.vertices.size()) {
        throw Error("vertex count does not match the number of 0-faces");
    }
    return f;
}

Rational hull_volume(std::span<const Point> points) {
    if (points.empty()) {
        throw DegenerateError("hull_volume: no points");
    }
    const HullResult hull = convex_hull(points, InsertionOrder::lexicographic());
    if (hull.polytope.dim != hull.polytope.ambient_dim) {
        throw DegenerateError("hull_volume: points are not full-dimensional");
    }
    Rational total = 0;
    std::vector<Point> corner;
    for (const auto& cell : hull.triangulation.cells) {
        corner.clear();
        for (Index v : cell.vertices) {
            corner.push_back(points[v]);
        }
        total += simplex_volume(corner);
    }
    return total;
}

ValidationReport validate_triangulation(const Triangulation& t, const Polytope& p) {
    ValidationReport rep;
    auto fail = [&](bool& flag, std::string msg) {
        flag = false;
        if (rep.mismatches.size() < 50) {
            rep.mismatches.push_back(std::move(msg));
        }
    };
    if (t.points.empty() || t.cells.empty()) {
        fail(rep.cells_ok, "empty triangulation");
        rep.cover_ok = false;
        return rep;
    }
    const Projection proj = project_to_span(t.points);
    const std::vector<Point>& pts = proj.points;
    const std::size_t d = proj.embedding.dim();
    if (t.dim != d) {
        fail(rep.cells_ok, "triangulation dimension " + std::to_string(t.dim) + " but points span " +
                               std::to_string(d));
        return rep;
    }

    std::set<Halfspace> facet_set;
    if (proj.embedding.is_identity()) {
        for (const auto& f : p.facets) {
            Halfspace h = f.halfspace;
            facet_set.insert(h.normalize());
        }
    }
    const std::set<Index> vertex_set(p.vertex_indices.begin(), p.vertex_indices.end());

    // (d-1)-faces -> (cell, opposite vertex) of every cell containing them.
    std::map<std::vector<Index>, std::vector<Index>> ridges;
    std::vector<Point> corner;
    for (const auto& cell : t.cells) {
        const auto& vs = cell.vertices;
        if (vs.size() != d + 1 || !std::is_sorted(vs.begin(), vs.end()) ||
            std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
            fail(rep.cells_ok, "cell without d+1 distinct sorted vertices");
            continue;
        }
        if (std::any_of(vs.begin(), vs.end(), [&](Index v) { return v >= pts.size(); })) {
            fail(rep.cells_ok, "cell index out of range");
            continue;
        }
        corner.clear();
        for (Index v : vs) {
            corner.push_back(pts[v]);
        }
        const Rational vol = d == 0 ? Rational(0) : simplex_volume(corner);
        if (d > 0 && vol.is_zero()) {
            fail(rep.cells_ok, "degenerate cell");
        }
        rep.volume_total += vol;
        if (!vertex_set.empty()) {
            for (Index v : vs) {
                if (!vertex_set.contains(v)) {
                    fail(rep.vertices_ok, "cell uses non-vertex point " + std::to_string(v));
                }
            }
        }
        for (std::size_t k = 0; k < vs.size() && d > 0; ++k) {
            std::vector<Index> face;
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (j != k) {
                    face.push_back(vs[j]);
                }
            }
            ridges[face].push_back(vs[k]);
        }
    }

    for (const auto& [face, opposite] : ridges) {
        ++rep.ridge_histogram[opposite.size()];
        if (opposite.size() > 2) {
            fail(rep.boundary_ok, "(d-1)-simplex in " + std::to_string(opposite.size()) + " cells");
            continue;
        }
        if (opposite.size() == 2) {
            continue;
        }
        std::vector<Point> fpts;
        for (Index v : face) {
            fpts.push_back(pts[v]);
        }
        Halfspace h;
        try {
            h = hyperplane_through(fpts, pts[opposite.front()]);
        } catch (const DegenerateError&) {
            fail(rep.boundary_ok, "degenerate boundary simplex");
            continue;
        }
        const bool supporting =
            std::all_of(pts.begin(), pts.end(), [&](const Point& q) { return evaluate(h, q).sign() >= 0; });
        if (!supporting) {
            fail(rep.boundary_ok, "boundary simplex not on a supporting hyperplane");
        } else if (!facet_set.empty() && !facet_set.contains(h)) {
            fail(rep.boundary_ok, "boundary simplex on a hyperplane that is not a facet");
        }
    }

    if (d == 0) {
        rep.hull_volume = 0;
    } else {
        rep.hull_volume = hull_volume(pts);
    }
    if (rep.volume_total != rep.hull_volume) {
        fail(rep.cover_ok, "cell volumes sum to " + rep.volume_total.str() + ", hull volume is " +
                               rep.hull_volume.str());
    }
    if (!rep.cells_ok) {
        rep.cover_ok = false;
    }
    return rep;
}

}  // namespace bbhull
