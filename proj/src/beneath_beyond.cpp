#include "bbhull/beneath_beyond.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace bbhull {

// ---------------------------------------------------------------------------
// Orders

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased and platform independent.
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t r = 0;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

std::vector<Index> without(const std::vector<Index>& s, std::size_t pos) {
    std::vector<Index> out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != pos) {
            out.push_back(s[j]);
        }
    }
    return out;
}

std::vector<Index> with(std::vector<Index> s, Index v) {
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    return s;
}

void insert_sorted(std::vector<Index>& s, Index v) {
    const auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) {
        s.insert(it, v);
    }
}

}  // namespace

std::vector<Index> random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

std::vector<Index> InsertionOrder::permutation(std::span<const Point> points) const {
    std::vector<Index> perm(points.size());
    std::iota(perm.begin(), perm.end(), Index{0});
    switch (kind) {
        case OrderKind::given:
            break;
        case OrderKind::random:
            perm = random_permutation(points.size(), seed);
            break;
        case OrderKind::lexicographic:
            std::stable_sort(perm.begin(), perm.end(), [&](Index a, Index b) { return points[a] < points[b]; });
            break;
    }
    return perm;
}

std::string InsertionOrder::describe() const {
    switch (kind) {
        case OrderKind::given:
            return "given";
        case OrderKind::random:
            return "random";
        case OrderKind::lexicographic:
            return "lex";
    }
    return "?";
}

bool HullStats::satisfies_bounds(std::size_t d) const {
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (k > 0 && steps[k].cells < steps[k - 1].cells) {
            return false;
        }
        if (steps[k].facets > (d + 1) * steps[k].cells) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// HullState

std::size_t HullState::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Index v : k) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

HullState HullState::initial_simplex(std::vector<Point> points, std::vector<Index> order) {
    if (points.empty()) {
        throw DegenerateError("no points to place");
    }
    HullState st;
    st.dim_ = points.front().size();
    if (st.dim_ == 0) {
        throw DegenerateError("hull engine needs dimension at least 1");
    }
    st.points_ = std::move(points);
    st.homogeneous_.reserve(st.points_.size());
    for (const auto& p : st.points_) {
        if (p.size() != st.dim_) {
            throw DimensionError("points of different dimensions");
        }
        st.homogeneous_.push_back(homogenize(p));
    }

    AffineSpanBuilder span(st.dim_);
    std::vector<Index> chosen;
    std::vector<Index> deferred;
    std::size_t pos = 0;
    for (; pos < order.size() && chosen.size() < st.dim_ + 1; ++pos) {
        const Index i = order[pos];
        if (span.add(st.points_.at(i))) {
            chosen.push_back(i);
        } else {
            deferred.push_back(i);
        }
    }
    if (chosen.size() < st.dim_ + 1) {
        throw DegenerateError("points do not span their ambient space");
    }
    st.pending_ = std::move(deferred);
    st.pending_.insert(st.pending_.end(), order.begin() + static_cast<std::ptrdiff_t>(pos), order.end());

    std::vector<Index> cell = chosen;
    std::sort(cell.begin(), cell.end());
    for (std::size_t j = 0; j < cell.size(); ++j) {
        std::vector<Index> face = without(cell, j);
        IntMatrix rows;
        for (Index v : face) {
            rows.push_back(st.homogeneous_[v]);
        }
        IntVector coeffs = kernel_vector(std::move(rows));
        if (sgn(dot(coeffs, st.homogeneous_[cell[j]])) < 0) {
            for (auto& c : coeffs) {
                c = -c;
            }
        }
        const FacetId f = st.new_facet(std::move(coeffs));
        st.facets_[f].facet.incident = face;
        st.add_boundary(std::move(face), f);
    }
    st.placed_.assign(st.points_.size(), 0);
    for (Index v : cell) {
        st.placed_[v] = 1;
    }
    st.cells_.push_back(Simplex{cell});
    st.inserted_ = chosen.size();
    st.record_step(1);
    return st;
}

FacetId HullState::new_facet(IntVector coeffs) {
    FacetId id = 0;
    if (!free_facets_.empty()) {
        id = free_facets_.back();
        free_facets_.pop_back();
    } else {
        id = static_cast<FacetId>(facets_.size());
        facets_.emplace_back();
    }
    FacetSlot& slot = facets_[id];
    slot.facet.halfspace = Halfspace::from_integer_coefficients(coeffs);
    slot.facet.incident.clear();
    slot.facet.alive = true;
    slot.coeffs = std::move(coeffs);
    slot.cells.clear();
    slot.stamp = 0;
    slot.sign = 0;
    slot.violated = false;
    ++live_facet_count_;
    return id;
}

void HullState::retire_facet(FacetId f) {
    FacetSlot& slot = facets_[f];
    slot.facet.alive = false;
    slot.facet.incident.clear();
    slot.cells.clear();
    slot.violated = false;
    free_facets_.push_back(f);
    --live_facet_count_;
}

BoundaryId HullState::add_boundary(std::vector<Index> simplex, FacetId owner) {
    BoundaryId id = 0;
    if (!free_boundary_.empty()) {
        id = free_boundary_.back();
        free_boundary_.pop_back();
    } else {
        id = static_cast<BoundaryId>(boundary_.size());
        boundary_.emplace_back();
    }
    for (std::size_t j = 0; j < simplex.size(); ++j) {
        auto [it, inserted] = ridges_.try_emplace(without(simplex, j), RidgeEntry{kNone, kNone});
        RidgeEntry& e = it->second;
        if (e[0] == kNone) {
            e[0] = id;
        } else if (e[1] == kNone) {
            e[1] = id;
        } else {
            throw std::logic_error("ridge shared by more than two boundary cells");
        }
    }
    BoundarySlot& slot = boundary_[id];
    slot.simplex = std::move(simplex);
    slot.owner = owner;
    slot.alive = true;
    facets_[owner].cells.push_back(id);
    return id;
}

void HullState::remove_boundary(BoundaryId b) {
    BoundarySlot& slot = boundary_[b];
    for (std::size_t j = 0; j < slot.simplex.size(); ++j) {
        const auto it = ridges_.find(without(slot.simplex, j));
        RidgeEntry& e = it->second;
        if (e[0] == b) {
            e[0] = e[1];
        }
        e[1] = kNone;
        if (e[0] == kNone) {
            ridges_.erase(it);
        }
    }
    slot.alive = false;
    slot.simplex.clear();
    free_boundary_.push_back(b);
}

BoundaryId HullState::across(BoundaryId b, const Key& ridge) const {
    const RidgeEntry& e = ridges_.at(ridge);
    return e[0] == b ? e[1] : e[0];
}

void HullState::record_step(std::size_t created) {
    stats_.steps.push_back({inserted_, live_facet_count_, cells_.size(), created});
    stats_.simplices_created += created;
    stats_.star_of_last = created;
}

std::vector<FacetId> HullState::find_violated(const Point& x, SearchMode mode) {
    if (x.size() != dim_) {
        throw DimensionError("find_violated: point of wrong dimension");
    }
    const IntVector hx = homogenize(x);
    ++stamp_;
    std::vector<FacetId> violated;
    auto evaluate_once = [&](FacetId f) {
        FacetSlot& s = facets_[f];
        if (s.stamp != stamp_) {
            s.stamp = stamp_;
            s.sign = sgn(dot(s.coeffs, hx));
            ++stats_.evaluations;
        }
        return s.sign;
    };

    if (mode == SearchMode::full_scan) {
        for (FacetId f = 0; f < facets_.size(); ++f) {
            if (facets_[f].facet.alive && evaluate_once(f) < 0) {
                violated.push_back(f);
            }
        }
        return violated;
    }

    FacetId seed = static_cast<FacetId>(facets_.size());
    for (FacetId f = 0; f < facets_.size(); ++f) {
        if (facets_[f].facet.alive && evaluate_once(f) < 0) {
            seed = f;
            break;
        }
    }
    if (seed == facets_.size()) {
        return violated;
    }
    // Breadth-first search over facets adjacent through boundary ridges.
    std::deque<FacetId> queue{seed};
    while (!queue.empty()) {
        const FacetId f = queue.front();
        queue.pop_front();
        violated.push_back(f);
        for (BoundaryId b : facets_[f].cells) {
            const auto& simplex = boundary_[b].simplex;
            for (std::size_t j = 0; j < simplex.size(); ++j) {
                const BoundaryId other = across(b, without(simplex, j));
                const FacetId g = boundary_[other].owner;
                if (facets_[g].stamp != stamp_ && evaluate_once(g) < 0) {
                    queue.push_back(g);
                }
            }
        }
    }
    std::sort(violated.begin(), violated.end());
    return violated;
}

void HullState::place_next() {
    if (!has_pending()) {
        throw std::logic_error("no pending points");
    }
    place(pending_[next_++]);
}

Index HullState::place_point(const Point& x) {
    if (x.size() != dim_) {
        throw DimensionError("place_point: point of wrong dimension");
    }
    points_.push_back(x);
    homogeneous_.push_back(homogenize(x));
    placed_.push_back(0);
    const auto i = static_cast<Index>(points_.size() - 1);
    place(i);
    return i;
}

void HullState::place(Index i) {
    ++inserted_;
    placed_.at(i) = 1;
    const std::vector<FacetId> violated = find_violated(points_.at(i), search_mode);

    if (violated.empty()) {
        // Absorbed: P_{k+1} = P_k. Every live facet was evaluated by the scan.
        for (FacetId f = 0; f < facets_.size(); ++f) {
            FacetSlot& s = facets_[f];
            if (s.facet.alive && s.stamp == stamp_ && s.sign == 0) {
                insert_sorted(s.facet.incident, i);
            }
        }
        record_step(0);
        return;
    }

    for (FacetId f : violated) {
        facets_[f].violated = true;
    }

    struct Horizon {
        Key ridge;
        FacetId neighbor;
        FacetId from;
        Index opposite;
    };
    std::vector<Horizon> horizon;
    std::size_t created = 0;
    for (FacetId f : violated) {
        for (BoundaryId b : facets_[f].cells) {
            const auto& simplex = boundary_[b].simplex;
            cells_.push_back(Simplex{with(simplex, i)});
            ++created;
            for (std::size_t j = 0; j < simplex.size(); ++j) {
                Key ridge = without(simplex, j);
                const FacetId g = boundary_[across(b, ridge)].owner;
                if (!facets_[g].violated) {
                    horizon.push_back({std::move(ridge), g, f, simplex[j]});
                }
            }
        }
    }
    for (FacetId f : violated) {
        for (BoundaryId b : facets_[f].cells) {
            remove_boundary(b);
        }
    }

    // Cone every horizon ridge to the new point. A cone lying in the
    // hyperplane of the neighbouring facet extends that facet; the others are
    // grouped by their normalized hyperplane into new facets.
    std::map<IntVector, FacetId> fresh;
    std::map<FacetId, std::vector<FacetId>> sources;
    std::vector<FacetId> merged;
    for (auto& h : horizon) {
        std::vector<Index> face = with(h.ridge, i);
        FacetId owner = 0;
        const FacetSlot& neighbor = facets_[h.neighbor];
        if (neighbor.stamp != stamp_) {
            throw std::logic_error("horizon neighbour was not evaluated");
        }
        if (neighbor.sign == 0) {
            owner = h.neighbor;
            merged.push_back(owner);
        } else {
            IntMatrix rows;
            rows.reserve(face.size());
            for (Index v : face) {
                rows.push_back(homogeneous_[v]);
            }
            IntVector coeffs = kernel_vector(std::move(rows));
            if (coeffs.empty()) {
                throw std::logic_error("degenerate boundary cell");
            }
            if (sgn(dot(coeffs, homogeneous_[h.opposite])) < 0) {
                for (auto& c : coeffs) {
                    c = -c;
                }
            }
            const auto it = fresh.find(coeffs);
            if (it == fresh.end()) {
                owner = new_facet(coeffs);
                fresh.emplace(std::move(coeffs), owner);
            } else {
                owner = it->second;
            }
            sources[owner].push_back(h.from);
        }
        add_boundary(std::move(face), owner);
    }

    for (FacetId g : merged) {
        insert_sorted(facets_[g].facet.incident, i);
    }
    for (auto& [owner, from] : sources) {
        std::sort(from.begin(), from.end());
        from.erase(std::unique(from.begin(), from.end()), from.end());
        FacetSlot& s = facets_[owner];
        std::vector<Index> incident{i};
        for (FacetId f : from) {
            for (Index p : facets_[f].facet.incident) {
                ++stats_.evaluations;
                if (sgn(dot(s.coeffs, homogeneous_[p])) == 0) {
                    incident.push_back(p);
                }
            }
        }
        std::sort(incident.begin(), incident.end());
        incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
        s.facet.incident = std::move(incident);
    }
    for (FacetId f : violated) {
        retire_facet(f);
    }
    record_step(created);
}

std::vector<FacetId> HullState::live_facets() const {
    std::vector<FacetId> out;
    for (FacetId f = 0; f < facets_.size(); ++f) {
        if (facets_[f].facet.alive) {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<BoundaryCell> HullState::boundary() const {
    std::vector<BoundaryCell> out;
    for (const auto& b : boundary_) {
        if (b.alive) {
            out.push_back({Simplex{b.simplex}, b.owner, true});
        }
    }
    return out;
}

Triangulation HullState::triangulation() const {
    return Triangulation{points_, cells_, dim_};
}

std::vector<std::string> HullState::verify() const {
    std::vector<std::string> problems;
    auto report = [&](const std::string& what) {
        if (problems.size() < 50) {
            problems.push_back(what);
        }
    };

    std::vector<Index> placed;
    for (Index p = 0; p < placed_.size(); ++p) {
        if (placed_[p] != 0) {
            placed.push_back(p);
        }
    }

    for (FacetId f = 0; f < facets_.size(); ++f) {
        const FacetSlot& s = facets_[f];
        if (!s.facet.alive) {
            continue;
        }
        std::vector<Index> on;
        for (Index p : placed) {
            const int sg = sgn(dot(s.coeffs, homogeneous_[p]));
            if (sg < 0) {
                report("facet " + std::to_string(f) + " violated by inserted point " + std::to_string(p));
            } else if (sg == 0) {
                on.push_back(p);
            }
        }
        if (on != s.facet.incident) {
            report("facet " + std::to_string(f) + " has a stale incidence set");
        }
        AffineSpanBuilder span(dim_);
        for (Index p : on) {
            span.add(points_[p]);
        }
        if (on.empty() || span.dim() + 1 != dim_) {
            report("facet " + std::to_string(f) + " incidences do not span a hyperplane");
        }
        for (BoundaryId b : s.cells) {
            if (!boundary_[b].alive || boundary_[b].owner != f) {
                report("facet " + std::to_string(f) + " lists a foreign boundary cell");
            }
        }
    }

    std::map<std::vector<Index>, int> face_count;
    for (const auto& c : cells_) {
        for (std::size_t j = 0; j < c.vertices.size(); ++j) {
            ++face_count[without(c.vertices, j)];
        }
    }
    std::set<std::vector<Index>> boundary_faces;
    for (const auto& b : boundary_) {
        if (!b.alive) {
            continue;
        }
        boundary_faces.insert(b.simplex);
        const FacetSlot& owner = facets_[b.owner];
        if (!owner.facet.alive) {
            report("boundary cell owned by a dead facet");
            continue;
        }
        for (Index v : b.simplex) {
            if (sgn(dot(owner.coeffs, homogeneous_[v])) != 0) {
                report("boundary cell vertex off its owner hyperplane");
            }
        }
        for (std::size_t j = 0; j < b.simplex.size(); ++j) {
            const auto it = ridges_.find(without(b.simplex, j));
            if (it == ridges_.end() || it->second[0] == kNone || it->second[1] == kNone) {
                report("open ridge in the boundary");
            }
        }
    }
    for (const auto& [face, count] : face_count) {
        const bool on_boundary = boundary_faces.count(face) != 0;
        if (count > 2 || (count == 2 && on_boundary) || (count == 1 && !on_boundary)) {
            report("face shared by " + std::to_string(count) + " cells, boundary=" + std::to_string(on_boundary));
        }
    }
    if (boundary_faces.size() + free_boundary_.size() != boundary_.size()) {
        report("boundary slot bookkeeping mismatch");
    }
    return problems;
}

// ---------------------------------------------------------------------------
// Drivers

std::vector<Index> vertices_from_facets(std::span<const Point> points, std::span<const Halfspace> facets,
                                        std::size_t dim) {
    std::vector<IntVector> coeffs;
    coeffs.reserve(facets.size());
    for (const auto& h : facets) {
        Vector all{h.offset};
        all.insert(all.end(), h.normal.begin(), h.normal.end());
        coeffs.push_back(clear_denominators(all));
    }
    std::vector<Index> out;
    for (Index i = 0; i < points.size(); ++i) {
        const IntVector hp = homogenize(points[i]);
        std::vector<Vector> normals;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (sgn(dot(coeffs[f], hp)) == 0) {
                normals.push_back(facets[f].normal);
            }
        }
        if (normals.size() < dim) {
            continue;
        }
        if (gauss_rank(Matrix::from_rows(normals)).rank == dim) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

std::vector<Index> first_occurrences(std::span<const Point> points) {
    std::map<Point, Index> first;
    std::vector<Index> canon(points.size());
    for (Index i = 0; i < points.size(); ++i) {
        canon[i] = first.try_emplace(points[i], i).first->second;
    }
    return canon;
}

void check_point_list(std::span<const Point> points) {
    if (points.empty()) {
        throw DegenerateError("convex hull of an empty point set");
    }
    const std::size_t d = points.front().size();
    for (const auto& p : points) {
        if (p.size() != d) {
            throw DimensionError("points of different dimensions");
        }
    }
}

}  // namespace

HullResult convex_hull(std::span<const Point> points, const InsertionOrder& order) {
    check_point_list(points);
    const auto perm = order.permutation(points);
    return convex_hull(points, perm);
}

HullResult convex_hull(std::span<const Point> points, std::span<const Index> permutation) {
    check_point_list(points);
    if (permutation.size() != points.size()) {
        throw DimensionError("permutation length does not match point count");
    }
    const std::vector<Index> canon = first_occurrences(points);
    Projection proj = project_to_span(points);
    const std::size_t dim = proj.embedding.dim();

    HullResult result;
    Polytope& poly = result.polytope;
    poly.ambient_dim = points.front().size();
    poly.points.assign(points.begin(), points.end());
    poly.affine_hull = proj.embedding.equations;
    poly.dim = dim;
    result.triangulation.points = poly.points;
    result.triangulation.dim = dim;

    if (dim == 0) {
        poly.vertex_indices = {0};
        result.triangulation.cells = {Simplex{{0}}};
        result.stats.steps.push_back({points.size(), 0, 1, 1});
        result.stats.simplices_created = 1;
        result.stats.star_of_last = 1;
        return result;
    }

    std::vector<Index> order;
    order.reserve(permutation.size());
    for (Index i : permutation) {
        order.push_back(canon.at(i));
    }
    HullState state = HullState::initial_simplex(proj.points, std::move(order));
    while (state.has_pending()) {
        state.place_next();
    }

    std::vector<Halfspace> local;
    for (FacetId f : state.live_facets()) {
        local.push_back(state.facet(f).halfspace);
    }
    std::sort(local.begin(), local.end());
    std::vector<Index> vertices = vertices_from_facets(proj.points, local, dim);
    std::erase_if(vertices, [&](Index i) { return canon[i] != i; });
    poly.vertex_indices = vertices;

    std::vector<Halfspace> lifted;
    lifted.reserve(local.size());
    for (const auto& h : local) {
        lifted.push_back(proj.embedding.is_identity() ? h : proj.embedding.lift(h));
    }
    // Lifting preserves the order only up to the inserted zeros; re-sort.
    std::vector<std::size_t> idx(lifted.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lifted[a] < lifted[b]; });
    for (std::size_t k : idx) {
        FacetRecord rec{lifted[k], {}};
        for (Index v : vertices) {
            if (evaluate(local[k], proj.points[v]).is_zero()) {
                rec.vertices.push_back(v);
            }
        }
        poly.facets.push_back(std::move(rec));
    }

    result.triangulation.cells = state.cells();
    result.stats = state.stats();
    return result;
}

std::vector<Halfspace> extract_facets(const Triangulation& t, std::span<const Point> points) {
    if (points.empty()) {
        return {};
    }
    Projection proj = project_to_span(points);
    const std::size_t d = proj.embedding.dim();
    if (d == 0) {
        return {};
    }
    std::vector<IntVector> hom;
    hom.reserve(proj.points.size());
    for (const auto& p : proj.points) {
        hom.push_back(homogenize(p));
    }
    std::set<std::vector<Index>> seen;
    std::set<Halfspace> found;
    for (const auto& cell : t.cells) {
        if (cell.vertices.size() != d + 1) {
            throw DegenerateError("extract_facets: cell of wrong dimension");
        }
        for (std::size_t j = 0; j <= d; ++j) {
            std::vector<Index> face = without(cell.vertices, j);
            if (!seen.insert(face).second) {
                continue;
            }
            std::vector<Point> pts;
            for (Index v : face) {
                pts.push_back(proj.points[v]);
            }
            const Halfspace h = hyperplane_through(pts, proj.points[cell.vertices[j]]);
            const IntVector c = h.integer_coefficients();
            const bool separates =
                std::any_of(hom.begin(), hom.end(), [&](const IntVector& x) { return sgn(dot(c, x)) < 0; });
            if (!separates) {
                found.insert(h);
            }
        }
    }
    std::vector<Halfspace> out;
    for (const auto& h : found) {
        out.push_back(proj.embedding.is_identity() ? h : proj.embedding.lift(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CaratheodoryResult caratheodory(std::span<const Point> points, const Point& p, const InsertionOrder& order) {
    const HullResult hull = convex_hull(points, order);
    if (p.size() != hull.polytope.ambient_dim) {
        throw DimensionError("caratheodory: query point of wrong dimension");
    }
    for (const auto& eq : hull.polytope.affine_hull) {
        const Rational v = evaluate(eq, p);
        if (!v.is_zero()) {
            Halfspace w = eq;
            if (v.sign() > 0) {
                w.offset = -w.offset;
                for (auto& a : w.normal) {
                    a = -a;
                }
            }
            throw OutsideHullError(w, -v.abs());
        }
    }
    for (const auto& f : hull.polytope.facets) {
        const Rational v = evaluate(f.halfspace, p);
        if (v.sign() < 0) {
            throw OutsideHullError(f.halfspace, v);
        }
    }

    const Projection proj = project_to_span(points);
    const std::size_t d = proj.embedding.dim();
    const Point q = proj.embedding.project(p);
    for (const auto& cell : hull.triangulation.cells) {
        Matrix a(d + 1, d + 1);
        Vector b(d + 1);
        for (std::size_t j = 0; j <= d; ++j) {
            const Point& v = proj.points[cell.vertices[j]];
            for (std::size_t c = 0; c < d; ++c) {
                a(c, j) = v[c];
            }
            a(d, j) = 1;
        }
        for (std::size_t c = 0; c < d; ++c) {
            b[c] = q[c];
        }
        b[d] = 1;
        SolveResult s = solve_linear(a, b);
        if (s.status != SolveStatus::unique) {
            throw std::logic_error("degenerate cell in placing triangulation");
        }
        if (std::all_of(s.solution.begin(), s.solution.end(), [](const Rational& x) { return x.sign() >= 0; })) {
            return {cell.vertices, std::move(s.solution)};
        }
    }
    throw std::logic_error("point inside the hull but in no cell");
}

std::vector<Point> vertices_via_polarity(std::span<const Halfspace> halfspaces, const Point& interior) {
    const std::vector<Point> dual = polar(halfspaces, interior);
    const HullResult hull = convex_hull(dual);
    const std::size_t d = interior.size();
    if (hull.polytope.dim != d) {
        throw DegenerateError("halfspaces do not describe a bounded polytope");
    }
    const Point origin(d, Rational(0));
    for (const auto& f : hull.polytope.facets) {
        if (evaluate(f.halfspace, origin).sign() <= 0) {
            throw DegenerateError("halfspaces do not describe a bounded polytope");
        }
    }
    std::vector<Point> out;
    for (const auto& v : polar(hull.polytope.halfspaces(), origin)) {
        out.push_back(translate(v, interior));
    }
    return out;
}

}  // namespace bbhull
