#include "cedga/diagram.hpp"
#include "cedga/error.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <optional>

namespace cedga {

namespace {

int find_end(const Crossing& c, CrossingEnd e) {
    for (int k = 0; k < 4; ++k)
        if (c.ends[k] == e)
            return k;
    return -1;
}

void check_crossing(const Crossing& c) {
    if (c.length <= 0)
        throw Error(ErrorCode::NonPositiveLength, "crossing '" + c.name + "' has non-positive length");
    int over_out = find_end(c, {Strand::Over, Direction::Out});
    int over_in = find_end(c, {Strand::Over, Direction::In});
    int under_out = find_end(c, {Strand::Under, Direction::Out});
    int under_in = find_end(c, {Strand::Under, Direction::In});
    if (over_out < 0 || over_in < 0 || under_out < 0 || under_in < 0)
        throw Error(ErrorCode::InvalidDiagram, "crossing '" + c.name + "' must list each strand end exactly once");
    if ((over_out + 2) % 4 != over_in || (under_out + 2) % 4 != under_in)
        throw Error(ErrorCode::InvalidDiagram, "crossing '" + c.name + "' is not transverse (strand ends not opposite)");
}

} // namespace

PlanarStructure planar_structure(const LagrangianDiagram& d) {
    if (d.components.size() != 1)
        throw Error(ErrorCode::MultiComponent,
                    "diagram '" + d.name + "' has " + std::to_string(d.components.size()) + " components");
    const std::size_t n = d.crossings.size();
    if (n == 0)
        throw Error(ErrorCode::InvalidDiagram, "diagram '" + d.name + "' has no crossings");
    for (const Crossing& c : d.crossings)
        check_crossing(c);
    const auto& visits = d.components.front();
    const std::size_t m = visits.size();
    if (m != 2 * n)
        throw Error(ErrorCode::InvalidDiagram, "traversal must visit every crossing twice");

    std::vector<std::array<int, 2>> visit_of(n, {-1, -1});
    for (std::size_t v = 0; v < m; ++v) {
        const Visit& vis = visits[v];
        if (vis.crossing >= n)
            throw Error(ErrorCode::InvalidDiagram, "traversal names an unknown crossing");
        int& slot = visit_of[vis.crossing][vis.strand == Strand::Over ? 0 : 1];
        if (slot >= 0)
            throw Error(ErrorCode::InvalidDiagram,
                        "crossing '" + d.crossings[vis.crossing].name + "' visited twice on the same strand");
        slot = static_cast<int>(v);
    }

    PlanarStructure ps;
    ps.num_edges = m;
    const std::size_t darts = 2 * m;
    ps.dart_leave_pos.assign(darts, 0);
    ps.dart_arrive_pos.assign(darts, 0);
    ps.dart_leave_crossing.assign(darts, 0);
    ps.dart_arrive_crossing.assign(darts, 0);
    ps.leave_dart.assign(n, {-1, -1, -1, -1});
    for (std::size_t e = 0; e < m; ++e) {
        const Visit& a = visits[e];
        const Visit& b = visits[(e + 1) % m];
        int out_pos = find_end(d.crossings[a.crossing], {a.strand, Direction::Out});
        int in_pos = find_end(d.crossings[b.crossing], {b.strand, Direction::In});
        std::size_t fwd = 2 * e, bwd = 2 * e + 1;
        ps.dart_leave_crossing[fwd] = a.crossing;
        ps.dart_leave_pos[fwd] = static_cast<std::uint8_t>(out_pos);
        ps.dart_arrive_crossing[fwd] = b.crossing;
        ps.dart_arrive_pos[fwd] = static_cast<std::uint8_t>(in_pos);
        ps.dart_leave_crossing[bwd] = b.crossing;
        ps.dart_leave_pos[bwd] = static_cast<std::uint8_t>(in_pos);
        ps.dart_arrive_crossing[bwd] = a.crossing;
        ps.dart_arrive_pos[bwd] = static_cast<std::uint8_t>(out_pos);
        ps.leave_dart[a.crossing][out_pos] = static_cast<int>(fwd);
        ps.leave_dart[b.crossing][in_pos] = static_cast<int>(bwd);
    }

    ps.dart_next.assign(darts, -1);
    for (std::size_t t = 0; t < darts; ++t) {
        std::size_t c = ps.dart_arrive_crossing[t];
        int pos = (ps.dart_arrive_pos[t] + 3) % 4;
        ps.dart_next[t] = ps.leave_dart[c][pos];
    }

    ps.dart_face.assign(darts, -1);
    int faces = 0;
    for (std::size_t t = 0; t < darts; ++t) {
        if (ps.dart_face[t] >= 0)
            continue;
        std::size_t u = t;
        while (ps.dart_face[u] < 0) {
            ps.dart_face[u] = faces;
            u = static_cast<std::size_t>(ps.dart_next[u]);
        }
        if (u != t)
            throw Error(ErrorCode::NonPlanar, "face tracing did not close up");
        ++faces;
    }
    ps.num_faces = static_cast<std::size_t>(faces);
    if (ps.num_faces != n + 2)
        throw Error(ErrorCode::NonPlanar, "rotation system of '" + d.name + "' has genus > 0 (V-E+F = " +
                                              std::to_string(static_cast<long>(n) - static_cast<long>(m) + faces) +
                                              ")");

    ps.quadrant_face.assign(n, {});
    ps.quadrant_positive.assign(n, {});
    ps.face_area.assign(ps.num_faces, Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
        for (int k = 0; k < 4; ++k) {
            int f = ps.dart_face[ps.leave_dart[c][k]];
            bool pos = d.crossings[c].ends[k].strand == Strand::Over &&
                       d.crossings[c].ends[(k + 1) % 4].strand == Strand::Under;
            ps.quadrant_face[c][k] = f;
            ps.quadrant_positive[c][k] = pos;
            ps.face_area[f] += pos ? d.crossings[c].length : -d.crossings[c].length;
        }
    }

    if (d.outer_edge >= m || d.base_point_edge >= m)
        throw Error(ErrorCode::InvalidDiagram, "outer face or base point edge out of range");
    ps.outer_face = ps.dart_face[2 * d.outer_edge + (d.outer_on_right ? 1 : 0)];

    std::vector<std::optional<int>> w(ps.num_faces);
    w[ps.outer_face] = 0;
    std::deque<int> queue{ps.outer_face};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < m; ++e) {
            int l = ps.left_face(e), r = ps.right_face(e);
            if (r == f && !w[l]) {
                w[l] = *w[f] + 1;
                queue.push_back(l);
            } else if (l == f && !w[r]) {
                w[r] = *w[f] - 1;
                queue.push_back(r);
            }
        }
    }
    ps.face_winding.assign(ps.num_faces, 0);
    for (std::size_t f = 0; f < ps.num_faces; ++f)
        ps.face_winding[f] = *w[f];
    for (std::size_t e = 0; e < m; ++e)
        if (ps.face_winding[ps.left_face(e)] != ps.face_winding[ps.right_face(e)] + 1)
            throw Error(ErrorCode::NonPlanar, "winding numbers are inconsistent");

    for (std::size_t f = 0; f < ps.num_faces; ++f)
        if (static_cast<int>(f) != ps.outer_face && ps.face_area[f] <= 0)
            throw Error(ErrorCode::InvalidDiagram, "bounded face " + std::to_string(f) + " of '" + d.name +
                                                       "' has non-positive area " + format_rational(ps.face_area[f]) +
                                                       "; crossing lengths are inconsistent");
    return ps;
}

int rotation_number(const PlanarStructure& ps) {
    int faces = 0;
    for (std::size_t f = 0; f < ps.num_faces; ++f)
        faces += ps.face_winding[f];
    int corners = 0;
    for (const auto& q : ps.quadrant_face)
        for (int f : q)
            corners += ps.face_winding[f];
    return faces - corners / 4;
}

int rotation_number(const LagrangianDiagram& d) { return rotation_number(planar_structure(d)); }

DiagramReport validate_diagram(const LagrangianDiagram& d) {
    PlanarStructure ps = planar_structure(d);
    DiagramReport r;
    r.crossings = d.crossings.size();
    r.edges = ps.num_edges;
    r.faces = ps.num_faces;
    r.rotation = rotation_number(ps);
    for (std::size_t f = 0; f < ps.num_faces; ++f)
        if (static_cast<int>(f) != ps.outer_face)
            r.bounded_face_areas.push_back(ps.face_area[f]);
    return r;
}

LagrangianDiagram reversed(const LagrangianDiagram& d) {
    LagrangianDiagram r = d;
    for (Crossing& c : r.crossings)
        for (CrossingEnd& e : c.ends)
            e.dir = e.dir == Direction::Out ? Direction::In : Direction::Out;
    for (auto& comp : r.components)
        std::reverse(comp.begin(), comp.end());
    const std::size_t m = d.components.empty() ? 0 : d.components.front().size();
    if (m > 0) {
        r.outer_edge = (2 * m - 2 - d.outer_edge) % m;
        r.outer_on_right = !d.outer_on_right;
        r.base_point_edge = (2 * m - 2 - d.base_point_edge) % m;
    }
    return r;
}

LagrangianDiagram rerooted(const LagrangianDiagram& d, std::size_t shift) {
    LagrangianDiagram r = d;
    if (d.components.empty())
        return r;
    auto& comp = r.components.front();
    const std::size_t m = comp.size();
    shift %= m;
    std::rotate(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(shift), comp.end());
    r.outer_edge = (d.outer_edge + m - shift) % m;
    r.base_point_edge = (d.base_point_edge + m - shift) % m;
    return r;
}

namespace {

struct Search {
    const LagrangianDiagram& d;
    const PlanarStructure& ps;
    const PolygonOptions& opt;
    std::size_t start;
    int start_quadrant = 0;
    std::vector<int> path;
    std::vector<int> dart_count;
    struct Corner {
        std::size_t crossing;
        int quadrant;
    };
    std::vector<Corner> negatives;
    struct Pass {
        std::size_t crossing;
        int arrive;
    };
    std::vector<Pass> passes;
    std::vector<Polygon> found;

    int quadrant_sign(std::size_t c, int q) const {
        const Crossing& x = d.crossings[c];
        if (x.degree % 2 != 0)
            return 1;
        int under_out = find_end(x, {Strand::Under, Direction::Out});
        int under_in = (under_out + 2) % 4;
        int base = opt.shading == ShadingSide::Left ? under_out : under_in;
        return (q == base || q == (base + 1) % 4) ? -1 : 1;
    }

    bool push_dart(int t, const Rational& budget) {
        int f = ps.dart_face[t];
        int count = ++dart_count[t];
        path.push_back(t);
        if (f == ps.outer_face)
            return false;
        if (Rational(count) * ps.face_area[f] > budget)
            return false;
        if (count > opt.multiplicity_cap)
            throw Error(ErrorCode::ResourceLimit,
                        "polygon search at '" + d.crossings[start].name + "' exceeds the multiplicity cap " +
                            std::to_string(opt.multiplicity_cap));
        return true;
    }

    void pop_dart() {
        --dart_count[path.back()];
        path.pop_back();
    }

    void extend(const Rational& budget) {
        int t = path.back();
        std::size_t c = ps.dart_arrive_crossing[t];
        int i = ps.dart_arrive_pos[t];

        int straight = ps.leave_dart[c][(i + 2) % 4];
        passes.push_back({c, i});
        if (push_dart(straight, budget))
            extend(budget);
        pop_dart();
        passes.pop_back();

        int q = (i + 3) % 4;
        int turn = ps.leave_dart[c][q];
        if (c == start && q == start_quadrant) {
            close();
        } else if (!ps.quadrant_positive[c][q]) {
            Rational rest = budget - d.crossings[c].length;
            if (rest > 0) {
                negatives.push_back({c, q});
                if (push_dart(turn, rest))
                    extend(rest);
                pop_dart();
                negatives.pop_back();
            }
        }
    }

    void close() {
        const std::size_t m = ps.num_edges;
        std::vector<int> fwd(m, 0), bwd(m, 0);
        for (int t : path)
            (t % 2 == 0 ? fwd : bwd)[t / 2]++;

        std::vector<int> w(ps.num_faces, 0);
        std::vector<bool> seen(ps.num_faces, false);
        seen[ps.outer_face] = true;
        std::deque<int> queue{ps.outer_face};
        while (!queue.empty()) {
            int f = queue.front();
            queue.pop_front();
            for (std::size_t e = 0; e < m; ++e) {
                int l = ps.left_face(e), r = ps.right_face(e);
                int jump = fwd[e] - bwd[e];
                if (r == f && !seen[l]) {
                    seen[l] = true;
                    w[l] = w[f] + jump;
                    queue.push_back(l);
                } else if (l == f && !seen[r]) {
                    seen[r] = true;
                    w[r] = w[f] - jump;
                    queue.push_back(r);
                }
            }
        }
        for (std::size_t e = 0; e < m; ++e)
            if (w[ps.left_face(e)] - w[ps.right_face(e)] != fwd[e] - bwd[e])
                return;
        long faces = 0;
        for (std::size_t f = 0; f < ps.num_faces; ++f) {
            if (w[f] < 0)
                return;
            faces += w[f];
        }
        long edges = 0;
        for (std::size_t e = 0; e < m; ++e) {
            int interior = w[ps.left_face(e)] - fwd[e];
            if (interior < 0 || w[ps.right_face(e)] - bwd[e] != interior)
                return;
            edges += interior + fwd[e] + bwd[e];
        }
        const std::size_t n = d.crossings.size();
        std::vector<std::array<int, 4>> cover(n, {0, 0, 0, 0});
        std::vector<int> boundary_points(n, 0);
        cover[start][start_quadrant]++;
        boundary_points[start]++;
        for (const Corner& k : negatives) {
            cover[k.crossing][k.quadrant]++;
            boundary_points[k.crossing]++;
        }
        for (const Pass& s : passes) {
            cover[s.crossing][(s.arrive + 3) % 4]++;
            cover[s.crossing][(s.arrive + 2) % 4]++;
            boundary_points[s.crossing]++;
        }
        long vertices = 0;
        for (std::size_t c = 0; c < n; ++c) {
            int k = w[ps.quadrant_face[c][0]] - cover[c][0];
            for (int q = 1; q < 4; ++q)
                if (w[ps.quadrant_face[c][q]] - cover[c][q] != k)
                    return;
            if (k < 0)
                return;
            vertices += k + boundary_points[c];
        }
        if (vertices - edges + faces != 1)
            return;

        Polygon poly;
        poly.positive = start;
        poly.positive_quadrant = start_quadrant;
        poly.boundary = path;
        poly.area = d.crossings[start].length;
        int sign = quadrant_sign(start, start_quadrant);
        for (const Corner& k : negatives) {
            poly.negatives.push_back(k.crossing);
            poly.negative_quadrants.push_back(k.quadrant);
            poly.area -= d.crossings[k.crossing].length;
            sign *= quadrant_sign(k.crossing, k.quadrant);
        }
        poly.sign = sign;
        for (int t : path)
            if (static_cast<std::size_t>(t / 2) == d.base_point_edge)
                poly.mu += (t % 2 == 0) ? 1 : -1;
        found.push_back(std::move(poly));
    }

    void run() {
        dart_count.assign(2 * ps.num_edges, 0);
        const Rational budget = d.crossings[start].length;
        for (int k = 0; k < 4; ++k) {
            if (!ps.quadrant_positive[start][k])
                continue;
            start_quadrant = k;
            if (push_dart(ps.leave_dart[start][k], budget))
                extend(budget);
            pop_dart();
        }
    }
};

NCPoly polygons_to_differential(const std::vector<Polygon>& polys, std::uint32_t p) {
    NCPoly out(p);
    const PrimeField F(p);
    for (const Polygon& poly : polys) {
        Word w(poly.negatives.begin(), poly.negatives.end());
        out.add_term(std::move(w), F.from_int(poly.sign), poly.mu, 0);
    }
    return out;
}

} // namespace

std::vector<Polygon> enumerate_polygons(const LagrangianDiagram& d, const PlanarStructure& ps, std::size_t c,
                                        const PolygonOptions& opt) {
    if (c >= d.crossings.size())
        throw Error(ErrorCode::UndeclaredGenerator, "no crossing with index " + std::to_string(c));
    Search s{d, ps, opt, c, 0, {}, {}, {}, {}, {}};
    s.run();
    return std::move(s.found);
}

DGA chekanov_dga(const LagrangianDiagram& d, const PolygonOptions& opt) {
    PlanarStructure ps = planar_structure(d);
    DGA dga;
    dga.p = opt.p;
    dga.name = d.name;
    for (const Crossing& c : d.crossings)
        dga.add_generator({c.name, c.degree, c.length});
    const auto n = static_cast<std::ptrdiff_t>(d.crossings.size());
    std::vector<std::vector<Polygon>> polys(d.crossings.size());
    std::exception_ptr failure;
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t c = 0; c < n; ++c) {
            try {
                polys[c] = enumerate_polygons(d, ps, static_cast<std::size_t>(c), opt);
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (std::ptrdiff_t c = 0; c < n; ++c)
            polys[c] = enumerate_polygons(d, ps, static_cast<std::size_t>(c), opt);
    }
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        dga.d[c] = polygons_to_differential(polys[c], opt.p);
    return dga;
}

DGA chekanov_dga(const LagrangianDiagram& d, std::uint32_t p) {
    PolygonOptions opt;
    opt.p = p;
    return chekanov_dga(d, opt);
}

GradingReport validate_gradings(const LagrangianDiagram& d, const DGA& dga) {
    GradingReport r;
    if (dga.size() != d.crossings.size()) {
        r.ok = false;
        r.messages.push_back("generator count differs from crossing count");
        return r;
    }
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        if (dga.gens[c].name != d.crossings[c].name || dga.gens[c].degree != d.crossings[c].degree) {
            r.ok = false;
            r.messages.push_back("generator '" + dga.gens[c].name + "' does not match crossing '" +
                                 d.crossings[c].name + "'");
        }
    }
    r.violations = check_degree_law(dga);
    for (const LawViolation& v : r.violations) {
        r.ok = false;
        r.messages.push_back("d(" + dga.gens[v.gen].name + ") contains '" + dga.word_name(v.word) + "' of degree " +
                             std::to_string(dga.word_degree(v.word)) + ", expected " +
                             std::to_string(dga.gens[v.gen].degree - 1));
    }
    return r;
}

} // namespace cedga
