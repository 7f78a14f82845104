#include "altlink/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"

namespace altlink {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Gluing checkerboard_gluing(const CombinatorialPolyhedron& top) {
    Gluing g;
    for (int c : top.face_color) g.face_offset.push_back(c == 0 ? 1 : -1);
    return g;
}

CheckerboardDecomposition checkerboard_polyhedra(const Diagram& d) {
    DiagramAnalysis a = analyze(d);
    if (!a.planar) throw InputError("diagram is not planar");
    if (!a.connected) throw InputError("split diagram has no checkerboard decomposition");
    if (!a.alternating) throw InputError("diagram is not alternating");
    if (!a.reduced) throw InputError("diagram is not reduced");

    std::vector<Face> faces = trace_faces(d);

    CombinatorialPolyhedron p;
    p.vertex_count = d.crossing_count();
    for (int label = 1; label <= d.edge_count(); ++label) {
        auto ends = d.darts_of_edge(label);
        p.edges.push_back({ends[0].crossing, ends[1].crossing});
    }
    for (const Face& face : faces) {
        p.face_edges.push_back(face.edge_labels);
        std::vector<int> vs;
        for (const Dart& dart : face.darts) vs.push_back(dart.crossing);
        p.face_vertices.push_back(std::move(vs));
        if (face.size() < 3) p.has_bigon = true;
    }
    p.face_color = checkerboard_color(d, faces);

    CheckerboardDecomposition dec;
    dec.gluing = checkerboard_gluing(p);
    dec.top = p;
    dec.bottom = std::move(p);
    return dec;
}

std::vector<std::vector<std::pair<int, int>>>
edge_classes(const CombinatorialPolyhedron& top, const Gluing& g) {
    if (g.face_offset.size() != top.face_edges.size())
        throw InternalError("gluing does not pair the polyhedron's faces");

    const int n = static_cast<int>(top.edges.size());
    UnionFind uf(2 * n);
    for (std::size_t f = 0; f < top.face_edges.size(); ++f) {
        const auto& cycle = top.face_edges[f];
        const int k = static_cast<int>(cycle.size());
        const int off = g.face_offset[f];
        for (int i = 0; i < k; ++i) {
            int j = ((i + off) % k + k) % k;
            uf.unite(cycle[i] - 1, n + cycle[j] - 1);
        }
    }

    std::vector<std::vector<std::pair<int, int>>> classes;
    std::vector<int> index_of_root(2 * n, -1);
    for (int side = 0; side < 2; ++side) {
        for (int label = 1; label <= n; ++label) {
            int root = uf.find(side * n + label - 1);
            if (index_of_root[root] < 0) {
                index_of_root[root] = static_cast<int>(classes.size());
                classes.emplace_back();
            }
            classes[index_of_root[root]].push_back({side, label});
        }
    }
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

IdealRealization inscribe_solid(SolidType s, double tol) {
    SolidGeometry geo = solid_geometry(s);
    IdealRealization r;
    r.combinatorics = checkerboard_polyhedra(reference_diagram(s)).top;
    if (r.combinatorics.vertex_count != static_cast<int>(geo.vertices.size()))
        throw InternalError("solid geometry and reference diagram disagree on vertex count");
    if (r.combinatorics.has_bigon)
        throw InternalError("reference polyhedron has a 2-gon face");
    r.vertices = geo.vertices;

    for (const auto& face : r.combinatorics.face_vertices) {
        const int k = static_cast<int>(face.size());
        // Newell normal: exact for planar polygons, robust to vertex noise
        Vec3 u{0.0, 0.0, 0.0};
        for (int i = 0; i < k; ++i) {
            Vec3 c = cross(r.vertices[face[i]], r.vertices[face[(i + 1) % k]]);
            u = {u[0] + c[0], u[1] + c[1], u[2] + c[2]};
        }
        u = scale(u, 1.0 / norm(u));
        double dist = 0.0;
        for (int v : face) dist += dot(r.vertices[v], u);
        dist /= k;
        if (dist < 0.0) {
            u = scale(u, -1.0);
            dist = -dist;
        }
        for (int v : face)
            if (std::abs(dot(r.vertices[v], u) - dist) > tol)
                throw InternalError("face of " + solid_name(s) + " is not planar");
        if (dist >= 1.0 - 1e-12)
            throw InternalError("face plane of " + solid_name(s) + " misses the ball");
        for (int v = 0; v < r.combinatorics.vertex_count; ++v)
            if (dot(r.vertices[v], u) > dist + tol)
                throw InternalError("face plane of " + solid_name(s) + " is not supporting");
        r.face_planes.push_back({u, dist});
    }
    return r;
}

std::vector<double> dihedral_angles(const IdealRealization& r) {
    const int n = static_cast<int>(r.combinatorics.edges.size());
    std::vector<std::vector<int>> faces_of_edge(n);
    for (std::size_t f = 0; f < r.combinatorics.face_edges.size(); ++f)
        for (int label : r.combinatorics.face_edges[f])
            faces_of_edge[label - 1].push_back(static_cast<int>(f));

    std::vector<double> angles(n);
    for (int e = 0; e < n; ++e) {
        if (faces_of_edge[e].size() != 2)
            throw InternalError("edge is not shared by exactly two faces");
        const KleinPlane& p1 = r.face_planes[faces_of_edge[e][0]];
        const KleinPlane& p2 = r.face_planes[faces_of_edge[e][1]];
        if (p1.dist >= 1.0 || p2.dist >= 1.0)
            throw InternalError("face plane misses the ball");
        // Minkowski inner product of the outward unit normals (u, d)/sqrt(1-d^2)
        double inner = (dot(p1.unit, p2.unit) - p1.dist * p2.dist) /
                       std::sqrt((1.0 - p1.dist * p1.dist) * (1.0 - p2.dist * p2.dist));
        angles[e] = std::acos(std::clamp(-inner, -1.0, 1.0));
    }
    return angles;
}

std::vector<double> face_residuals(const IdealRealization& r) {
    std::vector<double> res;
    for (const auto& face : r.combinatorics.face_vertices) {
        std::vector<ExtendedComplex> vs;
        for (int v : face) vs.push_back(klein_to_boundary(r.vertices[v]));
        res.push_back(regularity_residual(IdealPolygon(std::move(vs))));
    }
    return res;
}

double face_regularity_residual(const IdealRealization& r) {
    double worst = 0.0;
    for (double x : face_residuals(r)) worst = std::max(worst, x);
    return worst;
}

bool verify_face_regularity(const IdealRealization& r, double tol) {
    return face_regularity_residual(r) <= tol;
}

std::vector<CuspSection> cusp_sections(const IdealRealization& r) {
    const int nv = r.combinatorics.vertex_count;
    std::vector<std::vector<int>> neighbors(nv);
    for (const auto& e : r.combinatorics.edges) {
        neighbors[e[0]].push_back(e[1]);
        neighbors[e[1]].push_back(e[0]);
    }

    std::vector<CuspSection> sections;
    for (int v = 0; v < nv; ++v) {
        if (neighbors[v].size() != 4)
            throw InternalError("ideal vertex is not 4-valent");
        // order the neighbors by angle in the tangent plane at the vertex
        const Vec3& p = r.vertices[v];
        Vec3 ref = std::abs(p[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        Vec3 u1 = cross(p, ref);
        u1 = scale(u1, 1.0 / norm(u1));
        Vec3 u2 = cross(p, u1);
        std::sort(neighbors[v].begin(), neighbors[v].end(), [&](int a, int b) {
            Vec3 da = sub(r.vertices[a], p);
            Vec3 db = sub(r.vertices[b], p);
            return std::atan2(dot(da, u2), dot(da, u1)) <
                   std::atan2(dot(db, u2), dot(db, u1));
        });

        // send the vertex to ∞: incident faces become vertical planes, and the
        // cusp quadrilateral's corners sit over the images of the neighbors
        std::array<ExtendedComplex, 4> nb;
        for (int i = 0; i < 4; ++i) nb[i] = klein_to_boundary(r.vertices[neighbors[v][i]]);
        MobiusMap m = mobius_from_triple(nb[0], nb[1], klein_to_boundary(p));

        CuspSection c;
        c.vertex = v;
        for (int i = 0; i < 4; ++i) c.corners[i] = m.apply(nb[i]).value();
        for (int i = 0; i < 4; ++i) {
            Complex to_next = c.corners[(i + 1) % 4] - c.corners[i];
            Complex to_prev = c.corners[(i + 3) % 4] - c.corners[i];
            c.side_lengths[i] = std::abs(to_next);
            c.interior_angles[i] = std::abs(std::arg(to_next / to_prev));
        }
        sections.push_back(c);
    }
    return sections;
}

double cusp_rectangle_residual(const CuspSection& c) {
    const double quarter = std::acos(0.0); // π/2
    double worst = 0.0;
    for (double a : c.interior_angles) worst = std::max(worst, std::abs(a - quarter));
    worst = std::max(worst, std::abs(c.side_lengths[0] - c.side_lengths[2]));
    worst = std::max(worst, std::abs(c.side_lengths[1] - c.side_lengths[3]));
    return worst;
}

double polyhedron_volume(const IdealRealization& r, int cone_vertex, int fan_root) {
    if (cone_vertex < 0 || cone_vertex >= r.combinatorics.vertex_count)
        throw InputError("cone vertex out of range");
    if (fan_root < 0) throw InputError("fan root must be nonnegative");

    std::vector<ExtendedComplex> b;
    for (const auto& v : r.vertices) b.push_back(klein_to_boundary(v));

    double total = 0.0;
    for (const auto& face : r.combinatorics.face_vertices) {
        if (std::find(face.begin(), face.end(), cone_vertex) != face.end()) continue;
        const int k = static_cast<int>(face.size());
        const int root = fan_root % k;
        for (int i = 1; i + 1 < k; ++i) {
            ExtendedComplex z = cross_ratio(b[cone_vertex], b[face[root]],
                                            b[face[(root + i) % k]],
                                            b[face[(root + i + 1) % k]]);
            total += ideal_tet_volume(TetShape{z.value()});
        }
    }
    // the cone tetrahedra tile the polyhedron with one consistent orientation
    return std::abs(total);
}

double right_angled_volume(SolidType s) {
    return 2.0 * polyhedron_volume(inscribe_solid(s));
}

RealizationReport verify_solid(SolidType s) {
    IdealRealization r = inscribe_solid(s);
    RealizationReport rep;
    rep.solid = s;
    rep.vertex_count = r.combinatorics.vertex_count;
    rep.edge_count = static_cast<int>(r.combinatorics.edges.size());
    rep.face_count = static_cast<int>(r.combinatorics.face_edges.size());

    rep.dihedral = dihedral_angles(r);
    rep.face_residual = face_residuals(r);
    rep.cusps = cusp_sections(r);

    const double quarter = std::acos(0.0);
    for (double a : rep.dihedral)
        rep.max_dihedral_error = std::max(rep.max_dihedral_error, std::abs(a - quarter));
    for (double x : rep.face_residual)
        rep.max_face_residual = std::max(rep.max_face_residual, x);
    for (const CuspSection& c : rep.cusps)
        rep.max_cusp_residual = std::max(rep.max_cusp_residual, cusp_rectangle_residual(c));

    auto classes = edge_classes(r.combinatorics, checkerboard_gluing(r.combinatorics));
    rep.edge_class_count = static_cast<int>(classes.size());
    rep.edge_classes_size4 =
        std::all_of(classes.begin(), classes.end(),
                    [](const auto& c) { return c.size() == 4; });

    rep.polyhedron_vol = polyhedron_volume(r);
    rep.link_volume = 2.0 * rep.polyhedron_vol;
    return rep;
}

std::string report_json(const RealizationReport& rep) {
    nlohmann::json cusps = nlohmann::json::array();
    for (const CuspSection& c : rep.cusps) {
        cusps.push_back({{"vertex", c.vertex},
                         {"sides", c.side_lengths},
                         {"angles", c.interior_angles}});
    }
    nlohmann::json j{{"solid", solid_name(rep.solid)},
                     {"vertices", rep.vertex_count},
                     {"edges", rep.edge_count},
                     {"faces", rep.face_count},
                     {"dihedral_angles", rep.dihedral},
                     {"face_residuals", rep.face_residual},
                     {"cusps", cusps},
                     {"max_dihedral_error", rep.max_dihedral_error},
                     {"max_face_residual", rep.max_face_residual},
                     {"max_cusp_residual", rep.max_cusp_residual},
                     {"edge_classes", rep.edge_class_count},
                     {"edge_classes_all_size_4", rep.edge_classes_size4},
                     {"polyhedron_volume", rep.polyhedron_vol},
                     {"link_volume", rep.link_volume}};
    return j.dump(2) + "\n";
}

} // namespace altlink
