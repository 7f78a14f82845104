#include "altlink/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace altlink {

std::string solid_name(SolidType s) {
    switch (s) {
    case SolidType::Octahedron: return "Octahedron";
    case SolidType::Cuboctahedron: return "Cuboctahedron";
    case SolidType::Icosidodecahedron: return "Icosidodecahedron";
    }
    throw InternalError("unknown solid");
}

std::vector<std::pair<int, int>> face_equation_solutions(int n_max) {
    // V(6-n) = 6n: the vertex count forced on an n-gon-faced candidate
    std::vector<std::pair<int, int>> out;
    for (int n = 3; n <= n_max; ++n) {
        if (n >= 6)
            continue; // V would be infinite or negative
        if (6 * n % (6 - n) == 0)
            out.push_back({n, 6 * n / (6 - n)});
    }
    return out;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 scale(const Vec3& a, double k) { return {k * a[0], k * a[1], k * a[2]}; }

std::vector<Vec3> unit_vertices(SolidType s) {
    std::vector<Vec3> vs;
    switch (s) {
    case SolidType::Octahedron:
        for (int axis = 0; axis < 3; ++axis)
            for (double sign : {1.0, -1.0}) {
                Vec3 v{0.0, 0.0, 0.0};
                v[axis] = sign;
                vs.push_back(v);
            }
        break;
    case SolidType::Cuboctahedron: {
        double r = 1.0 / std::sqrt(2.0);
        for (int axis = 0; axis < 3; ++axis)
            for (double s1 : {1.0, -1.0})
                for (double s2 : {1.0, -1.0}) {
                    Vec3 v{0.0, 0.0, 0.0};
                    v[axis] = s1 * r;
                    v[(axis + 1) % 3] = s2 * r;
                    vs.push_back(v);
                }
        break;
    }
    case SolidType::Icosidodecahedron: {
        // normalized midpoints of the icosahedron's edges
        double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        std::vector<Vec3> ico;
        for (int axis = 0; axis < 3; ++axis)
            for (double s1 : {1.0, -1.0})
                for (double s2 : {1.0, -1.0}) {
                    Vec3 v{0.0, 0.0, 0.0};
                    v[axis] = s1;
                    v[(axis + 1) % 3] = s2 * phi;
                    ico.push_back(v);
                }
        // icosahedron edges join vertices at the minimal distance 2
        for (std::size_t i = 0; i < ico.size(); ++i)
            for (std::size_t j = i + 1; j < ico.size(); ++j)
                if (std::abs(norm(sub(ico[i], ico[j])) - 2.0) < 1e-9) {
                    Vec3 mid{(ico[i][0] + ico[j][0]) / 2.0, (ico[i][1] + ico[j][1]) / 2.0,
                             (ico[i][2] + ico[j][2]) / 2.0};
                    vs.push_back(scale(mid, 1.0 / norm(mid)));
                }
        break;
    }
    }
    return vs;
}

} // namespace

SolidGeometry solid_geometry(SolidType s) {
    SolidGeometry g;
    g.type = s;
    g.vertices = unit_vertices(s);
    int nv = static_cast<int>(g.vertices.size());

    double dmin = 1e30;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            dmin = std::min(dmin, norm(sub(g.vertices[i], g.vertices[j])));
    std::vector<std::vector<int>> adj(nv);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (norm(sub(g.vertices[i], g.vertices[j])) < dmin * (1.0 + 1e-6)) {
                g.edges.push_back({i, j});
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    for (int v = 0; v < nv; ++v) {
        if (adj[v].size() != 4)
            throw InternalError("reference solid is not 4-valent");
        // order the neighbors counterclockwise as seen from outside the sphere
        Vec3 nrm = g.vertices[v];
        Vec3 u1 = cross(nrm, std::abs(nrm[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0});
        u1 = scale(u1, 1.0 / norm(u1));
        Vec3 u2 = cross(nrm, u1);
        std::array<std::pair<double, int>, 4> ang;
        for (int k = 0; k < 4; ++k) {
            Vec3 w = sub(g.vertices[adj[v][k]], g.vertices[v]);
            ang[k] = {std::atan2(dot(w, u2), dot(w, u1)), adj[v][k]};
        }
        std::sort(ang.begin(), ang.end());
        g.rotation.push_back({ang[0].second, ang[1].second, ang[2].second, ang[3].second});
    }
    return g;
}

bool opposite_pairs_check(const SolidGeometry& g) {
    int nv = static_cast<int>(g.vertices.size());
    std::vector<int> anti(nv, -1);
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            Vec3 sum{g.vertices[i][0] + g.vertices[j][0], g.vertices[i][1] + g.vertices[j][1],
                     g.vertices[i][2] + g.vertices[j][2]};
            if (norm(sum) < 1e-9) {
                anti[i] = j;
                break;
            }
        }
        if (anti[i] < 0)
            return false;
    }
    std::set<std::pair<int, int>> edge_set;
    for (const auto& e : g.edges)
        edge_set.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    for (const auto& e : g.edges) {
        int a = anti[e[0]], b = anti[e[1]];
        if (!edge_set.count({std::min(a, b), std::max(a, b)}))
            return false;
    }
    return true;
}

Diagram reference_diagram(SolidType s) {
    SolidGeometry g = solid_geometry(s);
    int nv = static_cast<int>(g.vertices.size());
    EmbeddedQuartic q;
    q.neighbors.resize(nv);
    for (int v = 0; v < nv; ++v)
        for (int slot = 0; slot < 4; ++slot) {
            int w = g.rotation[v][slot];
            int t = -1;
            for (int k = 0; k < 4; ++k)
                if (g.rotation[w][k] == v)
                    t = k;
            if (t < 0)
                throw InternalError("reference solid rotation is not symmetric");
            q.neighbors[v][slot] = {w, t};
        }
    return alternating_from_graph(q);
}

std::vector<std::uint16_t> canonical_code(const Diagram& d) {
    // Breadth-first relabeling from every start dart in both orientations;
    // the code lists, for each dart in canonical order, the canonical index
    // of its mate. The lexicographic minimum is a complete invariant of the
    // embedded projection graph up to reflection.
    int n = d.crossing_count();
    std::vector<std::uint16_t> best;
    std::vector<int> cross_index(n), entry(n), order;
    order.reserve(n);
    for (int start = 0; start < 4 * n; ++start) {
        for (int delta : {1, 3}) {
            std::fill(cross_index.begin(), cross_index.end(), -1);
            order.clear();
            cross_index[start / 4] = 0;
            entry[start / 4] = start % 4;
            order.push_back(start / 4);
            std::vector<std::uint16_t> code;
            code.reserve(4 * n);
            bool worse = false;
            for (int i = 0; i < static_cast<int>(order.size()) && !worse; ++i) {
                int v = order[i];
                for (int j = 0; j < 4; ++j) {
                    Dart m = d.mate(Dart{v, (entry[v] + delta * j) % 4});
                    if (cross_index[m.crossing] < 0) {
                        cross_index[m.crossing] = static_cast<int>(order.size());
                        entry[m.crossing] = m.slot;
                        order.push_back(m.crossing);
                    }
                    int jm = ((m.slot - entry[m.crossing]) * delta) % 4;
                    if (jm < 0)
                        jm += 4;
                    auto val = static_cast<std::uint16_t>(4 * cross_index[m.crossing] + jm);
                    code.push_back(val);
                    if (!best.empty()) {
                        std::size_t k = code.size() - 1;
                        if (code[k] > best[k]) {
                            worse = true;
                            break;
                        }
                        if (code[k] < best[k]) {
                            best.clear(); // this start wins; finish it out
                        }
                    }
                }
            }
            if (worse)
                continue;
            if (static_cast<int>(order.size()) != n)
                throw InternalError("canonical code needs a connected diagram");
            if (best.empty() || code < best)
                best = std::move(code);
        }
    }
    return best;
}

std::string verdict_display(const Classification& c) {
    switch (c.verdict) {
    case Verdict::BothTotallyGeodesic:
        if (!c.solid)
            throw InternalError("geodesic verdict without a solid");
        return "BothTotallyGeodesic(" + solid_name(*c.solid) + ")";
    case Verdict::NotCandidate: return "NotCandidate";
    case Verdict::PrerequisiteFailed: return "PrerequisiteFailed";
    }
    throw InternalError("unknown verdict");
}

namespace {

const std::map<SolidType, std::vector<std::uint16_t>>& reference_codes() {
    static const std::map<SolidType, std::vector<std::uint16_t>> codes = [] {
        std::map<SolidType, std::vector<std::uint16_t>> m;
        for (SolidType s : {SolidType::Octahedron, SolidType::Cuboctahedron,
                            SolidType::Icosidodecahedron})
            m.emplace(s, canonical_code(reference_diagram(s)));
        return m;
    }();
    return codes;
}

} // namespace

Classification classify(const Diagram& d) {
    DiagramAnalysis a = analyze(d);
    if (!a.planar)
        throw InputError("PD code does not describe a planar diagram");
    if (!a.alternating)
        return {Verdict::PrerequisiteFailed, "not alternating", std::nullopt};
    if (!a.reduced)
        return {Verdict::PrerequisiteFailed, "not reduced", std::nullopt};
    if (!a.connected)
        return {Verdict::PrerequisiteFailed, "split diagram", std::nullopt};
    if (!a.prime)
        return {Verdict::PrerequisiteFailed, "not prime", std::nullopt};
    if (a.torus2q)
        return {Verdict::PrerequisiteFailed, "(2,q)-torus link", std::nullopt};
    if (a.has_bigon)
        return {Verdict::NotCandidate, "diagram has a 2-gon", std::nullopt};
    for (const auto& [solid, code] : reference_codes()) {
        int nv = static_cast<int>(code.size()) / 4;
        if (d.crossing_count() == nv && canonical_code(d) == code)
            return {Verdict::BothTotallyGeodesic, "", solid};
    }
    return {Verdict::NotCandidate, "graph not among the three", std::nullopt};
}

Diagram weaving_diagram(int p, int q) {
    if (p < 2 || q < 1)
        throw InputError("weaving links need p >= 2 and q >= 1");
    int n = (p - 1) * q;
    if (n < 3)
        throw InputError("weaving diagram needs at least 3 crossings");

    // closed braid on p strands: word position w = t(p-1) + (i-1) holds the
    // crossing of strand positions i-1 and i at braid time t
    auto crossing_id = [&](int t, int i) { return t * (p - 1) + (i - 1); };

    // per strand position, the crossings that touch it, in time order, with
    // the side it occupies (0 = the crossing's left leg, 1 = right leg)
    std::vector<std::vector<std::pair<int, int>>> events(p);
    for (int t = 0; t < q; ++t)
        for (int i = 1; i < p; ++i) {
            events[i - 1].push_back({crossing_id(t, i), 0});
            events[i].push_back({crossing_id(t, i), 1});
        }

    // slots counterclockwise: 0 = lower-left, 1 = lower-right, 2 = upper-right,
    // 3 = upper-left; braid time flows upward and the closure wraps around
    EmbeddedQuartic g;
    g.neighbors.resize(n);
    for (int pos = 0; pos < p; ++pos) {
        const auto& ev = events[pos];
        if (ev.empty())
            throw InternalError("weaving strand position with no crossings");
        int m = static_cast<int>(ev.size());
        for (int k = 0; k < m; ++k) {
            auto [c_lo, side_lo] = ev[k];
            auto [c_hi, side_hi] = ev[(k + 1) % m];
            int slot_lo = side_lo == 0 ? 3 : 2; // leaving upward
            int slot_hi = side_hi == 0 ? 0 : 1; // arriving from below
            g.neighbors[c_lo][slot_lo] = {c_hi, slot_hi};
            g.neighbors[c_hi][slot_hi] = {c_lo, slot_lo};
        }
    }
    return alternating_from_graph(g);
}

std::vector<CensusRow> weaving_census(int p_max, int q_max) {
    if (p_max < 2 || q_max < 1)
        throw InputError("census bounds need p_max >= 2 and q_max >= 1");
    std::vector<CensusRow> rows;
    for (int p = 2; p <= p_max; ++p)
        for (int q = 1; q <= q_max; ++q) {
            int n = (p - 1) * q;
            if (n < 3)
                continue;
            CensusRow row;
            row.p = p;
            row.q = q;
            row.crossings = n;
            row.result = classify(weaving_diagram(p, q));
            rows.push_back(std::move(row));
        }
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "p,q,crossings,verdict,reason\n";
    for (const CensusRow& r : rows)
        out << r.p << ',' << r.q << ',' << r.crossings << ',' << verdict_display(r.result)
            << ",\"" << r.result.reason << "\"\n";
    return out.str();
}

std::string census_json(const std::vector<CensusRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CensusRow& r : rows) {
        nlohmann::json row{{"p", r.p},
                           {"q", r.q},
                           {"crossings", r.crossings},
                           {"verdict", verdict_display(r.result)},
                           {"reason", r.result.reason}};
        if (r.result.solid)
            row["solid"] = solid_name(*r.result.solid);
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

} // namespace altlink
