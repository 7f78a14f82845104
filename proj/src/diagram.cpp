#include "altlink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace altlink {

namespace {

int dart_index(const Dart& d) { return 4 * d.crossing + d.slot; }
Dart dart_from_index(int i) { return Dart{i / 4, i % 4}; }

} // namespace

Diagram::Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    int n = static_cast<int>(crossings_.size());
    if (n == 0)
        throw InputError("diagram has no crossings");
    std::vector<std::vector<int>> positions(2 * n + 1);
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) {
            int label = crossings_[c].quad[s];
            if (label < 1 || label > 2 * n)
                throw InputError("edge label " + std::to_string(label) +
                                 " out of range 1.." + std::to_string(2 * n));
            positions[label].push_back(4 * c + s);
        }
    }
    mate_of_.assign(4 * n, -1);
    for (int label = 1; label <= 2 * n; ++label) {
        if (positions[label].size() != 2)
            throw InputError("edge label " + std::to_string(label) + " appears " +
                             std::to_string(positions[label].size()) + " times, expected 2");
        mate_of_[positions[label][0]] = positions[label][1];
        mate_of_[positions[label][1]] = positions[label][0];
    }
}

Dart Diagram::mate(const Dart& d) const {
    if (d.crossing < 0 || d.crossing >= crossing_count() || d.slot < 0 || d.slot > 3)
        throw InternalError("dart out of range");
    return dart_from_index(mate_of_[dart_index(d)]);
}

std::array<Dart, 2> Diagram::darts_of_edge(int label) const {
    if (label < 1 || label > edge_count())
        throw InternalError("edge label out of range");
    for (int c = 0; c < crossing_count(); ++c)
        for (int s = 0; s < 4; ++s)
            if (crossings_[c].quad[s] == label) {
                Dart d{c, s};
                return {d, mate(d)};
            }
    throw InternalError("edge label not found");
}

Diagram parse_pd(const std::string& text) {
    struct Token {
        char kind; // 'X', '(', ')', ',', '0' for integer
        int value = 0;
        int pos = 0; // 1-based
    };
    std::vector<Token> tokens;
    std::size_t i = 0;
    int pos = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        ++pos;
        if (ch == 'X' || ch == 'x') {
            tokens.push_back({'X', 0, pos});
            ++i;
        } else if (ch == '(' || ch == ')' || ch == ',') {
            tokens.push_back({ch, 0, pos});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = 10 * v + (text[i] - '0');
                if (v > 1000000)
                    throw ParseError("token " + std::to_string(pos) + ": edge label too large");
                ++i;
            }
            tokens.push_back({'0', v, pos});
        } else {
            throw ParseError("token " + std::to_string(pos) + ": unexpected character '" +
                             std::string(1, ch) + "'");
        }
    }
    if (tokens.empty())
        throw ParseError("empty diagram text");

    std::vector<Crossing> crossings;
    std::size_t t = 0;
    auto expect = [&](char kind, const char* what) -> const Token& {
        if (t >= tokens.size())
            throw ParseError("unexpected end of input, expected " + std::string(what));
        if (tokens[t].kind != kind)
            throw ParseError("token " + std::to_string(tokens[t].pos) + ": expected " +
                             std::string(what));
        return tokens[t++];
    };
    while (t < tokens.size()) {
        expect('X', "'X'");
        expect('(', "'('");
        Crossing c;
        for (int k = 0; k < 4; ++k) {
            if (k > 0)
                expect(',', "','");
            c.quad[k] = expect('0', "an edge label").value;
        }
        expect(')', "')'");
        crossings.push_back(c);
    }
    return Diagram(std::move(crossings));
}

std::string emit_pd(const Diagram& d) {
    std::ostringstream out;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (c > 0)
            out << ' ';
        const auto& q = d.crossing(c).quad;
        out << "X(" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ')';
    }
    return out.str();
}

std::vector<Face> trace_faces(const Diagram& d) {
    int n = d.crossing_count();
    std::vector<int> seen(4 * n, 0);
    std::vector<Face> faces;
    for (int start = 0; start < 4 * n; ++start) {
        if (seen[start])
            continue;
        Face f;
        int cur = start;
        do {
            seen[cur] = 1;
            Dart dd = dart_from_index(cur);
            f.darts.push_back(dd);
            f.edge_labels.push_back(d.label_at(dd));
            Dart m = d.mate(dd);
            cur = dart_index(Dart{m.crossing, (m.slot + 1) % 4});
        } while (cur != start);
        faces.push_back(std::move(f));
    }
    return faces;
}

namespace {

std::vector<int> face_of_dart_table(const Diagram& d, const std::vector<Face>& faces) {
    std::vector<int> table(4 * d.crossing_count(), -1);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (const Dart& dd : faces[f].darts)
            table[dart_index(dd)] = f;
    return table;
}

// connected components of the projection graph, by crossing
std::vector<int> graph_components(const Diagram& d) {
    int n = d.crossing_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0)
            continue;
        comp[v] = next;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int w = d.mate(Dart{u, s}).crossing;
                if (comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

} // namespace

std::vector<int> checkerboard_color(const Diagram& d, const std::vector<Face>& faces) {
    auto face_of = face_of_dart_table(d, faces);
    auto comp = graph_components(d);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> color(faces.size(), -1);
    for (int c = 0; c < ncomp; ++c) {
        int seed_crossing = -1;
        for (int v = 0; v < d.crossing_count() && seed_crossing < 0; ++v)
            if (comp[v] == c)
                seed_crossing = v;
        int seed_face = face_of[dart_index(Dart{seed_crossing, 0})];
        if (color[seed_face] >= 0)
            continue; // face already reached from another seed (same piece)
        color[seed_face] = 0;
        std::vector<int> stack{seed_face};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (const Dart& dd : faces[f].darts) {
                int g = face_of[dart_index(d.mate(dd))];
                if (color[g] < 0) {
                    color[g] = 1 - color[f];
                    stack.push_back(g);
                } else if (color[g] == color[f]) {
                    throw InternalError("projection graph is not checkerboard colourable");
                }
            }
        }
    }
    return color;
}

int face_at_corner(const Diagram& d, const std::vector<Face>& faces, int v, int s) {
    if (v < 0 || v >= d.crossing_count() || s < 0 || s > 3)
        throw InternalError("corner out of range");
    auto face_of = face_of_dart_table(d, faces);
    return face_of[dart_index(Dart{v, (s + 1) % 4})];
}

namespace {

bool euler_planar(const Diagram& d, const std::vector<Face>& faces, const std::vector<int>& comp) {
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> v_count(ncomp, 0), f_count(ncomp, 0);
    for (int v = 0; v < d.crossing_count(); ++v)
        ++v_count[comp[v]];
    for (const Face& f : faces)
        ++f_count[comp[f.darts[0].crossing]];
    for (int c = 0; c < ncomp; ++c) {
        // 4-valent, so E = 2V within each piece and V - E + F = F - V
        if (f_count[c] - v_count[c] != 2)
            return false;
    }
    return true;
}

bool is_alternating(const Diagram& d) {
    for (int label = 1; label <= d.edge_count(); ++label) {
        auto darts = d.darts_of_edge(label);
        if ((darts[0].slot + darts[1].slot) % 2 == 0)
            return false;
    }
    return true;
}

bool is_reduced(const Diagram& d, const std::vector<int>& face_of) {
    // a crossing is removable by untwisting exactly when two opposite
    // corners lie on the same face
    for (int v = 0; v < d.crossing_count(); ++v) {
        int f0 = face_of[dart_index(Dart{v, 1})]; // corner after slot 0
        int f1 = face_of[dart_index(Dart{v, 2})];
        int f2 = face_of[dart_index(Dart{v, 3})];
        int f3 = face_of[dart_index(Dart{v, 0})];
        if (f0 == f2 || f1 == f3)
            return false;
    }
    return true;
}

// does removing edges cut_a, cut_b disconnect the crossings?
bool disconnects(const Diagram& d, int cut_a, int cut_b) {
    int n = d.crossing_count();
    std::vector<int> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            int label = d.crossing(u).quad[s];
            if (label == cut_a || label == cut_b)
                continue;
            int w = d.mate(Dart{u, s}).crossing;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached < n;
}

bool is_prime(const Diagram& d) {
    // scan all pairs of distinct non-loop edges for a separating 2-cut
    int m = d.edge_count();
    std::vector<bool> loop(m + 1, false);
    for (int label = 1; label <= m; ++label) {
        auto darts = d.darts_of_edge(label);
        loop[label] = darts[0].crossing == darts[1].crossing;
    }
    for (int a = 1; a <= m; ++a) {
        if (loop[a])
            continue;
        for (int b = a + 1; b <= m; ++b) {
            if (loop[b])
                continue;
            if (disconnects(d, a, b))
                return false;
        }
    }
    return true;
}

bool is_torus_2q(const Diagram& d, const std::vector<Face>& faces, bool connected) {
    if (!connected)
        return false;
    int n = d.crossing_count();
    if (n == 2) {
        // the (2,2) diagram: both crossings joined by all four edges
        for (int s = 0; s < 4; ++s)
            if (d.mate(Dart{0, s}).crossing != 1)
                return false;
        return true;
    }
    // standard (2,q) pattern: a cycle of crossings joined by parallel pairs
    for (int v = 0; v < n; ++v) {
        std::map<int, int> neighbor_count;
        for (int s = 0; s < 4; ++s)
            ++neighbor_count[d.mate(Dart{v, s}).crossing];
        if (neighbor_count.size() != 2)
            return false;
        for (const auto& [w, k] : neighbor_count)
            if (k != 2 || w == v)
                return false;
    }
    int non_bigons = 0;
    for (const Face& f : faces)
        if (f.size() != 2)
            ++non_bigons;
    return non_bigons <= 2;
}

} // namespace

DiagramAnalysis analyze(const Diagram& d) {
    DiagramAnalysis a;
    a.crossing_count = d.crossing_count();
    a.edge_count = d.edge_count();
    auto faces = trace_faces(d);
    a.face_count = static_cast<int>(faces.size());
    auto comp = graph_components(d);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    a.connected = ncomp == 1;
    a.planar = euler_planar(d, faces, comp);

    // link components: strands advance over a crossing to the opposite slot
    {
        int nd = 4 * d.crossing_count();
        std::vector<int> seen(nd, 0);
        int orbits = 0;
        for (int start = 0; start < nd; ++start) {
            if (seen[start])
                continue;
            ++orbits;
            int cur = start;
            while (!seen[cur]) {
                seen[cur] = 1;
                Dart m = d.mate(dart_from_index(cur));
                cur = dart_index(Dart{m.crossing, (m.slot + 2) % 4});
            }
        }
        // each closed strand is traced once in each direction
        a.component_count = orbits / 2;
    }

    a.alternating = is_alternating(d);
    auto face_of = face_of_dart_table(d, faces);
    a.reduced = is_reduced(d, face_of);
    a.prime = a.connected && is_prime(d);
    a.torus2q = is_torus_2q(d, faces, a.connected);

    int max_size = 0;
    for (const Face& f : faces)
        max_size = std::max(max_size, f.size());
    a.face_size_histogram.assign(max_size + 1, 0);
    for (const Face& f : faces)
        ++a.face_size_histogram[f.size()];
    a.has_bigon = max_size >= 2 && a.face_size_histogram[2] > 0;
    return a;
}

Diagram alternating_from_graph(const EmbeddedQuartic& g) {
    int n = g.vertex_count();
    if (n == 0)
        throw InputError("embedded graph has no vertices");
    // validate the connection involution
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 4; ++s) {
            auto [w, t] = g.neighbors[v][s];
            if (w < 0 || w >= n || t < 0 || t > 3)
                throw InputError("embedded graph connection out of range");
            if (g.neighbors[w][t] != std::make_pair(v, s))
                throw InputError("embedded graph connections are not involutive");
            if (w == v && t == s)
                throw InputError("embedded graph has a half-edge fixed point");
        }

    // Choose a rotation offset x[v] in {0,1} per vertex so that the two ends
    // of every edge land on slots of opposite parity (one under, one over).
    // The end at graph slot s becomes PD slot (s - x[v]) mod 4, so the
    // constraint along an edge (v,s)-(w,t) is x[v]+x[w] = s+t+1 (mod 2).
    std::vector<int> x(n, -1);
    std::vector<int> order; // BFS order, for connectivity check
    x[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int s = 0; s < 4; ++s) {
            auto [w, t] = g.neighbors[v][s];
            int need = (x[v] + s + t + 1) % 2;
            if (x[w] < 0) {
                x[w] = need;
                order.push_back(w);
            } else if (x[w] != need) {
                throw InputError("embedded graph admits no alternating assignment");
            }
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw InputError("embedded graph is disconnected");

    // assign edge labels in discovery order
    std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
    int next_label = 1;
    for (int v = 0; v < n; ++v)
        for (int s = 0; s < 4; ++s) {
            if (label[v][s] != 0)
                continue;
            auto [w, t] = g.neighbors[v][s];
            label[v][s] = next_label;
            label[w][t] = next_label;
            ++next_label;
        }

    std::vector<Crossing> crossings(n);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < 4; ++j)
            crossings[v].quad[j] = label[v][(j + x[v]) % 4];
    Diagram d(std::move(crossings));
    if (!is_alternating(d))
        throw InternalError("alternating assignment failed to alternate");
    return d;
}

// ---------------------------------------------------------------------------
// random diagrams: grow a 2-connected planar (multi)graph with the requested
// edge count, then take its medial diagram

namespace {

// planar multigraph with an explicit embedding (rotation systems);
// half-edge = (edge id, end 0/1)
struct PlanarGraph {
    std::vector<std::array<int, 2>> ends;                   // per edge
    std::vector<std::vector<std::pair<int, int>>> rotation; // per vertex, ccw half-edges

    int vertex_count() const { return static_cast<int>(rotation.size()); }
    int edge_count() const { return static_cast<int>(ends.size()); }
    int degree(int v) const { return static_cast<int>(rotation[v].size()); }

    int position_of(int v, std::pair<int, int> half) const {
        for (int i = 0; i < degree(v); ++i)
            if (rotation[v][i] == half)
                return i;
        throw InternalError("half-edge missing from rotation");
    }
};

PlanarGraph wheel(int rim) {
    // rim-cycle 0..rim-1 plus hub vertex rim; wheel(3) is the tetrahedron
    PlanarGraph g;
    g.rotation.resize(rim + 1);
    std::vector<int> rim_edge(rim), spoke(rim);
    for (int i = 0; i < rim; ++i) {
        rim_edge[i] = g.edge_count();
        g.ends.push_back({i, (i + 1) % rim});
    }
    for (int i = 0; i < rim; ++i) {
        spoke[i] = g.edge_count();
        g.ends.push_back({i, rim});
    }
    for (int i = 0; i < rim; ++i) {
        g.rotation[i] = {{rim_edge[i], 0}, {spoke[i], 0}, {rim_edge[(i + rim - 1) % rim], 1}};
    }
    for (int i = 0; i < rim; ++i)
        g.rotation[rim].push_back({spoke[i], 1});
    return g;
}

PlanarGraph triangle() {
    PlanarGraph g;
    g.rotation.resize(3);
    g.ends = {{0, 1}, {1, 2}, {2, 0}};
    g.rotation[0] = {{0, 0}, {2, 1}};
    g.rotation[1] = {{1, 0}, {0, 1}};
    g.rotation[2] = {{2, 0}, {1, 1}};
    return g;
}

// directed dart of the graph: traverse edge e from ends[e][dir]
struct GFaceCorner {
    int edge;
    int dir;
};

// trace all faces; each face is the cyclic dart list
std::vector<std::vector<GFaceCorner>> graph_faces(const PlanarGraph& g) {
    // successor of dart (e, dir): at the head vertex, take the rotation
    // successor of the arriving half-edge and leave along it
    auto next = [&](const GFaceCorner& c) -> GFaceCorner {
        int head = g.ends[c.edge][1 - c.dir];
        int p = g.position_of(head, {c.edge, 1 - c.dir});
        auto [e2, end2] = g.rotation[head][(p + 1) % g.degree(head)];
        return {e2, end2};
    };
    std::vector<std::array<int, 2>> seen(g.edge_count(), {0, 0});
    std::vector<std::vector<GFaceCorner>> faces;
    for (int e = 0; e < g.edge_count(); ++e)
        for (int dir = 0; dir < 2; ++dir) {
            if (seen[e][dir])
                continue;
            std::vector<GFaceCorner> face;
            GFaceCorner cur{e, dir};
            do {
                seen[cur.edge][cur.dir] = 1;
                face.push_back(cur);
                cur = next(cur);
            } while (!(cur.edge == e && cur.dir == dir));
            faces.push_back(std::move(face));
        }
    return faces;
}

bool graph_is_planar(const PlanarGraph& g) {
    // connected check
    std::vector<int> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [e, end] : g.rotation[v]) {
            int w = g.ends[e][1 - end];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != g.vertex_count())
        return false;
    int f = static_cast<int>(graph_faces(g).size());
    return g.vertex_count() - g.edge_count() + f == 2;
}

bool graph_two_connected(const PlanarGraph& g) {
    int n = g.vertex_count();
    if (n < 3)
        return false;
    for (int skip = 0; skip < n; ++skip) {
        std::vector<int> seen(n, 0);
        seen[skip] = 1;
        int start = skip == 0 ? 1 : 0;
        std::vector<int> stack{start};
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [e, end] : g.rotation[v]) {
                int w = g.ends[e][1 - end];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n - 1)
            return false;
    }
    return true;
}

bool adjacent_vertices(const PlanarGraph& g, int u, int v) {
    for (auto [e, end] : g.rotation[u])
        if (g.ends[e][1 - end] == v)
            return true;
    return false;
}

// The vertex at corner i of a traced face: the face arrives along dart i-1
// and leaves along dart i, so corner i sits at the tail of dart i.
int corner_vertex(const PlanarGraph& g, const std::vector<GFaceCorner>& face, int i) {
    const GFaceCorner& c = face[i];
    return g.ends[c.edge][c.dir];
}

// Insert a new half-edge of `edge` at face corner i (between the arriving
// and departing half-edges of the face). Done for all corners of one move
// before any rotation is modified, so positions stay valid: we record the
// insertion point as (vertex, index of the departing half-edge).
struct CornerSlot {
    int vertex;
    std::pair<int, int> departing;
};

CornerSlot corner_slot(const PlanarGraph& g, const std::vector<GFaceCorner>& face, int i) {
    const GFaceCorner& c = face[i];
    return {g.ends[c.edge][c.dir], {c.edge, c.dir}};
}

void insert_at_corner(PlanarGraph& g, const CornerSlot& slot, std::pair<int, int> half) {
    int p = g.position_of(slot.vertex, slot.departing);
    g.rotation[slot.vertex].insert(g.rotation[slot.vertex].begin() + p, half);
}

// chord across a face between corners i and j; adjacent corners double the
// boundary edge between them
void add_chord(PlanarGraph& g, const std::vector<GFaceCorner>& face, int i, int j) {
    CornerSlot si = corner_slot(g, face, i);
    CornerSlot sj = corner_slot(g, face, j);
    int e = g.edge_count();
    g.ends.push_back({si.vertex, sj.vertex});
    insert_at_corner(g, si, {e, 0});
    insert_at_corner(g, sj, {e, 1});
}

// new vertex inside the face, joined to corners i, j, k (in face order);
// the new vertex's rotation order is fixed by trying both and keeping the
// planar one in grow_graph
void add_face_vertex(PlanarGraph& g, const std::vector<GFaceCorner>& face, int i, int j, int k,
                     bool flip) {
    int z = g.vertex_count();
    g.rotation.emplace_back();
    int e0 = g.edge_count();
    std::array<int, 3> corners{i, j, k};
    for (int c = 0; c < 3; ++c) {
        CornerSlot s = corner_slot(g, face, corners[c]);
        g.ends.push_back({s.vertex, z});
        insert_at_corner(g, s, {e0 + c, 0});
    }
    if (flip)
        g.rotation[z] = {{e0, 1}, {e0 + 1, 1}, {e0 + 2, 1}};
    else
        g.rotation[z] = {{e0 + 2, 1}, {e0 + 1, 1}, {e0, 1}};
}

void delete_edge(PlanarGraph& g, int e) {
    int last = g.edge_count() - 1;
    for (int v : {g.ends[e][0], g.ends[e][1]}) {
        auto& rot = g.rotation[v];
        for (int i = static_cast<int>(rot.size()) - 1; i >= 0; --i)
            if (rot[i].first == e)
                rot.erase(rot.begin() + i);
    }
    // move the last edge id into the hole
    if (e != last) {
        for (auto& rot : g.rotation)
            for (auto& half : rot)
                if (half.first == last)
                    half.first = e;
        g.ends[e] = g.ends[last];
    }
    g.ends.pop_back();
}

bool has_parallel_or_small_face(const PlanarGraph& g) {
    for (const auto& face : graph_faces(g))
        if (face.size() < 3)
            return true;
    return false;
}

int min_degree(const PlanarGraph& g) {
    int m = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        m = std::min(m, g.degree(v));
    return m;
}

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    // unbiased enough for sampling moves; avoids distribution portability issues
    return rng() % n;
}

// grow a planar graph with exactly `target` edges; `strict` demands simple,
// min-degree-3, min-face-3 (whose medial diagrams are bigon-free)
bool grow_graph(std::mt19937_64& rng, int target, bool strict, PlanarGraph& out) {
    PlanarGraph g;
    if (strict) {
        if (target >= 10 && rng_below(rng, 2) == 0)
            g = wheel(5);
        else if (target >= 8 && target != 9 && (target < 10 || rng_below(rng, 2) == 0))
            g = wheel(4);
        else
            g = wheel(3);
    } else {
        g = triangle();
    }
    if (g.edge_count() > target)
        return false;

    for (int step = 0; step < 600 && g.edge_count() != target; ++step) {
        int remaining = target - g.edge_count();
        auto faces = graph_faces(g);

        // candidate chords (i, j) per face
        struct Chord {
            int face, i, j;
        };
        std::vector<Chord> chords;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            int k = static_cast<int>(faces[f].size());
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    int u = corner_vertex(g, faces[f], i);
                    int v = corner_vertex(g, faces[f], j);
                    if (u == v)
                        continue;
                    bool adjacent_positions = (j == i + 1) || (i == 0 && j == k - 1);
                    if (strict) {
                        if (adjacent_positions || adjacent_vertices(g, u, v))
                            continue;
                        // both face arcs must keep length >= 2 so faces stay >= 3
                        if (j - i < 2 || (k - (j - i)) < 2)
                            continue;
                    }
                    chords.push_back({f, i, j});
                }
        }
        std::vector<int> deletable; // edges with both endpoints of degree >= 4
        if (strict)
            for (int e = 0; e < g.edge_count(); ++e)
                if (g.degree(g.ends[e][0]) >= 4 && g.degree(g.ends[e][1]) >= 4)
                    deletable.push_back(e);

        // pick a move; small overshoots are walked back by deletions
        enum class Move { Chord, FaceVertex, Delete } mv;
        if (remaining < 0) {
            if (deletable.empty())
                return false;
            mv = Move::Delete;
        } else if (remaining >= 3) {
            mv = (!chords.empty() && rng_below(rng, 3) == 0) ? Move::Chord : Move::FaceVertex;
        } else if (!chords.empty()) {
            mv = Move::Chord;
        } else if (!deletable.empty()) {
            mv = Move::Delete;
        } else {
            mv = Move::FaceVertex;
        }

        PlanarGraph backup = g;
        if (mv == Move::Chord) {
            const Chord& c = chords[rng_below(rng, chords.size())];
            add_chord(g, faces[c.face], c.i, c.j);
        } else if (mv == Move::FaceVertex) {
            int f = static_cast<int>(rng_below(rng, faces.size()));
            int k = static_cast<int>(faces[f].size());
            if (k < 3)
                continue;
            // three distinct corner positions in face order
            int a = static_cast<int>(rng_below(rng, k));
            int b = (a + 1 + static_cast<int>(rng_below(rng, k - 2))) % k;
            int lo = std::min(a, b), hi = std::max(a, b);
            int span = hi - lo;
            int c;
            if (k - span >= 2 && (span < 2 || rng_below(rng, 2) == 0))
                c = (hi + 1 + static_cast<int>(rng_below(rng, k - span - 1))) % k;
            else
                c = lo + 1 + static_cast<int>(rng_below(rng, span - 1));
            std::array<int, 3> pos{a, b, c};
            std::sort(pos.begin(), pos.end());
            if (pos[0] == pos[1] || pos[1] == pos[2])
                continue;
            int u = corner_vertex(g, faces[f], pos[0]);
            int v = corner_vertex(g, faces[f], pos[1]);
            int w = corner_vertex(g, faces[f], pos[2]);
            if (u == v || v == w || u == w)
                continue;
            add_face_vertex(g, faces[f], pos[0], pos[1], pos[2], false);
            if (!graph_is_planar(g)) {
                g = backup;
                add_face_vertex(g, faces[f], pos[0], pos[1], pos[2], true);
            }
        } else {
            int e = deletable[rng_below(rng, deletable.size())];
            delete_edge(g, e);
        }

        bool ok = graph_is_planar(g) && graph_two_connected(g);
        if (ok && strict)
            ok = min_degree(g) >= 3 && !has_parallel_or_small_face(g);
        if (!ok)
            g = backup;
    }
    if (g.edge_count() != target)
        return false;
    out = g;
    return true;
}

// medial diagram: one 4-valent vertex per graph edge, one medial edge per
// graph corner
EmbeddedQuartic medial(const PlanarGraph& g) {
    EmbeddedQuartic q;
    q.neighbors.resize(g.edge_count());
    // medial vertex m(e), ccw slots:
    //   0: corner (prev, e) at end 1      2: corner (prev, e) at end 0
    //   1: corner (e, next) at end 0      3: corner (e, next) at end 1
    // a corner of the graph at vertex v between rotation positions p, p+1
    // joins m(rotation[v][p]) slot "next-type" to m(rotation[v][p+1])
    // slot "prev-type"
    auto next_slot = [](std::pair<int, int> half) { return half.second == 0 ? 1 : 3; };
    auto prev_slot = [](std::pair<int, int> half) { return half.second == 0 ? 2 : 0; };
    for (int v = 0; v < g.vertex_count(); ++v) {
        int deg = g.degree(v);
        for (int p = 0; p < deg; ++p) {
            auto h1 = g.rotation[v][p];
            auto h2 = g.rotation[v][(p + 1) % deg];
            q.neighbors[h1.first][next_slot(h1)] = {h2.first, prev_slot(h2)};
            q.neighbors[h2.first][prev_slot(h2)] = {h1.first, next_slot(h1)};
        }
    }
    return q;
}

} // namespace

Diagram random_alternating_diagram(const RandomDiagramOptions& opts) {
    int n = opts.crossings;
    if (n < 3)
        throw InputError("random diagrams need at least 3 crossings");
    if (opts.forbid_bigons && (n < 6 || n == 7))
        throw InputError("no bigon-free reduced alternating diagram has " + std::to_string(n) +
                         " crossings");
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        PlanarGraph g;
        if (!grow_graph(rng, n, opts.forbid_bigons, g))
            continue;
        Diagram d = alternating_from_graph(medial(g));
        DiagramAnalysis a = analyze(d);
        if (d.crossing_count() != n)
            throw InternalError("medial diagram has the wrong crossing count");
        if (!a.connected || !a.planar || !a.alternating || !a.reduced || !a.prime)
            continue;
        if (opts.forbid_bigons && a.has_bigon)
            continue;
        return d;
    }
    throw InternalError("random diagram search exhausted its attempt budget");
}

} // namespace altlink
