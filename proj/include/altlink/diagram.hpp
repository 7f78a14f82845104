#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altlink/errors.hpp"

namespace altlink {

/// One end of an edge at a crossing: slot 0 is the incoming under-strand,
/// slots proceed counterclockwise, so 0 and 2 are under, 1 and 3 are over.
struct Dart {
    int crossing = 0;
    int slot = 0; // 0..3

    friend bool operator==(const Dart&, const Dart&) = default;
};

/// A crossing as in a PD code: quad[s] is the edge label occupying slot s.
struct Crossing {
    std::array<int, 4> quad{};
};

/// Face of the underlying 4-valent projection graph, traced as an orbit of
/// the next-corner permutation (left turns).
struct Face {
    std::vector<Dart> darts;       // corner darts in cyclic order
    std::vector<int> edge_labels;  // edge crossed to leave each corner

    int size() const { return static_cast<int>(darts.size()); }
};

/// Link diagram as an embedded 4-valent graph, plus over/under data.
/// Edge labels are 1..2n, each appearing at exactly two dart positions.
class Diagram {
public:
    explicit Diagram(std::vector<Crossing> crossings);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int i) const { return crossings_.at(i); }

    /// The other dart occupying the same edge label.
    Dart mate(const Dart& d) const;
    int label_at(const Dart& d) const { return crossings_.at(d.crossing).quad.at(d.slot); }
    /// The two darts carrying an edge label, in discovery order.
    std::array<Dart, 2> darts_of_edge(int label) const;

private:
    std::vector<Crossing> crossings_;
    // mate lookup: for dart index 4*c+s, the mate's dart index
    std::vector<int> mate_of_;
};

/// Parse PD text such as "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)". Commas and
/// whitespace both separate; labels must form the set 1..2n with each label
/// used exactly twice. Errors carry the 1-based token position.
Diagram parse_pd(const std::string& text);

/// Inverse of parse_pd, one X(...) per crossing, space separated.
std::string emit_pd(const Diagram& d);

/// All faces of the projection graph. Deterministic: faces discovered in
/// dart-index order, each starting at its smallest dart.
std::vector<Face> trace_faces(const Diagram& d);

/// Checkerboard colouring of faces, 0 = black, 1 = white; in each connected
/// piece the face traced from dart (lowest crossing, slot 0) is black. Faces
/// across any edge get opposite colours; throws InternalError if the map is
/// not 2-colourable (impossible for planar diagrams).
std::vector<int> checkerboard_color(const Diagram& d, const std::vector<Face>& faces);

/// Face containing the corner between slots s and s+1 at crossing v.
int face_at_corner(const Diagram& d, const std::vector<Face>& faces, int v, int s);

struct DiagramAnalysis {
    int crossing_count = 0;
    int edge_count = 0;
    int face_count = 0;
    int component_count = 0;      // link components (closed strands)
    bool planar = false;          // Euler characteristic of each piece is 2
    bool connected = false;       // projection graph connected
    bool alternating = false;
    bool reduced = false;         // no nugatory crossing
    bool prime = false;           // no essential 2-edge cut
    bool torus2q = false;         // standard (2,q)-torus diagram
    bool has_bigon = false;
    std::vector<int> face_size_histogram; // index k = number of k-gonal faces
};

DiagramAnalysis analyze(const Diagram& d);

/// 4-valent planar graph given by rotation systems: neighbors[v] lists the
/// 4 counterclockwise neighbor slots as (vertex, their slot).
struct EmbeddedQuartic {
    std::vector<std::array<std::pair<int, int>, 4>> neighbors;

    int vertex_count() const { return static_cast<int>(neighbors.size()); }
};

/// Assign over/under so the diagram is alternating; the embedded graph must
/// be connected and checkerboard-colourable (always true for planar). The
/// strand entering crossing 0 at its slot 0 goes under.
Diagram alternating_from_graph(const EmbeddedQuartic& g);

struct RandomDiagramOptions {
    int crossings = 10;
    std::uint64_t seed = 0;
    bool forbid_bigons = false; // demand no 2-gonal face
};

/// Random reduced alternating prime diagram with the requested crossing
/// number, built as the medial diagram of a randomly grown 2-connected
/// planar graph (the graph's edges become the crossings). Deterministic for
/// a fixed seed. Throws InputError for crossings < 3, and in bigon-free mode
/// for crossings < 6 or == 7, where no such diagram exists; InternalError if
/// no admissible diagram is found within the attempt budget.
Diagram random_alternating_diagram(const RandomDiagramOptions& opts);

} // namespace altlink
