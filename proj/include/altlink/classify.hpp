#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altlink/diagram.hpp"

namespace altlink {

/// The three quasiregular solids whose projection graphs admit a pair of
/// totally geodesic checkerboard surfaces.
enum class SolidType {
    Octahedron,       // triangle faces, 6 vertices
    Cuboctahedron,    // triangles + squares, 12 vertices
    Icosidodecahedron // triangles + pentagons, 30 vertices
};

std::string solid_name(SolidType s);

/// Integer solutions (n, V) of V·(6−n) = 6n with n ≥ 3, the face-count
/// equation forced by two totally geodesic checkerboard surfaces. Returned
/// sorted by n; the list is exactly {(3,6), (4,12), (5,30)}.
std::vector<std::pair<int, int>> face_equation_solutions(int n_max = 100);

/// Vertex coordinates, edges, and counterclockwise rotation system (viewed
/// from outside) of a reference solid inscribed in the unit sphere.
struct SolidGeometry {
    SolidType type;
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 4>> rotation; // neighbor vertices, ccw
};

SolidGeometry solid_geometry(SolidType s);

/// Alternating diagram whose projection graph is the solid's edge graph.
Diagram reference_diagram(SolidType s);

/// Canonical form of the embedded projection graph up to orientation-
/// preserving or -reversing isomorphism: breadth-first relabeling minimized
/// over all starting darts and both orientations. Equal codes iff the
/// embedded graphs are isomorphic (allowing reflection).
std::vector<std::uint16_t> canonical_code(const Diagram& d);

enum class Verdict {
    BothTotallyGeodesic, // projection graph is one of the three solids
    NotCandidate,        // hyperbolic-looking but wrong graph
    PrerequisiteFailed   // not reduced/prime/alternating/non-split, or a (2,q) torus diagram
};

struct Classification {
    Verdict verdict;
    std::string reason;             // single pinned phrase, empty on BothTotallyGeodesic
    std::optional<SolidType> solid; // set iff verdict == BothTotallyGeodesic
};

std::string verdict_display(const Classification& c);

/// Decision procedure: prerequisites (alternating, reduced, non-split,
/// prime, not a (2,q)-torus diagram), then projection-graph comparison
/// against the three solids by canonical code.
Classification classify(const Diagram& d);

/// Weaving link W(p,q): the closed braid (σ₁σ₂…σ_{p−1})^q with alternating
/// signs, as an alternating diagram with (p−1)·q crossings. Requires p ≥ 2,
/// q ≥ 1, and at least 3 crossings for a sensible diagram.
Diagram weaving_diagram(int p, int q);

struct CensusRow {
    int p = 0;
    int q = 0;
    int crossings = 0;
    Classification result;
};

/// Classify W(p,q) for 2 ≤ p ≤ p_max, 1 ≤ q ≤ q_max (skipping the pairs
/// with fewer than 3 crossings).
std::vector<CensusRow> weaving_census(int p_max, int q_max);

std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows);

/// Whether antipodal vertices of the solid pair off under its edge graph's
/// symmetry — used as a sanity check on solid_geometry.
bool opposite_pairs_check(const SolidGeometry& g);

} // namespace altlink
