#pragma once

#include <array>
#include <string>
#include <vector>

#include "altlink/classify.hpp"
#include "altlink/diagram.hpp"
#include "altlink/hypgeom.hpp"

namespace altlink {

/// Combinatorial polyhedron read off a checkerboard surface: vertices are
/// the diagram's crossings, edges its edges, faces the diagram's regions.
/// Faces are stored as cyclic edge-label sequences with parallel vertex
/// sequences (vertex[i] lies between edge[i-1] and edge[i]).
struct CombinatorialPolyhedron {
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edges;          // endpoint crossings, by label-1
    std::vector<std::vector<int>> face_edges;       // edge labels, cyclic
    std::vector<std::vector<int>> face_vertices;    // crossing ids, cyclic
    std::vector<int> face_color;                    // 0 black, 1 white
    bool has_bigon = false;                         // 2-gon faces obstruct realization
};

/// How the two copies' faces are identified: face f of the top polyhedron
/// glues to face f of the bottom one after rotating its edge cycle one step
/// — offset +1 along black faces, −1 along white.
struct Gluing {
    std::vector<int> face_offset; // per face, +1 or -1
};

Gluing checkerboard_gluing(const CombinatorialPolyhedron& top);

/// The two mirror copies of the projection sphere bounding the link
/// complement's right-angled decomposition, with the face gluing between
/// them.
struct CheckerboardDecomposition {
    CombinatorialPolyhedron top;
    CombinatorialPolyhedron bottom;
    Gluing gluing;
};

/// Read the decomposition off a diagram. Requires a planar, connected,
/// alternating, reduced diagram; bigon faces are permitted combinatorially
/// but flagged, since no ideal polyhedron has 2-gonal faces.
CheckerboardDecomposition checkerboard_polyhedra(const Diagram& d);

/// Orbits of polyhedron edges (2 copies × edge labels) under the face
/// gluings, each orbit listed as (side, label) with side 0 = top. For the
/// right-angled solids every class has exactly 4 members, matching dihedral
/// angle sums of 2π, and the class count equals the crossing number.
std::vector<std::vector<std::pair<int, int>>>
edge_classes(const CombinatorialPolyhedron& top, const Gluing& g);

/// Plane in the Klein model: { x : x·unit == dist }, 0 ≤ dist < 1.
struct KleinPlane {
    std::array<double, 3> unit{};
    double dist = 0.0;
};

/// Hyperbolic realization of a combinatorial polyhedron with ideal vertices
/// on the unit sphere (Klein ball model).
struct IdealRealization {
    CombinatorialPolyhedron combinatorics;
    std::vector<std::array<double, 3>> vertices; // unit vectors
    std::vector<KleinPlane> face_planes;
};

/// Realize the solid's checkerboard polyhedron with its vertices at the
/// reference solid geometry: quasiregular solids inscribed in the sphere are
/// ideal right-angled polyhedra in the Klein model. Verifies faces are
/// planar (within `tol`) and supporting.
IdealRealization inscribe_solid(SolidType s, double tol = 1e-10);

/// Interior dihedral angle along each edge of the realization.
std::vector<double> dihedral_angles(const IdealRealization& r);

/// Per-face deviation from the regular ideal n-gon shape, via boundary
/// cross ratios; indexed like the combinatorics' faces.
std::vector<double> face_residuals(const IdealRealization& r);

/// Largest per-face deviation.
double face_regularity_residual(const IdealRealization& r);

bool verify_face_regularity(const IdealRealization& r, double tol);

/// Euclidean cusp cross-section at an ideal vertex: the quadrilateral cut by
/// the four incident faces on a horosphere, normalized by a Mobius map
/// sending the vertex to ∞. Corners in rotation order.
struct CuspSection {
    int vertex = 0;
    std::array<Complex, 4> corners{};
    std::array<double, 4> side_lengths{};   // side i joins corners i, i+1
    std::array<double, 4> interior_angles{};
};

std::vector<CuspSection> cusp_sections(const IdealRealization& r);

/// Largest deviation of a cusp section from a rectangle: interior angles
/// from π/2 and opposite side lengths from each other.
double cusp_rectangle_residual(const CuspSection& c);

/// Hyperbolic volume of the realization by coning from `cone_vertex` and
/// fan-triangulating the non-incident faces from their `fan_root`-th vertex;
/// the decomposition parameters exist to cross-check invariance.
double polyhedron_volume(const IdealRealization& r, int cone_vertex = 0, int fan_root = 0);

/// Volume of the right-angled link complement: the two mirror polyhedra.
double right_angled_volume(SolidType s);

/// Full certification record for one solid, serialized by the CLI.
struct RealizationReport {
    SolidType solid;
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    std::vector<double> dihedral;        // per edge
    std::vector<double> face_residual;   // per face
    std::vector<CuspSection> cusps;      // per vertex
    double max_dihedral_error = 0.0;     // from π/2
    double max_face_residual = 0.0;
    double max_cusp_residual = 0.0;
    int edge_class_count = 0;
    bool edge_classes_size4 = false;
    double polyhedron_vol = 0.0;
    double link_volume = 0.0;            // 2 × polyhedron volume
};

RealizationReport verify_solid(SolidType s);

std::string report_json(const RealizationReport& rep);

} // namespace altlink
