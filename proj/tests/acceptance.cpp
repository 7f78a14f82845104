// End-to-end certification of the library's headline claims, one line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "altlink/classify.hpp"
#include "altlink/diagram.hpp"
#include "altlink/hypgeom.hpp"
#include "altlink/realize.hpp"
#include "oracles.hpp"

using namespace altlink;

namespace {

constexpr double kPi = std::numbers::pi;

const SolidType kSolids[] = {SolidType::Octahedron, SolidType::Cuboctahedron,
                             SolidType::Icosidodecahedron};

double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex random_point(std::mt19937_64& rng) {
    return Complex(4.0 * uniform(rng) - 2.0, 4.0 * uniform(rng) - 2.0);
}

// 1. the face-count equation has exactly three integer solutions
bool face_equation(std::string& detail) {
    auto sols = face_equation_solutions(100);
    detail = "over n in [3,100]:";
    for (auto [n, v] : sols) detail += " (" + std::to_string(n) + "," + std::to_string(v) + ")";
    return sols == std::vector<std::pair<int, int>>{{3, 6}, {4, 12}, {5, 30}};
}

// 2. the classification: the three solids and nothing else
bool classification_verdicts(std::string& detail) {
    bool ok = true;
    for (SolidType s : kSolids) {
        Classification c = classify(reference_diagram(s));
        ok = ok && c.verdict == Verdict::BothTotallyGeodesic && c.solid && *c.solid == s;
    }
    Classification trefoil = classify(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
    ok = ok && trefoil.verdict == Verdict::PrerequisiteFailed;

    const int sizes[] = {8, 9, 10, 11, 13, 14, 15, 16, 17, 18, 19, 20};
    int geodesic = 0;
    for (int i = 0; i < 200; ++i) {
        RandomDiagramOptions opts;
        opts.crossings = sizes[i % 12];
        opts.seed = 1000 + i;
        opts.forbid_bigons = true;
        if (classify(random_alternating_diagram(opts)).verdict ==
            Verdict::BothTotallyGeodesic)
            ++geodesic;
    }
    detail = "3 reference solids, trefoil, 200 random bigon-free diagrams (" +
             std::to_string(geodesic) + " false positives)";
    return ok && geodesic == 0;
}

// 3. the weaving census: W(3,3) and W(4,4) only, in under two seconds
bool weaving_families(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = weaving_census(8, 8);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<std::pair<int, int>> found;
    for (const CensusRow& r : rows)
        if (r.result.verdict == Verdict::BothTotallyGeodesic) found.push_back({r.p, r.q});
    char buf[96];
    std::snprintf(buf, sizeof(buf), "census p,q <= 8: %zu geodesic rows in %.3f s",
                  found.size(), secs);
    detail = buf;
    return found == std::vector<std::pair<int, int>>{{3, 3}, {4, 4}} && secs < 2.0;
}

// 4. every bigon-free diagram contains a triangle
bool triangle_existence(std::string& detail) {
    const int sizes[] = {6, 8, 9, 10, 11, 12, 13, 14, 15, 16};
    int with_triangle = 0;
    for (int i = 0; i < 200; ++i) {
        RandomDiagramOptions opts;
        opts.crossings = sizes[i % 10];
        opts.seed = 4000 + i;
        opts.forbid_bigons = true;
        DiagramAnalysis a = analyze(random_alternating_diagram(opts));
        bool clean = a.face_size_histogram.size() > 3 && a.face_size_histogram[1] == 0 &&
                     a.face_size_histogram[2] == 0;
        if (clean && a.face_size_histogram[3] > 0) ++with_triangle;
    }
    detail = std::to_string(with_triangle) + "/200 bigon-free diagrams have a 3-gon";
    return with_triangle == 200;
}

// 5. all dihedral angles of the inscribed solids are right
bool right_angles(std::string& detail) {
    int counted = 0;
    double worst = 0.0;
    for (SolidType s : kSolids) {
        for (double a : dihedral_angles(inscribe_solid(s))) {
            worst = std::max(worst, std::abs(a - kPi / 2.0));
            ++counted;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d angles, max |angle - pi/2| = %.3g", counted, worst);
    detail = buf;
    return counted == 12 + 24 + 60 && worst <= 1e-9;
}

// 6. all faces are regular ideal polygons under the cross-ratio criterion
bool regular_faces(std::string& detail) {
    bool targets = std::abs(regular_ngon_target(4).value().real() - 2.0) <= 1e-12 &&
                   std::abs(regular_ngon_target(5).value().real() -
                            (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-12;
    int counted = 0;
    double worst = 0.0;
    for (SolidType s : kSolids) {
        for (double x : face_residuals(inscribe_solid(s))) {
            worst = std::max(worst, x);
            ++counted;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d faces, max residual = %.3g", counted, worst);
    detail = buf;
    return targets && counted == 8 + 14 + 32 && worst <= 1e-9;
}

// 7. every cusp cross-section is a rectangle
bool cusp_rectangles(std::string& detail) {
    int counted = 0;
    double worst_angle = 0.0, worst_side = 0.0;
    for (SolidType s : kSolids) {
        for (const CuspSection& c : cusp_sections(inscribe_solid(s))) {
            for (double a : c.interior_angles)
                worst_angle = std::max(worst_angle, std::abs(a - kPi / 2.0));
            worst_side = std::max(worst_side,
                                  std::abs(c.side_lengths[0] - c.side_lengths[2]));
            worst_side = std::max(worst_side,
                                  std::abs(c.side_lengths[1] - c.side_lengths[3]));
            ++counted;
        }
    }
    char buf[112];
    std::snprintf(buf, sizeof(buf), "%d quads, max angle dev = %.3g, max side dev = %.3g",
                  counted, worst_angle, worst_side);
    detail = buf;
    return counted == 6 + 12 + 30 && worst_angle <= 1e-9 && worst_side <= 1e-9;
}

// 8. gluing orbits: four edges per class, one class per crossing
bool gluing_edge_classes(std::string& detail) {
    bool ok = true;
    detail = "classes per solid:";
    for (SolidType s : kSolids) {
        CheckerboardDecomposition dec = checkerboard_polyhedra(reference_diagram(s));
        auto classes = edge_classes(dec.top, dec.gluing);
        bool all4 = true;
        for (const auto& c : classes) all4 = all4 && c.size() == 4;
        ok = ok && all4 && static_cast<int>(classes.size()) == dec.top.vertex_count;
        detail += " " + std::to_string(classes.size()) +
                  (all4 ? "x4" : "(bad sizes)");
    }
    return ok;
}

// 9. volume pipeline: Lobachevsky value for the octahedron, coning
//    independence, and the doubled link volume for all three solids
bool volumes(std::string& detail) {
    IdealRealization oct = inscribe_solid(SolidType::Octahedron);
    double v_oct = polyhedron_volume(oct);
    bool ok = std::abs(v_oct - 8.0 * lobachevsky(kPi / 4.0)) <= 1e-8 &&
              std::abs(v_oct - 8.0 * oracles::lobachevsky_quadrature(kPi / 4.0)) <= 1e-8;

    double worst_spread = 0.0;
    for (SolidType s : kSolids) {
        IdealRealization r = inscribe_solid(s);
        double v0 = polyhedron_volume(r, 0, 0);
        double v1 = polyhedron_volume(r, r.combinatorics.vertex_count - 1, 1);
        worst_spread = std::max(worst_spread, std::abs(v1 - v0));
        ok = ok && std::abs(v1 - v0) <= 1e-8;
        ok = ok && std::abs(right_angled_volume(s) - 2.0 * v0) <= 1e-8;
    }
    char buf[112];
    std::snprintf(buf, sizeof(buf),
                  "octahedron = %.9f (8 Lob(pi/4)), coning spread <= %.3g, vol_perp = 2 vol",
                  v_oct, worst_spread);
    detail = buf;
    return ok;
}

// 10. numeric kernel: series vs quadrature, and Mobius invariance
bool numeric_kernel(std::string& detail) {
    double worst_lob = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double theta = kPi * k / 101.0;
        worst_lob = std::max(worst_lob, std::abs(lobachevsky(theta) -
                                                 oracles::lobachevsky_quadrature(theta)));
    }

    std::mt19937_64 rng(20260822);
    double worst_mob = 0.0;
    int trials = 0;
    while (trials < 100) {
        Complex p = random_point(rng), q = random_point(rng), r = random_point(rng),
                s = random_point(rng);
        if (std::abs(p - q) < 0.05 || std::abs(p - r) < 0.05 || std::abs(p - s) < 0.05 ||
            std::abs(q - r) < 0.05 || std::abs(q - s) < 0.05 || std::abs(r - s) < 0.05)
            continue;
        MobiusMap m;
        m.a = random_point(rng);
        m.b = random_point(rng);
        m.c = random_point(rng);
        m.d = random_point(rng);
        if (std::abs(m.determinant()) <= 0.1) continue;
        ExtendedComplex r1 = cross_ratio(p, q, r, s);
        ExtendedComplex r2 = cross_ratio(m.apply(p), m.apply(q), m.apply(r), m.apply(s));
        worst_mob = std::max(worst_mob, std::abs(r1.value() - r2.value()));
        ++trials;
    }
    char buf[112];
    std::snprintf(buf, sizeof(buf),
                  "series vs quadrature <= %.3g (100 angles), invariance <= %.3g (100 maps)",
                  worst_lob, worst_mob);
    detail = buf;
    return worst_lob <= 1e-10 && worst_mob <= 1e-10;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*check)(std::string&);
    };
    const Criterion criteria[] = {
        {"face equation", face_equation},
        {"classification verdicts", classification_verdicts},
        {"weaving census", weaving_families},
        {"triangle existence", triangle_existence},
        {"right angles", right_angles},
        {"regular faces", regular_faces},
        {"cusp rectangles", cusp_rectangles},
        {"gluing edge classes", gluing_edge_classes},
        {"volumes", volumes},
        {"numeric kernel", numeric_kernel},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%2d] %s %-22s %s\n", index, ok ? "PASS" : "FAIL", c.name,
                    detail.c_str());
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
