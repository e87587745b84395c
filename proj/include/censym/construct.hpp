#ifndef CENSYM_CONSTRUCT_HPP
#define CENSYM_CONSTRUCT_HPP

#include <optional>

#include "censym/complex.hpp"
#include "censym/involution.hpp"
#include "censym/polymap.hpp"

namespace censym {

/// A polyhedral map together with the fixed-point-free involution that makes
/// it centrally symmetric.
struct CsMap {
    PolyhedralMap map;
    Involution inv;
};

/// Which faces of two maps to glue, with a positional vertex
/// correspondence: face_a[i] is identified with face_b[i], and the involution
/// images of the two faces are identified the same way.
struct GluingSpec {
    FaceCycle face_a;
    FaceCycle face_b;
};

// Quadrangulated sphere: the cube with every face divided into four
// quadrilaterals; 26 vertices, symmetric under coordinatewise reflection.
CsMap subdivided_cube();

// The 12 pentagons of the dodecahedron.
CsMap dodecahedron();

// Torus tiled by 12 hexagons on 24 vertices.
CsMap hexagonal_torus();

// Triangulated torus on 12 vertices with 24 triangles, symmetric under the
// canonical involution.
CsMap example_torus();

// Symmetric connected sum: removes face_a and its involution image from a,
// face_b and its image from b, and identifies the boundary cycles. The
// result keeps a's labels; b's remaining vertices are appended densely.
// chi(result) = chi(a) + chi(b) - 4; n(result) = n(a) + n(b) - 2q.
// Throws std::invalid_argument per violated gluing precondition and
// std::runtime_error when the glued object fails validation.
CsMap cs_connected_sum(const CsMap& a, const CsMap& b, const GluingSpec& g);

// Deterministic gluing choice: lexicographically least faces whose
// involution orbits satisfy the disjointness and no-edge conditions, with
// the first rotation/reflection of face_b that yields a valid (and, for
// orientable inputs, orientable) sum.
GluingSpec default_gluing(const CsMap& a, const CsMap& b);

CsMap cs_connected_sum(const CsMap& a, const CsMap& b);

// All-quadrilateral surface of genus g on 18g + 26 vertices.
CsMap quad_genus_surface(int g);

// All-pentagon surface of genus g on 10g + 20 vertices.
CsMap pentagon_genus_surface(int g);

// All-hexagon surface of genus 2k - 1 on 24 + 12(k - 1) vertices.
CsMap hexagon_genus_surface(int k);

// Dual map: one vertex per face, one face per vertex star; the involution
// pairs each face-vertex with its orbit partner.
CsMap dual_map(const CsMap& m);

/// Tightness relations for a triangulated surface on n vertices.
struct TightnessReport {
    long long n = 0;
    long long chi = 0;
    long long edges = 0;
    bool neighbourly_tight = false; // (n-3)(n-4) = 6(2-chi)
    bool cs_checked = false;        // the three fields below are meaningful
    bool cs_edge_count = false;     // edges = C(n,2) - n/2
    bool cs_tight = false;          // 2(n/2-1)(n/2-3) = 3(2-chi)
    bool cs_tight_possible = false; // an integer chi satisfies the relation
};

TightnessReport tightness_check(const Complex& c, const Involution* inv = nullptr);

} // namespace censym

#endif
