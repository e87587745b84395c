#ifndef CENSYM_POLYMAP_HPP
#define CENSYM_POLYMAP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "censym/complex.hpp"

namespace censym {

// Face cycle normalized to the lexicographically least rotation/reflection.
using FaceCycle = std::vector<VertexLabel>;

FaceCycle normalize_cycle(FaceCycle cycle);

/// A map on a closed surface given by its face cycles. Faces are stored
/// normalized and sorted, so equality is structural.
class PolyhedralMap {
public:
    explicit PolyhedralMap(int n) : n_(n) {}
    PolyhedralMap(int n, std::vector<FaceCycle> faces);

    int vertex_count() const { return n_; }
    const std::vector<FaceCycle>& faces() const { return faces_; }

    // Distinct undirected edges (u < v), sorted.
    std::vector<std::pair<VertexLabel, VertexLabel>> edges() const;

    std::vector<VertexLabel> used_vertices() const;

    bool has_face(const FaceCycle& cycle) const;

    bool operator==(const PolyhedralMap& o) const {
        return n_ == o.n_ && faces_ == o.faces_;
    }

private:
    int n_;
    std::vector<FaceCycle> faces_;
};

long long euler_characteristic(const PolyhedralMap& m);

FaceVector face_vector(const PolyhedralMap& m); // (V, E, F)

// Edge double cover and a single closed face cycle around every vertex:
// the map lies on a closed surface.
bool is_closed_map(const PolyhedralMap& m);

// is_closed_map plus pairwise face intersections empty / one vertex /
// one edge.
bool is_polyhedral_map(const PolyhedralMap& m);

// Faces incident to v in rotation order (indices into m.faces()).
// Requires is_polyhedral_map-like local structure at v.
std::vector<int> vertex_face_cycle(const PolyhedralMap& m, VertexLabel v);

// Coherent face traversal directions, or nullopt when non-orientable.
std::optional<std::vector<int>> orientation_assignment(const PolyhedralMap& m);

bool is_orientable(const PolyhedralMap& m);

// A map all of whose faces are triangles, as a simplicial complex.
Complex as_complex(const PolyhedralMap& m);

PolyhedralMap as_map(const Complex& c); // requires dim == 2

} // namespace censym

#endif
