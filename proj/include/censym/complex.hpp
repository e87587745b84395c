#ifndef CENSYM_COMPLEX_HPP
#define CENSYM_COMPLEX_HPP

#include <memory>
#include <optional>
#include <vector>

namespace censym {

// Vertex labels are positive integers 1..n.
using VertexLabel = int;

// A simplex is a strictly increasing sequence of vertex labels.
using Simplex = std::vector<VertexLabel>;

// Sorts and validates a vertex list into a Simplex; throws on duplicates or
// non-positive labels.
Simplex make_simplex(std::vector<VertexLabel> vertices);

// Face vector (f_0, ..., f_d).
using FaceVector = std::vector<long long>;

/// Pure simplicial complex given by its facet set. Immutable after
/// construction; the downward closure is computed lazily and memoized, so a
/// Complex is cheap to copy and safe to share across threads.
class Complex {
public:
    // Empty complex on n labels.
    explicit Complex(int n);

    // Facets must be pairwise distinct simplices of equal dimension with
    // labels in 1..n. Unused labels are permitted (links produce them);
    // density 1..n is enforced at parse/enumeration boundaries instead.
    Complex(int n, std::vector<Simplex> facets);

    int vertex_count() const { return n_; }

    // Dimension of the facets; -1 for the empty complex.
    int dim() const { return dim_; }

    const std::vector<Simplex>& facets() const { return facets_; }

    // All k-faces of the downward closure, sorted lexicographically.
    const std::vector<Simplex>& faces(int k) const;

    // Number of k-faces.
    long long face_count(int k) const;

    // Labels that occur in some facet, ascending.
    std::vector<VertexLabel> used_vertices() const;

    bool empty() const { return facets_.empty(); }

    bool contains_face(const Simplex& s) const;

    bool operator==(const Complex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    int n_;
    int dim_;
    std::vector<Simplex> facets_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

FaceVector face_vector(const Complex& c);

long long euler_characteristic(const Complex& c);

// Subcomplex {sigma \ {v} : v in sigma, sigma facet}; throws if v occurs in
// no facet.
Complex link(const Complex& c, VertexLabel v);

// Every (d-1)-face lies in exactly two facets. Requires dim >= 1.
bool is_closed_pseudomanifold(const Complex& c);

// Vertex-edge graph of the used vertices is connected.
bool is_connected(const Complex& c);

// The 1-dimensional complex is a single closed cycle.
bool is_single_cycle(const Complex& c);

// Closed, connected, and every vertex link is one cycle. Requires dim == 2.
bool is_combinatorial_surface(const Complex& c);

// Closed, connected, and every vertex link is a 2-sphere (combinatorial
// surface with chi = 2). Requires dim == 3.
bool is_combinatorial_3manifold(const Complex& c);

// Coherent facet orientation (+1/-1 per facet, in facet order) where adjacent
// facets induce opposite orientations on shared ridges, or nullopt when the
// complex is non-orientable. Throws if c is not a closed pseudomanifold.
std::optional<std::vector<int>> orientation_assignment(const Complex& c);

} // namespace censym

#endif
