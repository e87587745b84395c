#ifndef CENSYM_INVOLUTION_HPP
#define CENSYM_INVOLUTION_HPP

#include <string>
#include <vector>

#include "censym/complex.hpp"
#include "censym/polymap.hpp"

namespace censym {

/// Fixed-point-free involution on the labels 1..n (n even).
class Involution {
public:
    // Identity-free constructor from explicit images; img[v-1] is the image
    // of v. Must be an involution without fixed points.
    Involution(int n, std::vector<VertexLabel> img);

    // The central involution v <-> 2m+1-v on 2m labels.
    static Involution canonical(int m);

    int vertex_count() const { return n_; }

    VertexLabel operator()(VertexLabel v) const;

    Simplex apply(const Simplex& s) const;
    FaceCycle apply_cycle(const FaceCycle& f) const;

    bool operator==(const Involution& o) const {
        return n_ == o.n_ && img_ == o.img_;
    }

    // Transposition list "(1,12)(2,11)...", pairs ordered by smaller element.
    std::string to_cycles() const;

    // Parses "(a,b)(c,d)..." into an involution on n labels.
    static Involution from_cycles(int n, const std::string& text);

private:
    int n_;
    std::vector<VertexLabel> img_;
};

// The facet set is invariant under inv and no face of dimension >= 1 is
// mapped to itself setwise.
bool is_centrally_symmetric(const Complex& c, const Involution& inv);
bool is_centrally_symmetric(const PolyhedralMap& m, const Involution& inv);

/// An orbit {F, F^inv} of an admissible k-face: F and its image are disjoint.
struct Orbit {
    Simplex rep;   // lexicographically smaller member
    Simplex image; // inv(rep)
};

// All orbits of admissible k-simplices on labels 1..n under inv, sorted by
// representative.
std::vector<Orbit> admissible_face_orbits(int n, int k, const Involution& inv);

// The given facets together with their images, deduplicated.
std::vector<Simplex> orbit_closure(const std::vector<Simplex>& facets,
                                   const Involution& inv);

} // namespace censym

#endif
