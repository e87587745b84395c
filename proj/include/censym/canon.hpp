#ifndef CENSYM_CANON_HPP
#define CENSYM_CANON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "censym/complex.hpp"
#include "censym/polymap.hpp"

namespace censym {

/// Relabeling-invariant fingerprint: the lexicographically least facet list
/// over all label bijections, serialized, plus a 64-bit hash of that text.
struct CanonicalForm {
    std::string text;
    std::uint64_t hash;

    bool operator==(const CanonicalForm& o) const { return text == o.text; }
    bool operator<(const CanonicalForm& o) const { return text < o.text; }
};

std::uint64_t fnv1a64(const std::string& s);

// Complex with facets mapped through perm (old label -> new label); perm is
// 1-indexed via perm[v-1].
Complex relabel(const Complex& c, const std::vector<VertexLabel>& perm);

// Throws std::invalid_argument when more than max_vertices labels are used;
// pass a larger bound explicitly for big complexes.
CanonicalForm canonical_form(const Complex& c, int max_vertices = 16);

// True when some label bijection carries the facet set of a onto b. Uses
// cheap invariants (face vector, vertex degree multiset) before canonical
// forms.
bool are_isomorphic(const Complex& a, const Complex& b);

// Canonical form of a polyhedral map under label bijections; faces of any
// size, rotations and reflections of face cycles ignored.
CanonicalForm canonical_form(const PolyhedralMap& m);

bool are_isomorphic(const PolyhedralMap& a, const PolyhedralMap& b);

} // namespace censym

#endif
