#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "censym/complex.hpp"
#include "helpers.hpp"

using namespace censym;

TEST_CASE("make_simplex sorts and validates") {
    CHECK(make_simplex({3, 1, 2}) == Simplex{1, 2, 3});
    CHECK_THROWS(make_simplex({1, 1, 2}));
    CHECK_THROWS(make_simplex({0, 1}));
    CHECK_THROWS(make_simplex({-3}));
}

TEST_CASE("octahedron basics") {
    auto c = helpers::from_orbits("123,124,135,145", 3);
    CHECK(c.vertex_count() == 6);
    CHECK(c.dim() == 2);
    CHECK(c.facets().size() == 8);
    CHECK(face_vector(c) == FaceVector{6, 12, 8});
    CHECK(euler_characteristic(c) == 2);
    CHECK(c.face_count(0) == 6);
    CHECK(c.face_count(1) == 12);
    CHECK(c.contains_face({1, 2}));
    CHECK(c.contains_face({4}));
    CHECK_FALSE(c.contains_face({1, 6})); // antipodal pair is a non-edge
    CHECK_FALSE(c.contains_face({2, 5}));
    CHECK(is_connected(c));
    CHECK(is_closed_pseudomanifold(c));
    CHECK(is_combinatorial_surface(c));
    CHECK(orientation_assignment(c).has_value());
}

TEST_CASE("links") {
    auto c = helpers::from_orbits("123,124,135,145", 3);
    auto lk = link(c, 1);
    CHECK(lk.dim() == 1);
    CHECK(lk.facets().size() == 4); // vertex degree 4
    CHECK(is_single_cycle(lk));
    CHECK_THROWS(link(c, 7));
}

TEST_CASE("open and disconnected complexes are rejected") {
    Complex disk(3, {make_simplex({1, 2, 3})});
    CHECK_FALSE(is_closed_pseudomanifold(disk));
    CHECK_FALSE(is_combinatorial_surface(disk));

    Complex two(8, {make_simplex({1, 2, 3}), make_simplex({1, 2, 4}),
                    make_simplex({1, 3, 4}), make_simplex({2, 3, 4}),
                    make_simplex({5, 6, 7}), make_simplex({5, 6, 8}),
                    make_simplex({5, 7, 8}), make_simplex({6, 7, 8})});
    CHECK(is_closed_pseudomanifold(two));
    CHECK_FALSE(is_connected(two));
    CHECK_FALSE(is_combinatorial_surface(two));
}

TEST_CASE("boundary of the 4-simplex is a 3-manifold") {
    std::vector<Simplex> facets;
    for (int drop = 1; drop <= 5; ++drop) {
        Simplex f;
        for (int v = 1; v <= 5; ++v)
            if (v != drop) f.push_back(v);
        facets.push_back(f);
    }
    Complex c(5, facets);
    CHECK(c.dim() == 3);
    CHECK(is_combinatorial_3manifold(c));
    CHECK(euler_characteristic(c) == 0);
    CHECK(orientation_assignment(c).has_value());
}

TEST_CASE("pinched sphere fails the surface check") {
    // two tetrahedra boundary spheres sharing one vertex: closed
    // pseudomanifold? no -- the shared-vertex link is two disjoint cycles
    Complex pinch(7, {make_simplex({1, 2, 3}), make_simplex({1, 2, 4}),
                      make_simplex({1, 3, 4}), make_simplex({2, 3, 4}),
                      make_simplex({1, 5, 6}), make_simplex({1, 5, 7}),
                      make_simplex({1, 6, 7}), make_simplex({5, 6, 7})});
    CHECK(is_closed_pseudomanifold(pinch));
    CHECK(is_connected(pinch));
    CHECK_FALSE(is_single_cycle(link(pinch, 1)));
    CHECK_FALSE(is_combinatorial_surface(pinch));
}

TEST_CASE("facet validation") {
    CHECK_THROWS(Complex(4, {make_simplex({1, 2, 5})})); // label out of range
    CHECK_THROWS(Complex(4, {make_simplex({1, 2, 3}), make_simplex({1, 2, 3})}));
    CHECK_THROWS(Complex(5, {make_simplex({1, 2, 3}), make_simplex({4, 5})}));
    // unused labels are fine (links and maps with gaps need them)
    Complex gap(9, {make_simplex({2, 4, 9}), make_simplex({2, 4, 7}),
                    make_simplex({2, 7, 9}), make_simplex({4, 7, 9})});
    CHECK(gap.used_vertices() == std::vector<VertexLabel>{2, 4, 7, 9});
    CHECK(is_combinatorial_surface(gap));
}

TEST_CASE("non-orientable surface has no orientation assignment") {
    // minimal 6-vertex real projective plane
    Complex rp2(6, {make_simplex({1, 2, 3}), make_simplex({1, 2, 4}),
                    make_simplex({1, 3, 5}), make_simplex({1, 4, 6}),
                    make_simplex({1, 5, 6}), make_simplex({2, 3, 6}),
                    make_simplex({2, 4, 5}), make_simplex({2, 5, 6}),
                    make_simplex({3, 4, 5}), make_simplex({3, 4, 6})});
    CHECK(is_combinatorial_surface(rp2));
    CHECK(euler_characteristic(rp2) == 1);
    CHECK_FALSE(orientation_assignment(rp2).has_value());
}
