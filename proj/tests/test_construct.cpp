#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "censym/canon.hpp"
#include "censym/construct.hpp"
#include "censym/homology.hpp"
#include "helpers.hpp"
#include "paper_tables.hpp"

using namespace censym;

static void check_cs_map(const CsMap& m, int vertices, int faces, long long chi,
                         std::size_t face_size) {
    CHECK(static_cast<int>(m.map.used_vertices().size()) == vertices);
    CHECK(m.map.faces().size() == static_cast<std::size_t>(faces));
    CHECK(euler_characteristic(m.map) == chi);
    CHECK(is_closed_map(m.map));
    CHECK(is_centrally_symmetric(m.map, m.inv));
    for (const auto& f : m.map.faces()) CHECK(f.size() == face_size);
}

TEST_CASE("seed maps") {
    check_cs_map(subdivided_cube(), 26, 24, 2, 4);
    check_cs_map(dodecahedron(), 20, 12, 2, 5);
    check_cs_map(hexagonal_torus(), 24, 12, 0, 6);
    check_cs_map(example_torus(), 12, 24, 0, 3);
    for (auto m : {subdivided_cube(), dodecahedron(), hexagonal_torus()})
        CHECK(is_polyhedral_map(m.map));
    CHECK(hexagonal_torus().inv ==
          Involution::from_cycles(24, tables::kHexagonalTorusInvolution));
    auto torus = example_torus();
    CHECK(homology_string(homology(as_complex(torus.map))) == "1,2,1");
}

TEST_CASE("connected sum replays the published 18-vertex torus sum") {
    auto t = example_torus();
    auto sum = cs_connected_sum(t, t, GluingSpec{{1, 2, 3}, {1, 2, 3}});
    CHECK(sum.map.vertex_count() == 18);
    CHECK(sum.map.faces().size() == 44);
    CHECK(euler_characteristic(sum.map) == -4);
    CHECK(is_centrally_symmetric(sum.map, sum.inv));
    CHECK(sum.inv == Involution::from_cycles(18, tables::kGluedTorusInvolution));

    Complex printed(18, facets_from_text(tables::kGluedTorusFacets));
    CHECK(is_combinatorial_surface(printed));
    CHECK(is_centrally_symmetric(
        printed, Involution::from_cycles(18, tables::kGluedTorusInvolution)));
    CHECK(are_isomorphic(printed, as_complex(sum.map)));
}

TEST_CASE("connected sum bookkeeping") {
    auto a = subdivided_cube(), b = dodecahedron();
    // size mismatch: quad against pentagon
    CHECK_THROWS_AS(cs_connected_sum(a, b, default_gluing(a, a)), std::invalid_argument);
    auto sum = cs_connected_sum(a, a);
    CHECK(euler_characteristic(sum.map) ==
          euler_characteristic(a.map) + euler_characteristic(a.map) - 4);
    CHECK(static_cast<int>(sum.map.used_vertices().size()) == 26 + 26 - 8);
}

TEST_CASE("quadrilateral genus family") {
    for (int g = 0; g <= 4; ++g) {
        auto s = quad_genus_surface(g);
        check_cs_map(s, 18 * g + 26, 0 + static_cast<int>(s.map.faces().size()),
                     2 - 2 * g, 4);
        CHECK(is_polyhedral_map(s.map));
        CHECK(is_orientable(s.map));
    }
    CHECK_THROWS(quad_genus_surface(-1));
}

TEST_CASE("pentagon genus family") {
    for (int g = 0; g <= 4; ++g) {
        auto s = pentagon_genus_surface(g);
        check_cs_map(s, 10 * g + 20, static_cast<int>(s.map.faces().size()),
                     2 - 2 * g, 5);
        CHECK(is_polyhedral_map(s.map));
        CHECK(is_orientable(s.map));
    }
}

TEST_CASE("pentagon genus 1 matches the published face list") {
    PolyhedralMap printed(40, tables::cycles(tables::kPentagonGenus1Faces));
    CHECK(printed.used_vertices().size() == 30);
    CHECK(is_polyhedral_map(printed));
    CHECK(euler_characteristic(printed) == 0);
    // pair the ten labels the map does not use so the involution is total
    auto inv = Involution::from_cycles(
        40, std::string(tables::kPentagonGenus1Involution) +
                "(1,2)(5,6)(7,10)(13,14)(16,17)");
    CHECK(is_centrally_symmetric(printed, inv));
    CHECK(are_isomorphic(printed, pentagon_genus_surface(1).map));
}

TEST_CASE("hexagon genus family") {
    for (int k = 1; k <= 3; ++k) {
        auto s = hexagon_genus_surface(k);
        check_cs_map(s, 24 + 12 * (k - 1), static_cast<int>(s.map.faces().size()),
                     2 - 2 * (2 * k - 1), 6);
        CHECK(is_orientable(s.map));
    }
    // the k = 2 sum glues faces that share neighbors across both boundary
    // cycles, so it is a closed map but not a polyhedral one; this is
    // inherent to hexagon-with-hexagon sums on this torus
    CHECK(is_polyhedral_map(hexagon_genus_surface(1).map));
    CHECK_FALSE(is_polyhedral_map(hexagon_genus_surface(2).map));
    CHECK_THROWS(hexagon_genus_surface(0));
}

TEST_CASE("hexagon genus 3 matches the corrected published face list") {
    PolyhedralMap printed(36, tables::cycles(tables::kHexagonGenus3Faces));
    CHECK(printed.used_vertices().size() == 36);
    CHECK(is_closed_map(printed));
    CHECK(euler_characteristic(printed) == -4);
    CHECK(is_orientable(printed));
    CHECK(are_isomorphic(printed, hexagon_genus_surface(2).map));
}

TEST_CASE("dual of the cube is the octahedron") {
    // the plain cube with the antipodal pairing
    PolyhedralMap cube(8, tables::cycles("[1,2,3,4][5,6,7,8][1,2,6,5]"
                                         "[2,3,7,6][3,4,8,7][4,1,5,8]"));
    CsMap cs{cube, Involution::from_cycles(8, "(1,7)(2,8)(3,5)(4,6)")};
    CHECK(is_centrally_symmetric(cs.map, cs.inv));
    auto dual = dual_map(cs);
    CHECK(dual.map.used_vertices().size() == 6);
    CHECK(dual.map.faces().size() == 8);
    CHECK(is_centrally_symmetric(dual.map, dual.inv));
    auto octa = helpers::from_orbits("123,124,135,145", 3);
    CHECK(are_isomorphic(as_complex(dual.map), octa));
    // double dual returns to the primal
    CHECK(are_isomorphic(dual_map(dual).map, cube));
}

TEST_CASE("duals of the seed maps are CS maps of the dual type") {
    for (auto m : {subdivided_cube(), dodecahedron(), hexagonal_torus()}) {
        auto d = dual_map(m);
        CHECK(is_closed_map(d.map));
        CHECK(is_centrally_symmetric(d.map, d.inv));
        CHECK(euler_characteristic(d.map) == euler_characteristic(m.map));
        CHECK(d.map.faces().size() == m.map.used_vertices().size());
        CHECK(d.map.used_vertices().size() == m.map.faces().size());
        CHECK(are_isomorphic(dual_map(d).map, m.map));
    }
    // dodecahedron dual: the icosahedron, 12 vertices, 20 triangles
    auto ico = dual_map(dodecahedron());
    for (const auto& f : ico.map.faces()) CHECK(f.size() == 3);
}

TEST_CASE("tightness relations") {
    auto octa = helpers::from_orbits("123,124,135,145", 3);
    auto inv3 = Involution::canonical(3);
    auto r6 = tightness_check(octa, &inv3);
    CHECK(r6.cs_checked);
    CHECK(r6.cs_tight);       // 2(m-1)(m-3) = 3(2-chi) at m=3, chi=2
    CHECK(r6.cs_edge_count);  // 12 = C(6,2) - 3

    auto torus = helpers::from_orbits("123,124,135,147,156,167,246,256", 4);
    auto inv4 = Involution::canonical(4);
    auto r8 = tightness_check(torus, &inv4);
    CHECK(r8.cs_tight);       // 2*3*1 = 3(2-0)
    CHECK(r8.cs_edge_count);  // 24 = C(8,2) - 4

    auto big = helpers::from_orbits(tables::kTenVertexRows[20].orbits, 5);
    auto inv5 = Involution::canonical(5);
    auto r10 = tightness_check(big, &inv5);
    CHECK_FALSE(r10.cs_tight);
    CHECK_FALSE(r10.cs_edge_count); // 30 edges < C(10,2) - 5
}
