#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "censym/io.hpp"
#include "helpers.hpp"
#include "paper_tables.hpp"

using namespace censym;

TEST_CASE("simplex digit notation") {
    CHECK(simplex_to_text({1, 2, 3}) == "123");
    CHECK(simplex_to_text({9, 10, 11, 35}) == "9abz");
    CHECK(simplex_from_text("9abz") == Simplex{9, 10, 11, 35});
    CHECK(simplex_from_text("123") == Simplex{1, 2, 3});
}

TEST_CASE("bracket notation for large labels") {
    Simplex big{1, 2, 40};
    auto text = simplex_to_text(big);
    CHECK(text == "[1,2,40]");
    CHECK(simplex_from_text(text) == big);
    // bracket form also accepted for small labels
    CHECK(simplex_from_text("[3,1,2]") == Simplex{1, 2, 3});
}

TEST_CASE("facet list round trips") {
    auto facets = facets_from_text("123,124,135,145");
    CHECK(facets.size() == 4);
    CHECK(facets_to_text(facets) == "123,124,135,145");

    auto mixed = facets_from_text("[1,2,40],[2,3,41]");
    CHECK(mixed.size() == 2);
    CHECK(facets_to_text(mixed) == "[1,2,40],[2,3,41]");
}

TEST_CASE("complex record round trip") {
    auto c = helpers::from_orbits("123,124,135,145", 3);
    auto line = complex_to_record(c);
    auto back = complex_from_record(line);
    CHECK(back == c);
}

TEST_CASE("map record round trip") {
    PolyhedralMap m(24, tables::cycles(
        "[1,2,3,8,7,6][3,4,5,10,9,8][5,6,7,12,11,10][7,8,9,14,13,12]"
        "[9,10,11,16,15,14][11,12,13,18,17,16][13,14,15,20,19,18]"
        "[15,16,17,22,21,20][17,18,19,24,23,22][19,20,21,2,1,24]"
        "[21,22,23,4,3,2][23,24,1,6,5,4]"));
    auto line = map_to_record(m);
    auto back = map_from_record(line);
    CHECK(back == m);

    auto faces = map_faces_from_text(map_faces_to_text(m.faces()));
    CHECK(PolyhedralMap(24, faces) == m);
}

TEST_CASE("result record round trip") {
    ResultRecord r;
    r.orbit_reps = facets_from_text("123,124,135,145");
    r.n = 6;
    r.f = {6, 12, 8};
    r.homology = "1,0,1";
    r.orientable = true;
    r.canonical_hash = 0xdeadbeefcafe1234ull;
    auto line = result_to_record(r);
    CHECK(result_from_record(line) == r);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        complex_from_record("not a record", 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    }
    CHECK_THROWS_AS(simplex_from_text("1!3"), ParseError);
    CHECK_THROWS_AS(facets_from_text(""), ParseError);
    CHECK_THROWS_AS(map_from_record("12 garbage", 3), ParseError);
    CHECK_THROWS_AS(result_from_record("n=banana", 4), ParseError);
}
