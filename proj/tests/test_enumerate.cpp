#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "censym/enumerate.hpp"
#include "censym/io.hpp"
#include "helpers.hpp"
#include "paper_tables.hpp"

using namespace censym;

namespace {

// Brute force: classify every subset of admissible facet orbits and return
// the canonical forms of the valid CS d-manifolds, deduplicated.
std::set<std::string> brute_force_classes(int m, int d) {
    const int n = 2 * m;
    auto inv = Involution::canonical(m);
    auto orbits = admissible_face_orbits(n, d, inv);
    REQUIRE(orbits.size() <= 16);
    std::set<std::string> classes;
    for (std::uint32_t pick = 1; pick < (1u << orbits.size()); ++pick) {
        std::vector<Simplex> facets;
        for (std::size_t i = 0; i < orbits.size(); ++i)
            if (pick & (1u << i)) {
                facets.push_back(orbits[i].rep);
                facets.push_back(orbits[i].image);
            }
        Complex c(n, facets);
        if (static_cast<int>(c.used_vertices().size()) != n) continue;
        if (d == 2 ? !is_combinatorial_surface(c) : !is_combinatorial_3manifold(c))
            continue;
        if (!is_centrally_symmetric(c, inv)) continue;
        classes.insert(canonical_form(c).text);
    }
    return classes;
}

std::set<std::string> result_classes(const std::vector<EnumerationResult>& rs) {
    std::set<std::string> out;
    for (const auto& r : rs) out.insert(r.canonical.text);
    return out;
}

std::map<std::string, int> histogram(const std::vector<EnumerationResult>& rs) {
    std::map<std::string, int> h;
    for (const auto& r : rs) ++h[homology_string(r.homology)];
    return h;
}

} // namespace

TEST_CASE("m=3 surfaces: the octahedron alone") {
    SearchStats stats;
    auto rs = enumerate_cs_surfaces(3, {}, &stats);
    REQUIRE(rs.size() == 1);
    CHECK(facets_to_text(rs[0].orbit_reps) == "123,124,135,145");
    CHECK(face_vector(rs[0].complex) == FaceVector{6, 12, 8});
    CHECK(homology_string(rs[0].homology) == "1,0,1");
    CHECK(rs[0].orientable);
    CHECK(stats.results_emitted == 1);
    CHECK(result_classes(rs) == brute_force_classes(3, 2));
}

TEST_CASE("m=4 surfaces match the subset brute force") {
    auto rs = enumerate_cs_surfaces(4);
    CHECK(rs.size() == tables::kSurfaceClassesM4);
    CHECK(histogram(rs) == std::map<std::string, int>{{"1,0,1", 2}, {"1,2,1", 1}});
    CHECK(result_classes(rs) == brute_force_classes(4, 2));
}

TEST_CASE("published n=8 rows are valid, covered, and contain a duplicate pair") {
    auto rs = enumerate_cs_surfaces(4);
    auto classes = result_classes(rs);
    std::set<std::string> row_classes;
    for (const auto& row : tables::kEightVertexRows) {
        auto c = helpers::from_orbits(row.orbits, 4);
        CHECK(is_combinatorial_surface(c));
        CHECK(is_centrally_symmetric(c, Involution::canonical(4)));
        CHECK(homology_string(homology(c)) ==
              (row.type == 's' ? "1,0,1" : "1,2,1"));
        auto cf = canonical_form(c).text;
        CHECK(classes.count(cf) == 1);
        row_classes.insert(cf);
    }
    // 5 published rows span only 3 classes; the witness pair coincides
    CHECK(row_classes == classes);
    auto a = helpers::from_orbits(
        tables::kEightVertexRows[tables::kEightVertexDuplicateA].orbits, 4);
    auto b = helpers::from_orbits(
        tables::kEightVertexRows[tables::kEightVertexDuplicateB].orbits, 4);
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("m=5 surfaces: 18 classes spanned exactly by the 56 published rows") {
    auto rs = enumerate_cs_surfaces(5);
    CHECK(rs.size() == tables::kSurfaceClassesM5);
    CHECK(histogram(rs) == std::map<std::string, int>{
                               {"1,0,1", 5}, {"1,2,1", 9}, {"1,1+Z2,0", 4}});
    auto classes = result_classes(rs);
    std::set<std::string> row_classes;
    for (const auto& row : tables::kTenVertexRows) {
        auto c = helpers::from_orbits(row.orbits, 5);
        CHECK(is_combinatorial_surface(c));
        CHECK(is_centrally_symmetric(c, Involution::canonical(5)));
        const char* expect = row.type == 's'   ? "1,0,1"
                             : row.type == 't' ? "1,2,1"
                                               : "1,1+Z2,0";
        CHECK(homology_string(homology(c)) == expect);
        row_classes.insert(canonical_form(c).text);
    }
    CHECK(row_classes == classes); // coverage in both directions
}

TEST_CASE("3-manifold enumeration at m=4 and m=5") {
    auto r4 = enumerate_cs_3manifolds(4);
    REQUIRE(r4.size() == tables::kThreeManifoldClassesM4);
    CHECK(homology_string(r4[0].homology) == "1,0,0,1"); // the 16-cell boundary
    CHECK(face_vector(r4[0].complex) == FaceVector{8, 24, 32, 16});
    CHECK(result_classes(r4) == brute_force_classes(4, 3));

    auto r5 = enumerate_cs_3manifolds(5);
    CHECK(r5.size() == tables::kThreeManifoldClassesM5);
    CHECK(histogram(r5) ==
          std::map<std::string, int>{{"1,0,0,1", 8}, {"1,1,1,1", 1}});
    for (const auto& r : r5) CHECK(r.orientable);
}

TEST_CASE("results are deterministic across job counts") {
    EnumerateOptions two;
    two.jobs = 2;
    auto a = enumerate_cs_surfaces(5);
    auto b = enumerate_cs_surfaces(5, two);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].complex == b[i].complex);
        CHECK(a[i].orbit_reps == b[i].orbit_reps);
        CHECK(a[i].canonical.text == b[i].canonical.text);
    }
}

TEST_CASE("checkpoint resume reproduces the full run") {
    const std::string path = "test_enumerate_m4.ckpt";
    std::remove(path.c_str());
    EnumerateOptions opt;
    opt.checkpoint_path = path;
    auto full = enumerate_cs_surfaces(4, opt);

    // drop half the task-completion markers: resume must redo those tasks
    // and arrive at the same classes
    std::ifstream in(path);
    std::string line, kept;
    int tasks = 0;
    while (std::getline(in, line)) {
        if (line.rfind("T ", 0) == 0 && ++tasks % 2 == 0) continue;
        kept += line + '\n';
    }
    in.close();
    const std::string partial = "test_enumerate_m4_partial.ckpt";
    std::ofstream(partial) << kept;

    EnumerateOptions res;
    res.checkpoint_path = partial;
    res.resume = true;
    SearchStats stats;
    auto resumed = enumerate_cs_surfaces(4, res, &stats);
    REQUIRE(resumed.size() == full.size());
    for (std::size_t i = 0; i < full.size(); ++i)
        CHECK(resumed[i].complex == full[i].complex);

    // resuming a finished checkpoint does no further search below the split
    EnumerateOptions done;
    done.checkpoint_path = path;
    done.resume = true;
    SearchStats again;
    auto redo = enumerate_cs_surfaces(4, done, &again);
    CHECK(redo.size() == full.size());
    CHECK(again.complete_candidates <= stats.complete_candidates);
    std::remove(path.c_str());
    std::remove(partial.c_str());
}

TEST_CASE("resume rejects mismatched checkpoints") {
    const std::string path = "test_enumerate_bad.ckpt";
    std::ofstream(path) << "censym-checkpoint 1 m 5 dim 2 split 4\n";
    EnumerateOptions opt;
    opt.checkpoint_path = path;
    opt.resume = true;
    CHECK_THROWS(enumerate_cs_surfaces(4, opt));
    std::remove(path.c_str());
}
