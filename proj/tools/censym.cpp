// Command line front end: enumerate centrally symmetric manifolds, build
// the constructive families, and verify/classify objects from record files.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "censym/canon.hpp"
#include "censym/complex.hpp"
#include "censym/construct.hpp"
#include "censym/enumerate.hpp"
#include "censym/homology.hpp"
#include "censym/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

int default_jobs() {
    if (const char* env = std::getenv("CSM_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw censym::ParseError(0, "cannot open output file " + path);
    return file;
}

// One parsed input line: either a simplicial complex or a polyhedral map.
struct Object {
    std::optional<censym::Complex> complex;
    std::optional<censym::PolyhedralMap> map;
};

std::vector<Object> read_objects(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw censym::ParseError(0, "cannot open input file " + path);
    std::vector<Object> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n=", 0) == 0) {
            auto rec = censym::result_from_record(line, lineno);
            auto inv = censym::Involution::canonical(rec.n / 2);
            out.push_back({censym::Complex(
                               rec.n, censym::orbit_closure(rec.orbit_reps, inv)),
                           std::nullopt});
            continue;
        }
        // "n dim facet-list" (complex) or "n face-list" (map)
        std::istringstream probe(line);
        int n;
        std::string second;
        probe >> n >> second;
        if (!second.empty() && second[0] == '[')
            out.push_back({std::nullopt, censym::map_from_record(line, lineno)});
        else
            out.push_back({censym::complex_from_record(line, lineno), std::nullopt});
    }
    return out;
}

censym::ResultRecord to_record(const censym::EnumerationResult& r) {
    censym::ResultRecord rec;
    rec.orbit_reps = r.orbit_reps;
    rec.n = r.complex.vertex_count();
    rec.f = censym::face_vector(r.complex);
    rec.homology = censym::homology_string(r.homology);
    rec.orientable = r.orientable;
    rec.canonical_hash = r.canonical.hash;
    return rec;
}

int cmd_enumerate(int dim, int m, int jobs, const std::string& checkpoint,
                  bool resume, const std::string& output) {
    censym::EnumerateOptions opt;
    opt.jobs = jobs;
    opt.checkpoint_path = checkpoint;
    opt.resume = resume;
    censym::SearchStats stats;
    auto results = dim == 2 ? censym::enumerate_cs_surfaces(m, opt, &stats)
                            : censym::enumerate_cs_3manifolds(m, opt, &stats);

    std::ofstream file;
    auto& os = open_output(file, output);
    std::map<std::string, int> histogram;
    for (const auto& r : results) {
        os << censym::result_to_record(to_record(r)) << '\n';
        ++histogram[censym::homology_string(r.homology)];
    }
    std::cerr << "results: " << results.size() << " (nodes "
              << stats.nodes_expanded << ", candidates "
              << stats.complete_candidates << ", duplicates "
              << stats.duplicates_rejected << ")\n";
    std::cerr << "count per homology:\n";
    for (const auto& [h, c] : histogram)
        std::cerr << "  (" << h << "): " << c << '\n';
    return kExitOk;
}

int emit_map(const censym::CsMap& m, const std::string& format,
             const std::string& output) {
    std::ofstream file;
    auto& os = open_output(file, output);
    if (format == "paper-text")
        os << censym::map_faces_to_text(m.map.faces()) << '\n';
    else
        os << censym::map_to_record(m.map) << '\n';
    os << "# involution " << m.inv.to_cycles() << '\n';
    return kExitOk;
}

int cmd_construct(const std::string& kind, int genus, int k,
                  const std::string& input, const std::string& format,
                  const std::string& output) {
    censym::CsMap result = [&] {
        if (kind == "cube") return censym::subdivided_cube();
        if (kind == "dodecahedron") return censym::dodecahedron();
        if (kind == "hextorus") return censym::hexagonal_torus();
        if (kind == "extorus") return censym::example_torus();
        if (kind == "quad") return censym::quad_genus_surface(genus);
        if (kind == "pentagon") return censym::pentagon_genus_surface(genus);
        if (kind == "hexagon") return censym::hexagon_genus_surface(k);
        if (kind == "dual") {
            auto objs = read_objects(input);
            if (objs.empty() || !objs.front().map)
                throw censym::ParseError(0, "dual needs a map record as input");
            const auto& pm = *objs.front().map;
            // the involution travels on a comment line; recover it instead
            // by matching faces to their antipodes is not possible in
            // general, so require the canonical pairing on 2m labels
            auto inv = censym::Involution::canonical(pm.vertex_count() / 2);
            return censym::dual_map({pm, inv});
        }
        throw CLI::ValidationError("unknown construction '" + kind + "'");
    }();
    return emit_map(result, format, output);
}

int cmd_verify(const std::string& input, const std::string& involution) {
    auto objs = read_objects(input);
    bool ok = true;
    int idx = 0;
    for (const auto& obj : objs) {
        ++idx;
        std::string verdict;
        if (obj.complex) {
            const auto& c = *obj.complex;
            auto inv = involution.empty()
                           ? censym::Involution::canonical(c.vertex_count() / 2)
                           : censym::Involution::from_cycles(c.vertex_count(),
                                                             involution);
            bool manifold = c.dim() == 2   ? censym::is_combinatorial_surface(c)
                            : c.dim() == 3 ? censym::is_combinatorial_3manifold(c)
                                           : false;
            bool cs = censym::is_centrally_symmetric(c, inv);
            ok = ok && manifold && cs;
            verdict = std::string(manifold ? "manifold" : "NOT-manifold") +
                      (cs ? " cs" : " NOT-cs");
        } else {
            const auto& m = *obj.map;
            auto inv = involution.empty()
                           ? censym::Involution::canonical(m.vertex_count() / 2)
                           : censym::Involution::from_cycles(m.vertex_count(),
                                                             involution);
            bool poly = censym::is_polyhedral_map(m);
            bool cs = poly && censym::is_centrally_symmetric(m, inv);
            ok = ok && poly && cs;
            verdict = std::string(poly ? "polyhedral" : "NOT-polyhedral") +
                      (cs ? " cs" : " NOT-cs");
        }
        std::cout << "object " << idx << ": " << verdict << '\n';
    }
    return ok ? kExitOk : kExitVerification;
}

int cmd_homology(const std::string& input) {
    for (const auto& obj : read_objects(input)) {
        censym::Complex c = obj.complex ? *obj.complex
                                        : censym::as_complex(*obj.map);
        std::cout << censym::homology_string(censym::homology(c)) << '\n';
    }
    return kExitOk;
}

int cmd_canon(const std::string& input) {
    for (const auto& obj : read_objects(input)) {
        auto cf = obj.complex
                      ? censym::canonical_form(
                            *obj.complex,
                            std::max(16, obj.complex->vertex_count()))
                      : censym::canonical_form(*obj.map);
        std::cout << std::hex << cf.hash << std::dec << ' ' << cf.text << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"centrally symmetric manifold enumeration and construction"};
    app.require_subcommand(1);

    int dim = 2, m = 3, jobs = default_jobs();
    std::string checkpoint, output, input, involution, format = "structured";
    bool resume = false;
    int genus = 0, k = 1;
    std::string kind;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate CS manifolds");
    enumerate->add_option("--dim", dim, "facet dimension")->check(CLI::IsMember({2, 3}));
    enumerate->add_option("--m", m, "half the vertex count")->required();
    enumerate->add_option("--jobs", jobs, "worker count (default $CSM_JOBS or 1)");
    enumerate->add_option("--checkpoint", checkpoint, "checkpoint file path");
    enumerate->add_flag("--resume", resume, "resume from the checkpoint file");
    enumerate->add_option("--output", output, "result file (default stdout)");

    auto* construct = app.add_subcommand("construct", "build a CS map");
    construct->add_option("kind", kind,
                          "cube|dodecahedron|hextorus|extorus|quad|pentagon|hexagon|dual")
        ->required();
    construct->add_option("--genus", genus, "genus for quad/pentagon families");
    construct->add_option("--k", k, "step for the hexagon family (genus 2k-1)");
    construct->add_option("--input", input, "input map record (for dual)");
    construct->add_option("--format", format, "structured | paper-text")
        ->check(CLI::IsMember({"structured", "paper-text"}));
    construct->add_option("--output", output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "validate objects from a file");
    verify->add_option("--input", input, "record file")->required();
    verify->add_option("--involution", involution, "cycle notation override");

    auto* hom = app.add_subcommand("homology", "homology of objects from a file");
    hom->add_option("--input", input, "record file")->required();

    auto* canon = app.add_subcommand("canon", "canonical forms of objects");
    canon->add_option("--input", input, "record file")->required();

    try {
        app.parse(argc, argv);
        if (enumerate->parsed())
            return cmd_enumerate(dim, m, jobs, checkpoint, resume, output);
        if (construct->parsed())
            return cmd_construct(kind, genus, k, input, format, output);
        if (verify->parsed()) return cmd_verify(input, involution);
        if (hom->parsed()) return cmd_homology(input);
        if (canon->parsed()) return cmd_canon(input);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    } catch (const censym::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
}
