#ifndef CENSYM_IO_HPP
#define CENSYM_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "censym/complex.hpp"
#include "censym/homology.hpp"
#include "censym/polymap.hpp"

namespace censym {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

// Compact digit notation: 1-9 then a=10 ... z=35. Labels above 35 force the
// bracketed integer form "[1,2,40]"; both forms are auto-detected on parse.
std::string simplex_to_text(const Simplex& s);
Simplex simplex_from_text(const std::string& text);

// Comma-separated facets, e.g. "123,124,135,145" or "[1,2,40],[2,3,41]".
std::string facets_to_text(const std::vector<Simplex>& facets);
std::vector<Simplex> facets_from_text(const std::string& text);

// One complex per line: "n dim facet-list".
std::string complex_to_record(const Complex& c);
Complex complex_from_record(const std::string& line, int lineno = 0);

// Face-cycle list "[1,2,17,16,10],[...]"; vertex order inside a bracket is
// the cycle order.
std::string map_faces_to_text(const std::vector<FaceCycle>& faces);
std::vector<FaceCycle> map_faces_from_text(const std::string& text);

// One map per line: "n face-list".
std::string map_to_record(const PolyhedralMap& m);
PolyhedralMap map_from_record(const std::string& line, int lineno = 0);

/// One classified object: the columns of the result tables.
struct ResultRecord {
    std::vector<Simplex> orbit_reps;
    int n = 0;
    FaceVector f;
    std::string homology; // e.g. "1,2,1" or "1,1+Z2,0"
    bool orientable = false;
    std::uint64_t canonical_hash = 0;

    bool operator==(const ResultRecord& o) const = default;
};

std::string result_to_record(const ResultRecord& r);
ResultRecord result_from_record(const std::string& line, int lineno = 0);

} // namespace censym

#endif
