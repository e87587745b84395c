#include "censym/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace censym {

namespace {

char digit_of(VertexLabel v) {
    if (v >= 1 && v <= 9) return static_cast<char>('0' + v);
    return static_cast<char>('a' + (v - 10));
}

int label_of_digit(char c, int lineno) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw ParseError(lineno, std::string("bad vertex digit '") + c + "'");
}

bool needs_brackets(const std::vector<Simplex>& facets) {
    for (const auto& f : facets)
        if (!f.empty() && f.back() > 35) return true;
    return false;
}

std::string bracketed(const std::vector<VertexLabel>& vs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << ']';
    return os.str();
}

std::vector<VertexLabel> parse_bracket(const std::string& text, std::size_t& i,
                                       int lineno) {
    if (i >= text.size() || text[i] != '[')
        throw ParseError(lineno, "expected '['");
    ++i;
    std::vector<VertexLabel> out;
    while (true) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError(lineno, "expected a vertex label");
        out.push_back(std::stoi(text.substr(start, i - start)));
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            return out;
        }
        throw ParseError(lineno, "expected ',' or ']' in bracketed face");
    }
}

std::vector<std::vector<VertexLabel>> parse_bracket_list(const std::string& text,
                                                         int lineno) {
    std::vector<std::vector<VertexLabel>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        out.push_back(parse_bracket(text, i, lineno));
        if (i < text.size()) {
            if (text[i] != ',') throw ParseError(lineno, "expected ',' between faces");
            ++i;
        }
    }
    if (out.empty()) throw ParseError(lineno, "empty face list");
    return out;
}

} // namespace

std::string simplex_to_text(const Simplex& s) {
    if (!s.empty() && s.back() > 35) return bracketed(s);
    std::string out;
    for (auto v : s) out.push_back(digit_of(v));
    return out;
}

Simplex simplex_from_text(const std::string& text) {
    if (!text.empty() && text[0] == '[') {
        std::size_t i = 0;
        auto vs = parse_bracket(text, i, 0);
        if (i != text.size()) throw ParseError(0, "trailing text after simplex");
        return make_simplex(std::move(vs));
    }
    std::vector<VertexLabel> vs;
    for (char c : text) vs.push_back(label_of_digit(c, 0));
    return make_simplex(std::move(vs));
}

std::string facets_to_text(const std::vector<Simplex>& facets) {
    const bool br = needs_brackets(facets);
    std::ostringstream os;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (i) os << ',';
        if (br)
            os << bracketed(facets[i]);
        else
            for (auto v : facets[i]) os << digit_of(v);
    }
    return os.str();
}

std::vector<Simplex> facets_from_text(const std::string& text) {
    std::vector<Simplex> out;
    if (!text.empty() && text[0] == '[') {
        for (auto& vs : parse_bracket_list(text, 0))
            out.push_back(make_simplex(std::move(vs)));
        return out;
    }
    std::string word;
    std::istringstream is(text);
    while (std::getline(is, word, ',')) {
        std::vector<VertexLabel> vs;
        for (char c : word) vs.push_back(label_of_digit(c, 0));
        out.push_back(make_simplex(std::move(vs)));
    }
    if (out.empty()) throw ParseError(0, "empty facet list");
    return out;
}

std::string complex_to_record(const Complex& c) {
    std::ostringstream os;
    os << c.vertex_count() << ' ' << c.dim() << ' ' << facets_to_text(c.facets());
    return os.str();
}

Complex complex_from_record(const std::string& line, int lineno) {
    std::istringstream is(line);
    int n, d;
    std::string rest;
    if (!(is >> n >> d >> rest))
        throw ParseError(lineno, "expected 'n dim facet-list'");
    std::vector<Simplex> facets;
    try {
        facets = facets_from_text(rest);
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
    try {
        Complex c(n, std::move(facets));
        if (c.dim() != d) throw std::invalid_argument("dimension field mismatch");
        return c;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string map_faces_to_text(const std::vector<FaceCycle>& faces) {
    std::ostringstream os;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (i) os << ',';
        os << bracketed(faces[i]);
    }
    return os.str();
}

std::vector<FaceCycle> map_faces_from_text(const std::string& text) {
    return parse_bracket_list(text, 0);
}

std::string map_to_record(const PolyhedralMap& m) {
    std::ostringstream os;
    os << m.vertex_count() << ' ' << map_faces_to_text(m.faces());
    return os.str();
}

PolyhedralMap map_from_record(const std::string& line, int lineno) {
    std::istringstream is(line);
    int n;
    std::string rest;
    if (!(is >> n >> rest)) throw ParseError(lineno, "expected 'n face-list'");
    try {
        return PolyhedralMap(n, parse_bracket_list(rest, lineno));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

std::string result_to_record(const ResultRecord& r) {
    std::ostringstream os;
    os << "n=" << r.n << " orbits=" << facets_to_text(r.orbit_reps) << " f=";
    for (std::size_t i = 0; i < r.f.size(); ++i) os << (i ? "," : "") << r.f[i];
    os << " H=" << r.homology << " orientable=" << (r.orientable ? 1 : 0)
       << " canon=" << std::hex << r.canonical_hash << std::dec;
    return os.str();
}

ResultRecord result_from_record(const std::string& line, int lineno) {
    ResultRecord r;
    std::istringstream is(line);
    std::string tok;
    bool saw_n = false, saw_orbits = false, saw_f = false, saw_h = false,
         saw_or = false, saw_canon = false;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            if (key == "n") {
                r.n = std::stoi(val);
                saw_n = true;
            } else if (key == "orbits") {
                r.orbit_reps = facets_from_text(val);
                saw_orbits = true;
            } else if (key == "f") {
                std::istringstream fs(val);
                std::string num;
                while (std::getline(fs, num, ',')) r.f.push_back(std::stoll(num));
                saw_f = true;
            } else if (key == "H") {
                r.homology = val;
                saw_h = true;
            } else if (key == "orientable") {
                r.orientable = val == "1";
                saw_or = true;
            } else if (key == "canon") {
                r.canonical_hash = std::stoull(val, nullptr, 16);
                saw_canon = true;
            } else {
                throw ParseError(lineno, "unknown field '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, std::string("field '") + key + "': " + e.what());
        }
    }
    if (!(saw_n && saw_orbits && saw_f && saw_h && saw_or && saw_canon))
        throw ParseError(lineno, "missing result field");
    return r;
}

} // namespace censym
