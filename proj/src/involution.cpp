#include "censym/involution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace censym {

Involution::Involution(int n, std::vector<VertexLabel> img)
    : n_(n), img_(std::move(img)) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("involution needs a positive even label count");
    if (static_cast<int>(img_.size()) != n)
        throw std::invalid_argument("image list has wrong length");
    for (VertexLabel v = 1; v <= n; ++v) {
        VertexLabel w = img_[v - 1];
        if (w < 1 || w > n) throw std::invalid_argument("image out of range");
        if (w == v) throw std::invalid_argument("involution has a fixed point");
        if (img_[w - 1] != v) throw std::invalid_argument("not an involution");
    }
}

Involution Involution::canonical(int m) {
    if (m <= 0) throw std::invalid_argument("need m >= 1");
    std::vector<VertexLabel> img(2 * m);
    for (VertexLabel v = 1; v <= 2 * m; ++v) img[v - 1] = 2 * m + 1 - v;
    return Involution(2 * m, std::move(img));
}

VertexLabel Involution::operator()(VertexLabel v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("label out of range");
    return img_[v - 1];
}

Simplex Involution::apply(const Simplex& s) const {
    std::vector<VertexLabel> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back((*this)(v));
    return make_simplex(std::move(out));
}

FaceCycle Involution::apply_cycle(const FaceCycle& f) const {
    FaceCycle out;
    out.reserve(f.size());
    for (auto v : f) out.push_back((*this)(v));
    return out;
}

std::string Involution::to_cycles() const {
    std::ostringstream os;
    for (VertexLabel v = 1; v <= n_; ++v)
        if (v < img_[v - 1]) os << '(' << v << ',' << img_[v - 1] << ')';
    return os.str();
}

Involution Involution::from_cycles(int n, const std::string& text) {
    std::vector<VertexLabel> img(n, 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("expected a label in cycle notation");
        return std::stoi(text.substr(start, i - start));
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        int a = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ',')
            throw std::invalid_argument("expected ',' in cycle notation");
        ++i;
        int b = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ')')
            throw std::invalid_argument("expected ')' in cycle notation");
        ++i;
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("cycle label out of range");
        if (img[a - 1] != 0 || img[b - 1] != 0)
            throw std::invalid_argument("label occurs in two transpositions");
        img[a - 1] = b;
        img[b - 1] = a;
        skip_ws();
    }
    for (int v = 1; v <= n; ++v)
        if (img[v - 1] == 0)
            throw std::invalid_argument("label missing from cycle notation");
    return Involution(n, std::move(img));
}

bool is_centrally_symmetric(const Complex& c, const Involution& inv) {
    if (c.empty()) return false;
    if (c.vertex_count() != inv.vertex_count()) return false;
    for (const auto& f : c.facets())
        if (!c.contains_face(inv.apply(f))) return false;
    for (int k = 1; k <= c.dim(); ++k)
        for (const auto& f : c.faces(k))
            if (inv.apply(f) == f) return false;
    return true;
}

bool is_centrally_symmetric(const PolyhedralMap& m, const Involution& inv) {
    if (m.faces().empty()) return false;
    if (m.vertex_count() != inv.vertex_count()) return false;
    for (const auto& f : m.faces()) {
        auto img = normalize_cycle(inv.apply_cycle(f));
        if (!m.has_face(img)) return false;
        if (img == f) return false; // face mapped to itself setwise
    }
    for (auto [a, b] : m.edges()) {
        Simplex e = make_simplex({a, b});
        if (inv.apply(e) == e) return false;
    }
    return true;
}

std::vector<Orbit> admissible_face_orbits(int n, int k, const Involution& inv) {
    if (inv.vertex_count() != n) throw std::invalid_argument("label count mismatch");
    if (k < 0 || k >= n) return {};
    std::vector<Orbit> out;
    std::vector<VertexLabel> pick(k + 1);
    // enumerate (k+1)-subsets of 1..n in lexicographic order
    for (int i = 0; i <= k; ++i) pick[i] = i + 1;
    while (true) {
        Simplex rep(pick.begin(), pick.end());
        Simplex img = inv.apply(rep);
        bool disjoint = true;
        for (auto v : rep)
            if (std::binary_search(img.begin(), img.end(), v)) {
                disjoint = false;
                break;
            }
        if (disjoint && rep < img) out.push_back({rep, img});
        int i = k;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Simplex> orbit_closure(const std::vector<Simplex>& facets,
                                   const Involution& inv) {
    std::set<Simplex> out;
    for (const auto& f : facets) {
        out.insert(f);
        out.insert(inv.apply(f));
    }
    return {out.begin(), out.end()};
}

} // namespace censym
