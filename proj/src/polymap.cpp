#include "censym/polymap.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace censym {

FaceCycle normalize_cycle(FaceCycle cycle) {
    const std::size_t q = cycle.size();
    if (q < 3) throw std::invalid_argument("face cycle needs at least 3 vertices");
    {
        auto copy = cycle;
        std::sort(copy.begin(), copy.end());
        if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
            throw std::invalid_argument("face cycle has a repeated vertex");
        if (copy.front() <= 0)
            throw std::invalid_argument("face labels must be positive");
    }
    FaceCycle best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < q; ++s) {
            FaceCycle cand(q);
            for (std::size_t i = 0; i < q; ++i) {
                std::size_t j = dir == 0 ? (s + i) % q : (s + q - i) % q;
                cand[i] = cycle[j];
            }
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

PolyhedralMap::PolyhedralMap(int n, std::vector<FaceCycle> faces) : n_(n) {
    faces_.reserve(faces.size());
    for (auto& f : faces) {
        auto nf = normalize_cycle(std::move(f));
        if (nf.back() > n || *std::max_element(nf.begin(), nf.end()) > n)
            throw std::invalid_argument("face label exceeds vertex count");
        faces_.push_back(std::move(nf));
    }
    std::sort(faces_.begin(), faces_.end());
    if (std::adjacent_find(faces_.begin(), faces_.end()) != faces_.end())
        throw std::invalid_argument("duplicate face");
}

std::vector<std::pair<VertexLabel, VertexLabel>> PolyhedralMap::edges() const {
    std::set<std::pair<VertexLabel, VertexLabel>> out;
    for (const auto& f : faces_) {
        const std::size_t q = f.size();
        for (std::size_t i = 0; i < q; ++i) {
            VertexLabel a = f[i], b = f[(i + 1) % q];
            out.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<VertexLabel> PolyhedralMap::used_vertices() const {
    std::set<VertexLabel> used;
    for (const auto& f : faces_) used.insert(f.begin(), f.end());
    return {used.begin(), used.end()};
}

bool PolyhedralMap::has_face(const FaceCycle& cycle) const {
    auto nf = normalize_cycle(cycle);
    return std::binary_search(faces_.begin(), faces_.end(), nf);
}

long long euler_characteristic(const PolyhedralMap& m) {
    return static_cast<long long>(m.used_vertices().size()) -
           static_cast<long long>(m.edges().size()) +
           static_cast<long long>(m.faces().size());
}

FaceVector face_vector(const PolyhedralMap& m) {
    return {static_cast<long long>(m.used_vertices().size()),
            static_cast<long long>(m.edges().size()),
            static_cast<long long>(m.faces().size())};
}

namespace {

// (face index, position) pairs per undirected edge
std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>
edge_incidence(const PolyhedralMap& m) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> inc;
    const auto& faces = m.faces();
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        const int q = static_cast<int>(f.size());
        for (int i = 0; i < q; ++i) {
            int a = f[i], b = f[(i + 1) % q];
            inc[{std::min(a, b), std::max(a, b)}].push_back({fi, i});
        }
    }
    return inc;
}

} // namespace

std::vector<int> vertex_face_cycle(const PolyhedralMap& m, VertexLabel v) {
    const auto& faces = m.faces();
    // at v, each incident face joins two edges {v,prev} and {v,next}
    std::map<VertexLabel, std::vector<int>> by_edge; // neighbor -> incident faces
    std::vector<int> incident;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        const int q = static_cast<int>(f.size());
        for (int i = 0; i < q; ++i) {
            if (f[i] == v) {
                incident.push_back(fi);
                by_edge[f[(i + 1) % q]].push_back(fi);
                by_edge[f[(i + q - 1) % q]].push_back(fi);
            }
        }
    }
    if (incident.empty()) throw std::invalid_argument("vertex occurs in no face");
    for (const auto& [w, fs] : by_edge)
        if (fs.size() != 2) return {};
    // walk the face cycle
    std::vector<int> cycle;
    std::set<int> seen;
    int cur = incident.front();
    VertexLabel enter = -1;
    while (true) {
        cycle.push_back(cur);
        seen.insert(cur);
        // neighbors of v in face cur
        const auto& f = faces[cur];
        const int q = static_cast<int>(f.size());
        VertexLabel a = -1, b = -1;
        for (int i = 0; i < q; ++i)
            if (f[i] == v) {
                a = f[(i + 1) % q];
                b = f[(i + q - 1) % q];
            }
        VertexLabel exit = (enter == a) ? b : a;
        const auto& pairf = by_edge[exit];
        int next = pairf[0] == cur ? pairf[1] : pairf[0];
        if (next == cur) return {}; // edge used twice by the same face
        if (next == incident.front()) {
            // closed up; check we used the closing edge correctly
            break;
        }
        if (seen.count(next)) return {}; // premature revisit: not one cycle
        enter = exit;
        cur = next;
    }
    if (cycle.size() != incident.size()) return {}; // more than one cycle
    return cycle;
}

bool is_closed_map(const PolyhedralMap& m) {
    const auto& faces = m.faces();
    if (faces.empty()) return false;
    auto inc = edge_incidence(m);
    for (const auto& [e, fs] : inc)
        if (fs.size() != 2 || fs[0].first == fs[1].first) return false;
    for (auto v : m.used_vertices())
        if (vertex_face_cycle(m, v).empty()) return false;
    return true;
}

bool is_polyhedral_map(const PolyhedralMap& m) {
    const auto& faces = m.faces();
    if (!is_closed_map(m)) return false;
    auto inc = edge_incidence(m);
    // pairwise intersections: empty, one vertex, or one common edge
    std::vector<std::set<VertexLabel>> vsets;
    vsets.reserve(faces.size());
    for (const auto& f : faces) vsets.emplace_back(f.begin(), f.end());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            std::vector<VertexLabel> common;
            std::set_intersection(vsets[i].begin(), vsets[i].end(),
                                  vsets[j].begin(), vsets[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 2) return false;
            if (common.size() == 2) {
                auto key = std::make_pair(common[0], common[1]);
                const auto& fs = inc[key];
                bool both = fs.size() == 2 &&
                            ((fs[0].first == static_cast<int>(i) && fs[1].first == static_cast<int>(j)) ||
                             (fs[0].first == static_cast<int>(j) && fs[1].first == static_cast<int>(i)));
                if (!both) return false; // two shared vertices but no shared edge
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> orientation_assignment(const PolyhedralMap& m) {
    const auto& faces = m.faces();
    auto inc = edge_incidence(m);
    for (const auto& [e, fs] : inc)
        if (fs.size() != 2) throw std::invalid_argument("orientation: edge not in two faces");
    // dir[fi] = +1 traverse stored order, -1 reversed; coherent when the two
    // faces traverse each shared edge in opposite directions
    const int nf = static_cast<int>(faces.size());
    std::vector<int> dir(nf, 0);
    auto directed = [&](int fi, int pos) {
        const auto& f = faces[fi];
        const int q = static_cast<int>(f.size());
        return std::make_pair(f[pos], f[(pos + 1) % q]);
    };
    for (int start = 0; start < nf; ++start) {
        if (dir[start] != 0) continue;
        dir[start] = 1;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int fi = bfs.front();
            bfs.pop();
            const auto& f = faces[fi];
            const int q = static_cast<int>(f.size());
            for (int i = 0; i < q; ++i) {
                int a = f[i], b = f[(i + 1) % q];
                const auto& fs = inc[{std::min(a, b), std::max(a, b)}];
                int oi = fs[0].first == fi && fs[0].second == i ? 1 : 0;
                int gi = fs[oi].first;
                auto mine = directed(fi, i);
                auto theirs = directed(gi, fs[oi].second);
                // same stored direction -> faces must get opposite dir
                int need = (mine == theirs) ? -dir[fi] : dir[fi];
                if (dir[gi] == 0) {
                    dir[gi] = need;
                    bfs.push(gi);
                } else if (dir[gi] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    return dir;
}

bool is_orientable(const PolyhedralMap& m) {
    return orientation_assignment(m).has_value();
}

Complex as_complex(const PolyhedralMap& m) {
    std::vector<Simplex> facets;
    for (const auto& f : m.faces()) {
        if (f.size() != 3)
            throw std::invalid_argument("as_complex: non-triangular face");
        facets.push_back(make_simplex({f[0], f[1], f[2]}));
    }
    return Complex(m.vertex_count(), std::move(facets));
}

PolyhedralMap as_map(const Complex& c) {
    if (c.dim() != 2) throw std::invalid_argument("as_map: dimension must be 2");
    std::vector<FaceCycle> faces;
    for (const auto& f : c.facets()) faces.push_back({f[0], f[1], f[2]});
    return PolyhedralMap(c.vertex_count(), std::move(faces));
}

} // namespace censym
