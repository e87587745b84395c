#include "censym/construct.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace censym {

namespace {

std::set<std::pair<VertexLabel, VertexLabel>> edge_set(const PolyhedralMap& m) {
    auto e = m.edges();
    return {e.begin(), e.end()};
}

bool cycles_equal(const FaceCycle& a, const FaceCycle& b) {
    return normalize_cycle(a) == normalize_cycle(b);
}

bool share_vertex(const FaceCycle& a, const FaceCycle& b) {
    for (auto u : a)
        for (auto v : b)
            if (u == v) return true;
    return false;
}

bool edge_between(const std::set<std::pair<VertexLabel, VertexLabel>>& edges,
                  const FaceCycle& a, const FaceCycle& b) {
    for (auto u : a)
        for (auto v : b)
            if (edges.count({std::min(u, v), std::max(u, v)})) return true;
    return false;
}

} // namespace

CsMap subdivided_cube() {
    // boundary points of the cube on the grid {0,1,2}^3
    using P = std::array<int, 3>;
    std::map<P, int> label;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z) {
                P p{x, y, z};
                bool boundary = false;
                for (int c : p)
                    if (c == 0 || c == 2) boundary = true;
                if (boundary) label[p] = static_cast<int>(label.size()) + 1;
            }

    std::vector<FaceCycle> faces;
    for (int axis = 0; axis < 3; ++axis)
        for (int side : {0, 2})
            for (int u0 = 0; u0 <= 1; ++u0)
                for (int v0 = 0; v0 <= 1; ++v0) {
                    auto pt = [&](int u, int v) {
                        P p;
                        p[axis] = side;
                        p[(axis + 1) % 3] = u;
                        p[(axis + 2) % 3] = v;
                        return label.at(p);
                    };
                    faces.push_back({pt(u0, v0), pt(u0 + 1, v0),
                                     pt(u0 + 1, v0 + 1), pt(u0, v0 + 1)});
                }
    PolyhedralMap map(static_cast<int>(label.size()), std::move(faces));

    std::vector<VertexLabel> img(label.size());
    for (const auto& [p, v] : label)
        img[v - 1] = label.at({2 - p[0], 2 - p[1], 2 - p[2]});
    return {map, Involution(static_cast<int>(label.size()), std::move(img))};
}

CsMap dodecahedron() {
    std::vector<FaceCycle> faces = {
        {1, 2, 17, 16, 10}, {2, 3, 4, 18, 17},  {4, 5, 6, 19, 18},
        {6, 19, 20, 8, 7},  {8, 20, 16, 10, 9}, {16, 17, 18, 19, 20},
        {1, 2, 3, 12, 11},  {3, 4, 5, 13, 12},  {5, 6, 7, 14, 13},
        {7, 8, 9, 15, 14},  {9, 10, 1, 11, 15}, {11, 12, 13, 14, 15}};
    return {PolyhedralMap(20, std::move(faces)),
            Involution::from_cycles(
                20, "(5,10)(2,7)(3,8)(1,6)(4,9)(14,17)(13,16)(15,18)(11,19)(12,20)")};
}

CsMap hexagonal_torus() {
    std::vector<FaceCycle> faces = {
        {1, 2, 3, 8, 7, 6},       {3, 4, 5, 10, 9, 8},
        {5, 6, 7, 12, 11, 10},    {7, 8, 9, 14, 13, 12},
        {9, 10, 11, 16, 15, 14},  {11, 12, 13, 18, 17, 16},
        {13, 14, 15, 20, 19, 18}, {15, 16, 17, 22, 21, 20},
        {17, 18, 19, 24, 23, 22}, {19, 20, 21, 2, 1, 24},
        {21, 22, 23, 4, 3, 2},    {23, 24, 1, 6, 5, 4}};
    std::vector<VertexLabel> img(24);
    for (int v = 1; v <= 12; ++v) {
        img[v - 1] = v + 12;
        img[v + 11] = v;
    }
    return {PolyhedralMap(24, std::move(faces)), Involution(24, std::move(img))};
}

CsMap example_torus() {
    std::vector<FaceCycle> faces = {
        {1, 2, 3},   {1, 2, 4},   {1, 3, 4},    {2, 3, 5},   {2, 4, 5},
        {3, 4, 6},   {3, 5, 7},   {3, 6, 9},    {3, 7, 8},   {3, 8, 9},
        {4, 5, 10},  {4, 6, 8},   {4, 7, 8},    {4, 7, 10},  {5, 6, 9},
        {5, 6, 10},  {5, 7, 9},   {6, 8, 10},   {7, 9, 10},  {8, 9, 11},
        {8, 10, 11}, {9, 10, 12}, {9, 11, 12},  {10, 11, 12}};
    return {PolyhedralMap(12, std::move(faces)), Involution::canonical(6)};
}

CsMap cs_connected_sum(const CsMap& a, const CsMap& b, const GluingSpec& g) {
    const std::size_t q = g.face_a.size();
    if (g.face_b.size() != q)
        throw std::invalid_argument("gluing faces differ in size");
    if (!a.map.has_face(g.face_a))
        throw std::invalid_argument("face_a is not a face of the first map");
    if (!b.map.has_face(g.face_b))
        throw std::invalid_argument("face_b is not a face of the second map");

    FaceCycle img_a = a.inv.apply_cycle(g.face_a);
    FaceCycle img_b = b.inv.apply_cycle(g.face_b);
    if (!a.map.has_face(img_a) || !b.map.has_face(img_b))
        throw std::invalid_argument("involution image of a gluing face is not a face");
    if (share_vertex(g.face_a, img_a))
        throw std::invalid_argument("face_a meets its involution image");
    if (share_vertex(g.face_b, img_b))
        throw std::invalid_argument("face_b meets its involution image");
    if (edge_between(edge_set(a.map), g.face_a, img_a))
        throw std::invalid_argument("edge between face_a and its involution image");
    if (edge_between(edge_set(b.map), g.face_b, img_b))
        throw std::invalid_argument("edge between face_b and its involution image");

    // b's glued vertices take a's labels; the rest are appended densely
    const int na = a.map.vertex_count();
    std::vector<VertexLabel> to_new(b.map.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < q; ++i) {
        to_new[g.face_b[i]] = g.face_a[i];
        to_new[b.inv(g.face_b[i])] = a.inv(g.face_a[i]);
    }
    int next = na;
    for (auto v : b.map.used_vertices())
        if (to_new[v] == 0) to_new[v] = ++next;

    std::vector<FaceCycle> faces;
    for (const auto& f : a.map.faces())
        if (!cycles_equal(f, g.face_a) && !cycles_equal(f, img_a))
            faces.push_back(f);
    for (const auto& f : b.map.faces()) {
        if (cycles_equal(f, g.face_b) || cycles_equal(f, img_b)) continue;
        FaceCycle mapped;
        for (auto v : f) mapped.push_back(to_new[v]);
        faces.push_back(std::move(mapped));
    }
    PolyhedralMap out(next, std::move(faces));

    std::vector<VertexLabel> img(next);
    for (int v = 1; v <= na; ++v) img[v - 1] = a.inv(v);
    for (auto v : b.map.used_vertices())
        if (to_new[v] > na) img[to_new[v] - 1] = to_new[b.inv(v)];
    Involution inv(next, std::move(img));

    if (!is_closed_map(out))
        throw std::runtime_error("glued object is not a closed-surface map");
    if (!is_centrally_symmetric(out, inv))
        throw std::runtime_error("glued object is not centrally symmetric");
    return {out, inv};
}

namespace {

std::optional<FaceCycle> pick_glue_face(const CsMap& c, std::size_t size_req) {
    auto edges = edge_set(c.map);
    for (const auto& f : c.map.faces()) {
        if (size_req != 0 && f.size() != size_req) continue;
        FaceCycle img = c.inv.apply_cycle(f);
        if (!c.map.has_face(img)) continue;
        if (share_vertex(f, img)) continue;
        if (edge_between(edges, f, img)) continue;
        return f;
    }
    return std::nullopt;
}

} // namespace

GluingSpec default_gluing(const CsMap& a, const CsMap& b) {
    auto fa = pick_glue_face(a, 0);
    if (!fa) throw std::invalid_argument("no admissible gluing face in the first map");
    auto fb = pick_glue_face(b, fa->size());
    if (!fb) throw std::invalid_argument("no admissible gluing face in the second map");

    const std::size_t q = fa->size();
    const bool want_orientable = is_orientable(a.map) && is_orientable(b.map);
    // Prefer correspondences whose sum stays polyhedral; some families
    // (hexagons glued to hexagons) only admit closed-map sums, so fall
    // back to those before giving up.
    for (bool want_polyhedral : {true, false}) {
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t rot = 0; rot < q; ++rot) {
                FaceCycle cand(q);
                for (std::size_t i = 0; i < q; ++i) {
                    std::size_t j = dir == 0 ? (rot + i) % q : (rot + q - i) % q;
                    cand[i] = (*fb)[j];
                }
                GluingSpec spec{*fa, cand};
                try {
                    CsMap r = cs_connected_sum(a, b, spec);
                    if (want_orientable && !is_orientable(r.map)) continue;
                    if (want_polyhedral && !is_polyhedral_map(r.map)) continue;
                    return spec;
                } catch (const std::exception&) {
                    continue;
                }
            }
        }
    }
    throw std::runtime_error("no valid gluing correspondence found");
}

CsMap cs_connected_sum(const CsMap& a, const CsMap& b) {
    return cs_connected_sum(a, b, default_gluing(a, b));
}

CsMap quad_genus_surface(int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    CsMap r = subdivided_cube();
    for (int i = 0; i < g; ++i) r = cs_connected_sum(r, subdivided_cube());
    return r;
}

CsMap pentagon_genus_surface(int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    CsMap r = dodecahedron();
    for (int i = 0; i < g; ++i) r = cs_connected_sum(r, dodecahedron());
    return r;
}

CsMap hexagon_genus_surface(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    CsMap r = hexagonal_torus();
    for (int i = 1; i < k; ++i) r = cs_connected_sum(r, hexagonal_torus());
    return r;
}

CsMap dual_map(const CsMap& m) {
    if (!is_polyhedral_map(m.map))
        throw std::invalid_argument("dual: input is not a polyhedral map");
    if (!is_centrally_symmetric(m.map, m.inv))
        throw std::invalid_argument("dual: input is not centrally symmetric");
    const auto& faces = m.map.faces();

    std::vector<FaceCycle> dual_faces;
    for (auto v : m.map.used_vertices()) {
        auto star = vertex_face_cycle(m.map, v);
        if (star.empty()) throw std::runtime_error("dual: broken vertex star");
        FaceCycle f;
        for (int fi : star) f.push_back(fi + 1);
        dual_faces.push_back(std::move(f));
    }
    PolyhedralMap dm(static_cast<int>(faces.size()), std::move(dual_faces));

    std::vector<VertexLabel> img(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        auto target = normalize_cycle(m.inv.apply_cycle(faces[i]));
        auto it = std::lower_bound(faces.begin(), faces.end(), target);
        if (it == faces.end() || *it != target)
            throw std::runtime_error("dual: face image missing");
        img[i] = static_cast<int>(it - faces.begin()) + 1;
    }
    Involution inv(static_cast<int>(faces.size()), std::move(img));
    if (!is_centrally_symmetric(dm, inv))
        throw std::runtime_error("dual map is not centrally symmetric");
    return {dm, inv};
}

TightnessReport tightness_check(const Complex& c, const Involution* inv) {
    if (!is_combinatorial_surface(c))
        throw std::invalid_argument("tightness: not a combinatorial surface");
    TightnessReport r;
    r.n = static_cast<long long>(c.used_vertices().size());
    r.chi = euler_characteristic(c);
    r.edges = c.face_count(1);
    r.neighbourly_tight = (r.n - 3) * (r.n - 4) == 6 * (2 - r.chi);
    if (inv) {
        r.cs_checked = true;
        long long m = r.n / 2;
        r.cs_edge_count = r.edges == r.n * (r.n - 1) / 2 - m;
        long long lhs = 2 * (m - 1) * (m - 3);
        r.cs_tight = lhs == 3 * (2 - r.chi);
        r.cs_tight_possible = lhs % 3 == 0;
    }
    return r;
}

} // namespace censym
