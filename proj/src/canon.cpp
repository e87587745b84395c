#include "censym/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace censym {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Complex relabel(const Complex& c, const std::vector<VertexLabel>& perm) {
    if (static_cast<int>(perm.size()) != c.vertex_count())
        throw std::invalid_argument("relabel: permutation length mismatch");
    std::vector<Simplex> out;
    out.reserve(c.facets().size());
    for (const auto& f : c.facets()) {
        std::vector<VertexLabel> g;
        g.reserve(f.size());
        for (auto v : f) g.push_back(perm[v - 1]);
        out.push_back(make_simplex(std::move(g)));
    }
    return Complex(c.vertex_count(), std::move(out));
}

namespace {

using Tuple = std::vector<int>;
using TupleList = std::vector<Tuple>;

/// Lex-least sorted hyperedge list over color-preserving label bijections.
/// Vertices are 0-based; color blocks receive consecutive new labels in
/// color order. Plain complexes use a single color.
class ColoredCanonicalizer {
public:
    ColoredCanonicalizer(std::vector<int> color, std::vector<Tuple> edges)
        : color_(std::move(color)), edges_(std::move(edges)) {
        const int nv = static_cast<int>(color_.size());
        int nc = 0;
        for (int c : color_) nc = std::max(nc, c + 1);
        // new label blocks, one per color, in color order
        std::vector<int> count(nc, 0);
        for (int c : color_) ++count[c];
        block_start_.assign(nc, 0);
        for (int c = 1; c < nc; ++c) block_start_[c] = block_start_[c - 1] + count[c - 1];
        label_color_.resize(nv);
        {
            std::vector<int> next = block_start_;
            for (int c = 0; c < nc; ++c)
                for (int i = 0; i < count[c]; ++i) label_color_[next[c]++] = c;
        }
        new_of_.assign(nv, -1);
        next_in_block_ = block_start_;
    }

    TupleList run() {
        best_.clear();
        dfs(0);
        return best_;
    }

private:
    // Sorted mapped edge list with unassigned vertices replaced by the next
    // label of their color: a pointwise lower bound of any completion.
    TupleList optimistic() const {
        TupleList out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) {
            Tuple t;
            t.reserve(e.size());
            for (int v : e) {
                int lbl = new_of_[v];
                if (lbl < 0) lbl = next_in_block_[color_[v]];
                t.push_back(lbl);
            }
            std::sort(t.begin(), t.end());
            out.push_back(std::move(t));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void dfs(int depth) {
        const int nv = static_cast<int>(color_.size());
        if (depth == nv) {
            auto cand = optimistic(); // fully assigned: exact
            if (best_.empty() || cand < best_) best_ = std::move(cand);
            return;
        }
        const int need = label_color_[depth]; // color of new label `depth`
        std::vector<std::pair<TupleList, int>> children;
        for (int v = 0; v < nv; ++v) {
            if (new_of_[v] != -1 || color_[v] != need) continue;
            new_of_[v] = depth;
            ++next_in_block_[need];
            auto bound = optimistic();
            if (best_.empty() || bound <= best_)
                children.push_back({std::move(bound), v});
            --next_in_block_[need];
            new_of_[v] = -1;
        }
        std::sort(children.begin(), children.end());
        for (auto& [bound, v] : children) {
            if (!best_.empty() && bound > best_) continue; // best improved
            new_of_[v] = depth;
            ++next_in_block_[need];
            dfs(depth + 1);
            --next_in_block_[need];
            new_of_[v] = -1;
        }
    }

    std::vector<int> color_;
    std::vector<Tuple> edges_;
    std::vector<int> block_start_;
    std::vector<int> label_color_;
    std::vector<int> new_of_;
    std::vector<int> next_in_block_;
    TupleList best_;
};

std::string serialize(const char* tag, const std::vector<int>& block_sizes,
                      const TupleList& edges) {
    std::ostringstream os;
    os << tag;
    for (std::size_t i = 0; i < block_sizes.size(); ++i)
        os << (i ? ',' : ' ') << block_sizes[i];
    os << '|';
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < edges[i].size(); ++j) {
            if (j) os << ',';
            os << edges[i][j] + 1;
        }
    }
    return os.str();
}

} // namespace

CanonicalForm canonical_form(const Complex& c, int max_vertices) {
    auto used = c.used_vertices();
    if (static_cast<int>(used.size()) > max_vertices)
        throw std::invalid_argument(
            "canonical_form: vertex count exceeds bound; raise max_vertices to override");
    std::map<VertexLabel, int> idx;
    for (std::size_t i = 0; i < used.size(); ++i) idx[used[i]] = static_cast<int>(i);
    std::vector<Tuple> edges;
    edges.reserve(c.facets().size());
    for (const auto& f : c.facets()) {
        Tuple t;
        for (auto v : f) t.push_back(idx.at(v));
        edges.push_back(std::move(t));
    }
    ColoredCanonicalizer cz(std::vector<int>(used.size(), 0), std::move(edges));
    auto text = serialize("C", {static_cast<int>(used.size())}, cz.run());
    return {text, fnv1a64(text)};
}

CanonicalForm canonical_form(const PolyhedralMap& m) {
    // Flag encoding. A flag is a (vertex, edge, face) incidence; the map is
    // determined up to isomorphism by the three flag involutions
    //   s0: switch vertex,  s1: switch edge,  s2: switch face.
    // For each starting flag we relabel flags in deterministic BFS order
    // (expanding s0, s1, s2 in that order) and record the relabeled
    // involution tables; the lexicographically least table over all starts
    // is a canonical form. Isomorphisms of the map -- rotations,
    // reflections, vertex relabelings -- are exactly the flag-graph
    // automorphisms, so equality of forms is map isomorphism. Runs in
    // O(flags^2); flags = 4 * edges.
    const auto& faces = m.faces();
    const int nf = static_cast<int>(faces.size());
    std::vector<int> offset(nf + 1, 0);
    for (int fi = 0; fi < nf; ++fi)
        offset[fi + 1] = offset[fi] + static_cast<int>(faces[fi].size());
    // Flag id: 2 * (offset[fi] + corner) + side; side 0 uses the edge to the
    // previous face vertex, side 1 the edge to the next.
    const int nflags = 2 * offset[nf];
    std::vector<int> s0(nflags), s1(nflags), s2(nflags, -1);
    std::map<std::tuple<VertexLabel, VertexLabel, VertexLabel>, int> half;
    for (int fi = 0; fi < nf; ++fi) {
        const auto& f = faces[fi];
        const int q = static_cast<int>(f.size());
        for (int i = 0; i < q; ++i) {
            const int prev = (i + q - 1) % q, next = (i + 1) % q;
            const int id0 = 2 * (offset[fi] + i);
            const int id1 = id0 + 1;
            s1[id0] = id1;
            s1[id1] = id0;
            s0[id0] = 2 * (offset[fi] + prev) + 1;
            s0[id1] = 2 * (offset[fi] + next);
            // pair flags sharing (vertex, edge) across the two faces of
            // the edge
            auto key = [&](VertexLabel v, VertexLabel a, VertexLabel b) {
                return std::tuple(v, std::min(a, b), std::max(a, b));
            };
            for (auto [id, other] :
                 {std::pair(id0, f[prev]), std::pair(id1, f[next])}) {
                auto [it, inserted] = half.try_emplace(key(f[i], f[i], other), id);
                if (!inserted) {
                    s2[id] = it->second;
                    s2[it->second] = id;
                }
            }
        }
    }
    for (int v : s2)
        if (v < 0)
            throw std::invalid_argument(
                "canonical_form: map has a boundary edge");

    std::vector<int> best, enc, order(nflags), label(nflags);
    enc.reserve(3 * nflags);
    for (int start = 0; start < nflags; ++start) {
        std::fill(label.begin(), label.end(), -1);
        order[0] = start;
        label[start] = 0;
        int found = 1;
        for (int head = 0; head < found; ++head) {
            const int f = order[head];
            for (int g : {s0[f], s1[f], s2[f]})
                if (label[g] < 0) {
                    label[g] = found;
                    order[found++] = g;
                }
        }
        if (found != nflags)
            throw std::invalid_argument("canonical_form: map not connected");
        enc.clear();
        for (int i = 0; i < nflags; ++i) {
            const int f = order[i];
            for (int g : {s0[f], s1[f], s2[f]}) enc.push_back(label[g]);
        }
        if (best.empty() || enc < best) best = enc;
    }

    std::ostringstream os;
    auto used = m.used_vertices();
    os << "M " << used.size() << ',' << nf << '|';
    for (std::size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
    auto text = os.str();
    return {text, fnv1a64(text)};
}

bool are_isomorphic(const Complex& a, const Complex& b) {
    if (a.dim() != b.dim()) return false;
    if (face_vector(a) != face_vector(b)) return false;
    auto degrees = [](const Complex& c) {
        std::map<VertexLabel, int> deg;
        for (const auto& f : c.facets())
            for (auto v : f) ++deg[v];
        std::vector<int> out;
        for (const auto& [v, d] : deg) out.push_back(d);
        std::sort(out.begin(), out.end());
        return out;
    };
    if (degrees(a) != degrees(b)) return false;
    int bound = std::max<int>(16, static_cast<int>(a.used_vertices().size()));
    return canonical_form(a, bound) == canonical_form(b, bound);
}

bool are_isomorphic(const PolyhedralMap& a, const PolyhedralMap& b) {
    auto sizes = [](const PolyhedralMap& m) {
        std::vector<int> out;
        for (const auto& f : m.faces()) out.push_back(static_cast<int>(f.size()));
        std::sort(out.begin(), out.end());
        return out;
    };
    if (face_vector(a) != face_vector(b)) return false;
    if (sizes(a) != sizes(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace censym
