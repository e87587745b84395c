#include "censym/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <stdexcept>

namespace censym {

Simplex make_simplex(std::vector<VertexLabel> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] <= 0)
            throw std::invalid_argument("simplex labels must be positive");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw std::invalid_argument("simplex has a repeated label");
    }
    return vertices;
}

struct Complex::Cache {
    std::mutex mu;
    std::map<int, std::vector<Simplex>> faces;
};

Complex::Complex(int n) : n_(n), dim_(-1), cache_(std::make_shared<Cache>()) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Complex::Complex(int n, std::vector<Simplex> facets)
    : n_(n), dim_(-1), facets_(std::move(facets)), cache_(std::make_shared<Cache>()) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& f : facets_) {
        f = make_simplex(std::move(f));
        if (f.back() > n) throw std::invalid_argument("facet label exceeds vertex count");
        if (dim_ < 0) dim_ = static_cast<int>(f.size()) - 1;
        else if (static_cast<int>(f.size()) - 1 != dim_)
            throw std::invalid_argument("complex is not pure");
    }
    std::sort(facets_.begin(), facets_.end());
    if (std::adjacent_find(facets_.begin(), facets_.end()) != facets_.end())
        throw std::invalid_argument("duplicate facet");
}

const std::vector<Simplex>& Complex::faces(int k) const {
    if (k < 0 || k > dim_) {
        static const std::vector<Simplex> kEmpty;
        return kEmpty;
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->faces.find(k);
    if (it != cache_->faces.end()) return it->second;

    std::set<Simplex> out;
    // k-subsets of each facet
    std::vector<int> idx(k + 1);
    for (const auto& f : facets_) {
        const int s = static_cast<int>(f.size());
        for (int i = 0; i <= k; ++i) idx[i] = i;
        while (true) {
            Simplex sub(k + 1);
            for (int i = 0; i <= k; ++i) sub[i] = f[idx[i]];
            out.insert(std::move(sub));
            int i = k;
            while (i >= 0 && idx[i] == s - (k + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    auto& slot = cache_->faces[k];
    slot.assign(out.begin(), out.end());
    return slot;
}

long long Complex::face_count(int k) const {
    return static_cast<long long>(faces(k).size());
}

std::vector<VertexLabel> Complex::used_vertices() const {
    std::set<VertexLabel> used;
    for (const auto& f : facets_) used.insert(f.begin(), f.end());
    return {used.begin(), used.end()};
}

bool Complex::contains_face(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > dim_) return false;
    const auto& fs = faces(static_cast<int>(s.size()) - 1);
    return std::binary_search(fs.begin(), fs.end(), s);
}

FaceVector face_vector(const Complex& c) {
    FaceVector f;
    for (int k = 0; k <= c.dim(); ++k) f.push_back(c.face_count(k));
    return f;
}

long long euler_characteristic(const Complex& c) {
    long long chi = 0;
    for (int k = 0; k <= c.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * c.face_count(k);
    return chi;
}

Complex link(const Complex& c, VertexLabel v) {
    std::vector<Simplex> out;
    for (const auto& f : c.facets()) {
        auto it = std::lower_bound(f.begin(), f.end(), v);
        if (it != f.end() && *it == v) {
            Simplex g;
            g.reserve(f.size() - 1);
            for (auto w : f)
                if (w != v) g.push_back(w);
            out.push_back(std::move(g));
        }
    }
    if (out.empty()) throw std::invalid_argument("link: unknown vertex");
    return Complex(c.vertex_count(), std::move(out));
}

bool is_closed_pseudomanifold(const Complex& c) {
    if (c.dim() < 1) throw std::invalid_argument("need dimension >= 1");
    std::map<Simplex, int> ridge_use;
    for (const auto& f : c.facets()) {
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex r;
            r.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != omit) r.push_back(f[i]);
            ++ridge_use[r];
        }
    }
    for (const auto& [r, cnt] : ridge_use)
        if (cnt != 2) return false;
    return true;
}

bool is_connected(const Complex& c) {
    auto used = c.used_vertices();
    if (used.size() <= 1) return true;
    std::map<VertexLabel, std::vector<VertexLabel>> adj;
    if (c.dim() == 0) return used.size() <= 1;
    for (const auto& e : c.faces(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<VertexLabel> seen;
    std::queue<VertexLabel> q;
    q.push(used.front());
    seen.insert(used.front());
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : adj[v])
            if (seen.insert(w).second) q.push(w);
    }
    return seen.size() == used.size();
}

bool is_single_cycle(const Complex& c) {
    if (c.dim() != 1 || c.empty()) return false;
    std::map<VertexLabel, int> deg;
    for (const auto& e : c.facets()) {
        ++deg[e[0]];
        ++deg[e[1]];
    }
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    return is_connected(c) && deg.size() == c.facets().size();
}

bool is_combinatorial_surface(const Complex& c) {
    if (c.dim() != 2 || c.empty()) return false;
    if (!is_closed_pseudomanifold(c)) return false;
    if (!is_connected(c)) return false;
    for (auto v : c.used_vertices())
        if (!is_single_cycle(link(c, v))) return false;
    return true;
}

bool is_combinatorial_3manifold(const Complex& c) {
    if (c.dim() != 3 || c.empty()) return false;
    if (!is_closed_pseudomanifold(c)) return false;
    if (!is_connected(c)) return false;
    for (auto v : c.used_vertices()) {
        Complex lk = link(c, v);
        if (!is_combinatorial_surface(lk)) return false;
        if (euler_characteristic(lk) != 2) return false;
    }
    return true;
}

std::optional<std::vector<int>> orientation_assignment(const Complex& c) {
    if (!is_closed_pseudomanifold(c))
        throw std::invalid_argument("orientation: not a closed pseudomanifold");
    const auto& facets = c.facets();
    const int nf = static_cast<int>(facets.size());

    // ridge -> the two facets containing it, with the parity of the omitted
    // vertex position
    std::map<Simplex, std::vector<std::pair<int, int>>> ridge_inc;
    for (int fi = 0; fi < nf; ++fi) {
        const auto& f = facets[fi];
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != omit) r.push_back(f[i]);
            ridge_inc[r].push_back({fi, static_cast<int>(omit) % 2 == 0 ? 1 : -1});
        }
    }

    std::vector<int> sign(nf, 0);
    for (int start = 0; start < nf; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int fi = q.front();
            q.pop();
            const auto& f = facets[fi];
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                Simplex r;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != omit) r.push_back(f[i]);
                const auto& inc = ridge_inc[r];
                int other = inc[0].first == fi ? 1 : 0;
                int gi = inc[other].first;
                int my_par = inc[1 - other].second;
                int their_par = inc[other].second;
                // coherent: the induced orientations on r must cancel
                int need = -sign[fi] * my_par * their_par;
                if (sign[gi] == 0) {
                    sign[gi] = need;
                    q.push(gi);
                } else if (sign[gi] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

} // namespace censym
