#include "censym/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "censym/io.hpp"

namespace censym {

namespace {

constexpr int kMaxRidges = 1024;
constexpr int kCheckpointVersion = 1;

std::vector<int> bits_of(std::uint32_t mask) {
    std::vector<int> out;
    for (int b = 0; mask; ++b, mask >>= 1)
        if (mask & 1u) out.push_back(b);
    return out;
}

/// Does a relabeling commuting with the central involution make the facet
/// list strictly smaller? Labels are 0-based; pairs are {i, n-1-i}.
class MinimalityTester {
public:
    MinimalityTester(int n, int fs) : n_(n), m_(n / 2), fs_(fs) {}

    // facets: sorted list of sorted 0-based label tuples.
    bool is_minimal(const std::vector<std::array<int, 4>>& facets, int nf) {
        fac_ = &facets;
        nf_ = nf;
        target_.resize(nf);
        for (int i = 0; i < nf; ++i) target_[i] = pack_exact(facets[i]);
        std::sort(target_.begin(), target_.end());
        new_of_.assign(n_, -1);
        pair_done_.assign(m_, 0);
        smaller_ = false;
        dfs(0);
        return !smaller_;
    }

private:
    std::uint32_t pack_exact(const std::array<int, 4>& f) const {
        std::uint32_t c = 0;
        for (int i = 0; i < fs_; ++i) c = (c << 4) | static_cast<std::uint32_t>(f[i]);
        return c;
    }

    // Sorted mapped code list; unassigned labels become next_low, a
    // pointwise lower bound of any completion.
    void compute(int next_low, std::vector<std::uint32_t>& out) const {
        out.resize(nf_);
        std::array<int, 4> t;
        for (int i = 0; i < nf_; ++i) {
            const auto& f = (*fac_)[i];
            for (int j = 0; j < fs_; ++j) {
                int lbl = new_of_[f[j]];
                t[j] = lbl >= 0 ? lbl : next_low;
            }
            std::sort(t.begin(), t.begin() + fs_);
            out[i] = pack_exact(t);
        }
        std::sort(out.begin(), out.end());
    }

    static int cmp(const std::vector<std::uint32_t>& a,
                   const std::vector<std::uint32_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return -1;
            if (a[i] > b[i]) return 1;
        }
        return 0;
    }

    void assign(int u, int low) {
        new_of_[u] = low;
        new_of_[n_ - 1 - u] = n_ - 1 - low;
        pair_done_[std::min(u, n_ - 1 - u)] = 1;
    }
    void unassign(int u) {
        new_of_[u] = -1;
        new_of_[n_ - 1 - u] = -1;
        pair_done_[std::min(u, n_ - 1 - u)] = 0;
    }

    void dfs(int depth) {
        if (smaller_) return;
        if (depth == m_) {
            std::vector<std::uint32_t> exact;
            compute(0, exact); // fully assigned: placeholder unused
            if (cmp(exact, target_) < 0) smaller_ = true;
            return;
        }
        struct Child {
            std::vector<std::uint32_t> bound;
            int u;
            bool operator<(const Child& o) const { return bound < o.bound; }
        };
        std::vector<Child> children;
        for (int p = 0; p < m_; ++p) {
            if (pair_done_[p]) continue;
            for (int u : {p, n_ - 1 - p}) {
                assign(u, depth);
                std::vector<std::uint32_t> bound;
                compute(depth + 1, bound);
                // only a strictly smaller completion is interesting
                if (cmp(bound, target_) < 0) children.push_back({std::move(bound), u});
                unassign(u);
            }
        }
        std::sort(children.begin(), children.end());
        for (const auto& ch : children) {
            if (smaller_) return;
            assign(ch.u, depth);
            dfs(depth + 1);
            unassign(ch.u);
        }
    }

    int n_, m_, fs_, nf_ = 0;
    const std::vector<std::array<int, 4>>* fac_ = nullptr;
    std::vector<std::uint32_t> target_;
    std::vector<int> new_of_;
    std::vector<std::uint8_t> pair_done_;
    bool smaller_ = false;
};

struct OrbitRec {
    std::uint32_t rep_mask = 0, img_mask = 0;
    std::vector<int> ridge_ids; // ridges of both facets
    Simplex rep;                // 1-based
};

/// One enumeration run: orbit tables, backtracking search, emission
/// pipeline, worker pool, checkpointing.
class Run {
public:
    Run(int m, int dim, const EnumerateOptions& opt) : m_(m), d_(dim), opt_(opt) {
        n_ = 2 * m;
        fs_ = d_ + 1;
        if (d_ == 2 && m < 3) throw std::invalid_argument("surfaces need m >= 3");
        if (d_ == 3 && m < 4) throw std::invalid_argument("3-manifolds need m >= 4");
        if (n_ > 16) throw std::invalid_argument("engine supports at most 16 vertices");
        build_tables();
    }

    std::vector<EnumerationResult> execute(SearchStats* out);

private:
    // ---- setup -----------------------------------------------------------

    void build_tables() {
        // ridge ids in lexicographic subset order
        id_of_mask_.assign(std::size_t{1} << n_, -1);
        std::vector<int> pick(d_);
        for (int i = 0; i < d_; ++i) pick[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int b : pick) mask |= 1u << b;
            id_of_mask_[mask] = static_cast<int>(ridge_mask_.size());
            ridge_mask_.push_back(mask);
            int i = d_ - 1;
            while (i >= 0 && pick[i] == n_ - d_ + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < d_; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (static_cast<int>(ridge_mask_.size()) > kMaxRidges)
            throw std::invalid_argument("ridge table too large");

        // admissible orbits, sorted by 1-based representative
        auto inv = Involution::canonical(m_);
        for (const auto& ob : admissible_face_orbits(n_, d_, inv)) {
            OrbitRec r;
            for (auto v : ob.rep) r.rep_mask |= 1u << (v - 1);
            for (auto v : ob.image) r.img_mask |= 1u << (v - 1);
            r.rep = ob.rep;
            for (std::uint32_t fm : {r.rep_mask, r.img_mask})
                for (int b : bits_of(fm))
                    r.ridge_ids.push_back(id_of_mask_[fm & ~(1u << b)]);
            orbits_.push_back(std::move(r));
        }

        at_ridge_.assign(ridge_mask_.size(), {});
        for (int oi = 0; oi < static_cast<int>(orbits_.size()); ++oi)
            for (int rid : orbits_[oi].ridge_ids) at_ridge_[rid].push_back(oi);

        // root: the orbit of {1, ..., fs}
        std::uint32_t root_mask = (1u << fs_) - 1;
        for (int oi = 0; oi < static_cast<int>(orbits_.size()); ++oi)
            if (orbits_[oi].rep_mask == root_mask) root_ = oi;
        if (root_ < 0) throw std::logic_error("root orbit missing");

        // In a minimal labeling the second facet is {1..d, d+2} or
        // {1..d, n-d}: any other completion of the first ridge relabels to
        // something smaller through an unused pair.
        std::set<std::uint32_t> allowed;
        std::uint32_t base = (1u << d_) - 1;
        allowed.insert(base | (1u << (fs_)));        // label fs+1
        allowed.insert(base | (1u << (n_ - fs_)));   // label n-fs+1 = I(fs)
        for (int oi = 0; oi < static_cast<int>(orbits_.size()); ++oi)
            if (allowed.count(orbits_[oi].rep_mask) || allowed.count(orbits_[oi].img_mask))
                forced_second_.push_back(oi);
    }

    // ---- per-worker search state ----------------------------------------

    struct Worker {
        std::vector<std::uint8_t> use;
        std::bitset<kMaxRidges> deficient;
        std::vector<int> chosen;
        std::vector<std::uint8_t> orbit_used;
        SearchStats stats;
        MinimalityTester tester;
        std::vector<std::string> survivor_lines; // current task's checkpoint rows

        Worker(const Run& r)
            : use(r.ridge_mask_.size(), 0),
              orbit_used(r.orbits_.size(), 0),
              tester(r.n_, r.fs_) {}
    };

    bool try_add(Worker& w, int oi) {
        if (w.orbit_used[oi]) return false;
        const auto& rids = orbits_[oi].ridge_ids;
        for (int rid : rids)
            if (w.use[rid] == 2) {
                ++w.stats.prunes_ridge_overuse;
                return false;
            }
        for (int rid : rids) {
            if (++w.use[rid] == 1)
                w.deficient.set(rid);
            else
                w.deficient.reset(rid);
        }
        w.orbit_used[oi] = 1;
        w.chosen.push_back(oi);
        return true;
    }

    void remove_last(Worker& w) {
        int oi = w.chosen.back();
        w.chosen.pop_back();
        w.orbit_used[oi] = 0;
        for (int rid : orbits_[oi].ridge_ids) {
            if (--w.use[rid] == 1)
                w.deficient.set(rid);
            else
                w.deficient.reset(rid);
        }
    }

    void dfs(Worker& w) {
        ++w.stats.nodes_expanded;
        if (!w.deficient.any()) {
            emit(w);
            return;
        }
        int rid = static_cast<int>(w.deficient._Find_first());
        const auto& cand =
            w.chosen.size() == 1 ? forced_second_ : at_ridge_[rid];
        for (int oi : cand) {
            if (try_add(w, oi)) {
                dfs(w);
                remove_last(w);
            }
        }
    }

    // ---- emission pipeline ----------------------------------------------

    std::vector<std::uint32_t> chosen_masks(const Worker& w) const {
        std::vector<std::uint32_t> fm;
        fm.reserve(2 * w.chosen.size());
        for (int oi : w.chosen) {
            fm.push_back(orbits_[oi].rep_mask);
            fm.push_back(orbits_[oi].img_mask);
        }
        return fm;
    }

    bool quick_span_connected(const std::vector<std::uint32_t>& fm, Worker& w) {
        std::uint32_t all = 0;
        for (auto f : fm) all |= f;
        if (all != (std::uint32_t{1} << n_) - 1) {
            ++w.stats.rejected_span;
            return false;
        }
        std::uint32_t seen = fm[0];
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto f : fm)
                if ((f & seen) && (f & ~seen)) {
                    seen |= f;
                    grew = true;
                }
        }
        if (seen != all) {
            ++w.stats.rejected_disconnected;
            return false;
        }
        return true;
    }

    bool quick_links_surface(const std::vector<std::uint32_t>& fm, Worker& w) {
        for (int v = 0; v < n_; ++v) {
            // link edges at v; every neighbor has degree 2 because each edge
            // of a complete candidate lies in exactly two triangles
            std::array<std::array<int, 2>, 16> adj{};
            std::array<int, 16> deg{};
            deg.fill(0);
            int first = -1, nbrs = 0;
            for (auto f : fm) {
                if (!(f & (1u << v))) continue;
                auto bs = bits_of(f & ~(1u << v));
                int a = bs[0], b = bs[1];
                if (deg[a] >= 2 || deg[b] >= 2) {
                    ++w.stats.rejected_link;
                    return false;
                }
                if (deg[a] == 0) ++nbrs;
                if (deg[b] == 0) ++nbrs;
                adj[a][deg[a]++] = b;
                adj[b][deg[b]++] = a;
                first = a;
            }
            if (first < 0) continue; // unused vertex: span check already failed
            // single cycle <=> the 2-regular link graph is connected
            std::uint32_t vis = 1u << first;
            std::vector<int> stack{first};
            int count = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int k = 0; k < deg[x]; ++k) {
                    int y = adj[x][k];
                    if (!(vis & (1u << y))) {
                        vis |= 1u << y;
                        ++count;
                        stack.push_back(y);
                    }
                }
            }
            if (count != nbrs) {
                ++w.stats.rejected_link;
                return false;
            }
        }
        return true;
    }

    bool quick_links_3manifold(const std::vector<std::uint32_t>& fm, Worker& w) {
        // vertex links must be connected surfaces with chi = 2; edge rings
        // must be single cycles
        for (int v = 0; v < n_; ++v) {
            std::vector<std::uint32_t> tris;
            for (auto f : fm)
                if (f & (1u << v)) tris.push_back(f & ~(1u << v));
            if (tris.empty()) continue;
            std::uint32_t verts = 0;
            std::set<std::uint32_t> edges;
            for (auto t : tris) {
                verts |= t;
                for (int b : bits_of(t)) edges.insert(t & ~(1u << b));
            }
            long long chi = __builtin_popcount(verts) -
                            static_cast<long long>(edges.size()) +
                            static_cast<long long>(tris.size());
            if (chi != 2) {
                ++w.stats.rejected_link;
                return false;
            }
            // connectivity of the link over shared edges
            std::vector<char> vis(tris.size(), 0);
            std::vector<int> stack{0};
            vis[0] = 1;
            std::size_t count = 1;
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < tris.size(); ++j)
                    if (!vis[j] &&
                        __builtin_popcount(tris[i] & tris[j]) == 2) {
                        vis[j] = 1;
                        ++count;
                        stack.push_back(static_cast<int>(j));
                    }
            }
            if (count != tris.size()) {
                ++w.stats.rejected_link;
                return false;
            }
        }
        // edge rings: tetrahedra around each edge form one cycle
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                std::uint32_t e = (1u << a) | (1u << b);
                std::vector<std::uint32_t> ring;
                for (auto f : fm)
                    if ((f & e) == e) ring.push_back(f);
                if (ring.empty()) continue;
                std::vector<char> vis(ring.size(), 0);
                std::vector<int> stack{0};
                vis[0] = 1;
                std::size_t count = 1;
                while (!stack.empty()) {
                    int i = stack.back();
                    stack.pop_back();
                    for (std::size_t j = 0; j < ring.size(); ++j)
                        if (!vis[j] &&
                            __builtin_popcount(ring[i] & ring[j]) == 3) {
                            vis[j] = 1;
                            ++count;
                            stack.push_back(static_cast<int>(j));
                        }
                }
                if (count != ring.size()) {
                    ++w.stats.rejected_link;
                    return false;
                }
            }
        return true;
    }

    void emit(Worker& w) {
        ++w.stats.complete_candidates;
        auto fm = chosen_masks(w);
        if (!quick_span_connected(fm, w)) return;
        if (d_ == 2 ? !quick_links_surface(fm, w) : !quick_links_3manifold(fm, w))
            return;

        std::vector<std::array<int, 4>> tuples(fm.size());
        for (std::size_t i = 0; i < fm.size(); ++i) {
            auto bs = bits_of(fm[i]);
            tuples[i].fill(0);
            std::copy(bs.begin(), bs.end(), tuples[i].begin());
        }
        std::sort(tuples.begin(), tuples.end(),
                  [&](const auto& a, const auto& b) {
                      return std::lexicographical_compare(a.begin(), a.begin() + fs_,
                                                          b.begin(), b.begin() + fs_);
                  });
        if (!w.tester.is_minimal(tuples, static_cast<int>(tuples.size()))) {
            ++w.stats.rejected_nonminimal;
            return;
        }

        std::vector<Simplex> reps;
        for (int oi : w.chosen) reps.push_back(orbits_[oi].rep);
        std::sort(reps.begin(), reps.end());
        classify_and_insert(reps, &w);
    }

    // Full validation and classification of one orbit-representative set;
    // the authoritative check behind every emitted result.
    void classify_and_insert(const std::vector<Simplex>& reps, Worker* w) {
        auto inv = Involution::canonical(m_);
        Complex c(n_, orbit_closure(reps, inv));
        bool valid = static_cast<int>(c.used_vertices().size()) == n_ &&
                     (d_ == 2 ? is_combinatorial_surface(c)
                              : is_combinatorial_3manifold(c)) &&
                     is_centrally_symmetric(c, inv);
        if (!valid) {
            if (w) ++w->stats.rejected_invalid;
            return;
        }
        EnumerationResult r{c, reps, homology(c),
                            orientation_assignment(c).has_value(),
                            canonical_form(c)};
        std::lock_guard<std::mutex> lock(mu_);
        if (w) w->survivor_lines.push_back("R " + facets_to_text(reps));
        auto [it, fresh] = results_.try_emplace(r.canonical.text, r);
        if (!fresh) {
            ++total_.duplicates_rejected;
            // deterministic representative regardless of thread timing
            if (r.complex.facets() < it->second.complex.facets()) it->second = r;
        }
    }

    // ---- task split, workers, checkpoint ---------------------------------

    void split(Worker& w, std::vector<std::vector<int>>& tasks) {
        ++w.stats.nodes_expanded;
        if (!w.deficient.any()) {
            emit(w); // complete above the split depth: handle inline
            return;
        }
        if (static_cast<int>(w.chosen.size()) >= std::max(1, opt_.split_depth)) {
            tasks.push_back(w.chosen);
            return;
        }
        int rid = static_cast<int>(w.deficient._Find_first());
        const auto& cand =
            w.chosen.size() == 1 ? forced_second_ : at_ridge_[rid];
        for (int oi : cand)
            if (try_add(w, oi)) {
                split(w, tasks);
                remove_last(w);
            }
    }

    std::string header_line() const {
        std::ostringstream os;
        os << "censym-checkpoint " << kCheckpointVersion << " m " << m_ << " dim "
           << d_ << " split " << opt_.split_depth;
        return os.str();
    }

    void load_checkpoint() {
        std::ifstream in(opt_.checkpoint_path);
        if (!in) throw std::runtime_error("cannot open checkpoint for resume");
        std::string line;
        if (!std::getline(in, line) || line != header_line())
            throw std::runtime_error("checkpoint header mismatch");
        while (std::getline(in, line)) {
            if (line.rfind("T ", 0) == 0) {
                done_tasks_.insert(std::stol(line.substr(2)));
            } else if (line.rfind("R ", 0) == 0) {
                classify_and_insert(facets_from_text(line.substr(2)), nullptr);
            } else if (!line.empty()) {
                throw std::runtime_error("bad checkpoint line: " + line);
            }
        }
    }

    void finish_task(Worker& w, long task_id) {
        std::lock_guard<std::mutex> lock(mu_);
        merge_stats(w.stats);
        w.stats = SearchStats{};
        if (ck_out_.is_open()) {
            // survivors buffered per task so a crash never loses a finished task
            for (const auto& s : w.survivor_lines) ck_out_ << s << '\n';
            ck_out_ << "T " << task_id << '\n';
            ck_out_.flush();
        }
        w.survivor_lines.clear();
    }

    void merge_stats(const SearchStats& s) {
        total_.nodes_expanded += s.nodes_expanded;
        total_.prunes_ridge_overuse += s.prunes_ridge_overuse;
        total_.complete_candidates += s.complete_candidates;
        total_.rejected_span += s.rejected_span;
        total_.rejected_disconnected += s.rejected_disconnected;
        total_.rejected_link += s.rejected_link;
        total_.rejected_nonminimal += s.rejected_nonminimal;
        total_.rejected_invalid += s.rejected_invalid;
    }

    int m_, n_, d_, fs_;
    EnumerateOptions opt_;
    std::vector<OrbitRec> orbits_;
    std::vector<std::uint32_t> ridge_mask_;
    std::vector<int> id_of_mask_;
    std::vector<std::vector<int>> at_ridge_;
    int root_ = -1;
    std::vector<int> forced_second_;

    std::mutex mu_;
    std::map<std::string, EnumerationResult> results_;
    SearchStats total_;
    std::ofstream ck_out_;
    std::set<long> done_tasks_;
};

std::vector<EnumerationResult> Run::execute(SearchStats* out) {
    if (opt_.resume) {
        if (opt_.checkpoint_path.empty())
            throw std::invalid_argument("resume requires a checkpoint path");
        load_checkpoint();
    }
    if (!opt_.checkpoint_path.empty()) {
        ck_out_.open(opt_.checkpoint_path, std::ios::app);
        if (!ck_out_) throw std::runtime_error("cannot open checkpoint for writing");
        if (!opt_.resume) {
            ck_out_ << header_line() << '\n';
            ck_out_.flush();
        }
    }

    // frontier tasks from the first split_depth orbit choices
    Worker splitter(*this);
    std::vector<std::vector<int>> tasks;
    if (!try_add(splitter, root_)) throw std::logic_error("root orbit rejected");
    split(splitter, tasks);
    remove_last(splitter);
    {
        std::lock_guard<std::mutex> lock(mu_);
        merge_stats(splitter.stats);
        splitter.stats = SearchStats{};
        if (ck_out_.is_open()) {
            for (const auto& s : splitter.survivor_lines) ck_out_ << s << '\n';
            ck_out_.flush();
        }
        splitter.survivor_lines.clear();
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        Worker w(*this);
        while (true) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            if (done_tasks_.count(static_cast<long>(t))) continue;
            for (int oi : tasks[t])
                if (!try_add(w, oi)) throw std::logic_error("task replay failed");
            dfs(w);
            while (!w.chosen.empty()) remove_last(w);
            finish_task(w, static_cast<long>(t));
        }
    };

    int jobs = std::max(1, opt_.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<EnumerationResult> out_results;
    for (auto& [key, r] : results_) out_results.push_back(std::move(r));
    total_.results_emitted = out_results.size();
    if (out) *out = total_;
    return out_results;
}

} // namespace

std::vector<EnumerationResult> enumerate_cs_surfaces(int m,
                                                     const EnumerateOptions& opt,
                                                     SearchStats* stats) {
    return Run(m, 2, opt).execute(stats);
}

std::vector<EnumerationResult> enumerate_cs_3manifolds(int m,
                                                       const EnumerateOptions& opt,
                                                       SearchStats* stats) {
    return Run(m, 3, opt).execute(stats);
}

} // namespace censym
