#include "censym/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace censym {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix reduction");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix reduction");
    return r;
}

} // namespace

MatZ boundary_matrix(const Complex& c, int k) {
    if (k < 0 || k > c.dim()) throw std::invalid_argument("dimension out of range");
    const auto& rows = c.faces(k - 1); // empty when k == 0
    const auto& cols = c.faces(k);
    std::map<Simplex, int> row_index;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) row_index[rows[i]] = i;

    MatZ b = MatZ::Zero(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    if (k == 0) return b;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const auto& f = cols[j];
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex r;
            r.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != omit) r.push_back(f[i]);
            b(row_index.at(r), j) = (omit % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

SmithResult smith_normal_form(MatZ a) {
    const int nr = static_cast<int>(a.rows());
    const int nc = static_cast<int>(a.cols());
    std::vector<std::int64_t> inv;
    int t = 0; // top-left corner of the active block
    while (t < nr && t < nc) {
        // smallest nonzero entry by absolute value in the active block
        int pr = -1, pc = -1;
        std::int64_t best = 0;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j) {
                std::int64_t v = std::abs(a(i, j));
                if (v != 0 && (pr < 0 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        a.row(t).swap(a.row(pr));
        a.col(t).swap(a.col(pc));
        if (a(t, t) < 0) a.row(t) = -a.row(t);

        bool clean = true;
        for (int i = t + 1; i < nr; ++i) {
            if (a(i, t) == 0) continue;
            std::int64_t q = a(i, t) / a(t, t);
            if (q != 0)
                for (int j = t; j < nc; ++j)
                    a(i, j) = checked_sub(a(i, j), checked_mul(q, a(t, j)));
            if (a(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < nc; ++j) {
            if (a(t, j) == 0) continue;
            std::int64_t q = a(t, j) / a(t, t);
            if (q != 0)
                for (int i = t; i < nr; ++i)
                    a(i, j) = checked_sub(a(i, j), checked_mul(q, a(i, t)));
            if (a(t, j) != 0) clean = false;
        }
        if (!clean) continue; // remainders left; re-pivot on a smaller entry

        // pivot must divide the rest of the block for true invariant factors
        bool divides = true;
        for (int i = t + 1; i < nr && divides; ++i)
            for (int j = t + 1; j < nc; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    // fold row i into row t and redo this corner
                    for (int jj = t; jj < nc; ++jj)
                        a(t, jj) = checked_sub(a(t, jj), checked_mul(-1, a(i, jj)));
                    divides = false;
                    break;
                }
        if (!divides) continue;

        inv.push_back(a(t, t));
        ++t;
    }
    return {std::move(inv)};
}

std::vector<int> HomologyGroups::reduced_betti() const {
    auto out = betti;
    if (!out.empty() && out[0] > 0) --out[0];
    return out;
}

HomologyGroups homology(const Complex& c) {
    if (c.empty()) throw std::invalid_argument("homology of empty complex");
    const int d = c.dim();
    std::vector<SmithResult> snf(d + 2);
    snf[0] = {};
    for (int k = 1; k <= d; ++k) snf[k] = smith_normal_form(boundary_matrix(c, k));
    snf[d + 1] = {};

    HomologyGroups h;
    for (int k = 0; k <= d; ++k) {
        long long fk = c.face_count(k);
        int bk = static_cast<int>(fk) - snf[k].rank() - snf[k + 1].rank();
        h.betti.push_back(bk);
        std::vector<std::int64_t> tor;
        for (auto v : snf[k + 1].invariants)
            if (v > 1) tor.push_back(v);
        h.torsion.push_back(std::move(tor));
    }
    return h;
}

bool is_orientable(const Complex& c) {
    return orientation_assignment(c).has_value();
}

std::string homology_string(const HomologyGroups& h) {
    std::ostringstream os;
    for (std::size_t k = 0; k < h.betti.size(); ++k) {
        if (k) os << ',';
        os << h.betti[k];
        for (auto t : h.torsion[k]) os << "+Z" << t;
    }
    return os.str();
}

} // namespace censym
