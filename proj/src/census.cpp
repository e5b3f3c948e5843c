#include "qybe/census.hpp"

#include <numeric>

#include "qybe/errors.hpp"

namespace qybe {

namespace {

// Small integer adjacency matrices; entries stay far below overflow.
using IntMat = std::vector<long>;

long ent(const IntMat& a, std::size_t n, std::size_t i, std::size_t j) {
    return a[i * n + j];
}

IntMat square(const IntMat& a, std::size_t n) {
    IntMat r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long v = ent(a, n, i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                r[i * n + j] += v * ent(a, n, k, j);
        }
    return r;
}

// Does a rational mu with A^2 = mu A exist? (zero matrix: yes, mu = 0)
bool tl_route(const IntMat& a, std::size_t n) {
    IntMat sq = square(a, n);
    long mu_num = 0, mu_den = 0;  // mu = mu_num / mu_den, unset while den == 0
    for (std::size_t k = 0; k < n * n; ++k) {
        if (a[k] == 0) {
            if (sq[k] != 0) return false;
            continue;
        }
        if (mu_den == 0) {
            mu_num = sq[k];
            mu_den = a[k];
        } else if (sq[k] * mu_den != mu_num * a[k]) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> int_components(const IntMat& a, std::size_t n) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (ent(a, n, i, j) != 0) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> comps(n);
    for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : comps)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

bool is_isolated(const IntMat& a, std::size_t n, std::size_t v) {
    for (std::size_t j = 0; j < n; ++j)
        if (ent(a, n, v, j) != 0 || ent(a, n, j, v) != 0) return false;
    return true;
}

// Block is rank one iff all 2x2 minors vanish (given a nonzero entry exists).
bool block_rank_one(const IntMat& a, std::size_t n,
                    const std::vector<std::size_t>& comp) {
    for (std::size_t p = 0; p < comp.size(); ++p)
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (std::size_t r = p; r < comp.size(); ++r)
                for (std::size_t s = q; s < comp.size(); ++s)
                    if (ent(a, n, comp[p], comp[q]) * ent(a, n, comp[r], comp[s]) !=
                        ent(a, n, comp[p], comp[s]) * ent(a, n, comp[r], comp[q]))
                        return false;
    return true;
}

// Structural characterization per mode; see header.
bool structure_route(const IntMat& a, std::size_t n, QuiverMode mode) {
    if (mode == QuiverMode::Simple) {
        for (long v : a)
            if (v != 0) return false;
        return true;
    }
    auto comps = int_components(a, n);
    long common_mu = -1;
    for (const auto& comp : comps) {
        if (comp.size() == 1 && is_isolated(a, n, comp[0])) continue;
        if (mode == QuiverMode::Loops) {
            // Complete with loops: every entry of the block is 1.
            for (std::size_t p : comp)
                for (std::size_t q : comp)
                    if (ent(a, n, p, q) != 1) return false;
            long mu = static_cast<long>(comp.size());
            if (common_mu == -1) common_mu = mu;
            else if (common_mu != mu) return false;
        } else {  // Multi: symmetric rank-one block, mu = trace
            if (!block_rank_one(a, n, comp)) return false;
            long mu = 0;
            for (std::size_t p : comp) mu += ent(a, n, p, p);
            if (mu == 0) return false;  // connected nonneg block has positive trace
            if (common_mu == -1) common_mu = mu;
            else if (common_mu != mu) return false;
        }
    }
    return true;
}

template <typename Fn>
void enumerate_symmetric(std::size_t n, bool loops, long max_entry, Fn&& visit) {
    std::size_t slots = n * (n - 1) / 2 + (loops ? n : 0);
    std::vector<long> value(slots, 0);
    for (;;) {
        IntMat a(n * n, 0);
        std::size_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + (loops ? 0 : 1); j < n; ++j) {
                a[i * n + j] = value[s];
                a[j * n + i] = value[s];
                ++s;
            }
        visit(a);
        // Odometer increment over the slot values.
        std::size_t k = 0;
        while (k < slots && value[k] == max_entry) value[k++] = 0;
        if (k == slots) break;
        ++value[k];
    }
}

}  // namespace

CensusReport census_check(std::size_t max_vertices, QuiverMode mode) {
    std::size_t cap;
    switch (mode) {
        case QuiverMode::Simple: cap = 6; break;
        case QuiverMode::Loops: cap = 5; break;
        case QuiverMode::Multi: cap = 4; break;
        default: throw DomainError("census mode must be simple, loops or multi");
    }
    if (max_vertices == 0 || max_vertices > cap)
        throw DomainError("census limited to 1.." + std::to_string(cap) +
                          " vertices for mode " + mode_name(mode));

    CensusReport rep;
    rep.mode = mode;
    rep.max_vertices = max_vertices;
    bool loops = mode != QuiverMode::Simple;
    long max_entry = mode == QuiverMode::Multi ? 2 : 1;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        enumerate_symmetric(n, loops, max_entry, [&](const IntMat& a) {
            ++rep.graphs_checked;
            bool tl = tl_route(a, n);
            bool structure = structure_route(a, n, mode);
            if (tl) ++rep.satisfying;
            if (tl != structure)
                rep.counterexamples.push_back({n, a, tl, structure});
        });
    }
    return rep;
}

}  // namespace qybe
