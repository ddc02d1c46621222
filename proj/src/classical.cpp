#include "sle/classical.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frame.hpp"
#include "sle/errors.hpp"

namespace sle {

using detail::Frame;
using detail::Key;

std::vector<int> candidate_pages(const Instance& inst, const Edge& e) {
    if (!inst.is_old(e.u) || !inst.is_old(e.v)) throw InputError("candidate_pages needs two old endpoints");
    Frame f(inst);
    std::vector<int> out;
    detail::fit_pages(f, f.old_key(e.u.value), f.old_key(e.v.value), out);
    return out;
}

std::pair<Instance, std::vector<Edge>> reduce_safe_edges(const Instance& inst) {
    if (inst.n_add() != 0) throw PreconditionError("reduce_safe_edges needs V_add to be empty");
    std::vector<Edge> keep = inst.new_edges();
    std::vector<std::size_t> size;
    for (const Edge& e : keep) size.push_back(candidate_pages(inst, e).size());
    std::vector<Edge> removed;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (size[i] >= keep.size()) {
                removed.push_back(keep[i]);
                keep.erase(keep.begin() + i);
                size.erase(size.begin() + i);
                changed = true;
                break;
            }
    }
    return {with_new_edges(inst, keep), removed};
}

std::optional<Layout> solve_edges_only(const Instance& inst, const SolveOptions&, SolveStats* stats) {
    if (inst.n_add() != 0) throw PreconditionError("edges-only solver needs V_add to be empty");
    Frame f(inst);
    std::vector<std::pair<Key, Key>> ends;
    std::vector<std::vector<int>> cand(f.nedges.size());
    for (std::size_t e = 0; e < f.nedges.size(); ++e) {
        Key a = f.old_key(f.nedges[e].first), b = f.old_key(f.nedges[e].second);
        ends.emplace_back(a, b);
        detail::fit_pages(f, a, b, cand[e]);
    }
    if (stats) stats->branches += 1;
    std::vector<int> pages;
    if (!detail::assign_pages(ends, cand, pages)) return std::nullopt;
    std::vector<Key> key(f.n);
    for (int v = 0; v < f.n; ++v) key[v] = f.old_key(v);
    return detail::make_layout(inst, key, pages);
}

std::optional<Layout> solve_one_vertex(const Instance& inst, const SolveOptions& opts, SolveStats* stats) {
    if (inst.n_add() != 1 || !inst.eadd_h().empty())
        throw PreconditionError("one-vertex solver needs n_add = 1 and no new edge between old vertices");
    Frame f(inst);
    std::vector<int> cand, pages(f.nedges.size());
    for (int g = 1; g <= f.n + 1; ++g) {
        opts.check_deadline();
        if (stats) stats->branches += 1;
        Key kv = f.new_key(g, 0);
        bool ok = true;
        for (std::size_t e = 0; e < f.nedges.size() && ok; ++e) {
            int u = f.nedges[e].first;  // the old endpoint has the smaller id
            detail::fit_pages(f, f.old_key(u), kv, cand);
            if (cand.empty())
                ok = false;
            else
                pages[e] = cand.front();
        }
        if (!ok) continue;
        std::vector<Key> key(f.n + 1);
        for (int v = 0; v < f.n; ++v) key[v] = f.old_key(v);
        key[f.n] = kv;
        return detail::make_layout(inst, key, pages);
    }
    return std::nullopt;
}

double xp_branch_bound(const Instance& inst) {
    double b = 1;
    for (int i = 1; i <= inst.n_add(); ++i) b *= double(inst.n_old() + i);
    return b;
}

namespace {

// colex successor of a nondecreasing sequence over [1, top]
bool next_multiset(std::vector<int>& g, int top) {
    for (std::size_t t = 0; t < g.size(); ++t) {
        int lim = t + 1 < g.size() ? g[t + 1] : top;
        if (g[t] < lim) {
            ++g[t];
            for (std::size_t s = 0; s < t; ++s) g[s] = 1;
            return true;
        }
    }
    return false;
}

struct XpContext {
    const Frame& f;
    std::vector<std::vector<int>> cand_old;            // old-old edges, else empty
    std::vector<std::vector<std::vector<int>>> cand_gap;  // new-old edges: [edge][gap]
    std::vector<std::vector<char>> allowed;            // [new vertex][gap]
    std::vector<int> kind;                             // 0 old-old, 1 new-old, 2 new-new

    explicit XpContext(const Frame& fr) : f(fr) {
        const int m = int(f.nedges.size());
        cand_old.resize(m);
        cand_gap.resize(m);
        kind.resize(m);
        allowed.assign(f.k, std::vector<char>(f.n + 2, 1));
        for (int e = 0; e < m; ++e) {
            auto [a, b] = f.nedges[e];
            if (b < f.n) {
                kind[e] = 0;
                detail::fit_pages(f, f.old_key(a), f.old_key(b), cand_old[e]);
            } else if (a < f.n) {
                kind[e] = 1;
                cand_gap[e].resize(f.n + 2);
                for (int g = 1; g <= f.n + 1; ++g) {
                    detail::fit_pages(f, f.old_key(a), f.new_key(g, 0), cand_gap[e][g]);
                    if (cand_gap[e][g].empty()) allowed[b - f.n][g] = 0;
                }
            } else {
                kind[e] = 2;
            }
        }
    }

    // evaluates one total order; gap_of/rank_of per new vertex
    bool evaluate(const std::vector<int>& gap_of, const std::vector<int>& rank_of, std::vector<int>& pages,
                  std::vector<Key>& key) const {
        const int m = int(f.nedges.size());
        key.resize(f.n + f.k);
        for (int v = 0; v < f.n; ++v) key[v] = f.old_key(v);
        for (int t = 0; t < f.k; ++t) key[f.n + t] = f.new_key(gap_of[t], rank_of[t]);
        std::vector<std::pair<Key, Key>> ends(m);
        std::vector<std::vector<int>> cand(m);
        for (int e = 0; e < m; ++e) {
            auto [a, b] = f.nedges[e];
            ends[e] = {key[a], key[b]};
            if (kind[e] == 0) {
                cand[e] = cand_old[e];
            } else if (kind[e] == 1) {
                cand[e] = cand_gap[e][gap_of[b - f.n]];
            } else if (gap_of[a - f.n] == gap_of[b - f.n]) {
                cand[e].resize(f.ell);
                std::iota(cand[e].begin(), cand[e].end(), 1);
            } else {
                detail::fit_pages(f, key[a], key[b], cand[e]);
            }
            if (cand[e].empty()) return false;
        }
        return detail::assign_pages(ends, cand, pages);
    }
};

struct XpHit {
    std::vector<int> pages;
    std::vector<Key> key;
};

// Scans all permutations for one interval multiset; returns true on success.
bool scan_multiset(const XpContext& ctx, const std::vector<int>& slots, XpHit& hit, std::uint64_t& branches) {
    const int k = ctx.f.k;
    std::vector<int> perm(k), gap_of(k), rank_of(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++branches;
        bool ok = true;
        for (int t = 0; t < k && ok; ++t) {
            gap_of[perm[t]] = slots[t];
            rank_of[perm[t]] = t;
            if (!ctx.allowed[perm[t]][slots[t]]) ok = false;
        }
        if (ok && ctx.evaluate(gap_of, rank_of, hit.pages, hit.key)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::optional<Layout> solve_xp(const Instance& inst, const SolveOptions& opts, SolveStats* stats) {
    Frame f(inst);
    XpContext ctx(f);
    if (stats) stats->bound = xp_branch_bound(inst);
    std::vector<int> g(f.k, 1);
    const std::size_t batch_size = 2048;
    bool more = true;
    std::uint64_t branches = 0;
    while (more) {
        opts.check_deadline();
        std::vector<std::vector<int>> batch;
        while (more && batch.size() < batch_size) {
            batch.push_back(g);
            more = next_multiset(g, f.n + 1);
        }
        detail::FirstHit first;
        std::vector<XpHit> hits(batch.size());
        const long long count = (long long)batch.size();
        if (opts.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : branches)
            for (long long i = 0; i < count; ++i) {
                if (first.beaten(std::uint64_t(i))) continue;
                if (scan_multiset(ctx, batch[i], hits[i], branches)) first.offer(std::uint64_t(i));
            }
        } else {
            for (long long i = 0; i < count; ++i)
                if (scan_multiset(ctx, batch[i], hits[i], branches)) {
                    first.offer(std::uint64_t(i));
                    break;
                }
        }
        if (first.found()) {
            if (stats) stats->branches += branches;
            const XpHit& h = hits[first.best()];
            return detail::make_layout(inst, h.key, h.pages);
        }
    }
    if (stats) stats->branches += branches;
    return std::nullopt;
}

}  // namespace sle
