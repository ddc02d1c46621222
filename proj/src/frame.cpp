#include "frame.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <numeric>
#include <stdexcept>

#include "sle/errors.hpp"

namespace sle {

std::uint64_t default_oracle_cap() {
    if (const char* env = std::getenv("SLE_ORACLE_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 100000000ULL;
}

void SolveOptions::check_deadline() const {
    if (expired()) throw TimeoutError("time budget exhausted");
}

namespace detail {

Frame::Frame(const Instance& inst) : n(inst.n_old()), k(inst.n_add()), ell(inst.ell) {
    on_page.assign(ell, {});
    for (const auto& [e, p] : inst.old_edges()) {
        on_page[p - 1].push_back(int(hedges.size()));
        hedges.push_back({e.u.value + 1, e.v.value + 1, p});
    }
    for (const Edge& e : inst.new_edges()) nedges.emplace_back(e.u.value, e.v.value);
}

bool fits_on_page(const Frame& f, Key a, Key b, int page) {
    for (int h : f.on_page[page - 1]) {
        const HEdge& he = f.hedges[h];
        if (keys_cross(a, b, f.hkey(he.l), f.hkey(he.r))) return false;
    }
    return true;
}

void fit_pages(const Frame& f, Key a, Key b, std::vector<int>& out) {
    out.clear();
    for (int p = 1; p <= f.ell; ++p)
        if (fits_on_page(f, a, b, p)) out.push_back(p);
}

namespace {

bool backtrack(std::size_t t, const std::vector<int>& seq, const std::vector<std::pair<Key, Key>>& ends,
               const std::vector<std::vector<int>>& cand, std::vector<int>& pages) {
    if (t == seq.size()) return true;
    int e = seq[t];
    for (int p : cand[e]) {
        bool ok = true;
        for (std::size_t s = 0; s < t && ok; ++s) {
            int o = seq[s];
            if (pages[o] == p && keys_cross(ends[e].first, ends[e].second, ends[o].first, ends[o].second))
                ok = false;
        }
        if (!ok) continue;
        pages[e] = p;
        if (backtrack(t + 1, seq, ends, cand, pages)) return true;
    }
    pages[e] = 0;
    return false;
}

}  // namespace

bool assign_pages(const std::vector<std::pair<Key, Key>>& ends, const std::vector<std::vector<int>>& cand,
                  std::vector<int>& pages) {
    const int m = int(ends.size());
    pages.assign(m, 0);
    std::vector<char> alive(m, 1);
    std::vector<int> removed;
    int live = m;
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < m; ++e)
            if (alive[e] && int(cand[e].size()) >= live) {
                alive[e] = 0;
                removed.push_back(e);
                --live;
                changed = true;
            }
    }
    std::vector<int> seq;
    for (int e = 0; e < m; ++e)
        if (alive[e]) {
            if (cand[e].empty()) return false;
            seq.push_back(e);
        }
    std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) { return cand[a].size() < cand[b].size(); });
    if (!backtrack(0, seq, ends, cand, pages)) return false;

    // Put the safe edges back, last removed first, on a page no other new edge uses.
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        int e = *it;
        int chosen = 0;
        for (int p : cand[e]) {
            bool used = false;
            for (int o = 0; o < m && !used; ++o)
                if (o != e && pages[o] == p) used = true;
            if (!used) {
                chosen = p;
                break;
            }
        }
        if (chosen == 0) throw std::logic_error("safe edge without a free page");
        pages[e] = chosen;
    }
    return true;
}

Layout make_layout(const Instance& inst, const std::vector<Key>& key, const std::vector<int>& new_pages) {
    std::vector<int> ids(key.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return key[a] < key[b]; });
    std::vector<VertexId> seq;
    for (int v : ids) seq.emplace_back(v);
    Layout L;
    L.ell = inst.ell;
    L.spine = SpineOrder(seq);
    L.pages = inst.layoutH.pages;
    for (std::size_t e = 0; e < inst.new_edges().size(); ++e) L.pages[inst.new_edges()[e]] = new_pages[e];
    return L;
}

}  // namespace detail
}  // namespace sle
