#pragma once

// Test-side helpers. The brute force here shares no code with the library's
// oracle: it walks every permutation of V(G) and every page product and checks
// validity by the quadratic definition.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sle/instance.hpp"

namespace test {

inline std::string old_name(int i) { return "o" + std::to_string(i); }
inline std::string new_name(int j) { return "n" + std::to_string(j); }

// Old vertices get ids 0..n_old-1 in spine order, new ones n_old..; edges use ids.
inline sle::Instance make(int ell, int n_old, const std::vector<std::tuple<int, int, int>>& old_edges, int n_new,
                          const std::vector<std::pair<int, int>>& new_edges) {
    auto nm = [&](int id) { return id < n_old ? old_name(id) : new_name(id - n_old); };
    sle::InstanceBuilder b(ell);
    for (int i = 0; i < n_old; ++i) b.old_vertex(old_name(i));
    for (auto [u, v, p] : old_edges) b.old_edge(nm(u), nm(v), p);
    for (int j = 0; j < n_new; ++j) b.new_vertex(new_name(j));
    for (auto [u, v] : new_edges) b.new_edge(nm(u), nm(v));
    return b.build();
}

struct Brute {
    int n_old = 0, n_tot = 0, ell = 1;
    std::vector<std::array<int, 3>> old;  // u, v, page
    std::vector<std::pair<int, int>> nw;

    explicit Brute(const sle::Instance& inst) {
        n_old = inst.n_old();
        n_tot = int(inst.G.vertex_count());
        ell = inst.ell;
        for (const auto& [e, p] : inst.old_edges()) old.push_back({e.u.value, e.v.value, p});
        for (const sle::Edge& e : inst.new_edges()) nw.emplace_back(e.u.value, e.v.value);
    }

    static bool alternate(int a, int b, int c, int d) {
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        if (a == c || a == d || b == c || b == d) return false;
        return (a < c && c < b && b < d) || (c < a && a < d && d < b);
    }

    // sink(pos, pages) with pos[id] = spine position and pages[t] = page of new edge t.
    // Returns the number of valid layouts visited; stops when the sink returns false.
    std::uint64_t enumerate(const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& sink) const {
        std::vector<int> perm(n_tot);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> pos(n_tot), pages(nw.size(), 1);
        std::uint64_t count = 0;
        do {
            int last_old = -1;
            bool ordered = true;
            for (int v : perm)
                if (v < n_old) {
                    if (v < last_old) ordered = false;
                    last_old = v;
                }
            if (!ordered) continue;
            for (int i = 0; i < n_tot; ++i) pos[perm[i]] = i;
            std::fill(pages.begin(), pages.end(), 1);
            while (true) {
                if (valid(pos, pages)) {
                    ++count;
                    if (!sink(pos, pages)) return count;
                }
                std::size_t t = 0;
                while (t < pages.size() && pages[t] == ell) pages[t++] = 1;
                if (t == pages.size()) break;
                ++pages[t];
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return count;
    }

    bool valid(const std::vector<int>& pos, const std::vector<int>& pages) const {
        std::vector<std::array<int, 3>> all = old;
        for (std::size_t t = 0; t < nw.size(); ++t) all.push_back({nw[t].first, nw[t].second, pages[t]});
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i][2] == all[j][2] &&
                    alternate(pos[all[i][0]], pos[all[i][1]], pos[all[j][0]], pos[all[j][1]]))
                    return false;
        return true;
    }

    bool extendable() const {
        return enumerate([](const auto&, const auto&) { return false; }) > 0;
    }
    std::uint64_t count() const {
        return enumerate([](const auto&, const auto&) { return true; });
    }
};

// Small random instance with a valid H built by rejection, all ids as in make().
inline sle::Instance random_instance(std::mt19937_64& rng, int n_old, int ell, int n_new, int m_h, int m_add) {
    std::vector<std::tuple<int, int, int>> old;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n_old; ++i)
        for (int j = i + 1; j < n_old; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<std::pair<int, int>> used;
    for (auto [a, b] : pairs) {
        if (int(old.size()) == m_h) break;
        int p = int(rng() % ell) + 1;
        bool ok = true;
        for (auto [c, d, q] : old)
            if (q == p && Brute::alternate(a, b, c, d)) ok = false;
        if (ok) old.emplace_back(a, b, p);
        else used.emplace_back(a, b);
    }
    std::vector<std::pair<int, int>> cand = used;
    for (auto [a, b] : pairs) {
        bool taken = false;
        for (auto [c, d, q] : old)
            if (c == a && d == b) taken = true;
        if (!taken && std::find(cand.begin(), cand.end(), std::pair{a, b}) == cand.end()) cand.emplace_back(a, b);
    }
    int total = n_old + n_new;
    for (int i = 0; i < total; ++i)
        for (int j = std::max(i + 1, n_old); j < total; ++j) cand.emplace_back(i, j);
    std::shuffle(cand.begin(), cand.end(), rng);
    if (int(cand.size()) > m_add) cand.resize(m_add);
    return make(ell, n_old, old, n_new, cand);
}

}  // namespace test
