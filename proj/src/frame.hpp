#pragma once

// Flat integer view of an instance shared by the solvers.

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "sle/instance.hpp"
#include "sle/options.hpp"

namespace sle::detail {

using Key = std::int64_t;

struct HEdge {
    int l, r;  // 1-based spine positions, l < r
    int page;
};

struct Frame {
    int n = 0;    // |V(H)|
    int k = 0;    // n_add
    int ell = 1;
    std::vector<HEdge> hedges;
    std::vector<std::vector<int>> on_page;  // [page-1] -> indices into hedges
    std::vector<std::pair<int, int>> nedges;  // new edges as vertex ids (old < n <= new)

    explicit Frame(const Instance& inst);

    Key scale() const { return Key(k) + 1; }
    Key old_key(int id) const { return Key(2) * (id + 1) * scale(); }
    // new vertex in interval g (1-based) with rank t among its interval mates
    Key new_key(int g, int t) const { return (Key(2) * g - 1) * scale() + t; }
    Key hkey(int pos) const { return Key(2) * pos * scale(); }
};

inline bool alternate(Key a, Key b, Key c, Key d) {
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool keys_cross(Key a, Key b, Key c, Key d) {
    if (a == c || a == d || b == c || b == d) return false;
    return alternate(a, b, c, d);
}

// Pages (ascending) on which an edge with endpoint keys a, b avoids every H edge.
void fit_pages(const Frame& f, Key a, Key b, std::vector<int>& out);
bool fits_on_page(const Frame& f, Key a, Key b, int page);

// Fixed-order page assignment for new edges (the edges-only algorithm).
// ends[e] are endpoint keys, cand[e] the candidate pages S(e). On success
// pages[e] holds a page per edge.
bool assign_pages(const std::vector<std::pair<Key, Key>>& ends, const std::vector<std::vector<int>>& cand,
                  std::vector<int>& pages);

// Spine positions of every vertex given keys (old and new), as a Layout.
Layout make_layout(const Instance& inst, const std::vector<Key>& key, const std::vector<int>& new_pages);

// Tracks the smallest successful branch index for deterministic first-hit
// parallel search.
class FirstHit {
  public:
    bool beaten(std::uint64_t idx) const { return idx > best_.load(std::memory_order_relaxed); }
    void offer(std::uint64_t idx) {
        std::uint64_t cur = best_.load();
        while (idx < cur && !best_.compare_exchange_weak(cur, idx)) {
        }
    }
    std::uint64_t best() const { return best_.load(); }
    bool found() const { return best_.load() != none; }
    static constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

  private:
    std::atomic<std::uint64_t> best_{none};
};

}  // namespace sle::detail
