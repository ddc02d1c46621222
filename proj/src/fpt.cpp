#include "sle/fpt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frame.hpp"
#include "sle/errors.hpp"

namespace sle {

using detail::Frame;
using detail::Key;

FaceLookup::FaceLookup(const Instance& inst) : n_(inst.n_old()), ell_(inst.ell) {
    for (const auto& [e, p] : inst.old_edges()) {
        edges_.push_back(e);
        left_.push_back(e.u.value + 1);
        right_.push_back(e.v.value + 1);
    }
    std::vector<std::vector<int>> per_page(ell_);
    for (std::size_t h = 0; h < edges_.size(); ++h) per_page[inst.layoutH.pages.at(edges_[h]) - 1].push_back(int(h));
    chains_.assign(std::size_t(ell_) * (n_ + 2), {});
    cover_.assign(std::size_t(ell_) * std::max(n_, 1), -1);
    for (int p = 1; p <= ell_; ++p) {
        auto& list = per_page[p - 1];
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            return left_[a] != left_[b] ? left_[a] < left_[b] : right_[a] > right_[b];
        });
        for (int i = 1; i <= n_ + 1; ++i) {
            auto& ch = chains_[std::size_t(p - 1) * (n_ + 2) + i];
            for (int h : list)
                if (left_[h] + 1 <= i && i <= right_[h]) ch.push_back(h);
            omega_ = std::max(omega_, int(ch.size()));
        }
        for (int q = 1; q <= n_; ++q)
            for (int h : list)
                if (left_[h] < q && q < right_[h]) cover_[std::size_t(p - 1) * n_ + (q - 1)] = h;
    }
}

const Edge* FaceLookup::edge_at(int interval, int page, int d) const {
    const auto& ch = chain(interval, page);
    if (d < 1 || d > int(ch.size())) return nullptr;
    return &edges_[ch[d - 1]];
}

int FaceLookup::right_end(int interval, int page, int d) const {
    const auto& ch = chain(interval, page);
    if (d < 1 || d > int(ch.size())) return -1;
    return right_[ch[d - 1]];
}

bool FaceLookup::incident(VertexId u, int interval, int page, int d) const {
    int cov = cover_[std::size_t(page - 1) * n_ + u.value];
    if (d == 0) return cov == -1;
    const auto& ch = chain(interval, page);
    if (d > int(ch.size())) return false;
    int h = ch[d - 1];
    return cov == h || left_[h] == u.value + 1 || right_[h] == u.value + 1;
}

double fpt_branch_bound(const Instance& inst) {
    double m = inst.m_add(), k = inst.n_add();
    double fact = 1;
    for (int i = 2; i <= inst.n_add(); ++i) fact *= i;
    FaceLookup faces(inst);
    return std::pow(double(inst.ell), m) * fact * std::pow(2 * m + 1, k) * std::pow(double(faces.omega() + 1), m);
}

namespace {

// Branch-independent data shared by every branch of one instance.
struct Shared {
    const Instance& inst;
    Frame f;
    FaceLookup faces;
    std::vector<SuperInterval> si;
    std::vector<int> kind;  // 0 old-old, 1 new-old, 2 new-new
    std::vector<std::vector<int>> fit_old;  // S(e) for old-old edges

    explicit Shared(const Instance& in) : inst(in), f(in), faces(in), si(super_intervals(in)) {
        const int m = int(f.nedges.size());
        kind.resize(m);
        fit_old.resize(m);
        for (int e = 0; e < m; ++e) {
            auto [a, b] = f.nedges[e];
            kind[e] = b < f.n ? 0 : (a < f.n ? 1 : 2);
            if (kind[e] == 0) detail::fit_pages(f, f.old_key(a), f.old_key(b), fit_old[e]);
        }
    }

    Key key_of(int v, const BranchAssignment& b, const std::vector<int>& rank) const {
        if (v < f.n) return f.old_key(v);
        int t = v - f.n;
        return f.new_key(si[b.super_of[t]].first, rank[t]);
    }
};

std::vector<int> ranks_of(const Frame& f, const BranchAssignment& b) {
    std::vector<int> rank(f.k, -1);
    for (int t = 0; t < int(b.order.size()); ++t) rank[b.order[t].value - f.n] = t;
    return rank;
}

// (c) and the mutual part of (b): crossings among new edges fixed by (i)-(iii).
bool implied_crossing(const Shared& sh, const BranchAssignment& b, const std::vector<int>& rank,
                      std::string* reason) {
    const int m = int(sh.f.nedges.size());
    std::vector<std::pair<Key, Key>> ends(m);
    for (int e = 0; e < m; ++e)
        ends[e] = {sh.key_of(sh.f.nedges[e].first, b, rank), sh.key_of(sh.f.nedges[e].second, b, rank)};
    for (int e = 0; e < m; ++e)
        for (int o = e + 1; o < m; ++o)
            if (b.page_of[e] == b.page_of[o] &&
                detail::keys_cross(ends[e].first, ends[e].second, ends[o].first, ends[o].second)) {
                if (reason) {
                    const Instance& in = sh.inst;
                    auto en = [&](int x) {
                        const Edge& ed = in.new_edges()[x];
                        return in.name(ed.u) + "-" + in.name(ed.v);
                    };
                    *reason = "implied crossing between " + en(e) + " and " + en(o) + " on page " +
                              std::to_string(b.page_of[e]);
                }
                return true;
            }
    return false;
}

BranchCheck check_with(const Shared& sh, const BranchAssignment& b) {
    const Frame& f = sh.f;
    const int m = int(f.nedges.size());
    auto reject = [](std::string why) { return BranchCheck{false, std::move(why)}; };
    if (int(b.page_of.size()) != m || int(b.depth_of.size()) != m) return reject("edge vectors have the wrong size");
    if (int(b.order.size()) != f.k || int(b.super_of.size()) != f.k) return reject("vertex vectors have the wrong size");
    std::vector<char> seen(f.k, 0);
    for (VertexId v : b.order) {
        if (v.value < f.n || v.value >= f.n + f.k || seen[v.value - f.n]) return reject("order is not a permutation of V_add");
        seen[v.value - f.n] = 1;
    }
    for (int s : b.super_of)
        if (s < 0 || s >= int(sh.si.size())) return reject("super interval index out of range");
    for (int e = 0; e < m; ++e) {
        if (b.page_of[e] < 1 || b.page_of[e] > f.ell) return reject("page out of range");
        if (sh.kind[e] == 0 ? b.depth_of[e] != -1 : (b.depth_of[e] < 0 || b.depth_of[e] > sh.faces.omega()))
            return reject("depth out of range");
    }
    for (int t = 0; t + 1 < f.k; ++t)
        if (b.super_of[b.order[t].value - f.n] > b.super_of[b.order[t + 1].value - f.n])
            return reject("order/super conflict: " + sh.inst.name(b.order[t]) + " precedes " +
                          sh.inst.name(b.order[t + 1]) + " but lies in a later super interval");
    for (int e = 0; e < m; ++e)
        if (sh.kind[e] == 0 &&
            !std::binary_search(sh.fit_old[e].begin(), sh.fit_old[e].end(), b.page_of[e]))
            return reject("E_add^H edge " + sh.inst.name(VertexId(f.nedges[e].first)) + "-" +
                          sh.inst.name(VertexId(f.nedges[e].second)) + " crosses H on page " +
                          std::to_string(b.page_of[e]));
    std::string why;
    if (implied_crossing(sh, b, ranks_of(f, b), &why)) return reject(why);
    return {};
}

// Per-branch precomputation for the recurrence.
class DpRunner {
  public:
    DpRunner(const Shared& sh, const BranchAssignment& b) : sh_(sh), b_(b) {
        const Frame& f = sh.f;
        rank_ = ranks_of(f, b);
        incident_.assign(f.k, {});
        half_.assign(f.k + 1, {});
        for (int e = 0; e < int(f.nedges.size()); ++e) {
            auto [a, c] = f.nedges[e];
            if (sh.kind[e] == 0) continue;
            if (sh.kind[e] == 1) {
                incident_[rank_[c - f.n]].push_back({e, a});
            } else {
                int x = rank_[a - f.n], y = rank_[c - f.n];
                if (x > y) std::swap(x, y);
                incident_[x].push_back({e, -1});
                incident_[y].push_back({e, -1});
                // half-edge for prefixes j with x+1 <= j < y+1
                for (int j = x + 1; j <= y; ++j) half_[j].push_back(e);
            }
        }
    }

    bool right_ok(int i, int j) const {
        for (int e : half_[j]) {
            int p = b_.page_of[e], d = b_.depth_of[e];
            if (d == 0) continue;
            if (sh_.faces.chain_length(i, p) < d) return false;
            if (sh_.faces.right_end(i, p, d) == i) return false;
        }
        return true;
    }

    bool place_ok(int i, int j) const {
        const VertexId v = b_.order[j - 1];
        if (!sh_.si[b_.super_of[v.value - sh_.f.n]].contains(i)) return false;  // EC1
        for (const auto& [e, u] : incident_[j - 1]) {
            int p = b_.page_of[e], d = b_.depth_of[e];
            if (sh_.faces.chain_length(i, p) != d) return false;  // interval incident to the face
            if (u >= 0 && !sh_.faces.incident(VertexId(u), i, p, d)) return false;  // EC2
        }
        return true;
    }

    DpOutcome run(bool want_layout) const {
        const int n = sh_.f.n, k = sh_.f.k;
        DpOutcome out;
        DpTable& T = out.table;
        T.n_intervals = n + 1;
        T.n_add = k;
        T.cell.assign(std::size_t(n + 2) * (k + 1) * 2, 0);
        T.pred.assign(T.cell.size(), 0);
        T.cell[T.index(1, 0, 0)] = 1;
        for (int i = 1; i <= n + 1; ++i) {
            if (i > 1)
                for (int j = 0; j <= k; ++j) {
                    int r = T.at(i - 1, j, 0) ? 0 : (T.at(i - 1, j, 1) ? 1 : -1);
                    if (r >= 0 && right_ok(i - 1, j)) {
                        T.cell[T.index(i, j, 0)] = 1;
                        T.pred[T.index(i, j, 0)] = std::uint8_t(r);
                    }
                }
            for (int j = 1; j <= k; ++j) {
                int r = T.at(i, j - 1, 0) ? 0 : (T.at(i, j - 1, 1) ? 1 : -1);
                if (r >= 0 && place_ok(i, j)) {
                    T.cell[T.index(i, j, 1)] = 1;
                    T.pred[T.index(i, j, 1)] = std::uint8_t(r);
                }
            }
        }
        int r = T.at(n + 1, k, 0) ? 0 : (T.at(n + 1, k, 1) ? 1 : -1);
        if (r < 0 || !want_layout) {
            if (r >= 0) out.layout.emplace();  // marker only
            return out;
        }
        std::vector<int> gap(k, 0);
        for (int i = n + 1, j = k; !(i == 1 && j == 0);) {
            int pr = T.pred[T.index(i, j, r)];
            if (r == 1) {
                gap[j - 1] = i;
                --j;
            } else {
                --i;
            }
            r = pr;
        }
        const Frame& f = sh_.f;
        std::vector<Key> key(f.n + f.k);
        for (int v = 0; v < f.n; ++v) key[v] = f.old_key(v);
        for (int j = 0; j < k; ++j) key[b_.order[j].value] = f.new_key(gap[j], j);
        out.layout = detail::make_layout(sh_.inst, key, b_.page_of);
        return out;
    }

  private:
    const Shared& sh_;
    const BranchAssignment& b_;
    std::vector<int> rank_;
    std::vector<std::vector<std::pair<int, int>>> incident_;  // per order position: (edge, old endpoint or -1)
    std::vector<std::vector<int>> half_;                      // per prefix j
};

// lexicographic successor of a nondecreasing sequence over [0, s)
bool next_nondecreasing(std::vector<int>& seq, int s) {
    for (int t = int(seq.size()) - 1; t >= 0; --t)
        if (seq[t] < s - 1) {
            ++seq[t];
            for (std::size_t u = t + 1; u < seq.size(); ++u) seq[u] = seq[t];
            return true;
        }
    return false;
}

bool next_tuple(std::vector<int>& tup, int hi) {  // values in [1, hi], last position fastest
    for (int t = int(tup.size()) - 1; t >= 0; --t) {
        if (tup[t] < hi) {
            ++tup[t];
            return true;
        }
        tup[t] = 1;
    }
    return false;
}

// Enumerates branches below a fixed page assignment (i) in the fixed order.
class Enumerator {
  public:
    Enumerator(const Shared& sh, bool prune) : sh_(sh), prune_(prune) {
        const int s = int(sh.si.size());
        const int ell = sh.f.ell;
        // depths seen as innermost level on some interval of a super interval
        levels_.assign(std::size_t(ell) * s, {});
        for (int p = 1; p <= ell; ++p)
            for (int c = 0; c < s; ++c) {
                auto& lv = levels_[std::size_t(p - 1) * s + c];
                for (int g = sh.si[c].first; g <= sh.si[c].last; ++g) lv.push_back(sh.faces.chain_length(g, p));
                std::sort(lv.begin(), lv.end());
                lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
            }
        const int m = int(sh.f.nedges.size());
        toward_old_.assign(std::size_t(m) * ell * s, {});
        for (int e = 0; e < m; ++e) {
            if (sh.kind[e] != 1) continue;
            VertexId u(sh.f.nedges[e].first);
            for (int p = 1; p <= ell; ++p)
                for (int c = 0; c < s; ++c) {
                    auto& lv = toward_old_[(std::size_t(e) * ell + (p - 1)) * s + c];
                    for (int g = sh.si[c].first; g <= sh.si[c].last; ++g) {
                        int d = sh.faces.chain_length(g, p);
                        if (sh.faces.incident(u, g, p, d)) lv.push_back(d);
                    }
                    std::sort(lv.begin(), lv.end());
                    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
                }
        }
        full_.resize(sh.faces.omega() + 1);
        std::iota(full_.begin(), full_.end(), 0);
    }

    // visit(b) returns true to stop; scan returns true if stopped
    template <class Visit>
    bool scan(const std::vector<int>& pages, bool with_depths, Visit&& visit) const {
        const Frame& f = sh_.f;
        const int m = int(f.nedges.size()), s = int(sh_.si.size());
        for (int e = 0; e < m; ++e)
            if (sh_.kind[e] == 0 && !std::binary_search(sh_.fit_old[e].begin(), sh_.fit_old[e].end(), pages[e]))
                return false;
        BranchAssignment b;
        b.page_of = pages;
        b.depth_of.assign(m, -1);
        b.super_of.assign(f.k, 0);
        std::vector<int> perm(f.k);
        std::iota(perm.begin(), perm.end(), f.n);
        do {
            b.order.clear();
            for (int v : perm) b.order.emplace_back(v);
            std::vector<int> rank = ranks_of(f, b);
            std::vector<int> seq(f.k, 0);
            do {
                for (int t = 0; t < f.k; ++t) b.super_of[perm[t] - f.n] = seq[t];
                if (implied_crossing(sh_, b, rank, nullptr)) continue;
                if (!with_depths) {
                    if (visit(b)) return true;
                    continue;
                }
                std::vector<const std::vector<int>*> choice(m, nullptr);
                std::vector<std::vector<int>> owned(m);
                bool empty = false;
                for (int e = 0; e < m && !empty; ++e) {
                    if (sh_.kind[e] == 0) continue;
                    if (!prune_) {
                        choice[e] = &full_;
                        continue;
                    }
                    int p = pages[e];
                    auto [a, c] = f.nedges[e];
                    if (sh_.kind[e] == 1) {
                        choice[e] = &toward_old_[(std::size_t(e) * f.ell + (p - 1)) * s + b.super_of[c - f.n]];
                    } else {
                        const auto& A = levels_[std::size_t(p - 1) * s + b.super_of[a - f.n]];
                        const auto& C = levels_[std::size_t(p - 1) * s + b.super_of[c - f.n]];
                        std::set_intersection(A.begin(), A.end(), C.begin(), C.end(), std::back_inserter(owned[e]));
                        choice[e] = &owned[e];
                    }
                    if (choice[e]->empty()) empty = true;
                }
                if (empty) continue;
                std::vector<std::size_t> at(m, 0);
                for (int e = 0; e < m; ++e)
                    if (choice[e]) b.depth_of[e] = (*choice[e])[0];
                while (true) {
                    if (visit(b)) return true;
                    int e = m - 1;
                    for (; e >= 0; --e) {
                        if (!choice[e]) continue;
                        if (++at[e] < choice[e]->size()) {
                            b.depth_of[e] = (*choice[e])[at[e]];
                            break;
                        }
                        at[e] = 0;
                        b.depth_of[e] = (*choice[e])[0];
                    }
                    if (e < 0) break;
                }
            } while (next_nondecreasing(seq, s));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

  private:
    const Shared& sh_;
    bool prune_;
    std::vector<std::vector<int>> levels_;
    std::vector<std::vector<int>> toward_old_;
    std::vector<int> full_;
};

// Runs scan() over all page assignments in lex order, batch by batch, with
// deterministic first-hit semantics. hit_fn(pages, result) returns true on success.
template <class PerTuple>
std::optional<Layout> drive(const Shared& sh, const SolveOptions& opts, PerTuple&& per_tuple) {
    const int m = int(sh.f.nedges.size());
    std::vector<int> tup(m, 1);
    bool more = true;
    const std::size_t batch_size = 256;
    while (more) {
        opts.check_deadline();
        std::vector<std::vector<int>> batch;
        while (more && batch.size() < batch_size) {
            batch.push_back(tup);
            more = next_tuple(tup, sh.f.ell);
        }
        detail::FirstHit first;
        std::vector<std::optional<Layout>> found(batch.size());
        const long long count = (long long)batch.size();
        if (opts.exec == Execution::Parallel) {
            bool timed_out = false;
#pragma omp parallel for schedule(dynamic, 1)
            for (long long i = 0; i < count; ++i) {
                if (first.beaten(std::uint64_t(i))) continue;
                if (opts.expired()) {
#pragma omp atomic write
                    timed_out = true;
                    continue;
                }
                found[i] = per_tuple(batch[i]);
                if (found[i]) first.offer(std::uint64_t(i));
            }
            if (timed_out && !first.found()) opts.check_deadline();
        } else {
            for (long long i = 0; i < count; ++i) {
                found[i] = per_tuple(batch[i]);
                if (found[i]) {
                    first.offer(std::uint64_t(i));
                    break;
                }
            }
        }
        if (first.found()) return std::move(found[first.best()]);
    }
    return std::nullopt;
}

}  // namespace

BranchCheck check_branch(const Instance& inst, const BranchAssignment& b) {
    Shared sh(inst);
    return check_with(sh, b);
}

bool admissible_pred_right(const Instance& inst, const FaceLookup&, const BranchAssignment& b, int i, int j) {
    Shared sh(inst);
    return DpRunner(sh, b).right_ok(i, j);
}

bool admissible_pred_place(const Instance& inst, const FaceLookup&, const BranchAssignment& b, int i, int j) {
    Shared sh(inst);
    return DpRunner(sh, b).place_ok(i, j);
}

DpOutcome dp_solve_branch(const Instance& inst, const FaceLookup&, const BranchAssignment& b) {
    Shared sh(inst);
    BranchCheck c = check_with(sh, b);
    if (!c.ok) throw PreconditionError("branch rejected: " + c.reason);
    return DpRunner(sh, b).run(true);
}

std::optional<Layout> dp_solve_branch(const Instance& inst, const BranchAssignment& b) {
    FaceLookup faces(inst);
    return dp_solve_branch(inst, faces, b).layout;
}

std::optional<Layout> solve_fpt(const Instance& inst, const SolveOptions& opts, SolveStats* stats) {
    Shared sh(inst);
    Enumerator en(sh, true);
    if (stats) stats->bound = fpt_branch_bound(inst);
    std::uint64_t branches = 0, cells = 0;
    auto per_tuple = [&](const std::vector<int>& pages) -> std::optional<Layout> {
        std::optional<Layout> got;
        std::uint64_t local = 0, local_cells = 0;
        en.scan(pages, true, [&](const BranchAssignment& b) {
            ++local;
            local_cells += std::uint64_t(sh.f.n + 1) * (sh.f.k + 1) * 2;
            DpOutcome o = DpRunner(sh, b).run(true);
            if (o.layout) {
                got = std::move(o.layout);
                return true;
            }
            return false;
        });
#pragma omp atomic
        branches += local;
#pragma omp atomic
        cells += local_cells;
        return got;
    };
    auto res = drive(sh, opts, per_tuple);
    if (stats) {
        stats->branches += branches;
        stats->dp_cells += cells;
    }
    return res;
}

std::optional<Layout> solve_greedy_is(const Instance& inst, const SolveOptions& opts, SolveStats* stats) {
    Shared sh(inst);
    for (int kd : sh.kind)
        if (kd == 2) throw PreconditionError("greedy solver needs the new vertices to be independent");
    Enumerator en(sh, false);
    if (stats) {
        double m = inst.m_add(), fact = 1;
        for (int i = 2; i <= inst.n_add(); ++i) fact *= i;
        stats->bound = std::pow(double(inst.ell), m) * fact * std::pow(2 * m + 1, double(inst.n_add()));
    }
    const Frame& f = sh.f;
    // old endpoints per new vertex
    std::vector<std::vector<int>> nbr_edges(f.k);
    for (int e = 0; e < int(f.nedges.size()); ++e)
        if (sh.kind[e] == 1) nbr_edges[f.nedges[e].second - f.n].push_back(e);
    std::uint64_t branches = 0;
    auto per_tuple = [&](const std::vector<int>& pages) -> std::optional<Layout> {
        std::optional<Layout> got;
        std::uint64_t local = 0;
        // E_add^H edges grouped by page act as extra blockers
        std::vector<std::pair<Key, Key>> extra;
        std::vector<int> extra_page;
        for (int e = 0; e < int(f.nedges.size()); ++e)
            if (sh.kind[e] == 0) {
                extra.emplace_back(f.old_key(f.nedges[e].first), f.old_key(f.nedges[e].second));
                extra_page.push_back(pages[e]);
            }
        en.scan(pages, false, [&](const BranchAssignment& b) {
            ++local;
            std::vector<Key> key(f.n + f.k);
            for (int v = 0; v < f.n; ++v) key[v] = f.old_key(v);
            int cur = 1;
            for (int j = 0; j < f.k; ++j) {
                int v = b.order[j].value, t = v - f.n;
                const SuperInterval& s = sh.si[b.super_of[t]];
                int g = std::max(cur, s.first);
                for (; g <= s.last; ++g) {
                    Key kv = f.new_key(g, j);
                    bool all = true;
                    for (int e : nbr_edges[t]) {
                        Key ku = f.old_key(f.nedges[e].first);
                        int p = pages[e];
                        if (!detail::fits_on_page(f, ku, kv, p)) {
                            all = false;
                            break;
                        }
                        for (std::size_t x = 0; x < extra.size() && all; ++x)
                            if (extra_page[x] == p && detail::keys_cross(ku, kv, extra[x].first, extra[x].second))
                                all = false;
                        if (!all) break;
                    }
                    if (all) break;
                }
                if (g > s.last) return false;
                key[v] = f.new_key(g, j);
                cur = g;
            }
            got = detail::make_layout(inst, key, pages);
            return true;
        });
#pragma omp atomic
        branches += local;
        return got;
    };
    auto res = drive(sh, opts, per_tuple);
    if (stats) stats->branches += branches;
    return res;
}

void for_each_consistent_branch(const Instance& inst, const std::function<bool(const BranchAssignment&)>& sink,
                                bool prune_depths) {
    Shared sh(inst);
    Enumerator en(sh, prune_depths);
    const int m = int(sh.f.nedges.size());
    std::vector<int> tup(m, 1);
    do {
        if (en.scan(tup, true, [&](const BranchAssignment& b) { return !sink(b); })) return;
    } while (next_tuple(tup, sh.f.ell));
}

}  // namespace sle
