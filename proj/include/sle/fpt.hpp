#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sle/geometry.hpp"
#include "sle/instance.hpp"
#include "sle/options.hpp"

namespace sle {

// One outer branch of the face DP. Vectors indexed by new edge follow
// inst.new_edges(); super_of is indexed by new vertex (id - n_old) and holds an
// index into super_intervals(inst).
struct BranchAssignment {
    std::vector<int> page_of;       // (i)
    std::vector<VertexId> order;    // (ii) v_1 .. v_{n_add}
    std::vector<int> super_of;      // (iii)
    std::vector<int> depth_of;      // (iv), -1 for edges of E_add^H
};

struct BranchCheck {
    bool ok = true;
    std::string reason;
};

// Per (interval, page) nest of H faces, outside-in, built once per instance.
class FaceLookup {
  public:
    explicit FaceLookup(const Instance& inst);

    int intervals() const { return n_ + 1; }
    int omega() const { return omega_; }
    int chain_length(int interval, int page) const { return int(chain(interval, page).size()); }
    // H edge at depth d >= 1 on the interval's nest, or nullptr
    const Edge* edge_at(int interval, int page, int d) const;
    // right endpoint (1-based spine position) of that edge
    int right_end(int interval, int page, int d) const;
    // is old vertex u incident to the face at depth d spanning interval?
    bool incident(VertexId u, int interval, int page, int d) const;

  private:
    const std::vector<int>& chain(int interval, int page) const {
        return chains_[std::size_t(page - 1) * (n_ + 2) + interval];
    }
    int n_ = 0, ell_ = 1, omega_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> left_, right_;             // 1-based spine positions
    std::vector<std::vector<int>> chains_;
    std::vector<int> cover_;                    // [page][vertex] innermost strict cover, -1 = none
};

BranchCheck check_branch(const Instance& inst, const BranchAssignment& b);

bool admissible_pred_right(const Instance& inst, const FaceLookup& faces, const BranchAssignment& b,
                           int i, int j);
bool admissible_pred_place(const Instance& inst, const FaceLookup& faces, const BranchAssignment& b,
                           int i, int j);

struct DpTable {
    int n_intervals = 0;
    int n_add = 0;
    std::vector<std::uint8_t> cell;  // reachable flag
    std::vector<std::uint8_t> pred;  // r of the predecessor used first

    std::size_t index(int i, int j, int r) const {
        return (std::size_t(i) * (n_add + 1) + j) * 2 + r;
    }
    bool at(int i, int j, int r) const { return cell[index(i, j, r)] != 0; }
};

struct DpOutcome {
    DpTable table;
    std::optional<Layout> layout;
};

// Precondition: check_branch(inst, b).ok
DpOutcome dp_solve_branch(const Instance& inst, const FaceLookup& faces, const BranchAssignment& b);
std::optional<Layout> dp_solve_branch(const Instance& inst, const BranchAssignment& b);

std::optional<Layout> solve_fpt(const Instance& inst, const SolveOptions& opts = {},
                                SolveStats* stats = nullptr);

// Requires that no new edge joins two new vertices.
std::optional<Layout> solve_greedy_is(const Instance& inst, const SolveOptions& opts = {},
                                      SolveStats* stats = nullptr);

// ell^m * n_add! * (2m+1)^n_add * (omega+1)^m
double fpt_branch_bound(const Instance& inst);

// Every branch visited by solve_fpt's enumeration, in iteration order, after
// the consistency check (used by tests to compare against brute force).
void for_each_consistent_branch(const Instance& inst,
                               const std::function<bool(const BranchAssignment&)>& sink,
                               bool prune_depths = false);

}  // namespace sle
