#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sle/instance.hpp"
#include "sle/options.hpp"

namespace sle {

// S(e): pages (ascending) on which the old-old edge e fits against H.
std::vector<int> candidate_pages(const Instance& inst, const Edge& e);

// Repeatedly drops a new edge with |S(e)| >= current m_add. Needs V_add empty.
std::pair<Instance, std::vector<Edge>> reduce_safe_edges(const Instance& inst);

std::optional<Layout> solve_edges_only(const Instance& inst, const SolveOptions& opts = {},
                                       SolveStats* stats = nullptr);

std::optional<Layout> solve_one_vertex(const Instance& inst, const SolveOptions& opts = {},
                                       SolveStats* stats = nullptr);

std::optional<Layout> solve_xp(const Instance& inst, const SolveOptions& opts = {},
                               SolveStats* stats = nullptr);

// prod_{i=1..n_add} (|V(H)| + i)
double xp_branch_bound(const Instance& inst);

}  // namespace sle
