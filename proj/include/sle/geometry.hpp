#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sle/instance.hpp"

namespace sle {

bool crosses(const SpineOrder& spine, const Edge& e1, const Edge& e2);

// Throws InputError when the layout's carriers do not match the graph.
bool is_valid(const Graph& graph, const Layout& layout);
// Like is_valid, but reports a crossing same-page pair if there is one.
std::optional<std::pair<Edge, Edge>> find_crossing(const Graph& graph, const Layout& layout);
void check_carriers(const Graph& graph, const Layout& layout);  // throws InputError

bool extends(const Layout& layoutG, const Layout& layoutH);

bool sees(const Layout& layout, VertexId u, VertexId v, int page);

int page_width(const Layout& layout);

// Interval i (1-based) lies between spine positions i-2 and i-1 (0-based);
// interval 1 and interval n+1 are bounded by the sentinels.
struct Interval {
    std::optional<VertexId> left;   // nullopt = left sentinel
    std::optional<VertexId> right;  // nullopt = right sentinel
    int index = 0;
};
std::vector<Interval> intervals(const Layout& layout);

struct FaceRef {
    int page = 0;
    std::optional<Edge> edge;  // nullopt = OUTER
    bool outer() const { return !edge; }
    bool operator==(const FaceRef&) const = default;
};

struct Face {
    FaceRef ref;
    int depth = 0;
    int first_interval = 1;  // contiguous span of intervals
    int last_interval = 1;
    std::vector<int> incident_intervals;  // intervals where this face is innermost
};

// Outer face first, then one face per page edge ordered by (left, -right).
std::vector<Face> faces(const Layout& layout, int page);

std::optional<FaceRef> face_at_distance(const Layout& layout, int page, int interval, int d);

struct SuperInterval {
    std::optional<VertexId> left;   // delimiter from V_inc or sentinel
    std::optional<VertexId> right;
    int first = 1;  // interval range [first, last]
    int last = 1;
    bool contains(int interval) const { return first <= interval && interval <= last; }
};

std::vector<SuperInterval> super_intervals(const Instance& inst);

}  // namespace sle
