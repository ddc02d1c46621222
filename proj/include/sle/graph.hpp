#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

namespace sle {

struct VertexId {
    int value = -1;
    constexpr VertexId() = default;
    constexpr explicit VertexId(int v) : value(v) {}
    auto operator<=>(const VertexId&) const = default;
};

// Unordered pair, stored with u < v by id.
struct Edge {
    VertexId u, v;
    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
    Edge(int a, int b) : Edge(VertexId(a), VertexId(b)) {}
    auto operator<=>(const Edge&) const = default;
    bool has(VertexId w) const { return u == w || v == w; }
    VertexId other(VertexId w) const { return u == w ? v : u; }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(e.u.value)) << 32) |
                                          std::uint32_t(e.v.value));
    }
};

// Simple undirected graph. Vertex ids are shared with the owning instance.
class Graph {
  public:
    void add_vertex(VertexId v);
    void add_edge(Edge e);  // throws InputError on loops, duplicates, unknown endpoints

    bool has_vertex(VertexId v) const;
    bool has_edge(const Edge& e) const { return edge_set_.count(e) != 0; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

  private:
    std::vector<VertexId> vertices_;
    std::vector<char> present_;
    std::vector<Edge> edges_;
    std::unordered_set<Edge, EdgeHash> edge_set_;
};

}  // namespace sle
