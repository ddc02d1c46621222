#pragma once

#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sle/graph.hpp"
#include "sle/layout.hpp"

namespace sle {

// An SLE instance. Ids are dense: old vertices are 0..n_old()-1 in spine
// order, new vertices follow in the order they were declared.
class Instance {
  public:
    int ell = 1;
    Graph G;
    Graph H;
    Layout layoutH;

    const std::string& name(VertexId v) const { return names_[v.value]; }
    const std::vector<std::string>& names() const { return names_; }
    VertexId id_of(const std::string& name) const;  // throws InputError
    bool has_name(const std::string& name) const { return by_name_.count(name) != 0; }

    int n_old() const { return int(H.vertex_count()); }
    bool is_old(VertexId v) const { return v.value < n_old(); }

    const std::vector<VertexId>& new_vertices() const { return new_vertices_; }
    const std::vector<Edge>& new_edges() const { return new_edges_; }
    const std::vector<Edge>& eadd_h() const { return eadd_h_; }
    const std::vector<VertexId>& v_inc() const { return v_inc_; }  // ascending spine order
    int n_add() const { return int(new_vertices_.size()); }
    int m_add() const { return int(new_edges_.size()); }
    int kappa() const { return n_add() + m_add(); }
    std::vector<std::pair<Edge, int>> old_edges() const;  // E(H) with pages, deterministic order

  private:
    friend class InstanceBuilder;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> by_name_;
    std::vector<VertexId> new_vertices_;
    std::vector<Edge> new_edges_;
    std::vector<Edge> eadd_h_;
    std::vector<VertexId> v_inc_;
};

// Collects an instance by vertex names and validates it on build().
class InstanceBuilder {
  public:
    explicit InstanceBuilder(int ell) : ell_(ell) {}

    InstanceBuilder& spine(std::vector<std::string> names);
    InstanceBuilder& old_vertex(std::string name);  // appended to the right end
    InstanceBuilder& old_edge(std::string a, std::string b, int page);
    InstanceBuilder& new_vertex(std::string name);
    InstanceBuilder& new_edge(std::string a, std::string b);

    // Throws InputError for duplicate names, unknown endpoints, multi-edges,
    // page indices outside [1, ell] or a crossing pair in the layout of H.
    Instance build() const;

  private:
    int ell_;
    std::vector<std::string> spine_;
    std::vector<std::string> new_vertices_;
    std::vector<std::tuple<std::string, std::string, int>> old_edges_;
    std::vector<std::pair<std::string, std::string>> new_edges_;
};

// Same instance with E_add replaced by the given subset of its edges.
Instance with_new_edges(const Instance& inst, const std::vector<Edge>& keep);

// A solution candidate check: carriers, validity and extension. Returns an
// empty string when the layout is a valid extension, otherwise a message
// naming the violation.
std::string verify_solution(const Instance& inst, const Layout& layout);

}  // namespace sle
