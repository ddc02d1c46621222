#include "sle/graph.hpp"

#include <string>

#include "sle/errors.hpp"
#include "sle/layout.hpp"

namespace sle {

void Graph::add_vertex(VertexId v) {
    if (v.value < 0) throw InputError("negative vertex id");
    if (std::size_t(v.value) >= present_.size()) present_.resize(v.value + 1, 0);
    if (present_[v.value]) throw InputError("duplicate vertex id " + std::to_string(v.value));
    present_[v.value] = 1;
    vertices_.push_back(v);
}

bool Graph::has_vertex(VertexId v) const {
    return v.value >= 0 && std::size_t(v.value) < present_.size() && present_[v.value];
}

void Graph::add_edge(Edge e) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u.value));
    if (!has_vertex(e.u) || !has_vertex(e.v))
        throw InputError("edge endpoint is not a vertex of the graph");
    if (!edge_set_.insert(e).second)
        throw InputError("duplicate edge " + std::to_string(e.u.value) + "-" +
                         std::to_string(e.v.value));
    edges_.push_back(e);
}

SpineOrder::SpineOrder(std::vector<VertexId> seq) : seq_(std::move(seq)) {
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        int v = seq_[i].value;
        if (v < 0) throw InputError("negative vertex id on spine");
        if (std::size_t(v) >= rank_.size()) rank_.resize(v + 1, -1);
        if (rank_[v] != -1) throw InputError("vertex appears twice on the spine");
        rank_[v] = int(i);
    }
}

bool SpineOrder::contains(VertexId v) const {
    return v.value >= 0 && std::size_t(v.value) < rank_.size() && rank_[v.value] >= 0;
}

int SpineOrder::rank(VertexId v) const {
    if (!contains(v)) throw InputError("vertex " + std::to_string(v.value) + " is not on the spine");
    return rank_[v.value];
}

int Layout::page_of(const Edge& e) const {
    auto it = pages.find(e);
    if (it == pages.end()) throw InputError("edge has no page");
    return it->second;
}

}  // namespace sle
