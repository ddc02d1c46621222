#include "sle/instance.hpp"

#include <algorithm>
#include <set>

#include "sle/errors.hpp"
#include "sle/geometry.hpp"

namespace sle {

VertexId Instance::id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw InputError("unknown vertex '" + name + "'");
    return VertexId(it->second);
}

std::vector<std::pair<Edge, int>> Instance::old_edges() const {
    std::vector<std::pair<Edge, int>> out;
    for (const Edge& e : H.edges()) out.emplace_back(e, layoutH.pages.at(e));
    std::sort(out.begin(), out.end());
    return out;
}

InstanceBuilder& InstanceBuilder::spine(std::vector<std::string> names) {
    spine_ = std::move(names);
    return *this;
}
InstanceBuilder& InstanceBuilder::old_vertex(std::string name) {
    spine_.push_back(std::move(name));
    return *this;
}
InstanceBuilder& InstanceBuilder::old_edge(std::string a, std::string b, int page) {
    old_edges_.emplace_back(std::move(a), std::move(b), page);
    return *this;
}
InstanceBuilder& InstanceBuilder::new_vertex(std::string name) {
    new_vertices_.push_back(std::move(name));
    return *this;
}
InstanceBuilder& InstanceBuilder::new_edge(std::string a, std::string b) {
    new_edges_.emplace_back(std::move(a), std::move(b));
    return *this;
}

Instance InstanceBuilder::build() const {
    if (ell_ < 1) throw InputError("ell must be positive");
    Instance inst;
    inst.ell = ell_;
    auto declare = [&](const std::string& nm) {
        if (!inst.by_name_.emplace(nm, int(inst.names_.size())).second)
            throw InputError("duplicate vertex name '" + nm + "'");
        inst.names_.push_back(nm);
    };
    for (const auto& nm : spine_) declare(nm);
    for (const auto& nm : new_vertices_) declare(nm);

    int n = int(spine_.size());
    std::vector<VertexId> seq;
    for (int i = 0; i < n; ++i) {
        inst.H.add_vertex(VertexId(i));
        inst.G.add_vertex(VertexId(i));
        seq.emplace_back(i);
    }
    for (int t = 0; t < int(new_vertices_.size()); ++t) {
        inst.G.add_vertex(VertexId(n + t));
        inst.new_vertices_.emplace_back(n + t);
    }
    inst.layoutH.spine = SpineOrder(seq);
    inst.layoutH.ell = ell_;

    auto edge_name = [](const std::string& a, const std::string& b) { return a + "-" + b; };
    for (const auto& [a, b, page] : old_edges_) {
        VertexId u = inst.id_of(a), v = inst.id_of(b);
        if (!inst.is_old(u) || !inst.is_old(v))
            throw InputError("edge " + edge_name(a, b) + " of H has an endpoint off the spine");
        if (u == v) throw InputError("self-loop " + edge_name(a, b));
        if (page < 1 || page > ell_)
            throw InputError("edge " + edge_name(a, b) + " has page " + std::to_string(page) +
                             " outside [1, " + std::to_string(ell_) + "]");
        Edge e(u, v);
        if (inst.H.has_edge(e)) throw InputError("duplicate edge " + edge_name(a, b));
        inst.H.add_edge(e);
        inst.G.add_edge(e);
        inst.layoutH.pages[e] = page;
    }
    for (const auto& [a, b] : new_edges_) {
        VertexId u = inst.id_of(a), v = inst.id_of(b);
        if (u == v) throw InputError("self-loop " + edge_name(a, b));
        Edge e(u, v);
        if (inst.G.has_edge(e)) throw InputError("duplicate edge " + edge_name(a, b));
        inst.G.add_edge(e);
        inst.new_edges_.push_back(e);
    }
    if (auto bad = find_crossing(inst.H, inst.layoutH))
        throw InputError("layout of H is invalid: " + edge_name(inst.name(bad->first.u), inst.name(bad->first.v)) +
                         " crosses " + edge_name(inst.name(bad->second.u), inst.name(bad->second.v)) +
                         " on page " + std::to_string(inst.layoutH.pages.at(bad->first)));

    std::set<int> inc;
    for (const Edge& e : inst.new_edges_) {
        if (inst.is_old(e.u)) inc.insert(e.u.value);
        if (inst.is_old(e.v)) inc.insert(e.v.value);
        if (inst.is_old(e.u) && inst.is_old(e.v)) inst.eadd_h_.push_back(e);
    }
    for (int q : inc) inst.v_inc_.emplace_back(q);
    return inst;
}

Instance with_new_edges(const Instance& inst, const std::vector<Edge>& keep) {
    InstanceBuilder b(inst.ell);
    for (int q = 0; q < inst.n_old(); ++q) b.old_vertex(inst.name(VertexId(q)));
    for (const auto& [e, p] : inst.old_edges()) b.old_edge(inst.name(e.u), inst.name(e.v), p);
    for (VertexId v : inst.new_vertices()) b.new_vertex(inst.name(v));
    for (const Edge& e : keep) {
        if (!inst.G.has_edge(e) || inst.H.has_edge(e)) throw InputError("not a new edge of the instance");
        b.new_edge(inst.name(e.u), inst.name(e.v));
    }
    return b.build();
}

std::string verify_solution(const Instance& inst, const Layout& L) {
    auto nm = [&](VertexId v) { return inst.name(v); };
    auto en = [&](const Edge& e) { return nm(e.u) + "-" + nm(e.v); };
    if (L.ell != inst.ell) return "page count " + std::to_string(L.ell) + " differs from ell";
    try {
        check_carriers(inst.G, L);
    } catch (const InputError& err) {
        return std::string("carrier mismatch: ") + err.what();
    }
    if (auto bad = find_crossing(inst.G, L))
        return "edges " + en(bad->first) + " and " + en(bad->second) + " cross on page " +
               std::to_string(L.pages.at(bad->first));
    for (int q = 1; q < inst.n_old(); ++q)
        if (L.spine.rank(VertexId(q - 1)) > L.spine.rank(VertexId(q)))
            return "old vertices " + nm(VertexId(q - 1)) + " and " + nm(VertexId(q)) + " are swapped";
    for (const auto& [e, p] : inst.layoutH.pages) {
        int got = L.pages.at(e);
        if (got != p)
            return "old edge " + en(e) + " moved from page " + std::to_string(p) + " to " + std::to_string(got);
    }
    return "";
}

}  // namespace sle
