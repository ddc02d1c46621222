#include "sle/geometry.hpp"

#include <algorithm>
#include <string>

#include "sle/errors.hpp"

namespace sle {

namespace {

struct Span {
    int l, r;
    Edge e;
};

std::vector<Span> page_spans(const Layout& layout, int page) {
    std::vector<Span> out;
    for (const auto& [e, p] : layout.pages) {
        if (p != page) continue;
        int a = layout.spine.rank(e.u), b = layout.spine.rank(e.v);
        out.push_back({std::min(a, b), std::max(a, b), e});
    }
    std::sort(out.begin(), out.end(), [](const Span& x, const Span& y) {
        return x.l != y.l ? x.l < y.l : x.r > y.r;
    });
    return out;
}

void check_page(const Layout& layout, int page) {
    if (page < 1 || page > layout.ell)
        throw InputError("page " + std::to_string(page) + " outside [1, " +
                         std::to_string(layout.ell) + "]");
}

bool alternate(int a, int b, int c, int d) {
    // a<b and c<d assumed
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

bool crosses(const SpineOrder& spine, const Edge& e1, const Edge& e2) {
    int a = spine.rank(e1.u), b = spine.rank(e1.v);
    int c = spine.rank(e2.u), d = spine.rank(e2.v);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) return false;
    return alternate(a, b, c, d);
}

void check_carriers(const Graph& graph, const Layout& layout) {
    if (layout.ell < 1) throw InputError("page count must be positive");
    if (layout.spine.size() != graph.vertex_count())
        throw InputError("spine does not list exactly the graph's vertices");
    for (VertexId v : graph.vertices())
        if (!layout.spine.contains(v))
            throw InputError("vertex " + std::to_string(v.value) + " missing from spine");
    if (layout.pages.size() != graph.edge_count())
        throw InputError("page assignment is not over the graph's edge set");
    for (const auto& [e, p] : layout.pages) {
        if (!graph.has_edge(e)) throw InputError("page assignment names a non-edge");
        check_page(layout, p);
    }
}

std::optional<std::pair<Edge, Edge>> find_crossing(const Graph& graph, const Layout& layout) {
    check_carriers(graph, layout);
    for (int p = 1; p <= layout.ell; ++p) {
        std::vector<Span> spans = page_spans(layout, p);
        std::vector<const Span*> stack;
        for (const Span& s : spans) {
            while (!stack.empty() && stack.back()->r <= s.l) stack.pop_back();
            if (!stack.empty() && s.r > stack.back()->r) return std::make_pair(stack.back()->e, s.e);
            stack.push_back(&s);
        }
    }
    return std::nullopt;
}

bool is_valid(const Graph& graph, const Layout& layout) { return !find_crossing(graph, layout); }

bool extends(const Layout& layoutG, const Layout& layoutH) {
    const auto& seq = layoutH.spine.sequence();
    for (VertexId v : seq)
        if (!layoutG.spine.contains(v)) return false;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (layoutG.spine.rank(seq[i - 1]) > layoutG.spine.rank(seq[i])) return false;
    for (const auto& [e, p] : layoutH.pages) {
        auto it = layoutG.pages.find(e);
        if (it == layoutG.pages.end() || it->second != p) return false;
    }
    return true;
}

bool sees(const Layout& layout, VertexId u, VertexId v, int page) {
    check_page(layout, page);
    if (u == v) throw InputError("sees() needs two distinct vertices");
    int a = layout.spine.rank(u), b = layout.spine.rank(v);
    if (a > b) std::swap(a, b);
    for (const auto& [e, p] : layout.pages) {
        if (p != page || e.has(u) || e.has(v)) continue;
        int c = layout.spine.rank(e.u), d = layout.spine.rank(e.v);
        if (c > d) std::swap(c, d);
        if (alternate(a, b, c, d)) return false;
    }
    return true;
}

int page_width(const Layout& layout) {
    int n = int(layout.spine.size());
    if (n < 2) return 0;
    int best = 0;
    for (int p = 1; p <= layout.ell; ++p) {
        std::vector<int> diff(n + 1, 0);
        for (const Span& s : page_spans(layout, p)) {
            diff[s.l] += 1;
            diff[s.r] -= 1;
        }
        int run = 0;
        for (int g = 0; g + 1 < n; ++g) {
            run += diff[g];
            best = std::max(best, run);
        }
    }
    return best;
}

std::vector<Interval> intervals(const Layout& layout) {
    int n = int(layout.spine.size());
    std::vector<Interval> out;
    for (int i = 1; i <= n + 1; ++i) {
        Interval iv;
        iv.index = i;
        if (i >= 2) iv.left = layout.spine.at(i - 2);
        if (i <= n) iv.right = layout.spine.at(i - 1);
        out.push_back(iv);
    }
    return out;
}

std::vector<Face> faces(const Layout& layout, int page) {
    check_page(layout, page);
    int n = int(layout.spine.size());
    std::vector<Span> spans = page_spans(layout, page);
    std::vector<Face> out;
    Face outer;
    outer.ref = {page, std::nullopt};
    outer.depth = 0;
    outer.first_interval = 1;
    outer.last_interval = n + 1;
    out.push_back(outer);

    std::vector<const Span*> stack;
    for (const Span& s : spans) {
        while (!stack.empty() && stack.back()->r <= s.l) stack.pop_back();
        Face f;
        f.ref = {page, s.e};
        f.depth = int(stack.size()) + 1;
        f.first_interval = s.l + 2;
        f.last_interval = s.r + 1;
        out.push_back(f);
        stack.push_back(&s);
    }
    // an interval is incident to the deepest face spanning it
    for (int i = 1; i <= n + 1; ++i) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < out.size(); ++k)
            if (out[k].first_interval <= i && i <= out[k].last_interval && out[k].depth > out[best].depth)
                best = k;
        out[best].incident_intervals.push_back(i);
    }
    return out;
}

std::optional<FaceRef> face_at_distance(const Layout& layout, int page, int interval, int d) {
    check_page(layout, page);
    if (d == 0) return FaceRef{page, std::nullopt};
    for (const Face& f : faces(layout, page))
        if (f.depth == d && f.first_interval <= interval && interval <= f.last_interval) return f.ref;
    return std::nullopt;
}

std::vector<SuperInterval> super_intervals(const Instance& inst) {
    int n = inst.n_old();
    std::vector<SuperInterval> out;
    SuperInterval cur;
    cur.first = 1;
    for (VertexId w : inst.v_inc()) {
        int q = w.value;  // old ids are spine positions
        cur.last = q + 1;
        cur.right = w;
        out.push_back(cur);
        cur = SuperInterval{};
        cur.left = w;
        cur.first = q + 2;
    }
    cur.last = n + 1;
    out.push_back(cur);
    return out;
}

}  // namespace sle
