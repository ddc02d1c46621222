#include "sle/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sle/errors.hpp"
#include "sle/geometry.hpp"
#include "sle/oracle.hpp"

namespace sle {

namespace {

std::string num(int i) { return std::to_string(i); }

// Inserts each new vertex directly after an old anchor ("" = spine start) and
// assigns the given pages to the new edges.
Layout place_after(const Instance& inst, const std::vector<std::pair<std::string, std::string>>& anchors,
                   const std::map<std::pair<std::string, std::string>, int>& new_pages) {
    std::vector<VertexId> seq;
    auto emit_after = [&](const std::string& anchor) {
        for (const auto& [nv, at] : anchors)
            if (at == anchor) seq.push_back(inst.id_of(nv));
    };
    emit_after("");
    for (int q = 0; q < inst.n_old(); ++q) {
        seq.emplace_back(q);
        emit_after(inst.name(VertexId(q)));
    }
    Layout L;
    L.ell = inst.ell;
    L.spine = SpineOrder(seq);
    L.pages = inst.layoutH.pages;
    for (const auto& [names, p] : new_pages) L.pages[Edge(inst.id_of(names.first), inst.id_of(names.second))] = p;
    return L;
}

}  // namespace

void CnfFormula::validate() const {
    if (num_vars < 1) throw InputError("formula needs at least one variable");
    if (clauses.empty()) throw InputError("formula needs at least one clause");
    for (std::size_t c = 0; c < clauses.size(); ++c)
        for (int a = 0; a < 3; ++a) {
            const Literal& la = clauses[c][a];
            if (la.var < 1 || la.var > num_vars)
                throw InputError("clause " + num(int(c) + 1) + " names unknown variable " + num(la.var));
            for (int b = a + 1; b < 3; ++b)
                if (clauses[c][b].var == la.var)
                    throw InputError("clause " + num(int(c) + 1) +
                                     " repeats variable " + num(la.var) + " (literals must be distinct and non-complementary)");
        }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& cl : clauses) {
        bool sat = false;
        for (const Literal& l : cl)
            if (assignment.at(l.var - 1) != l.negated) sat = true;
        if (!sat) return false;
    }
    return true;
}

void MccInput::validate() const {
    if (k() < 2) throw InputError("multicolored clique needs k >= 2");
    std::map<std::string, int> color;
    for (int a = 0; a < k(); ++a) {
        if (parts[a].empty()) throw InputError("part " + num(a + 1) + " is empty");
        for (const auto& v : parts[a])
            if (!color.emplace(v, a).second) throw InputError("vertex '" + v + "' appears in two parts");
    }
    if (edges.empty()) throw InputError("graph has no edges");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [u, v] : edges) {
        if (!color.count(u) || !color.count(v)) throw InputError("edge " + u + "-" + v + " has an unknown endpoint");
        if (color[u] == color[v]) throw InputError("edge " + u + "-" + v + " lies inside one part");
        auto key = std::minmax(u, v);
        if (!seen.emplace(key.first, key.second).second) throw InputError("duplicate edge " + u + "-" + v);
    }
}

GadgetFragment build_fixation_gadget(int F, int ell, bool simple, std::vector<std::string> f_names) {
    if (F < 1) throw InputError("gadget needs F >= 1");
    if (ell < 2) throw InputError("gadget needs ell >= 2");
    if (f_names.empty())
        for (int i = 1; i <= F; ++i) f_names.push_back("f_" + num(i));
    if (int(f_names.size()) != F) throw InputError("need one name per gadget vertex");
    GadgetFragment g;
    g.F = F;
    g.ell = ell;
    g.pd = ell;
    g.simple = simple;
    const int pd = ell, top = ell - 1;
    for (int i = 1; i <= F + 1; ++i) g.v_names.push_back("v_" + num(i));
    auto b = [&](int i, int p) { return simple ? "b_" + num(i) + "_p" + num(p) : "b_" + num(i); };
    auto a = [&](int i, int p) { return simple ? "a_" + num(i) + "_p" + num(p) : "a_" + num(i); };
    for (int i = 1; i <= F + 1; ++i) {
        if (simple) {
            for (int p = top; p >= 1; --p) g.spine.push_back(b(i, p));
            g.spine.push_back(g.v_names[i - 1]);
            for (int p = 1; p <= top; ++p) g.spine.push_back(a(i, p));
        } else {
            g.spine.push_back(b(i, 0));
            g.spine.push_back(g.v_names[i - 1]);
            g.spine.push_back(a(i, 0));
        }
    }
    for (int i = 1; i <= F + 1; ++i)
        for (int p = 1; p <= top; ++p) g.old_edges.emplace_back(b(i, p), a(i, p), p);
    for (int i = 1; i <= F + 1; ++i) {
        g.old_edges.emplace_back(b(i, top), g.v_names[i - 1], pd);
        g.old_edges.emplace_back(g.v_names[i - 1], a(i, top), pd);
    }
    for (int i = 1; i <= F; ++i) g.old_edges.emplace_back(g.v_names[i - 1], g.v_names[i], pd);
    g.old_edges.emplace_back(b(1, top), a(F + 1, top), pd);
    g.new_vertices = f_names;
    for (int i = 1; i <= F; ++i) {
        g.new_edges.emplace_back(f_names[i - 1], g.v_names[i - 1]);
        g.new_edges.emplace_back(f_names[i - 1], g.v_names[i]);
    }
    return g;
}

std::pair<Instance, ReductionCertificate> gadget_instance(int F, int ell) {
    GadgetFragment g = build_fixation_gadget(F, ell, true);
    InstanceBuilder B(ell);
    B.spine(g.spine);
    for (const auto& [u, v, p] : g.old_edges) B.old_edge(u, v, p);
    for (const auto& f : g.new_vertices) B.new_vertex(f);
    for (const auto& [u, v] : g.new_edges) B.new_edge(u, v);
    ReductionCertificate cert;
    cert.kind = ReductionCertificate::Kind::Gadget;
    cert.ell = ell;
    cert.pd = g.pd;
    cert.gadget_v = g.v_names;
    cert.gadget_f = g.new_vertices;
    return {B.build(), cert};
}

std::pair<Instance, ReductionCertificate> reduce_3sat(const CnfFormula& phi) {
    phi.validate();
    const int N = phi.num_vars, M = int(phi.clauses.size());
    const int ell = 2 * N + 1, pd = ell;
    auto ppos = [](int i) { return 2 * i - 1; };
    auto pneg = [](int i) { return 2 * i; };
    auto d = [](int q, int p) { return "d_" + num(q) + "_p" + num(p); };

    GadgetFragment g = build_fixation_gadget(2, ell, true, {"s", "v"});
    InstanceBuilder B(ell);
    B.spine(g.spine);
    for (int q = 1; q <= N + M + 1; ++q) {
        for (int p = 1; p <= 2 * N; ++p) B.old_vertex(d(q, p));
        if (q <= N) B.old_vertex("x_" + num(q));
        else if (q <= N + M) B.old_vertex("c_" + num(q - N));
    }
    for (const auto& [u, v, p] : g.old_edges) B.old_edge(u, v, p);
    // variable x_i is hidden on every page pair except its own
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j) continue;
            for (int p : {ppos(j), pneg(j)}) B.old_edge(d(i, p), d(i + 1, p), p);
        }
    // clause c_j is visible only on pages of complementary literals
    for (int j = 1; j <= M; ++j)
        for (int i = 1; i <= N; ++i) {
            int occ = 0;  // 0 absent, 1 positive, 2 negated
            for (const Literal& l : phi.clauses[j - 1])
                if (l.var == i) occ = l.negated ? 2 : 1;
            if (occ != 2) B.old_edge(d(N + j, ppos(i)), d(N + j + 1, ppos(i)), ppos(i));
            if (occ != 1) B.old_edge(d(N + j, pneg(i)), d(N + j + 1, pneg(i)), pneg(i));
        }
    B.old_edge(d(1, ppos(1)), d(N + M + 1, pneg(N)), pd);
    B.new_vertex("s").new_vertex("v");
    for (const auto& [u, v] : g.new_edges) B.new_edge(u, v);
    for (int i = 1; i <= N; ++i) B.new_edge("s", "x_" + num(i));
    for (int j = 1; j <= M; ++j) B.new_edge("v", "c_" + num(j));

    ReductionCertificate cert;
    cert.kind = ReductionCertificate::Kind::Sat3;
    cert.ell = ell;
    cert.pd = pd;
    cert.gadget_v = g.v_names;
    cert.gadget_f = g.new_vertices;
    cert.num_vars = N;
    cert.s = "s";
    cert.v = "v";
    for (int i = 1; i <= N; ++i) {
        cert.var_vertex.push_back("x_" + num(i));
        cert.page_pos.push_back(ppos(i));
        cert.page_neg.push_back(pneg(i));
    }
    for (int j = 1; j <= M; ++j) cert.clause_vertex.push_back("c_" + num(j));
    return {B.build(), cert};
}

std::pair<Instance, ReductionCertificate> reduce_mcc(const MccInput& inp) {
    inp.validate();
    const int k = inp.k(), M = int(inp.edges.size());
    const int ell = M + 1, pd = ell;
    std::map<std::string, std::pair<int, int>> where;  // name -> (alpha, i), 1-based
    for (int a = 0; a < k; ++a)
        for (int i = 0; i < int(inp.parts[a].size()); ++i) where[inp.parts[a][i]] = {a + 1, i + 1};
    auto n_of = [&](int alpha) { return alpha <= k ? int(inp.parts[alpha - 1].size()) : 0; };
    auto u = [&](int alpha, int i) { return "u_" + num(alpha) + "_" + num(i); };
    auto bv = [](int alpha, int t) { return "b_" + num(alpha) + "_e" + num(t); };
    auto av = [](int alpha, int t) { return "a_" + num(alpha) + "_e" + num(t); };

    InstanceBuilder B(ell);
    B.old_vertex(u(0, 0));
    for (int alpha = 1; alpha <= k + 1; ++alpha) {
        for (int t = M; t >= 1; --t) B.old_vertex(bv(alpha, t));
        B.old_vertex(u(alpha, 0));
        for (int t = 1; t <= M; ++t) B.old_vertex(av(alpha, t));
        int last = alpha <= k ? n_of(alpha) + 1 : 1;
        for (int i = 1; i <= last; ++i) B.old_vertex(u(alpha, i));
    }

    // fixation gadget folded into the base layout (v_alpha = u_alpha^0)
    for (int alpha = 1; alpha <= k + 1; ++alpha)
        for (int t = 1; t <= M; ++t) B.old_edge(bv(alpha, t), av(alpha, t), t);
    B.old_edge(bv(1, M), u(1, 0), pd);
    B.old_edge(u(k + 1, 0), av(k + 1, M), pd);
    for (int alpha = 1; alpha <= k; ++alpha) {
        B.old_edge(u(alpha, 0), u(alpha + 1, 0), pd);
        B.old_edge(u(alpha, 0), u(alpha, 1), pd);
        B.old_edge(u(alpha, n_of(alpha) + 1), u(alpha + 1, 0), pd);
    }
    B.old_edge(bv(1, M), av(k + 1, M), pd);

    ReductionCertificate cert;
    cert.kind = ReductionCertificate::Kind::Mcc;
    cert.ell = ell;
    cert.pd = pd;
    std::set<std::pair<std::string, std::string>> placed;
    for (int t = 1; t <= M; ++t) {
        auto [x, y] = inp.edges[t - 1];
        auto [alpha, i] = where.at(x);
        auto [beta, j] = where.at(y);
        if (alpha > beta) {
            std::swap(alpha, beta);
            std::swap(i, j);
            std::swap(x, y);
        }
        cert.edge_page.emplace_back(x, y, t);
        // a tunnel edge may already exist on an earlier page; the color edges
        // alone confine x_alpha x_beta on p_e, so the repeat is skipped
        auto add = [&](const std::string& p, const std::string& q) {
            if (p != q && placed.insert(std::minmax(p, q)).second) B.old_edge(p, q, t);
        };
        for (int gamma = 1; gamma <= k; ++gamma) {
            if (gamma == alpha || gamma == beta) continue;
            add(av(gamma, t), bv(gamma + 1, t));
        }
        for (auto [c, idx] : {std::pair{alpha, i}, std::pair{beta, j}}) {
            add(av(c, t), u(c, idx));
            add(u(c, idx + 1), bv(c + 1, t));
        }
        add(u(alpha, i), u(beta, j + 1));
        add(u(alpha, i + 1), u(beta, j));
    }

    for (int alpha = 1; alpha <= k; ++alpha) B.new_vertex("x_" + num(alpha));
    for (int alpha = 1; alpha <= k; ++alpha)
        for (int beta = alpha + 1; beta <= k; ++beta) B.new_edge("x_" + num(alpha), "x_" + num(beta));
    for (int alpha = 1; alpha <= k; ++alpha) {
        B.new_edge("x_" + num(alpha), u(alpha, 0));
        B.new_edge("x_" + num(alpha), u(alpha + 1, 0));
    }

    for (int alpha = 1; alpha <= k + 1; ++alpha) cert.gadget_v.push_back(u(alpha, 0));
    for (int alpha = 1; alpha <= k; ++alpha) {
        cert.gadget_f.push_back("x_" + num(alpha));
        cert.x.push_back("x_" + num(alpha));
        cert.original.push_back(inp.parts[alpha - 1]);
        std::vector<std::string> cp;
        for (int i = 0; i <= n_of(alpha) + 1; ++i) cp.push_back(u(alpha, i));
        cert.copy.push_back(cp);
    }
    return {B.build(), cert};
}

Extracted extract_certificate(const Instance& inst, const Layout& sol, const ReductionCertificate& cert) {
    Extracted out;
    auto rank = [&](const std::string& nm) {
        if (!inst.has_name(nm)) throw CorruptCertificate("certificate names unknown vertex '" + nm + "'");
        VertexId id = inst.id_of(nm);
        if (!sol.spine.contains(id)) throw CorruptCertificate("vertex '" + nm + "' missing from solution");
        return sol.spine.rank(id);
    };
    auto page = [&](const std::string& a, const std::string& b) {
        rank(a);
        rank(b);
        auto it = sol.pages.find(Edge(inst.id_of(a), inst.id_of(b)));
        if (it == sol.pages.end()) throw CorruptCertificate("edge " + a + "-" + b + " missing from solution");
        return it->second;
    };
    if (cert.kind == ReductionCertificate::Kind::Sat3) {
        for (int i = 0; i < cert.num_vars; ++i) {
            int p = page(cert.s, cert.var_vertex[i]);
            if (p == cert.page_pos[i])
                out.assignment.push_back(true);
            else if (p == cert.page_neg[i])
                out.assignment.push_back(false);
            else
                throw CorruptCertificate("edge " + cert.s + "-" + cert.var_vertex[i] + " is on page " + num(p) +
                                         ", neither of its variable pages");
        }
    } else if (cert.kind == ReductionCertificate::Kind::Mcc) {
        for (std::size_t a = 0; a < cert.x.size(); ++a) {
            int rx = rank(cert.x[a]);
            const auto& cp = cert.copy[a];
            bool hit = false;
            for (std::size_t i = 1; i + 1 < cp.size(); ++i)
                if (rank(cp[i]) < rx && rx < rank(cp[i + 1])) {
                    out.clique.push_back(cert.original[a][i - 1]);
                    hit = true;
                    break;
                }
            if (!hit) throw CorruptCertificate(cert.x[a] + " is not inside an interval of its color");
        }
    } else {
        throw CorruptCertificate("gadget certificates carry nothing to extract");
    }
    return out;
}

Layout sat3_witness(const Instance& inst, const ReductionCertificate& cert, const CnfFormula& phi,
                    const std::vector<bool>& assignment) {
    const int top = cert.ell - 1;
    std::vector<std::pair<std::string, std::string>> anchors = {{cert.s, "a_1_p" + num(top)},
                                                                {cert.v, "a_2_p" + num(top)}};
    std::map<std::pair<std::string, std::string>, int> pages;
    for (int i = 1; i <= 2; ++i) {
        pages[{cert.gadget_f[i - 1], cert.gadget_v[i - 1]}] = cert.pd;
        pages[{cert.gadget_f[i - 1], cert.gadget_v[i]}] = cert.pd;
    }
    for (int i = 0; i < cert.num_vars; ++i)
        pages[{cert.s, cert.var_vertex[i]}] = assignment[i] ? cert.page_pos[i] : cert.page_neg[i];
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        int chosen = 0;
        for (const Literal& l : phi.clauses[j])
            if (assignment[l.var - 1] != l.negated) {
                // a true positive literal leaves p_not_i free at c_j, and vice versa
                chosen = l.negated ? cert.page_pos[l.var - 1] : cert.page_neg[l.var - 1];
                break;
            }
        if (!chosen) throw InputError("assignment does not satisfy clause " + num(int(j) + 1));
        pages[{cert.v, cert.clause_vertex[j]}] = chosen;
    }
    return place_after(inst, anchors, pages);
}

Layout mcc_witness(const Instance& inst, const ReductionCertificate& cert, const MccInput& inp,
                   const std::vector<std::string>& clique) {
    if (!is_colorful_clique(inp, clique)) throw InputError("not a colorful clique");
    std::vector<int> pick(cert.x.size());
    for (std::size_t a = 0; a < cert.x.size(); ++a) {
        const auto& part = cert.original[a];
        for (std::size_t i = 0; i < part.size(); ++i)
            if (std::find(clique.begin(), clique.end(), part[i]) != clique.end()) pick[a] = int(i) + 1;
    }
    std::vector<std::pair<std::string, std::string>> anchors;
    std::map<std::pair<std::string, std::string>, int> pages;
    for (std::size_t a = 0; a < cert.x.size(); ++a) {
        anchors.emplace_back(cert.x[a], cert.copy[a][pick[a]]);
        pages[{cert.x[a], cert.gadget_v[a]}] = cert.pd;
        pages[{cert.x[a], cert.gadget_v[a + 1]}] = cert.pd;
    }
    for (std::size_t a = 0; a < cert.x.size(); ++a)
        for (std::size_t b = a + 1; b < cert.x.size(); ++b) {
            const std::string& va = cert.original[a][pick[a] - 1];
            const std::string& vb = cert.original[b][pick[b] - 1];
            for (const auto& [p, q, t] : cert.edge_page)
                if (p == va && q == vb) pages[{cert.x[a], cert.x[b]}] = t;
        }
    return place_after(inst, anchors, pages);
}

bool is_colorful_clique(const MccInput& inp, const std::vector<std::string>& vs) {
    if (int(vs.size()) != inp.k()) return false;
    for (int a = 0; a < inp.k(); ++a) {
        int hits = 0;
        for (const auto& v : vs) hits += int(std::count(inp.parts[a].begin(), inp.parts[a].end(), v));
        if (hits != 1) return false;
    }
    std::set<std::pair<std::string, std::string>> E;
    for (const auto& [a, b] : inp.edges) E.insert(std::minmax(a, b));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!E.count(std::minmax(vs[i], vs[j]))) return false;
    return true;
}

std::optional<std::vector<std::string>> find_colorful_clique(const MccInput& inp) {
    std::vector<std::string> pick;
    std::optional<std::vector<std::string>> out;
    std::set<std::pair<std::string, std::string>> E;
    for (const auto& [a, b] : inp.edges) E.insert(std::minmax(a, b));
    std::function<void(int)> rec = [&](int a) {
        if (out) return;
        if (a == inp.k()) {
            out = pick;
            return;
        }
        for (const auto& v : inp.parts[a]) {
            bool ok = true;
            for (const auto& w : pick)
                if (!E.count(std::minmax(v, w))) ok = false;
            if (!ok) continue;
            pick.push_back(v);
            rec(a + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

bool LemmaReport::all_pass() const {
    for (const auto& c : clauses)
        if (!c.second) return false;
    return true;
}

LemmaReport check_reduction_lemmas(const Instance& inst, const ReductionCertificate& cert, const SolveOptions& opts) {
    LemmaReport rep;
    std::vector<std::string> names;
    std::vector<std::function<std::string(const Layout&)>> checks;  // "" = holds
    auto rank = [&](const Layout& L, const std::string& nm) { return L.spine.rank(inst.id_of(nm)); };
    auto page = [&](const Layout& L, const std::string& a, const std::string& b) {
        return L.pages.at(Edge(inst.id_of(a), inst.id_of(b)));
    };

    const std::size_t F = cert.gadget_f.size();
    for (std::size_t i = 0; i < F; ++i) {
        const std::string f = cert.gadget_f[i], v0 = cert.gadget_v[i], v1 = cert.gadget_v[i + 1];
        names.push_back("gadget position: " + v0 + " < " + f + " < " + v1);
        checks.push_back([=](const Layout& L) {
            return rank(L, v0) < rank(L, f) && rank(L, f) < rank(L, v1) ? "" : f + " outside (" + v0 + ", " + v1 + ")";
        });
        names.push_back("gadget pages: " + f + "-" + v0 + " and " + f + "-" + v1 + " on p_d");
        checks.push_back([=](const Layout& L) {
            return page(L, f, v0) == cert.pd && page(L, f, v1) == cert.pd ? "" : f + " gadget edge off p_d";
        });
    }
    if (cert.kind == ReductionCertificate::Kind::Sat3) {
        names.push_back("dedicated page: only gadget edges use p_d");
        checks.push_back([&](const Layout& L) -> std::string {
            for (const Edge& e : inst.new_edges()) {
                bool gadget = false;
                for (std::size_t i = 0; i < F; ++i)
                    for (std::size_t s = i; s <= i + 1; ++s)
                        if (e == Edge(inst.id_of(cert.gadget_f[i]), inst.id_of(cert.gadget_v[s]))) gadget = true;
                if (!gadget && L.pages.at(e) == cert.pd) return inst.name(e.u) + "-" + inst.name(e.v) + " on p_d";
            }
            return "";
        });
    }
    if (cert.kind == ReductionCertificate::Kind::Mcc) {
        for (std::size_t a = 0; a < cert.x.size(); ++a) {
            const auto& cp = cert.copy[a];
            const std::string x = cert.x[a], lo = cp[1], hi = cp.back();
            names.push_back("color range: " + lo + " < " + x + " < " + hi);
            checks.push_back([=](const Layout& L) {
                return rank(L, lo) < rank(L, x) && rank(L, x) < rank(L, hi) ? "" : x + " outside its color range";
            });
        }
        names.push_back("tunnel: x_a x_b on p_e puts both ends in the edge intervals");
        checks.push_back([&](const Layout& L) -> std::string {
            auto copy_of = [&](const std::string& orig) -> std::pair<std::string, std::string> {
                for (std::size_t a = 0; a < cert.original.size(); ++a)
                    for (std::size_t i = 0; i < cert.original[a].size(); ++i)
                        if (cert.original[a][i] == orig) return {cert.copy[a][i + 1], cert.copy[a][i + 2]};
                return {};
            };
            auto color_of = [&](const std::string& orig) {
                for (std::size_t a = 0; a < cert.original.size(); ++a)
                    if (std::count(cert.original[a].begin(), cert.original[a].end(), orig)) return a;
                return cert.original.size();
            };
            for (const auto& [va, vb, t] : cert.edge_page) {
                std::size_t a = color_of(va), b = color_of(vb);
                if (page(L, cert.x[a], cert.x[b]) != t) continue;
                for (auto [x, iv] : {std::pair{cert.x[a], copy_of(va)}, std::pair{cert.x[b], copy_of(vb)}})
                    if (!(rank(L, iv.first) < rank(L, x) && rank(L, x) < rank(L, iv.second)))
                        return x + " not in the interval of its tunnel end on page " + num(t);
            }
            return "";
        });
    }
    std::vector<char> held(names.size(), 1);
    rep.solutions = enumerate_solutions(
        inst,
        [&](const Layout& L) {
            for (std::size_t c = 0; c < checks.size(); ++c) {
                std::string why = checks[c](L);
                if (!why.empty()) {
                    held[c] = 0;
                    if (rep.violations.size() < 5) rep.violations.push_back(why);
                }
            }
            return true;
        },
        opts);
    for (std::size_t c = 0; c < names.size(); ++c) rep.clauses.emplace_back(names[c], held[c] != 0);
    return rep;
}

}  // namespace sle
