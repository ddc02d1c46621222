#include "sle/toolkit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sle/classical.hpp"
#include "sle/errors.hpp"
#include "sle/fpt.hpp"
#include "sle/geometry.hpp"
#include "sle/oracle.hpp"

namespace sle {

namespace {

const std::vector<std::pair<Algo, std::string>>& algo_names() {
    static const std::vector<std::pair<Algo, std::string>> names = {
        {Algo::Auto, "auto"}, {Algo::Oracle, "oracle"}, {Algo::EdgesFpt, "edges-fpt"}, {Algo::OneVertex, "one-vertex"},
        {Algo::Xp, "xp"},     {Algo::DpFpt, "dp-fpt"},  {Algo::GreedyIs, "greedy-is"}};
    return names;
}

bool new_vertices_independent(const Instance& inst) {
    for (const Edge& e : inst.new_edges())
        if (!inst.is_old(e.u) && !inst.is_old(e.v)) return false;
    return true;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    return buf;
}

}  // namespace

std::string algo_name(Algo a) {
    for (const auto& [k, n] : algo_names())
        if (k == a) return n;
    return "?";
}

Algo parse_algo(const std::string& s) {
    for (const auto& [k, n] : algo_names())
        if (n == s) return k;
    throw InputError("unknown algorithm '" + s + "'");
}

const std::vector<Algo>& concrete_algos() {
    static const std::vector<Algo> all = {Algo::Oracle, Algo::EdgesFpt, Algo::OneVertex, Algo::Xp, Algo::DpFpt,
                                          Algo::GreedyIs};
    return all;
}

bool applicable(const Instance& inst, Algo a) {
    switch (a) {
        case Algo::EdgesFpt: return inst.n_add() == 0;
        case Algo::OneVertex: return inst.n_add() == 1 && inst.eadd_h().empty();
        case Algo::GreedyIs: return new_vertices_independent(inst);
        default: return true;
    }
}

Algo pick_auto(const Instance& inst) {
    if (applicable(inst, Algo::EdgesFpt)) return Algo::EdgesFpt;
    if (applicable(inst, Algo::OneVertex)) return Algo::OneVertex;
    if (applicable(inst, Algo::GreedyIs)) return Algo::GreedyIs;
    return Algo::DpFpt;
}

SolveResult solve(const Instance& inst, Algo a, const SolveOptions& opts) {
    SolveResult r;
    r.used = a == Algo::Auto ? pick_auto(inst) : a;
    if (!applicable(inst, r.used)) throw PreconditionError(algo_name(r.used) + " does not apply to this instance");
    switch (r.used) {
        case Algo::Oracle: r.layout = solve_exhaustive(inst, opts); break;
        case Algo::EdgesFpt: r.layout = solve_edges_only(inst, opts, &r.stats); break;
        case Algo::OneVertex: r.layout = solve_one_vertex(inst, opts, &r.stats); break;
        case Algo::Xp: r.layout = solve_xp(inst, opts, &r.stats); break;
        case Algo::DpFpt: r.layout = solve_fpt(inst, opts, &r.stats); break;
        case Algo::GreedyIs: r.layout = solve_greedy_is(inst, opts, &r.stats); break;
        case Algo::Auto: break;
    }
    if (r.layout) {
        std::string why = verify_solution(inst, *r.layout);
        if (!why.empty()) throw std::logic_error(algo_name(r.used) + " produced an invalid layout: " + why);
    }
    return r;
}

Instance gen_random(const GenParams& p) {
    if (p.nH < 0 || p.mH < 0 || p.ell < 1 || p.n_add < 0 || p.m_add < 0) throw InputError("negative parameter");
    const long max_h = long(p.nH) * (p.nH - 1) / 2;
    if (p.mH > max_h) throw InputError("mH exceeds the number of vertex pairs of H");
    std::mt19937_64 rng(p.seed);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < p.nH; ++i)
        for (int j = i + 1; j < p.nH; ++j) pairs.emplace_back(i, j);

    std::vector<std::tuple<int, int, int>> placed;
    bool done = false;
    for (int attempt = 0; attempt < 32 && !done; ++attempt) {
        placed.clear();
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [a, b] : pairs) {
            if (int(placed.size()) == p.mH) break;
            std::vector<int> pages(p.ell);
            for (int q = 0; q < p.ell; ++q) pages[q] = q + 1;
            std::shuffle(pages.begin(), pages.end(), rng);
            for (int pg : pages) {
                bool ok = true;
                for (auto [c, d, q] : placed)
                    if (q == pg && ((a < c && c < b && b < d) || (c < a && a < d && d < b))) ok = false;
                if (ok) {
                    placed.emplace_back(a, b, pg);
                    break;
                }
            }
        }
        done = int(placed.size()) == p.mH;
    }
    if (!done) throw InputError("could not place " + std::to_string(p.mH) + " non-crossing edges on " +
                                std::to_string(p.ell) + " pages");

    auto old_name = [](int i) { return "h" + std::to_string(i + 1); };
    auto new_name = [](int i) { return "n" + std::to_string(i + 1); };
    InstanceBuilder b(p.ell);
    for (int i = 0; i < p.nH; ++i) b.old_vertex(old_name(i));
    std::sort(placed.begin(), placed.end());
    for (auto [a, c, pg] : placed) b.old_edge(old_name(a), old_name(c), pg);
    for (int i = 0; i < p.n_add; ++i) b.new_vertex(new_name(i));

    std::set<std::pair<int, int>> in_h;
    for (auto [a, c, pg] : placed) in_h.emplace(a, c);
    std::vector<std::pair<int, int>> cand;  // ids: old < nH, new >= nH
    const int total = p.nH + p.n_add;
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            if (j >= p.nH || !in_h.count({i, j})) cand.emplace_back(i, j);
    if (int(cand.size()) < p.m_add) throw InputError("m_add exceeds the number of free vertex pairs");
    std::shuffle(cand.begin(), cand.end(), rng);
    cand.resize(p.m_add);
    std::sort(cand.begin(), cand.end());
    auto any_name = [&](int i) { return i < p.nH ? old_name(i) : new_name(i - p.nH); };
    for (auto [i, j] : cand) b.new_edge(any_name(i), any_name(j));
    return b.build();
}

std::string render_svg(const Instance& inst, const Layout& layout, const RenderOptions& opts) {
    static const char* palette[] = {"#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#1f77b4"};
    const int n = int(layout.spine.size());
    const double step = 48, margin = 32;
    const double width = margin * 2 + step * std::max(0, n - 1);
    double max_span = 0;
    for (const auto& [e, p] : layout.pages)
        max_span = std::max(max_span, step * std::abs(layout.spine.rank(e.u) - layout.spine.rank(e.v)));
    const double lift = max_span / 2 + 16;
    const int bands = opts.stacked ? std::max(1, layout.ell) : 1;
    const double band_h = opts.stacked ? lift + 40 : 2 * lift + 40;
    const double height = band_h * bands;

    auto hl_vertex = [&](VertexId v) {
        return std::find(opts.highlight_vertices.begin(), opts.highlight_vertices.end(), v) != opts.highlight_vertices.end();
    };
    auto hl_edge = [&](const Edge& e) {
        return std::find(opts.highlight_edges.begin(), opts.highlight_edges.end(), e) != opts.highlight_edges.end();
    };
    auto x_of = [&](VertexId v) { return margin + step * layout.spine.rank(v); };
    auto spine_y = [&](int page) {
        if (!opts.stacked) return lift + 20;
        return band_h * (page - 1) + lift + 20;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int b = 1; b <= bands; ++b) {
        double y = spine_y(b);
        out << "<line class=\"spine\" x1=\"" << fmt(margin - 12) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(width - margin + 12) << "\" y2=\"" << fmt(y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    std::vector<std::pair<Edge, int>> edges(layout.pages.begin(), layout.pages.end());
    std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        auto key = [&](const std::pair<Edge, int>& x) {
            int r1 = layout.spine.rank(x.first.u), r2 = layout.spine.rank(x.first.v);
            return std::tuple(x.second, std::min(r1, r2), std::max(r1, r2));
        };
        return key(a) < key(b);
    });
    for (const auto& [e, p] : edges) {
        double x1 = x_of(e.u), x2 = x_of(e.v);
        if (x1 > x2) std::swap(x1, x2);
        double r = (x2 - x1) / 2, y = spine_y(p);
        bool above = opts.stacked || p % 2 == 1;
        bool hl = hl_edge(e);
        out << "<path class=\"edge\" data-page=\"" << p << "\" d=\"M " << fmt(x1) << " " << fmt(y) << " A " << fmt(r)
            << " " << fmt(r) << " 0 0 " << (above ? 1 : 0) << " " << fmt(x2) << " " << fmt(y) << "\" fill=\"none\" stroke=\""
            << palette[(p - 1) % 10] << "\" stroke-width=\"" << (hl ? 3 : 1.5) << "\""
            << (hl ? " stroke-dasharray=\"6 3\"" : "") << "/>\n";
    }
    for (int b = 1; b <= bands; ++b) {
        double y = spine_y(b);
        for (VertexId v : layout.spine.sequence()) {
            bool hl = hl_vertex(v);
            out << "<circle class=\"vertex\" cx=\"" << fmt(x_of(v)) << "\" cy=\"" << fmt(y) << "\" r=\"5\" fill=\""
                << (hl ? "#1f77b4" : "black") << "\"/>\n";
            out << "<text x=\"" << fmt(x_of(v)) << "\" y=\"" << fmt(y + 18) << "\" font-size=\"11\" text-anchor=\"middle\""
                << (hl ? " fill=\"#1f77b4\"" : "") << ">" << inst.name(v) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const Instance& inst) { return render_svg(inst, inst.layoutH); }

InstanceStats instance_stats(const Instance& inst) {
    InstanceStats s;
    s.n_old = inst.n_old();
    s.m_old = int(inst.H.edge_count());
    s.n_add = inst.n_add();
    s.m_add = inst.m_add();
    s.kappa = inst.kappa();
    s.ell = inst.ell;
    s.omega = FaceLookup(inst).omega();
    s.super_intervals = int(super_intervals(inst).size());
    return s;
}

BenchReport bench(const std::vector<std::pair<std::string, Instance>>& corpus, const std::vector<Algo>& algos,
                  double budget_seconds, Execution exec) {
    BenchReport rep;
    for (const auto& [name, inst] : corpus) {
        std::set<std::string> verdicts;
        for (Algo a : algos) {
            BenchRow row;
            row.instance = name;
            row.algo = algo_name(a);
            if (!applicable(inst, a == Algo::Auto ? pick_auto(inst) : a)) {
                row.verdict = "n/a";
                rep.rows.push_back(row);
                continue;
            }
            SolveOptions opts;
            opts.exec = exec;
            auto t0 = std::chrono::steady_clock::now();
            opts.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                     std::chrono::duration<double>(budget_seconds));
            try {
                SolveResult r = solve(inst, a, opts);
                row.verdict = r.layout ? "yes" : "no";
                row.branches = r.stats.branches;
                row.dp_cells = r.stats.dp_cells;
                row.bound = r.stats.bound;
                verdicts.insert(row.verdict);
            } catch (const TimeoutError&) {
                row.verdict = "timeout";
            } catch (const CapacityError&) {
                row.verdict = "capacity";
            } catch (const std::logic_error&) {
                row.verdict = "invalid";
                verdicts.insert("invalid");
            }
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep.rows.push_back(row);
        }
        if (verdicts.size() > 1) rep.discrepancies.push_back(name);
    }
    return rep;
}

std::string bench_json(const BenchReport& r) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows)
        j["rows"].push_back({{"instance", row.instance},
                             {"algo", row.algo},
                             {"verdict", row.verdict},
                             {"seconds", row.seconds},
                             {"branches", row.branches},
                             {"dp_cells", row.dp_cells},
                             {"bound", row.bound}});
    j["discrepancies"] = r.discrepancies;
    return j.dump(2) + "\n";
}

}  // namespace sle
