// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "branch_brute.hpp"
#include "corpus.hpp"
#include "sle/classical.hpp"
#include "sle/errors.hpp"
#include "sle/fpt.hpp"
#include "sle/geometry.hpp"
#include "sle/io.hpp"
#include "sle/oracle.hpp"
#include "sle/reductions.hpp"
#include "sle/toolkit.hpp"
#include "support.hpp"

using namespace sle;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail, Clock::time_point t0) {
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%s, %.1fs)\n", n, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

SolveOptions uncapped() {
    SolveOptions o;
    o.oracle_cap = std::uint64_t(1) << 62;
    return o;
}

struct Notes {
    std::vector<std::string> lines;
    void add(const std::string& s) {
        if (lines.size() < 5) lines.push_back(s);
    }
    void dump() const {
        for (const auto& s : lines) std::printf("    %s\n", s.c_str());
    }
};

// ---- criteria 1 and 8 ----

struct Tally {
    std::uint64_t instances = 0, positive = 0, discrepancies = 0, invalid = 0;
    std::map<Algo, std::uint64_t> runs;
    std::uint64_t xp_checked = 0, xp_over = 0, fpt_checked = 0, fpt_over = 0;
    Notes notes, bound_notes;
};

std::optional<Layout> run(Algo a, const Instance& inst, SolveStats* st) {
    SolveOptions o;
    switch (a) {
        case Algo::EdgesFpt: return solve_edges_only(inst, o, st);
        case Algo::OneVertex: return solve_one_vertex(inst, o, st);
        case Algo::Xp: return solve_xp(inst, o, st);
        case Algo::DpFpt: return solve_fpt(inst, o, st);
        case Algo::GreedyIs: return solve_greedy_is(inst, o, st);
        default: return solve_exhaustive(inst, uncapped());
    }
}

void check_instance(const Instance& inst, Tally& t) {
    ++t.instances;
    auto truth = solve_exhaustive(inst, uncapped());
    bool want = truth.has_value();
    t.positive += want;
    if (want && verify_solution(inst, *truth) != "") {
        ++t.invalid;
        t.notes.add("oracle layout rejected: " + emit_instance(inst));
    }
    for (Algo a : {Algo::EdgesFpt, Algo::OneVertex, Algo::Xp, Algo::DpFpt, Algo::GreedyIs}) {
        if (!applicable(inst, a)) continue;
        ++t.runs[a];
        SolveStats st;
        auto got = run(a, inst, &st);
        if (got.has_value() != want) {
            ++t.discrepancies;
            t.notes.add(algo_name(a) + " says " + (got ? "yes" : "no") + " on " + emit_instance(inst));
        } else if (got && verify_solution(inst, *got) != "") {
            ++t.invalid;
            t.notes.add(algo_name(a) + " layout rejected: " + verify_solution(inst, *got));
        }
        if (a == Algo::Xp) {
            ++t.xp_checked;
            if (double(st.branches) > xp_branch_bound(inst)) {
                ++t.xp_over;
                t.bound_notes.add("xp " + std::to_string(st.branches) + " branches on " + emit_instance(inst));
            }
        }
        if (a == Algo::DpFpt) {
            ++t.fpt_checked;
            if (double(st.branches) > fpt_branch_bound(inst)) {
                ++t.fpt_over;
                t.bound_notes.add("dp-fpt " + std::to_string(st.branches) + " branches on " + emit_instance(inst));
            }
        }
    }
}

Instance from_raw(const test::RawInstance& r) {
    std::vector<std::tuple<int, int, int>> old;
    for (auto [a, b, p] : r.old) old.emplace_back(a, b, p);
    std::vector<std::pair<int, int>> nw;
    for (auto [a, b] : r.nw) nw.emplace_back(a, b);
    return test::make(r.ell, r.n, old, r.n_add, nw);
}

void criteria_1_and_8() {
    auto t0 = Clock::now();
    Tally t;
    std::uint64_t corpus = test::for_each_corpus_instance([&](const test::RawInstance& r) { check_instance(from_raw(r), t); });

    std::mt19937_64 rng(20260101);
    int randoms = 0;
    while (randoms < 600) {
        int n_new = int(rng() % 3);
        int n_old = 1 + int(rng() % (8 - n_new));
        Instance inst = test::random_instance(rng, n_old, 3, n_new, int(rng() % 9), 1 + int(rng() % 4));
        check_instance(inst, t);
        ++randoms;
    }

    std::ostringstream d;
    d << corpus << " corpus + " << randoms << " random instances, " << t.positive << " extendable; runs:";
    for (auto [a, c] : t.runs) d << ' ' << algo_name(a) << '=' << c;
    d << "; " << t.discrepancies << " discrepancies, " << t.invalid << " invalid layouts";
    report(1, t.discrepancies == 0 && t.invalid == 0 && t.runs.size() == 5, "oracle equivalence", d.str(), t0);
    t.notes.dump();

    std::ostringstream e;
    e << "xp within bound on " << t.xp_checked - t.xp_over << "/" << t.xp_checked << ", dp-fpt within bound on "
      << t.fpt_checked - t.fpt_over << "/" << t.fpt_checked;
    report(8, t.xp_over == 0 && t.fpt_over == 0 && t.xp_checked > 0 && t.fpt_checked > 0, "complexity counters", e.str(),
           t0);
    t.bound_notes.dump();
}

// ---- criterion 2 ----

void criterion_2() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(777);
    int instances = 0, bad = 0, dropped = 0, positive = 0;
    Notes notes;
    while (instances < 300) {
        int n_old = 2 + int(rng() % 6);
        int ell = 1 + int(rng() % 3);
        Instance inst = test::random_instance(rng, n_old, ell, 0, int(rng() % 8), 1 + int(rng() % 5));
        auto [reduced, removed] = reduce_safe_edges(inst);
        bool before = solve_exhaustive(inst, uncapped()).has_value();
        bool after = solve_exhaustive(reduced, uncapped()).has_value();
        dropped += int(removed.size());
        positive += before;
        if (before != after) {
            ++bad;
            notes.add(emit_instance(inst));
        }
        ++instances;
    }
    report(2, bad == 0, "safe-edge reduction",
           std::to_string(instances) + " instances, " + std::to_string(positive) + " extendable, " +
               std::to_string(dropped) + " edges dropped, " + std::to_string(bad) + " discrepancies",
           t0);
    notes.dump();
}

// ---- criteria 3 and 4 ----

void criterion_3() {
    auto t0 = Clock::now();
    int checked = 0, bad = 0;
    for (int F = 1; F <= 4; ++F)
        for (int ell = 2; ell <= 8; ++ell) {
            GadgetFragment multi = build_fixation_gadget(F, ell, false);
            GadgetFragment simple = build_fixation_gadget(F, ell, true);
            std::size_t edges = std::size_t((ell + 4) * F + ell + 2);
            bad += multi.edge_count() != edges;
            bad += multi.vertex_count() != std::size_t(4 * F + 3);
            bad += simple.edge_count() != edges;
            bad += simple.vertex_count() != std::size_t(2 * F * ell + 2 * ell - 1);
            auto [inst, cert] = gadget_instance(F, ell);
            bad += inst.G.vertex_count() != simple.vertex_count();
            bad += inst.G.edge_count() != edges;
            ++checked;
        }
    report(3, bad == 0, "gadget constants",
           std::to_string(checked) + " (F, ell) pairs, " + std::to_string(bad) + " mismatches", t0);
}

void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream d;
    const char* sep = "";
    for (int F = 1; F <= 2; ++F)
        for (int ell = 2; ell <= 3; ++ell) {
            auto [inst, cert] = gadget_instance(F, ell);
            LemmaReport rep = check_reduction_lemmas(inst, cert, uncapped());
            ok = ok && !rep.vacuous() && rep.all_pass() && rep.clauses.size() == std::size_t(2 * F);
            d << sep << "F=" << F << " ell=" << ell << ": " << rep.solutions << " solutions, "
              << rep.violations.size() << " violations";
            sep = "; ";
        }
    report(4, ok, "gadget behavior", d.str(), t0);
}

// ---- criterion 5 ----

bool satisfiable(const CnfFormula& phi) {
    for (int m = 0; m < (1 << phi.num_vars); ++m) {
        std::vector<bool> a(phi.num_vars);
        for (int i = 0; i < phi.num_vars; ++i) a[i] = (m >> i) & 1;
        if (phi.satisfied_by(a)) return true;
    }
    return false;
}

std::array<Literal, 3> clause_of(int signs) {
    return {Literal{1, bool(signs & 1)}, Literal{2, bool(signs & 2)}, Literal{3, bool(signs & 4)}};
}

void criterion_5() {
    auto t0 = Clock::now();
    std::vector<CnfFormula> formulas;
    // Three distinct variables per clause force N = 3; clauses are sign patterns,
    // and a formula is a multiset of them.
    for (int a = 0; a < 8; ++a) {
        CnfFormula phi;
        phi.num_vars = 3;
        phi.clauses = {clause_of(a)};
        formulas.push_back(phi);
        for (int b = a; b < 8; ++b) {
            CnfFormula two = phi;
            two.clauses.push_back(clause_of(b));
            formulas.push_back(two);
        }
    }
    std::size_t exhaustive = formulas.size();
    std::mt19937_64 rng(4242);
    for (int r = 0; r < 60; ++r) {
        CnfFormula phi;
        phi.num_vars = 3;
        int M = 1 + int(rng() % 3);
        for (int c = 0; c < M; ++c) {
            std::array<int, 3> vars = {1, 2, 3};
            std::shuffle(vars.begin(), vars.end(), rng);
            phi.clauses.push_back({Literal{vars[0], bool(rng() & 1)}, Literal{vars[1], bool(rng() & 1)},
                                   Literal{vars[2], bool(rng() & 1)}});
        }
        formulas.push_back(phi);
    }
    // an unsatisfiable control
    CnfFormula all;
    all.num_vars = 3;
    for (int m = 0; m < 8; ++m) all.clauses.push_back(clause_of(m));
    formulas.push_back(all);

    int bad = 0, sat = 0;
    Notes notes;
    for (const CnfFormula& phi : formulas) {
        auto [inst, cert] = reduce_3sat(phi);
        if (inst.ell != 2 * phi.num_vars + 1 || inst.n_add() != 2) {
            ++bad;
            notes.add("shape mismatch: " + emit_dimacs(phi));
        }
        bool want = satisfiable(phi);
        sat += want;
        auto L = solve_xp(inst);
        if (L.has_value() != want) {
            ++bad;
            notes.add("verdict mismatch: " + emit_dimacs(phi));
        } else if (L) {
            if (verify_solution(inst, *L) != "" || !phi.satisfied_by(extract_certificate(inst, *L, cert).assignment)) {
                ++bad;
                notes.add("bad extraction: " + emit_dimacs(phi));
            }
        }
    }
    report(5, bad == 0, "3-SAT round trip",
           std::to_string(exhaustive) + " exhaustive + 60 random formulas + 1 unsatisfiable control, " + std::to_string(sat) + " satisfiable, " +
               std::to_string(bad) + " discrepancies",
           t0);
    notes.dump();
}

// ---- criterion 6 ----

void criterion_6() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(999);
    int instances = 0, bad = 0, positive = 0;
    Notes notes;
    while (instances < 40) {
        int k = 2 + int(rng() % 2);
        MccInput inp;
        for (int a = 0; a < k; ++a) {
            int size = 1 + int(rng() % 3);
            std::vector<std::string> part;
            for (int i = 0; i < size; ++i) part.push_back("v" + std::to_string(a + 1) + "_" + std::to_string(i + 1));
            inp.parts.push_back(part);
        }
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (const auto& x : inp.parts[a])
                    for (const auto& y : inp.parts[b])
                        if (rng() % 100 < 35) inp.edges.emplace_back(x, y);
        if (inp.edges.empty() || inp.edges.size() > 8) continue;
        ++instances;
        auto [inst, cert] = reduce_mcc(inp);
        if (inst.kappa() != 3 * k + k * (k - 1) / 2 || inst.ell != int(inp.edges.size()) + 1 ||
            page_width(inst.layoutH) > 3) {
            ++bad;
            notes.add("shape mismatch: " + emit_mcc(inp));
        }
        bool want = find_colorful_clique(inp).has_value();
        positive += want;
        auto L = solve_xp(inst);
        if (L.has_value() != want) {
            ++bad;
            notes.add("verdict mismatch: " + emit_mcc(inp));
        } else if (L) {
            if (verify_solution(inst, *L) != "" || !is_colorful_clique(inp, extract_certificate(inst, *L, cert).clique)) {
                ++bad;
                notes.add("bad extraction: " + emit_mcc(inp));
            }
        }
    }
    report(6, bad == 0 && positive > 0 && positive < instances, "colorful clique round trip",
           std::to_string(instances) + " instances, " + std::to_string(positive) + " with a colorful clique, " +
               std::to_string(bad) + " discrepancies",
           t0);
    notes.dump();
}

// ---- criterion 7 ----

void criterion_7() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(31337);
    int instances = 0, branches = 0, positive = 0, bad = 0;
    Notes notes;
    while (instances < 150) {
        int n_new = 1 + int(rng() % 2);
        int n_old = 1 + int(rng() % (6 - n_new));
        Instance inst =
            test::random_instance(rng, n_old, 1 + int(rng() % 2), n_new, int(rng() % 5), 1 + int(rng() % 3));
        test::Brute brute(inst);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> all;
        brute.enumerate([&](const std::vector<int>& pos, const std::vector<int>& pages) {
            all.emplace_back(pos, pages);
            return true;
        });
        auto si = super_intervals(inst);
        FaceLookup faces(inst);
        int here = 0;
        for_each_consistent_branch(inst, [&](const BranchAssignment& b) {
            ++here;
            DpOutcome o = dp_solve_branch(inst, faces, b);
            bool want = false;
            for (const auto& [pos, pages] : all)
                if (test::complies(inst, si, b, pos, pages)) {
                    want = true;
                    break;
                }
            bool ok = o.table.at(1, 0, 0) && !o.table.at(1, 0, 1) && o.layout.has_value() == want;
            if (ok && o.layout) {
                auto [pos, pages] = test::encode(inst, *o.layout);
                ok = verify_solution(inst, *o.layout) == "" && test::complies(inst, si, b, pos, pages);
            }
            positive += want;
            if (!ok) {
                ++bad;
                notes.add(emit_instance(inst));
            }
            return true;
        });
        if (here == 0) continue;
        branches += here;
        ++instances;
    }
    report(7, bad == 0, "dp per branch",
           std::to_string(instances) + " instances, " + std::to_string(branches) + " branches (" +
               std::to_string(positive) + " extendable), " + std::to_string(bad) + " discrepancies",
           t0);
    notes.dump();
}

// ---- criterion 9 ----

void criterion_9() {
    auto t0 = Clock::now();
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("sle_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    int files = 0, roundtrip_bad = 0, outputs = 0, rejected_outputs = 0;
    std::vector<std::pair<Instance, Layout>> positives;
    for (int seed = 0; files < 100; ++seed) {
        GenParams gp;
        gp.nH = 3 + seed % 5;
        gp.mH = seed % 7;
        gp.ell = 1 + seed % 3;
        gp.n_add = seed % 3;
        gp.m_add = 1 + seed % 4;
        gp.seed = std::uint64_t(seed);
        std::optional<Instance> inst;
        try {
            inst = gen_random(gp);
        } catch (const InputError&) {
            continue;
        }
        std::string text = emit_instance(*inst);
        fs::path p = dir / ("instance_" + std::to_string(files) + ".json");
        write_file(p.string(), text);
        Instance back = parse_instance(read_file(p.string()));
        roundtrip_bad += emit_instance(back) != text;
        ++files;

        for (Algo a : concrete_algos()) {
            if (!applicable(back, a)) continue;
            auto L = run(a, back, nullptr);
            if (!L) continue;
            std::string sol = emit_solution(back, *L);
            fs::path sp = dir / ("solution_" + std::to_string(files) + "_" + algo_name(a) + ".json");
            write_file(sp.string(), sol);
            std::string sol_text = read_file(sp.string());
            Layout parsed = parse_solution(back, sol_text);
            ++outputs;
            roundtrip_bad += emit_solution(back, parsed) != sol_text;
            if (verify_solution(back, parsed) != "") ++rejected_outputs;
            positives.emplace_back(back, parsed);
        }
    }

    std::mt19937_64 rng(55);
    int mutations = 0, caught = 0;
    std::map<std::string, int> reasons;
    for (std::size_t i = 0; mutations < 60 && i < 10 * positives.size(); ++i) {
        const auto& [inst, L] = positives[rng() % positives.size()];
        Layout m = L;
        bool flip = rng() % 2 == 0;
        if (flip) {
            auto olds = inst.old_edges();
            if (olds.empty() || inst.ell < 2) continue;
            const auto& [e, p] = olds[rng() % olds.size()];
            m.pages[e] = p % inst.ell + 1;
        } else {
            if (inst.n_old() < 2) continue;
            int a = int(rng() % inst.n_old()), b = int(rng() % inst.n_old());
            if (a == b) continue;
            std::vector<VertexId> seq = L.spine.sequence();
            std::swap(*std::find(seq.begin(), seq.end(), VertexId{a}), *std::find(seq.begin(), seq.end(), VertexId{b}));
            m.spine = SpineOrder(seq);
        }
        Layout parsed = parse_solution(inst, emit_solution(inst, m));
        std::string why = verify_solution(inst, parsed);
        ++mutations;
        if (!why.empty()) {
            ++caught;
            std::string kind = "other";
            for (const char* k : {"cross", "moved", "swapped"})
                if (why.find(k) != std::string::npos) kind = k;
            ++reasons[kind];
        }
    }
    fs::remove_all(dir);

    std::ostringstream d;
    d << files << " instance files and " << outputs << " solution files, " << roundtrip_bad
      << " round-trip differences; " << outputs - rejected_outputs << "/" << outputs << " solver outputs accepted; "
      << caught << "/" << mutations << " mutations rejected";
    for (const auto& [r, c] : reasons) d << " [" << r << " x" << c << "]";
    report(9, files == 100 && roundtrip_bad == 0 && rejected_outputs == 0 && mutations >= 50 && caught == mutations,
           "I/O", d.str(), t0);
}

}  // namespace

int main() {
    criterion_3();
    criterion_4();
    criterion_2();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_9();
    criteria_1_and_8();
    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
