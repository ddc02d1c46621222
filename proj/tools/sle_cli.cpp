#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sle/errors.hpp"
#include "sle/geometry.hpp"
#include "sle/io.hpp"
#include "sle/reductions.hpp"
#include "sle/toolkit.hpp"

namespace fs = std::filesystem;
using namespace sle;

namespace {

enum Exit { Extendable = 0, NotExtendable = 1, BadInput = 2, OutOfBudget = 3 };

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

SolveOptions options_for(double budget, bool parallel) {
    SolveOptions opts;
    opts.exec = parallel ? Execution::Parallel : Execution::Serial;
    if (budget > 0)
        opts.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(budget));
    return opts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous linear layout extension toolkit"};
    app.require_subcommand(1);

    std::string instance_path, solution_path, out_path, algo = "auto", cert_path, input_path, corpus;
    double budget = 0;
    bool parallel = false, stacked = false, branch_stats = false;
    std::uint64_t seed = 1;

    auto* solve_cmd = app.add_subcommand("solve", "decide extendability and write a solution");
    solve_cmd->add_option("instance", instance_path)->required();
    solve_cmd->add_option("-a,--algo", algo, "auto|oracle|edges-fpt|one-vertex|xp|dp-fpt|greedy-is");
    solve_cmd->add_option("-o,--out", out_path, "solution file (default stdout)");
    solve_cmd->add_option("-t,--time", budget, "time budget in seconds");
    solve_cmd->add_option("--seed", seed, "accepted for reproducible runs; the solvers are deterministic");
    solve_cmd->add_flag("-p,--parallel", parallel, "use the OpenMP kernels");
    solve_cmd->add_flag("--emit-branch-stats", branch_stats, "print branch counts and the theoretical bound");

    auto* verify_cmd = app.add_subcommand("verify", "check a solution against an instance");
    verify_cmd->add_option("instance", instance_path)->required();
    verify_cmd->add_option("solution", solution_path)->required();

    GenParams gp;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--nH", gp.nH);
    gen_cmd->add_option("--mH", gp.mH);
    gen_cmd->add_option("--ell", gp.ell);
    gen_cmd->add_option("--n-add", gp.n_add);
    gen_cmd->add_option("--m-add", gp.m_add);
    gen_cmd->add_option("--seed", gp.seed);
    gen_cmd->add_option("-o,--out", out_path);

    auto* reduce_cmd = app.add_subcommand("reduce", "build a hardness reduction instance");
    reduce_cmd->require_subcommand(1);
    auto* sat_cmd = reduce_cmd->add_subcommand("3sat", "from a DIMACS 3-CNF formula");
    sat_cmd->add_option("input", input_path)->required();
    sat_cmd->add_option("-o,--out", out_path, "output prefix")->required();
    auto* mcc_cmd = reduce_cmd->add_subcommand("mcc", "from a colored graph");
    mcc_cmd->add_option("input", input_path)->required();
    mcc_cmd->add_option("-o,--out", out_path, "output prefix")->required();

    auto* render_cmd = app.add_subcommand("render", "draw an arc diagram as SVG");
    render_cmd->add_option("instance", instance_path)->required();
    render_cmd->add_option("solution", solution_path, "optional solution to draw instead of H");
    render_cmd->add_option("-o,--out", out_path);
    render_cmd->add_flag("--stacked", stacked, "one band per page");

    auto* bench_cmd = app.add_subcommand("bench", "run algorithms over a corpus directory");
    std::vector<std::string> algos;
    bench_cmd->add_option("corpus", corpus)->required();
    bench_cmd->add_option("-a,--algos", algos, "algorithms (default all)");
    bench_cmd->add_option("-t,--time", budget, "per-run budget in seconds")->default_val(10.0);
    bench_cmd->add_option("-o,--out", out_path);
    bench_cmd->add_flag("-p,--parallel", parallel);

    auto* stats_cmd = app.add_subcommand("stats", "print instance parameters");
    stats_cmd->add_option("instance", instance_path)->required();

    auto* extract_cmd = app.add_subcommand("extract", "read a reduction certificate off a solution");
    extract_cmd->add_option("instance", instance_path)->required();
    extract_cmd->add_option("certificate", cert_path)->required();
    extract_cmd->add_option("solution", solution_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : BadInput;
    }

    try {
        if (*solve_cmd) {
            Instance inst = parse_instance(read_file(instance_path));
            SolveResult r = solve(inst, parse_algo(algo), options_for(budget, parallel));
            if (branch_stats)
                std::cerr << "algo " << algo_name(r.used) << " branches " << r.stats.branches << " bound "
                          << r.stats.bound << " dp_cells " << r.stats.dp_cells << "\n";
            if (!r.layout) {
                std::cerr << "not extendable\n";
                return NotExtendable;
            }
            std::string why = verify_solution(inst, *r.layout);
            if (!why.empty()) {
                std::cerr << "internal error: " << why << "\n";
                return OutOfBudget;
            }
            emit(out_path, emit_solution(inst, *r.layout));
            return Extendable;
        }
        if (*verify_cmd) {
            Instance inst = parse_instance(read_file(instance_path));
            Layout L = parse_solution(inst, read_file(solution_path));
            std::string why = verify_solution(inst, L);
            if (!why.empty()) {
                std::cout << "rejected: " << why << "\n";
                return NotExtendable;
            }
            std::cout << "ok\n";
            return Extendable;
        }
        if (*gen_cmd) {
            emit(out_path, emit_instance(gen_random(gp)));
            return 0;
        }
        if (*sat_cmd || *mcc_cmd) {
            auto [inst, cert] = *sat_cmd ? reduce_3sat(parse_dimacs(read_file(input_path)))
                                         : reduce_mcc(parse_mcc(read_file(input_path)));
            write_file(out_path + ".instance.json", emit_instance(inst));
            write_file(out_path + ".cert.json", emit_certificate(cert));
            std::cerr << "wrote " << out_path << ".instance.json and " << out_path << ".cert.json\n";
            return 0;
        }
        if (*render_cmd) {
            Instance inst = parse_instance(read_file(instance_path));
            RenderOptions ro;
            ro.stacked = stacked;
            Layout L = inst.layoutH;
            if (!solution_path.empty()) {
                L = parse_solution(inst, read_file(solution_path));
                std::string why = verify_solution(inst, L);
                if (!why.empty()) throw InputError("solution is not valid: " + why);
                ro.highlight_vertices = inst.new_vertices();
                ro.highlight_edges = inst.new_edges();
            }
            emit(out_path, render_svg(inst, L, ro));
            return 0;
        }
        if (*bench_cmd) {
            std::vector<std::pair<std::string, Instance>> items;
            if (!fs::is_directory(corpus)) throw InputError("'" + corpus + "' is not a directory");
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(corpus))
                if (entry.path().extension() == ".json") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) items.emplace_back(f.filename().string(), parse_instance(read_file(f.string())));
            std::vector<Algo> list;
            for (const auto& a : algos) list.push_back(parse_algo(a));
            if (list.empty()) list = concrete_algos();
            BenchReport rep = bench(items, list, budget, parallel ? Execution::Parallel : Execution::Serial);
            emit(out_path, bench_json(rep));
            for (const auto& d : rep.discrepancies) std::cerr << "discrepancy on " << d << "\n";
            return rep.discrepancies.empty() ? 0 : 1;
        }
        if (*stats_cmd) {
            Instance inst = parse_instance(read_file(instance_path));
            InstanceStats s = instance_stats(inst);
            std::cout << "n_add " << s.n_add << "\nm_add " << s.m_add << "\nkappa " << s.kappa << "\nell " << s.ell
                      << "\nomega " << s.omega << "\nsuper_intervals " << s.super_intervals << "\n";
            return 0;
        }
        if (*extract_cmd) {
            Instance inst = parse_instance(read_file(instance_path));
            ReductionCertificate cert = parse_certificate(read_file(cert_path));
            Layout L = parse_solution(inst, read_file(solution_path));
            std::string why = verify_solution(inst, L);
            if (!why.empty()) throw InputError("solution is not valid: " + why);
            Extracted x = extract_certificate(inst, L, cert);
            if (cert.kind == ReductionCertificate::Kind::Sat3)
                for (std::size_t i = 0; i < x.assignment.size(); ++i)
                    std::cout << "x" << i + 1 << " " << (x.assignment[i] ? 1 : 0) << "\n";
            for (const auto& v : x.clique) std::cout << v << "\n";
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const CorruptCertificate& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
        return BadInput;
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return OutOfBudget;
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return OutOfBudget;
    }
    return 0;
}
