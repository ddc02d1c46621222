#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sle/instance.hpp"
#include "sle/options.hpp"

namespace sle {

enum class Algo { Auto, Oracle, EdgesFpt, OneVertex, Xp, DpFpt, GreedyIs };

std::string algo_name(Algo a);
Algo parse_algo(const std::string& s);  // throws InputError
const std::vector<Algo>& concrete_algos();

bool applicable(const Instance& inst, Algo a);
// the most specific applicable algorithm
Algo pick_auto(const Instance& inst);

struct SolveResult {
    Algo used = Algo::Oracle;
    std::optional<Layout> layout;
    SolveStats stats;
};

// Throws PreconditionError when the algorithm does not apply, CapacityError and
// TimeoutError as the solvers do. A returned layout has passed verify_solution.
SolveResult solve(const Instance& inst, Algo a, const SolveOptions& opts = {});

struct GenParams {
    int nH = 5;
    int mH = 4;
    int ell = 2;
    int n_add = 1;
    int m_add = 2;
    std::uint64_t seed = 1;
};

// Throws InputError when the parameters cannot be met.
Instance gen_random(const GenParams& p);

struct RenderOptions {
    bool stacked = false;  // one band per page instead of alternating half-planes
    std::vector<VertexId> highlight_vertices;
    std::vector<Edge> highlight_edges;
};

std::string render_svg(const Instance& inst, const Layout& layout, const RenderOptions& opts = {});
std::string render_svg(const Instance& inst);  // layoutH with names, new elements absent

struct InstanceStats {
    int n_old = 0, m_old = 0, n_add = 0, m_add = 0, kappa = 0, ell = 0, omega = 0, super_intervals = 0;
};
InstanceStats instance_stats(const Instance& inst);

struct BenchRow {
    std::string instance;
    std::string algo;
    std::string verdict;  // "yes", "no", "timeout", "capacity", "n/a", "invalid"
    double seconds = 0;
    std::uint64_t branches = 0;
    std::uint64_t dp_cells = 0;
    double bound = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<std::string> discrepancies;  // instance names with disagreeing verdicts
};

BenchReport bench(const std::vector<std::pair<std::string, Instance>>& corpus, const std::vector<Algo>& algos,
                  double budget_seconds, Execution exec = Execution::Serial);
std::string bench_json(const BenchReport& r);

}  // namespace sle
