#include <chrono>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "sle/io.hpp"
#include "sle/toolkit.hpp"

using namespace sle;

namespace {

double run(const Instance& inst, Algo a, Execution exec, std::string& verdict, std::string& bytes) {
    SolveOptions opts;
    opts.exec = exec;
    auto t0 = std::chrono::steady_clock::now();
    SolveResult r = solve(inst, a, opts);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verdict = r.layout ? "yes" : "no";
    bytes = r.layout ? emit_solution(inst, *r.layout) : "";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    // usage: sle_bench [count nH mH ell n_add m_add]
    auto arg = [&](int i, int dflt) { return argc > i ? std::atoi(argv[i]) : dflt; };
    int count = arg(1, 8);
    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%-6s %-8s %-5s %10s %10s %8s %s\n", "seed", "algo", "ans", "serial_s", "parallel_s", "speedup", "same");
    int mismatches = 0;
    for (int i = 0; i < count; ++i) {
        GenParams p;
        p.nH = arg(2, 20);
        p.mH = arg(3, 24);
        p.ell = arg(4, 3);
        p.n_add = arg(5, 4);
        p.m_add = arg(6, 6);
        p.seed = 100 + i;
        Instance inst = gen_random(p);
        for (Algo a : {Algo::Xp, Algo::DpFpt}) {
            std::string v1, v2, b1, b2;
            double ts = run(inst, a, Execution::Serial, v1, b1);
            double tp = run(inst, a, Execution::Parallel, v2, b2);
            bool same = v1 == v2 && b1 == b2;
            mismatches += !same;
            std::printf("%-6llu %-8s %-5s %10.4f %10.4f %8.2f %s\n", (unsigned long long)p.seed, algo_name(a).c_str(),
                        v1.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
        }
    }
    return mismatches == 0 ? 0 : 1;
}
