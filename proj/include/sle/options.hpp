#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace sle {

enum class Execution { Serial, Parallel };

// Default oracle cap is 1e8 enumerated leaves; SLE_ORACLE_CAP overrides it.
std::uint64_t default_oracle_cap();

struct SolveOptions {
    Execution exec = Execution::Serial;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t oracle_cap = default_oracle_cap();

    bool expired() const { return deadline && std::chrono::steady_clock::now() > *deadline; }
    void check_deadline() const;  // throws TimeoutError
};

struct SolveStats {
    std::uint64_t branches = 0;  // outer branches delegated to the inner solver
    std::uint64_t dp_cells = 0;
    double bound = 0;            // the proven branch bound, when one applies
};

}  // namespace sle
