#pragma once

#include <functional>
#include <optional>

#include "sle/instance.hpp"
#include "sle/options.hpp"

namespace sle {

// Number of leaves the exhaustive search may visit: prod(|V(H)|+i) * ell^m_add.
double oracle_search_space(const Instance& inst);

// Exhaustive ground truth. Throws CapacityError above opts.oracle_cap.
std::optional<Layout> solve_exhaustive(const Instance& inst, const SolveOptions& opts = {});

// Streams every valid extension exactly once. The callback returns false to stop.
// Returns the number of layouts emitted.
std::uint64_t enumerate_solutions(const Instance& inst, const std::function<bool(const Layout&)>& sink,
                                  const SolveOptions& opts = {});

}  // namespace sle
