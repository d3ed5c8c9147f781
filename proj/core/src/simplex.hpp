#ifndef TROPIC_SRC_SIMPLEX_HPP
#define TROPIC_SRC_SIMPLEX_HPP

#include "tropic/linear_system.hpp"
#include "tropic/rat.hpp"

#include <map>
#include <vector>

namespace tropic::detail {

// Outcome of the gap LP  max t  over the mixed system, where every strict
// inequality a.x > b is relaxed to a.x >= b + t and t is capped by t <= 1.
// The system is strictly feasible iff the optimum satisfies t > 0.
struct SimplexOutcome {
  bool feasible = false;
  std::vector<Rat> x; // one value per declared variable
  Rat gap = 0;        // optimal t
  // On infeasibility: multipliers per original constraint index, forming a
  // Motzkin-style contradiction (0 >= positive, or 0 > 0 through a strict row).
  std::map<int, Rat> multipliers;
};

SimplexOutcome solve_gap_lp(const LinearSystem& sys);

} // namespace tropic::detail

#endif
