#ifndef TROPIC_FEASIBILITY_HPP
#define TROPIC_FEASIBILITY_HPP

#include "tropic/linear_system.hpp"
#include "tropic/matrix.hpp"
#include "tropic/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tropic {

/// A satisfying assignment, one value per declared variable.
struct Witness {
  std::map<std::string, Rat> values;
};

/// Nonnegative multipliers (sign-free on equality rows) combining the
/// constraints into 0 >= positive or 0 > 0. Only nonzero entries are stored,
/// keyed by constraint index.
struct InfeasCert {
  std::map<int, Rat> multipliers;
};

using FeasibilityResult = std::variant<Witness, InfeasCert>;

bool is_feasible(const FeasibilityResult& result);
const Witness* get_witness(const FeasibilityResult& result);
const InfeasCert* get_certificate(const FeasibilityResult& result);

/// Decides a mixed weak/strict/equality system exactly. Returns a witness
/// (strict constraints satisfied with positive slack) or a certificate that
/// check_certificate accepts. Total and deterministic.
FeasibilityResult solve(const LinearSystem& sys);

/// True iff the point satisfies every constraint, strict ones strictly.
/// Throws UnassignedVariableError if some declared variable is missing.
bool check_point(const LinearSystem& sys, const std::map<std::string, Rat>& point);

/// Validates an infeasibility certificate: sign conditions, the weighted sum
/// of left-hand sides vanishes, and the weighted right-hand sides give a
/// contradiction (0 >= positive, or 0 > 0 with a strict row weighted > 0).
/// Throws IndexOutOfRangeError on bad constraint indices.
bool check_certificate(const LinearSystem& sys, const InfeasCert& cert);

/// Minimal solution of the difference system
///     T[i,g(i)] - x_{g(i)} >= T[i,k] - x_k   for all i, k,
/// where g holds 1-based column indices. Anchored so the smallest outcome in
/// range(g) gets x = 0; every other coordinate takes its least feasible value
/// (longest path in the constraint graph). Returns nothing exactly when the
/// graph has a positive cycle.
std::optional<std::vector<Rat>> solve_difference(const std::vector<int>& g, const RatMatrix& t);

} // namespace tropic

#endif
