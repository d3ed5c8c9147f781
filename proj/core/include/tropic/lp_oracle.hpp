#ifndef TROPIC_LP_ORACLE_HPP
#define TROPIC_LP_ORACLE_HPP

#include "tropic/linear_system.hpp"

namespace tropic {

/// Reference decision procedure for small systems, independent of the simplex
/// path: boxes the variables, enumerates every basic point of the gap LP by
/// solving all square subsystems exactly, and reads the verdict off the best
/// attainable gap. Exponential in the variable count; intended for
/// cross-checking on systems with a handful of variables.
/// `box` must be a bound beyond every relevant basic solution coordinate.
bool oracle_feasible(const LinearSystem& sys, const Rat& box = Rat(1'000'000));

} // namespace tropic

#endif
