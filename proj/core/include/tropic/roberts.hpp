#ifndef TROPIC_ROBERTS_HPP
#define TROPIC_ROBERTS_HPP

#include "tropic/feasibility.hpp"
#include "tropic/linear_system.hpp"
#include "tropic/mechanism.hpp"
#include "tropic/polynomial.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropic {

/// Positive weights plus the aggregate payment vector making an outcome
/// function an affine maximizer. The constant shift gamma cancels from the
/// defining inequalities and is never stored.
struct AMWitness {
  std::vector<Rat> alphas; // one per player, normalized to alpha_j >= 1
  std::vector<Rat> z;      // length m
};

/// The affine-maximizer feasibility system in variables alpha_1..alpha_n and
/// z_1..z_m for fixed type matrices:
///   sum_j alpha_j * (T^j[i_j, g(i)] - T^j[i_j, k]) - z_{g(i)} + z_k >= 0
/// for every profile i and k != g(i), plus alpha_j >= 1. Requiring
/// alpha_j >= 1 instead of alpha_j > 0 loses nothing: the system is
/// homogeneous in (alpha, z), so any positive solution scales into it.
/// Constraint labels: "am[i1,..,in;k]" and "alpha[j]" (all 1-based).
LinearSystem am_system(const OutcomeFunction& g, std::span<const TypeSpace> spaces);

/// Affine-maximizer membership; the returned witness always re-checks against
/// am_system via check_point.
std::optional<AMWitness> am_check(const OutcomeFunction& g, std::span<const TypeSpace> spaces);

/// Builds the second-player space that turns a two-player IC outcome function
/// into an affine maximizer with weights (1,1) and z = 0: row j is the negated
/// payment vector of column j of g on t1. Throws NotICError if some column of
/// g is not IC on t1.
TypeSpace perturb_second_player(const OutcomeFunction& g, const TypeSpace& t1);

/// Variable name used for entry (row, col) of a symbolic matrix (0-based
/// arguments, 1-based name): matrix_var("S", 0, 1) == "S[1,2]".
std::string matrix_var(const std::string& prefix, int row, int col);

/// Declares the r x m symbolic matrix variables prefix[i,k].
void add_matrix_variables(LinearSystem& sys, const std::string& prefix, int rows, int cols);

/// Adds, for every square minor of t, the constraints forcing a symbolic
/// matrix S to reproduce t's optimal bijection sets: equalities between tied
/// optimal diagonals and strict inequalities against every non-optimal one.
/// A rational matrix satisfies these constraints iff its matching multifield
/// (hence its IC set) equals that of t. Labels:
///   prefix:{rows}x{cols}:eq:<images>   prefix:{rows}x{cols}:gt:<images>
void add_ic_equality(LinearSystem& sys, const RatMatrix& t, const std::string& prefix,
                     int minor_cap = kPermutationCap);

/// Fresh system containing only the multifield-equality constraints.
LinearSystem encode_ic_equality(const RatMatrix& t, const std::string& prefix,
                                int minor_cap = kPermutationCap);

/// Verification record for one counterexample instance.
struct CounterexampleReport {
  std::string id;
  std::string claim;
  LinearSystem encoding; // the joint system (lambda = 1 for parametric families)

  bool preconditions_ok = false;
  std::vector<std::string> notes;

  bool infeasible = false;
  std::optional<InfeasCert> certificate; // solver's certificate for `encoding`
  bool certificate_valid = false;

  /// Hand-pinned multiplier combination, revalidated independently.
  std::optional<InfeasCert> pinned_certificate;
  bool pinned_certificate_valid = false;

  /// For parametric families: per-lambda verdicts (true = infeasible).
  std::vector<std::pair<Rat, bool>> grid;

  /// Outcome of the symbolic multiplier check, when the instance has one.
  std::optional<bool> symbolic_confirmed;

  bool ok() const;
};

// ---- built-in instances ----------------------------------------------------

struct WorkedExample {
  TypeSpace t1, t2; // 3 types x 3 outcomes each
  TypeSpace s2;     // hand-adjusted second space making g an affine maximizer
  OutcomeFunction g;
};
WorkedExample worked_example();

struct ThreePlayerInstance {
  TypeSpace t1, t2, t3; // 2 types x 6 outcomes
  OutcomeFunction g;    // 2x2x2 tensor
};
ThreePlayerInstance counterexample_i_instance();

struct TwoPlayerInstance {
  TypeSpace t1, t2; // 2 types x 4 outcomes
  OutcomeFunction g;
  ICSet expected_ic1, expected_ic2;
};
TwoPlayerInstance counterexample_ii_instance();

struct PairInstance {
  TypeSpace t1, t2; // 2 types x 3 outcomes
  OutcomeFunction g1, g2;
  ICSet expected_ic1, expected_ic2;
};
PairInstance counterexample_iii_instance();

struct SymmetricInstance {
  TypeSpace t1; // 3 types x 3 outcomes
  OutcomeFunction g; // symmetric 3x3
  ICSet expected_ic;
  std::vector<int> interior_cell; // the strict covector pinned at Y
};
SymmetricInstance symmetric_instance();

// ---- joint systems and verifications ---------------------------------------

/// Three-player joint system in U1, U2, U3 (each 2x6) and z: the aggregate-
/// maximizer inequalities with U^j standing for alpha_j * S^j, plus (when
/// requested) the multifield constraints pinning IC(U1) = IC(T1). The
/// substitution is harmless because multifield constraints are invariant
/// under positive scaling.
LinearSystem joint_system_i(const OutcomeFunction& g, bool with_multifield);

/// Two-player joint system in U1, U2 and z, with multifield constraints on
/// either side switchable for ablations.
LinearSystem joint_system_ii(bool multifield_u1, bool multifield_u2);

/// Two outcome functions sharing one pair (S1, S2): g1 under weights (1,1)
/// with payments Y, g2 under weights (1,lambda) with payments Z, plus the
/// multifield constraints on S1. lambda is the one weight ratio left free
/// after normalizing by positive scaling.
LinearSystem joint_system_iii(const Rat& lambda, bool with_multifield);

/// Symmetric joint system in one matrix S: aggregate inequalities for
/// AM(S, S) under weights (1,lambda), strict sector inequalities placing Y in
/// the interior of the pinned covector cell, and the multifield constraints
/// on S.
LinearSystem joint_system_symmetric(const Rat& lambda, bool with_multifield);

CounterexampleReport verify_counterexample_i();
CounterexampleReport verify_counterexample_ii();
CounterexampleReport verify_counterexample_iii(std::span<const Rat> lambda_grid);
CounterexampleReport verify_symmetric(std::span<const Rat> lambda_grid);

/// Default sweep for the weight ratio: k/10 for k = 1..100 followed by 10/k
/// for k = 1..10 (110 points).
std::vector<Rat> default_lambda_grid();

// ---- symbolic multiplier check ----------------------------------------------

/// The two sign cases of the parametric impossibility argument for the pair
/// instance, split on a1*b2 >= a2*b1 versus a1*b2 < a2*b1.
enum class FarkasCase { WeightRatioGe, WeightRatioLt };

/// The four multiplier polynomials of the pinned combination for a case.
std::array<ParamPoly, 4> farkas_multipliers(FarkasCase which);

/// Verifies that the given multipliers combine the case's four inequalities
/// into an identically vanishing left-hand side with valid sign conditions,
/// treating the four weights as formal positive parameters.
bool farkas_combination_holds(FarkasCase which, const std::array<ParamPoly, 4>& multipliers);

/// farkas_combination_holds with the pinned multipliers.
bool verify_farkas_combination(FarkasCase which);

} // namespace tropic

#endif
