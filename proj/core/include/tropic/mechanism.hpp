#ifndef TROPIC_MECHANISM_HPP
#define TROPIC_MECHANISM_HPP

#include "tropic/matrix.hpp"
#include "tropic/rat.hpp"
#include "tropic/tropical.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tropic {

inline constexpr long long kOutcomeEnumerationCap = 1'000'000;

/// A finite single-player type space: row i of the matrix is the valuation
/// vector of type i over the m outcomes.
struct TypeSpace {
  RatMatrix matrix;
  std::string label;

  int type_count() const { return matrix.rows(); }
  int outcome_count() const { return matrix.cols(); }
};

/// Outcome function as a tensor over type indices. Entries are 1-based
/// outcomes in 1..m, stored row-major; a vector for one player, a matrix for
/// two.
struct OutcomeFunction {
  std::vector<int> shape;
  int outcomes = 0;       // m
  std::vector<int> values;

  static OutcomeFunction vector(std::vector<int> values, int outcomes);
  static OutcomeFunction matrix(std::vector<std::vector<int>> rows, int outcomes);

  int players() const { return static_cast<int>(shape.size()); }
  long long size() const;
  int at(std::span<const int> index) const; // 0-based multi-index

  /// The axis-th fiber through the 0-based multi-index `fixed` (whose axis-th
  /// entry is ignored): the single-player outcome vector seen by that player
  /// when everyone else's report is pinned.
  std::vector<int> fiber(int axis, std::span<const int> fixed) const;

  void validate() const; // throws ShapeMismatchError on bad entries

  bool operator==(const OutcomeFunction&) const = default;
};

/// Weighted Minkowski combination: one row per type profile, the
/// (i_1,...,i_n)-th row being sum_j alpha_j * T^j[i_j,*] + gamma, profiles
/// ordered lexicographically. All alphas must be positive.
TypeSpace minkowski_combine(std::span<const TypeSpace> spaces, std::span<const Rat> alphas,
                            const std::vector<Rat>& gamma);

/// Incentive compatibility of a single-player outcome vector, decided through
/// the difference-constraint system over payments. Returns the normalized
/// minimal payment vector, or nothing when g is not IC.
std::optional<std::vector<Rat>> is_ic_single(const std::vector<int>& g, const TypeSpace& space);

/// Same decision through tropical minors: g is IC iff for every row subset on
/// which g is injective, the diagonal picked by g attains the max-plus
/// determinant of the corresponding minor.
bool is_ic_single_minor(const std::vector<int>& g, const TypeSpace& space);

/// Canonically sorted set of outcome vectors.
struct ICSet {
  std::vector<std::vector<int>> members;

  bool contains(const std::vector<int>& g) const;
  bool operator==(const ICSet&) const = default;
};

/// All IC outcome vectors of the space, in lexicographic order.
/// Throws TooLargeError when m^r exceeds the cap.
ICSet ic_set(const TypeSpace& space, long long cap = kOutcomeEnumerationCap);

/// Optimal-bijection sets of every square minor, keyed by (rows, cols) with
/// 0-based sorted indices.
struct MatchingMultifield {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Bijection>> entries;

  bool operator==(const MatchingMultifield&) const = default;
};

MatchingMultifield multifield(const TypeSpace& space, int minor_cap = kPermutationCap);

/// A minor on which two spaces pick different optimal bijection sets.
struct MinorWitness {
  std::vector<int> rows; // 0-based
  std::vector<int> cols;
  std::vector<Bijection> first_optima;
  std::vector<Bijection> second_optima;
};

struct ICEqualResult {
  bool equal = false;
  std::optional<MinorWitness> witness;
};

/// Whether the two spaces have identical IC sets, decided minor by minor.
/// Requires identical dimensions.
ICEqualResult ic_equal(const TypeSpace& a, const TypeSpace& b, int minor_cap = kPermutationCap);

/// Multi-player incentive compatibility: every axis-j fiber must be IC on the
/// j-th space.
bool is_ic_multi(const OutcomeFunction& g, std::span<const TypeSpace> spaces);

} // namespace tropic

#endif
