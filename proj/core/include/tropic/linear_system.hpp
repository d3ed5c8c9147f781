#ifndef TROPIC_LINEAR_SYSTEM_HPP
#define TROPIC_LINEAR_SYSTEM_HPP

#include "tropic/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropic {

enum class Relation {
  GreaterEqual, // a.x >= b
  Greater,      // a.x >  b
  Equal,        // a.x  = b
};

std::string_view relation_symbol(Relation rel);

struct Constraint {
  /// Sorted by variable id, no zero coefficients, no duplicates.
  std::vector<std::pair<int, Rat>> terms;
  Relation rel = Relation::GreaterEqual;
  Rat rhs = 0;
  std::string label;
};

/// A system of rational linear constraints over named variables. An empty
/// constraint list is trivially feasible.
class LinearSystem {
public:
  /// Declares a new variable; throws if the name is taken. Returns its id.
  int add_variable(const std::string& name);

  /// Id of a declared variable; throws UnassignedVariableError if unknown.
  int variable(std::string_view name) const;
  std::optional<int> find_variable(std::string_view name) const;

  /// Adds a constraint; coefficients may repeat variables and contain zeros,
  /// they are merged and pruned. Returns the constraint index.
  int add_constraint(std::vector<std::pair<int, Rat>> coeffs, Relation rel, Rat rhs,
                     std::string label = {});

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::string& variable_name(int id) const;
  const std::vector<std::string>& variable_names() const { return names_; }

  int constraint_count() const { return static_cast<int>(constraints_.size()); }
  const Constraint& constraint(int index) const;
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Index of the first constraint with this exact label.
  std::optional<int> find_constraint(std::string_view label) const;

  bool has_strict() const;

  /// Human-readable rendering of one constraint, e.g. "2 x - y >= 1/3".
  std::string render(int index) const;

private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<Constraint> constraints_;
};

} // namespace tropic

#endif
