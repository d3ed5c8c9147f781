#include "tropic/linear_system.hpp"

#include "tropic/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropic {

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::GreaterEqual: return ">=";
    case Relation::Greater: return ">";
    case Relation::Equal: return "=";
  }
  return "?";
}

int LinearSystem::add_variable(const std::string& name) {
  if (index_.contains(name)) {
    throw ParseError("duplicate variable name '" + name + "'");
  }
  int id = static_cast<int>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

int LinearSystem::variable(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw UnassignedVariableError("unknown variable '" + std::string(name) + "'");
  }
  return it->second;
}

std::optional<int> LinearSystem::find_variable(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int LinearSystem::add_constraint(std::vector<std::pair<int, Rat>> coeffs, Relation rel, Rat rhs,
                                 std::string label) {
  std::map<int, Rat> merged;
  for (auto& [id, c] : coeffs) {
    if (id < 0 || id >= variable_count()) {
      throw IndexOutOfRangeError("constraint references undeclared variable id " +
                                 std::to_string(id));
    }
    merged[id] += c;
  }
  Constraint out;
  out.rel = rel;
  out.rhs = std::move(rhs);
  out.label = std::move(label);
  for (auto& [id, c] : merged) {
    if (c != 0) out.terms.emplace_back(id, std::move(c));
  }
  constraints_.push_back(std::move(out));
  return constraint_count() - 1;
}

const std::string& LinearSystem::variable_name(int id) const {
  if (id < 0 || id >= variable_count()) {
    throw IndexOutOfRangeError("variable id out of range");
  }
  return names_[id];
}

const Constraint& LinearSystem::constraint(int index) const {
  if (index < 0 || index >= constraint_count()) {
    throw IndexOutOfRangeError("constraint index out of range");
  }
  return constraints_[index];
}

std::optional<int> LinearSystem::find_constraint(std::string_view label) const {
  for (int i = 0; i < constraint_count(); ++i) {
    if (constraints_[i].label == label) return i;
  }
  return std::nullopt;
}

bool LinearSystem::has_strict() const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [](const Constraint& c) { return c.rel == Relation::Greater; });
}

std::string LinearSystem::render(int index) const {
  const Constraint& c = constraint(index);
  std::ostringstream os;
  if (c.terms.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& [id, coeff] : c.terms) {
      if (coeff < 0) {
        os << (first ? "-" : " - ");
      } else if (!first) {
        os << " + ";
      }
      Rat a = abs(coeff);
      if (a != 1) os << format_rat(a) << " ";
      os << names_[id];
      first = false;
    }
  }
  os << " " << relation_symbol(c.rel) << " " << format_rat(c.rhs);
  return os.str();
}

} // namespace tropic
