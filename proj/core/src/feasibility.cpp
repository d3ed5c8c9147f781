#include "tropic/feasibility.hpp"

#include "tropic/errors.hpp"
#include "simplex.hpp"

#include <optional>
#include <stdexcept>

namespace tropic {

bool is_feasible(const FeasibilityResult& result) {
  return std::holds_alternative<Witness>(result);
}

const Witness* get_witness(const FeasibilityResult& result) {
  return std::get_if<Witness>(&result);
}

const InfeasCert* get_certificate(const FeasibilityResult& result) {
  return std::get_if<InfeasCert>(&result);
}

FeasibilityResult solve(const LinearSystem& sys) {
  detail::SimplexOutcome lp = detail::solve_gap_lp(sys);
  if (lp.feasible) {
    Witness w;
    for (int v = 0; v < sys.variable_count(); ++v) {
      w.values.emplace(sys.variable_name(v), lp.x[v]);
    }
    if (!check_point(sys, w.values)) {
      throw std::logic_error("solver produced a point violating the system");
    }
    return w;
  }
  InfeasCert cert{std::move(lp.multipliers)};
  if (!check_certificate(sys, cert)) {
    throw std::logic_error("solver produced an invalid infeasibility certificate");
  }
  return cert;
}

bool check_point(const LinearSystem& sys, const std::map<std::string, Rat>& point) {
  std::vector<Rat> x(sys.variable_count());
  for (int v = 0; v < sys.variable_count(); ++v) {
    auto it = point.find(sys.variable_name(v));
    if (it == point.end()) {
      throw UnassignedVariableError("point does not assign variable '" + sys.variable_name(v) +
                                    "'");
    }
    x[v] = it->second;
  }
  for (const Constraint& c : sys.constraints()) {
    Rat lhs = 0;
    for (const auto& [var, coeff] : c.terms) lhs += coeff * x[var];
    switch (c.rel) {
      case Relation::GreaterEqual:
        if (!(lhs >= c.rhs)) return false;
        break;
      case Relation::Greater:
        if (!(lhs > c.rhs)) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool check_certificate(const LinearSystem& sys, const InfeasCert& cert) {
  std::vector<Rat> functional(sys.variable_count(), Rat(0));
  Rat rhs_sum = 0;
  bool strict_weighted = false;
  for (const auto& [index, mu] : cert.multipliers) {
    if (index < 0 || index >= sys.constraint_count()) {
      throw IndexOutOfRangeError("certificate references constraint " + std::to_string(index) +
                                 " of " + std::to_string(sys.constraint_count()));
    }
    if (mu == 0) continue;
    const Constraint& c = sys.constraint(index);
    if (c.rel != Relation::Equal && mu < 0) return false;
    if (c.rel == Relation::Greater && mu > 0) strict_weighted = true;
    for (const auto& [var, coeff] : c.terms) functional[var] += mu * coeff;
    rhs_sum += mu * c.rhs;
  }
  for (const Rat& f : functional) {
    if (f != 0) return false;
  }
  // 0 >= rhs_sum with rhs_sum > 0, or 0 > 0 via a positively weighted strict row
  return rhs_sum > 0 || (rhs_sum == 0 && strict_weighted);
}

std::optional<std::vector<Rat>> solve_difference(const std::vector<int>& g, const RatMatrix& t) {
  const int r = t.rows();
  const int m = t.cols();
  if (static_cast<int>(g.size()) != r) {
    throw ShapeMismatchError("outcome vector has length " + std::to_string(g.size()) +
                             " but the type matrix has " + std::to_string(r) + " rows");
  }
  for (int v : g) {
    if (v < 1 || v > m) {
      throw ShapeMismatchError("outcome " + std::to_string(v) + " outside 1.." +
                               std::to_string(m));
    }
  }

  // Edge j -> k with weight max_i { T[i,k] - T[i,j] : g(i) = j } encodes
  // x_k >= x_j + w. Only outcomes in range(g) have outgoing edges, so every
  // cycle stays inside the range and the pruning of out-of-range inequalities
  // is implicit.
  std::vector<std::vector<std::optional<Rat>>> weight(m, std::vector<std::optional<Rat>>(m));
  int anchor = m;
  for (int i = 0; i < r; ++i) {
    int j = g[i] - 1;
    anchor = std::min(anchor, j);
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      Rat w = t.at(i, k) - t.at(i, j);
      auto& cell = weight[j][k];
      if (!cell || w > *cell) cell = w;
    }
  }

  // Longest path from the anchor (Bellman-Ford; m-1 passes, then a check pass).
  std::vector<std::optional<Rat>> dist(m);
  dist[anchor] = Rat(0);
  for (int pass = 0; pass < m - 1; ++pass) {
    bool changed = false;
    for (int j = 0; j < m; ++j) {
      if (!dist[j]) continue;
      for (int k = 0; k < m; ++k) {
        if (!weight[j][k]) continue;
        Rat candidate = *dist[j] + *weight[j][k];
        if (!dist[k] || candidate > *dist[k]) {
          dist[k] = candidate;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  for (int j = 0; j < m; ++j) {
    if (!dist[j]) continue;
    for (int k = 0; k < m; ++k) {
      if (weight[j][k] && *dist[j] + *weight[j][k] > *dist[k]) {
        return std::nullopt; // positive cycle
      }
    }
  }

  std::vector<Rat> x(m);
  for (int k = 0; k < m; ++k) x[k] = *dist[k];
  return x;
}

} // namespace tropic
