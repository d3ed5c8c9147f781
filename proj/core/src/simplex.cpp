#include "simplex.hpp"

#include <cassert>
#include <stdexcept>

// Exact primal simplex on the gap LP, in standard equality form with split
// free variables and one artificial per row. Bland's rule throughout, so the
// method terminates and repeated runs produce identical bases. Dual
// multipliers are read off the artificial columns at optimality; they turn
// into infeasibility certificates over the original constraints.

namespace tropic::detail {

namespace {

struct Tableau {
  int num_vars = 0;     // declared variables of the system
  int num_rows = 0;     // original constraints + cap row
  int col_t = 0;        // column of the gap variable
  int first_surplus = 0;
  int first_artificial = 0;
  int num_cols = 0;

  std::vector<std::vector<Rat>> row;  // live rows only (dropped rows cleared)
  std::vector<Rat> rhs;
  std::vector<int> basic;             // basic column per row
  std::vector<bool> live;
  std::vector<int> row_sign;          // +1/-1 applied while preparing the row
  std::vector<int> surplus_col;       // per row, -1 if none (equality rows)

  std::vector<Rat> obj;               // reduced-cost row
  std::vector<int> row_of_constraint; // original constraint -> row index

  bool is_artificial(int col) const { return col >= first_artificial; }
};

Tableau build(const LinearSystem& sys) {
  Tableau tb;
  const int n = sys.variable_count();
  const int k = sys.constraint_count();
  tb.num_vars = n;
  tb.num_rows = k + 1; // + cap row  t <= 1

  int num_ineq = 0;
  for (const auto& c : sys.constraints()) {
    if (c.rel != Relation::Equal) ++num_ineq;
  }

  tb.col_t = 2 * n;
  tb.first_surplus = 2 * n + 1;
  tb.first_artificial = tb.first_surplus + num_ineq + 1; // + cap slack
  tb.num_cols = tb.first_artificial + tb.num_rows;

  tb.row.assign(tb.num_rows, std::vector<Rat>(tb.num_cols, Rat(0)));
  tb.rhs.assign(tb.num_rows, Rat(0));
  tb.basic.assign(tb.num_rows, -1);
  tb.live.assign(tb.num_rows, true);
  tb.row_sign.assign(tb.num_rows, 1);
  tb.surplus_col.assign(tb.num_rows, -1);
  tb.row_of_constraint.resize(k);

  int next_surplus = tb.first_surplus;
  for (int c = 0; c < k; ++c) {
    const Constraint& con = sys.constraint(c);
    auto& r = tb.row[c];
    for (const auto& [var, coeff] : con.terms) {
      r[var] = coeff;          // x+
      r[n + var] = -coeff;     // x-
    }
    if (con.rel == Relation::Greater) r[tb.col_t] = -1;
    if (con.rel != Relation::Equal) {
      r[next_surplus] = -1;
      tb.surplus_col[c] = next_surplus++;
    }
    tb.rhs[c] = con.rhs;
    tb.row_of_constraint[c] = c;
  }
  // cap row: t + s_cap = 1
  int cap = k;
  tb.row[cap][tb.col_t] = 1;
  tb.row[cap][tb.first_artificial - 1] = 1;
  tb.rhs[cap] = 1;

  for (int r = 0; r < tb.num_rows; ++r) {
    if (tb.rhs[r] < 0) {
      tb.row_sign[r] = -1;
      tb.rhs[r] = -tb.rhs[r];
      for (auto& v : tb.row[r]) v = -v;
    }
    tb.row[r][tb.first_artificial + r] = 1;
    tb.basic[r] = tb.first_artificial + r;
  }
  return tb;
}

void pivot(Tableau& tb, int prow, int pcol) {
  auto& pr = tb.row[prow];
  Rat inv = Rat(1) / pr[pcol];
  if (inv != 1) {
    for (auto& v : pr) v *= inv;
    tb.rhs[prow] *= inv;
  }
  for (int r = 0; r < tb.num_rows; ++r) {
    if (r == prow || !tb.live[r]) continue;
    Rat f = tb.row[r][pcol];
    if (f == 0) continue;
    auto& rr = tb.row[r];
    for (int j = 0; j < tb.num_cols; ++j) {
      if (pr[j] != 0) rr[j] -= f * pr[j];
    }
    tb.rhs[r] -= f * tb.rhs[prow];
  }
  Rat f = tb.obj[pcol];
  if (f != 0) {
    for (int j = 0; j < tb.num_cols; ++j) {
      if (pr[j] != 0) tb.obj[j] -= f * pr[j];
    }
  }
  tb.basic[prow] = pcol;
}

// Bland: entering = lowest-index non-artificial column with negative reduced
// cost; leaving = lexicographic ratio test with lowest basic index on ties.
// Returns false when optimal.
bool iterate(Tableau& tb) {
  while (true) {
    int enter = -1;
    for (int j = 0; j < tb.first_artificial; ++j) {
      if (tb.obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;

    int leave = -1;
    Rat best_ratio = 0;
    for (int r = 0; r < tb.num_rows; ++r) {
      if (!tb.live[r]) continue;
      const Rat& a = tb.row[r][enter];
      if (a <= 0) continue;
      Rat ratio = tb.rhs[r] / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tb.basic[r] < tb.basic[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      throw std::logic_error("gap LP unbounded; the cap row should prevent this");
    }
    pivot(tb, leave, enter);
  }
}

void set_phase_objective(Tableau& tb, bool phase_one) {
  tb.obj.assign(tb.num_cols, Rat(0));
  if (phase_one) {
    for (int j = tb.first_artificial; j < tb.num_cols; ++j) tb.obj[j] = 1;
  } else {
    tb.obj[tb.col_t] = -1; // min -t
  }
  // subtract c_B * row_r for every basic variable with nonzero cost
  for (int r = 0; r < tb.num_rows; ++r) {
    if (!tb.live[r]) continue;
    Rat cb = tb.obj[tb.basic[r]];
    if (cb == 0) continue;
    for (int j = 0; j < tb.num_cols; ++j) {
      if (tb.row[r][j] != 0) tb.obj[j] -= cb * tb.row[r][j];
    }
  }
}

// y_p = phase cost of artificial p minus its reduced cost; multipliers for the
// original constraints are sign-adjusted back to the unprepared rows.
std::map<int, Rat> extract_multipliers(const Tableau& tb, const LinearSystem& sys,
                                       bool phase_one) {
  std::map<int, Rat> out;
  for (int c = 0; c < static_cast<int>(tb.row_of_constraint.size()); ++c) {
    int p = tb.row_of_constraint[c];
    Rat cost = phase_one ? Rat(1) : Rat(0);
    Rat y = cost - tb.obj[tb.first_artificial + p];
    Rat mu = tb.row_sign[p] > 0 ? y : Rat(-y);
    if (mu != 0) out.emplace(c, std::move(mu));
  }
  (void)sys;
  return out;
}

void drive_out_artificials(Tableau& tb) {
  for (int r = 0; r < tb.num_rows; ++r) {
    if (!tb.live[r] || !tb.is_artificial(tb.basic[r])) continue;
    int col = -1;
    for (int j = 0; j < tb.first_artificial; ++j) {
      if (tb.row[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      pivot(tb, r, col);
    } else {
      // redundant row: nothing but its own artificial is left in it
      assert(tb.rhs[r] == 0);
      tb.live[r] = false;
    }
  }
}

} // namespace

SimplexOutcome solve_gap_lp(const LinearSystem& sys) {
  Tableau tb = build(sys);

  set_phase_objective(tb, /*phase_one=*/true);
  iterate(tb);

  Rat infeas = 0;
  for (int r = 0; r < tb.num_rows; ++r) {
    if (tb.live[r] && tb.is_artificial(tb.basic[r])) infeas += tb.rhs[r];
  }

  SimplexOutcome out;
  if (infeas > 0) {
    out.feasible = false;
    out.multipliers = extract_multipliers(tb, sys, /*phase_one=*/true);
    return out;
  }

  drive_out_artificials(tb);
  set_phase_objective(tb, /*phase_one=*/false);
  iterate(tb);

  Rat gap = 0;
  std::vector<Rat> value(tb.first_artificial, Rat(0));
  for (int r = 0; r < tb.num_rows; ++r) {
    if (tb.live[r] && !tb.is_artificial(tb.basic[r])) value[tb.basic[r]] = tb.rhs[r];
  }
  gap = value[tb.col_t];

  if (sys.has_strict() && gap == 0) {
    out.feasible = false;
    out.multipliers = extract_multipliers(tb, sys, /*phase_one=*/false);
    return out;
  }

  out.feasible = true;
  out.gap = gap;
  out.x.resize(tb.num_vars);
  for (int v = 0; v < tb.num_vars; ++v) {
    out.x[v] = value[v] - value[tb.num_vars + v];
  }
  return out;
}

} // namespace tropic::detail
