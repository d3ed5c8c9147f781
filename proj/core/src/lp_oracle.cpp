#include "tropic/lp_oracle.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tropic {

namespace {

// Rows of the boxed gap polytope { A.x - t*delta_strict >= b, 0 <= t <= 1,
// -M <= x_i <= M } as dense lhs/rhs pairs over (x_1..x_n, t).
struct DenseRow {
  std::vector<Rat> a;
  Rat b;
};

// Gaussian elimination; returns any exact solution of lhs = rhs, or nothing.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> m,
                                             std::vector<Rat> rhs) {
  const int n = static_cast<int>(m[0].size());
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col(rows, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < rows; ++col) {
    int sel = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    std::swap(rhs[sel], rhs[rank]);
    Rat inv = Rat(1) / m[rank][col];
    for (auto& v : m[rank]) v *= inv;
    rhs[rank] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < n; ++j) m[r][j] -= f * m[rank][j];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int r = rank; r < rows; ++r) {
    if (rhs[r] != 0) return std::nullopt; // inconsistent
  }
  std::vector<Rat> x(n, Rat(0)); // free coordinates pinned to zero
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
  return x;
}

} // namespace

bool oracle_feasible(const LinearSystem& sys, const Rat& box) {
  const int n = sys.variable_count();
  const int dim = n + 1; // + gap variable t

  std::vector<DenseRow> rows;
  bool has_strict = false;
  for (const Constraint& c : sys.constraints()) {
    DenseRow row{std::vector<Rat>(dim, Rat(0)), c.rhs};
    for (const auto& [var, coeff] : c.terms) row.a[var] = coeff;
    if (c.rel == Relation::Greater) {
      row.a[n] = -1;
      has_strict = true;
    }
    rows.push_back(row);
    if (c.rel == Relation::Equal) {
      // keep both directions so equality rows can serve as >= rows below
      DenseRow neg{std::vector<Rat>(dim, Rat(0)), -c.rhs};
      for (int j = 0; j < dim; ++j) neg.a[j] = -row.a[j];
      rows.push_back(neg);
    }
  }
  for (int v = 0; v < n; ++v) {
    DenseRow lo{std::vector<Rat>(dim, Rat(0)), -box};
    lo.a[v] = 1; // x_v >= -M
    rows.push_back(lo);
    DenseRow hi{std::vector<Rat>(dim, Rat(0)), -box};
    hi.a[v] = -1; // -x_v >= -M, i.e. x_v <= M
    rows.push_back(hi);
  }
  {
    DenseRow t_lo{std::vector<Rat>(dim, Rat(0)), 0};
    t_lo.a[n] = 1; // t >= 0
    rows.push_back(t_lo);
    DenseRow t_hi{std::vector<Rat>(dim, Rat(0)), -1};
    t_hi.a[n] = -1; // -t >= -1
    rows.push_back(t_hi);
  }

  auto satisfies_all = [&](const std::vector<Rat>& x) {
    for (const DenseRow& r : rows) {
      Rat lhs = 0;
      for (int j = 0; j < dim; ++j) lhs += r.a[j] * x[j];
      if (lhs < r.b) return false;
    }
    return true;
  };

  // Every vertex of the boxed polytope lies on dim independent tight rows, so
  // visiting each dim-subset visits every vertex. The polytope is bounded and
  // nonempty iff some candidate passes; the best gap over candidates is the
  // true optimum.
  const int total = static_cast<int>(rows.size());
  std::optional<Rat> best_gap;
  std::vector<int> pick(dim);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == dim) {
      std::vector<std::vector<Rat>> m(dim);
      std::vector<Rat> rhs(dim);
      for (int i = 0; i < dim; ++i) {
        m[i] = rows[pick[i]].a;
        rhs[i] = rows[pick[i]].b;
      }
      auto x = solve_square(std::move(m), std::move(rhs));
      if (x && satisfies_all(*x)) {
        if (!best_gap || (*x)[n] > *best_gap) best_gap = (*x)[n];
      }
      return;
    }
    for (int i = start; i <= total - (dim - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);

  if (!best_gap) return false;
  return has_strict ? *best_gap > 0 : true;
}

} // namespace tropic
