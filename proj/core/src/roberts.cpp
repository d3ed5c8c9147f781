#include "tropic/roberts.hpp"

#include "tropic/errors.hpp"
#include "tropic/tropical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tropic {

namespace {

std::string join1(std::span<const int> xs, char sep, int offset = 0) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i] + offset;
  }
  return os.str();
}

std::string profile_label(std::span<const int> profile, int k) {
  return "am[" + join1(profile, ',', 1) + ";" + std::to_string(k + 1) + "]";
}

std::string indexed(const std::string& stem, int i) {
  return stem + "[" + std::to_string(i + 1) + "]";
}

} // namespace

std::string matrix_var(const std::string& prefix, int row, int col) {
  return prefix + "[" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "]";
}

void add_matrix_variables(LinearSystem& sys, const std::string& prefix, int rows, int cols) {
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) sys.add_variable(matrix_var(prefix, i, k));
  }
}

LinearSystem am_system(const OutcomeFunction& g, std::span<const TypeSpace> spaces) {
  const int n = g.players();
  if (n != static_cast<int>(spaces.size())) {
    throw ShapeMismatchError("outcome function arity does not match the number of spaces");
  }
  const int m = g.outcomes;
  for (int j = 0; j < n; ++j) {
    if (spaces[j].outcome_count() != m || spaces[j].type_count() != g.shape[j]) {
      throw ShapeMismatchError("space " + std::to_string(j + 1) + " does not match g");
    }
  }

  LinearSystem sys;
  std::vector<int> alpha(n), z(m);
  for (int j = 0; j < n; ++j) alpha[j] = sys.add_variable(indexed("alpha", j));
  for (int k = 0; k < m; ++k) z[k] = sys.add_variable(indexed("z", k));

  std::vector<int> profile(n, 0);
  while (true) {
    int gv = g.at(profile) - 1;
    for (int k = 0; k < m; ++k) {
      if (k == gv) continue;
      std::vector<std::pair<int, Rat>> terms;
      for (int j = 0; j < n; ++j) {
        terms.emplace_back(alpha[j],
                           spaces[j].matrix.at(profile[j], gv) - spaces[j].matrix.at(profile[j], k));
      }
      terms.emplace_back(z[gv], Rat(-1));
      terms.emplace_back(z[k], Rat(1));
      sys.add_constraint(std::move(terms), Relation::GreaterEqual, 0, profile_label(profile, k));
    }
    int pos = n - 1;
    while (pos >= 0 && ++profile[pos] >= g.shape[pos]) {
      profile[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  for (int j = 0; j < n; ++j) {
    sys.add_constraint({{alpha[j], Rat(1)}}, Relation::GreaterEqual, 1, indexed("alpha", j));
  }
  return sys;
}

std::optional<AMWitness> am_check(const OutcomeFunction& g, std::span<const TypeSpace> spaces) {
  LinearSystem sys = am_system(g, spaces);
  FeasibilityResult res = solve(sys);
  const Witness* w = get_witness(res);
  if (!w) return std::nullopt;
  AMWitness out;
  for (int j = 0; j < g.players(); ++j) out.alphas.push_back(w->values.at(indexed("alpha", j)));
  for (int k = 0; k < g.outcomes; ++k) out.z.push_back(w->values.at(indexed("z", k)));
  return out;
}

TypeSpace perturb_second_player(const OutcomeFunction& g, const TypeSpace& t1) {
  if (g.players() != 2) {
    throw ShapeMismatchError("the perturbation construction needs a two-player outcome function");
  }
  if (g.shape[0] != t1.type_count() || g.outcomes != t1.outcome_count()) {
    throw ShapeMismatchError("first axis of g does not match the given space");
  }
  const int r2 = g.shape[1];
  const int m = g.outcomes;
  TypeSpace s2;
  s2.matrix = RatMatrix(r2, m);
  s2.label = "perturbed";
  for (int j = 0; j < r2; ++j) {
    std::vector<int> fixed{0, j};
    std::vector<int> column = g.fiber(0, fixed);
    auto payment = is_ic_single(column, t1);
    if (!payment) {
      throw NotICError("column " + std::to_string(j + 1) + " of g is not IC on the first space");
    }
    for (int k = 0; k < m; ++k) s2.matrix.at(j, k) = -(*payment)[k];
  }
  return s2;
}

namespace {

void enumerate_subsets(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      fn(pick);
      return;
    }
    for (int i = start; i <= n - (size - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::string minor_stem(const std::string& prefix, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  return prefix + ":{" + join1(rows, ',', 1) + "}x{" + join1(cols, ',', 1) + "}";
}

void ensure_matrix_variables(LinearSystem& sys, const std::string& prefix, int rows, int cols) {
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      std::string name = matrix_var(prefix, i, k);
      if (!sys.find_variable(name)) sys.add_variable(name);
    }
  }
}

} // namespace

void add_ic_equality(LinearSystem& sys, const RatMatrix& t, const std::string& prefix,
                     int minor_cap) {
  const int r = t.rows();
  const int m = t.cols();
  if (std::min(r, m) > minor_cap) {
    throw TooLargeError("minor size exceeds the cap");
  }
  ensure_matrix_variables(sys, prefix, r, m);

  for (int l = 2; l <= std::min(r, m); ++l) {
    enumerate_subsets(r, l, [&](const std::vector<int>& rows) {
      enumerate_subsets(m, l, [&](const std::vector<int>& cols) {
        std::vector<Bijection> optima = optimal_bijections(t.minor_matrix(rows, cols));
        const Bijection& base = optima.front();
        std::string stem = minor_stem(prefix, rows, cols);

        // diagonal functional of sigma minus that of tau over the S variables
        auto difference = [&](const Bijection& tau) {
          std::vector<std::pair<int, Rat>> terms;
          for (int z = 0; z < l; ++z) {
            terms.emplace_back(sys.variable(matrix_var(prefix, rows[z], cols[base.images[z] - 1])),
                               Rat(1));
            terms.emplace_back(sys.variable(matrix_var(prefix, rows[z], cols[tau.images[z] - 1])),
                               Rat(-1));
          }
          return terms;
        };

        Bijection tau = Bijection::identity(l);
        do {
          if (tau == base) continue;
          bool optimal = std::binary_search(optima.begin(), optima.end(), tau);
          std::string suffix = join1(tau.images, ',');
          if (optimal) {
            sys.add_constraint(difference(tau), Relation::Equal, 0, stem + ":eq:" + suffix);
          } else {
            sys.add_constraint(difference(tau), Relation::Greater, 0, stem + ":gt:" + suffix);
          }
        } while (std::next_permutation(tau.images.begin(), tau.images.end()));
      });
    });
  }
}

LinearSystem encode_ic_equality(const RatMatrix& t, const std::string& prefix, int minor_cap) {
  LinearSystem sys;
  add_ic_equality(sys, t, prefix, minor_cap);
  return sys;
}

bool CounterexampleReport::ok() const {
  if (!preconditions_ok || !infeasible || !certificate_valid) return false;
  if (pinned_certificate && !pinned_certificate_valid) return false;
  for (const auto& [lambda, infeas] : grid) {
    if (!infeas) return false;
  }
  if (symbolic_confirmed && !*symbolic_confirmed) return false;
  return true;
}

// ---- built-in instances ----------------------------------------------------

WorkedExample worked_example() {
  WorkedExample e;
  e.t1 = {RatMatrix::from_longs({{0, 2, 3}, {0, 4, 2}, {0, 3, 7}}), "T1"};
  e.t2 = {RatMatrix::from_longs({{0, 5, -5}, {0, -2, 9}, {0, 1, 3}}), "T2"};
  e.s2 = {RatMatrix{{Rat(0), Rat(5), Rat(43, 10)}, {Rat(0), Rat(-2), Rat(1, 2)}, {Rat(0), Rat(1), Rat(3)}},
          "S2"};
  e.g = OutcomeFunction::matrix({{2, 1, 1}, {2, 1, 2}, {3, 3, 3}}, 3);
  return e;
}

ThreePlayerInstance counterexample_i_instance() {
  ThreePlayerInstance inst;
  inst.t1 = {RatMatrix::from_longs({{3, 4, 5, 6, 2, 1}, {0, 0, 0, 0, 0, 0}}), "T1"};
  inst.t2 = {RatMatrix::from_longs({{5, 2, 3, 6, 4, 1}, {0, 0, 0, 0, 0, 0}}), "T2"};
  inst.t3 = {RatMatrix::from_longs({{5, 2, 6, 3, 4, 1}, {0, 0, 0, 0, 0, 0}}), "T3"};
  // axis order fixed so that every axis-j fiber is IC on the j-th space
  inst.g = OutcomeFunction{{2, 2, 2}, 6, {1, 4, 3, 1, 5, 2, 2, 6}};
  inst.g.validate();
  return inst;
}

TwoPlayerInstance counterexample_ii_instance() {
  TwoPlayerInstance inst;
  inst.t1 = {RatMatrix::from_longs({{13, 46, 9, 11}, {45, 47, 1, 24}}), "T1"};
  inst.t2 = {RatMatrix::from_longs({{12, 8, 19, 38}, {28, 46, 19, 4}}), "T2"};
  inst.g = OutcomeFunction::matrix({{4, 3}, {1, 2}}, 4);
  inst.expected_ic1.members = {{1, 1}, {2, 1}, {2, 2}, {2, 4}, {3, 1},
                               {3, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 4}};
  inst.expected_ic2.members = {{1, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 2},
                               {3, 3}, {4, 1}, {4, 2}, {4, 3}, {4, 4}};
  return inst;
}

PairInstance counterexample_iii_instance() {
  PairInstance inst;
  inst.t1 = {RatMatrix::from_longs({{0, 1, 3}, {0, 2, 1}}), "T1"};
  inst.t2 = {RatMatrix::from_longs({{0, 4, 2}, {0, 2, 0}}), "T2"};
  inst.g1 = OutcomeFunction::matrix({{2, 3}, {2, 1}}, 3);
  inst.g2 = OutcomeFunction::matrix({{3, 1}, {3, 2}}, 3);
  inst.expected_ic1.members = {{1, 1}, {1, 2}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  inst.expected_ic2.members = {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  return inst;
}

SymmetricInstance symmetric_instance() {
  SymmetricInstance inst;
  inst.t1 = {RatMatrix::from_longs({{0, 5, 6}, {0, 0, 3}, {0, 4, 0}}), "T1"};
  inst.g = OutcomeFunction::matrix({{2, 3, 2}, {3, 3, 1}, {2, 1, 1}}, 3);
  inst.expected_ic.members = {{1, 1, 1}, {2, 1, 1}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2},
                              {3, 1, 1}, {3, 1, 2}, {3, 3, 1}, {3, 3, 2}, {3, 3, 3}};
  inst.interior_cell = {3, 1, 2};
  return inst;
}

// ---- joint systems ----------------------------------------------------------

namespace {

// Aggregate-maximizer rows sum_j w_j * (S^j[i_j, g] - S^j[i_j, k]) - p_g + p_k >= 0
// over all profiles and k != g(profile), with symbolic matrices named by
// `prefixes` and the payment vector named `payment`.
void add_joint_am_rows(LinearSystem& sys, const OutcomeFunction& g,
                       const std::vector<std::string>& prefixes, const std::vector<Rat>& weights,
                       const std::string& payment, const std::string& label_stem) {
  const int n = g.players();
  const int m = g.outcomes;
  for (int j = 0; j < n; ++j) ensure_matrix_variables(sys, prefixes[j], g.shape[j], m);
  for (int k = 0; k < m; ++k) {
    std::string name = indexed(payment, k);
    if (!sys.find_variable(name)) sys.add_variable(name);
  }

  std::vector<int> profile(n, 0);
  while (true) {
    int gv = g.at(profile) - 1;
    for (int k = 0; k < m; ++k) {
      if (k == gv) continue;
      std::vector<std::pair<int, Rat>> terms;
      for (int j = 0; j < n; ++j) {
        terms.emplace_back(sys.variable(matrix_var(prefixes[j], profile[j], gv)), weights[j]);
        terms.emplace_back(sys.variable(matrix_var(prefixes[j], profile[j], k)), -weights[j]);
      }
      terms.emplace_back(sys.variable(indexed(payment, gv)), Rat(-1));
      terms.emplace_back(sys.variable(indexed(payment, k)), Rat(1));
      std::string label = label_stem + "[" + join1(profile, ',', 1) + ";" +
                          std::to_string(k + 1) + "]";
      sys.add_constraint(std::move(terms), Relation::GreaterEqual, 0, std::move(label));
    }
    int pos = n - 1;
    while (pos >= 0 && ++profile[pos] >= g.shape[pos]) {
      profile[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

} // namespace

LinearSystem joint_system_i(const OutcomeFunction& g, bool with_multifield) {
  ThreePlayerInstance inst = counterexample_i_instance();
  LinearSystem sys;
  add_joint_am_rows(sys, g, {"U1", "U2", "U3"}, {Rat(1), Rat(1), Rat(1)}, "z", "am");
  if (with_multifield) add_ic_equality(sys, inst.t1.matrix, "U1");
  return sys;
}

LinearSystem joint_system_ii(bool multifield_u1, bool multifield_u2) {
  TwoPlayerInstance inst = counterexample_ii_instance();
  LinearSystem sys;
  add_joint_am_rows(sys, inst.g, {"U1", "U2"}, {Rat(1), Rat(1)}, "z", "am");
  if (multifield_u1) add_ic_equality(sys, inst.t1.matrix, "U1");
  if (multifield_u2) add_ic_equality(sys, inst.t2.matrix, "U2");
  return sys;
}

LinearSystem joint_system_iii(const Rat& lambda, bool with_multifield) {
  PairInstance inst = counterexample_iii_instance();
  LinearSystem sys;
  add_joint_am_rows(sys, inst.g1, {"S1", "S2"}, {Rat(1), Rat(1)}, "Y", "am1");
  add_joint_am_rows(sys, inst.g2, {"S1", "S2"}, {Rat(1), lambda}, "Z", "am2");
  if (with_multifield) add_ic_equality(sys, inst.t1.matrix, "S1");
  return sys;
}

LinearSystem joint_system_symmetric(const Rat& lambda, bool with_multifield) {
  SymmetricInstance inst = symmetric_instance();
  LinearSystem sys;
  add_joint_am_rows(sys, inst.g, {"S", "S"}, {Rat(1), lambda}, "Z", "am");

  // Y in the open interior of the pinned covector cell: strict sector rows.
  const int m = inst.t1.outcome_count();
  for (int k = 0; k < m; ++k) {
    std::string name = indexed("Y", k);
    if (!sys.find_variable(name)) sys.add_variable(name);
  }
  for (int i = 0; i < inst.t1.type_count(); ++i) {
    int h = inst.interior_cell[i] - 1;
    for (int k = 0; k < m; ++k) {
      if (k == h) continue;
      sys.add_constraint({{sys.variable(matrix_var("S", i, h)), Rat(1)},
                          {sys.variable(matrix_var("S", i, k)), Rat(-1)},
                          {sys.variable(indexed("Y", h)), Rat(-1)},
                          {sys.variable(indexed("Y", k)), Rat(1)}},
                         Relation::Greater, 0,
                         "cell[" + std::to_string(i + 1) + ";" + std::to_string(k + 1) + "]");
    }
  }
  if (with_multifield) add_ic_equality(sys, inst.t1.matrix, "S");
  return sys;
}

// ---- verification drivers ---------------------------------------------------

namespace {

void attach_solution(CounterexampleReport& report) {
  FeasibilityResult res = solve(report.encoding);
  if (const InfeasCert* cert = get_certificate(res)) {
    report.infeasible = true;
    report.certificate = *cert;
    report.certificate_valid = check_certificate(report.encoding, *cert);
  }
}

InfeasCert cert_from_labels(const LinearSystem& sys,
                            const std::vector<std::pair<std::string, Rat>>& weights) {
  InfeasCert cert;
  for (const auto& [label, mu] : weights) {
    auto idx = sys.find_constraint(label);
    if (!idx) throw IndexOutOfRangeError("no constraint labelled '" + label + "'");
    cert.multipliers[*idx] = mu;
  }
  return cert;
}

} // namespace

CounterexampleReport verify_counterexample_i() {
  ThreePlayerInstance inst = counterexample_i_instance();
  CounterexampleReport report;
  report.id = "thm1.2(i)";
  report.claim =
      "three players: no type spaces make g an affine maximizer while preserving the first "
      "player's IC set";

  std::vector<TypeSpace> spaces{inst.t1, inst.t2, inst.t3};
  report.preconditions_ok = is_ic_multi(inst.g, spaces);
  const std::vector<std::vector<std::vector<int>>> listed = {
      {{1, 5}, {3, 2}, {4, 2}, {1, 6}},
      {{1, 3}, {4, 1}, {5, 2}, {2, 6}},
      {{1, 4}, {3, 1}, {5, 2}, {2, 6}},
  };
  for (int j = 0; j < 3; ++j) {
    for (const auto& fiber : listed[j]) {
      if (!is_ic_single_minor(fiber, spaces[j])) report.preconditions_ok = false;
    }
  }

  report.encoding = joint_system_i(inst.g, /*with_multifield=*/true);
  attach_solution(report);

  report.pinned_certificate = cert_from_labels(
      report.encoding, {{"am[1,1,1;2]", Rat(1)},
                        {"am[1,2,2;2]", Rat(1)},
                        {"am[2,2,1;1]", Rat(1)},
                        {"am[2,1,2;1]", Rat(1)},
                        {"U1:{1,2}x{1,2}:gt:1,2", Rat(2)}});
  report.pinned_certificate_valid =
      check_certificate(report.encoding, *report.pinned_certificate);

  report.notes.push_back(
      "on minor {1,2}x{1,2} of the first matrix the transposition is the unique optimum "
      "(4 > 3); the instance narrative asserts the identity instead; the encoding follows "
      "the matrix data");
  return report;
}

CounterexampleReport verify_counterexample_ii() {
  TwoPlayerInstance inst = counterexample_ii_instance();
  CounterexampleReport report;
  report.id = "thm1.2(ii)";
  report.claim =
      "two players: no type spaces make g an affine maximizer while preserving both IC sets";

  report.preconditions_ok = ic_set(inst.t1) == inst.expected_ic1 &&
                            ic_set(inst.t2) == inst.expected_ic2 &&
                            is_ic_multi(inst.g, std::vector<TypeSpace>{inst.t1, inst.t2});

  report.encoding = joint_system_ii(true, true);
  attach_solution(report);

  report.pinned_certificate = cert_from_labels(report.encoding,
                                               {{"U1:{1,2}x{2,4}:gt:2,1", Rat(1)},
                                                {"U2:{1,2}x{1,3}:gt:1,2", Rat(1)},
                                                {"am[1,1;3]", Rat(1)},
                                                {"am[1,2;2]", Rat(1)},
                                                {"am[2,1;4]", Rat(1)},
                                                {"am[2,2;1]", Rat(1)}});
  report.pinned_certificate_valid =
      check_certificate(report.encoding, *report.pinned_certificate);
  return report;
}

CounterexampleReport verify_counterexample_iii(std::span<const Rat> lambda_grid) {
  if (lambda_grid.empty()) throw EmptyGridError("lambda grid must not be empty");
  PairInstance inst = counterexample_iii_instance();
  CounterexampleReport report;
  report.id = "thm1.2(iii)";
  report.claim =
      "two players: no single pair of type spaces makes both g1 and g2 affine maximizers "
      "while preserving the first player's IC set";

  std::vector<TypeSpace> spaces{inst.t1, inst.t2};
  report.preconditions_ok = ic_set(inst.t1) == inst.expected_ic1 &&
                            ic_set(inst.t2) == inst.expected_ic2 &&
                            is_ic_multi(inst.g1, spaces) && is_ic_multi(inst.g2, spaces);

  report.encoding = joint_system_iii(Rat(1), /*with_multifield=*/true);
  attach_solution(report);

  report.pinned_certificate = cert_from_labels(report.encoding,
                                               {{"S1:{1,2}x{2,3}:gt:1,2", Rat(1)},
                                                {"am1[1,1;3]", Rat(1)},
                                                {"am1[1,2;1]", Rat(1)},
                                                {"am1[2,2;2]", Rat(1)},
                                                {"am2[1,2;3]", Rat(1)},
                                                {"am2[2,1;2]", Rat(1)},
                                                {"am2[2,2;1]", Rat(1)}});
  report.pinned_certificate_valid =
      check_certificate(report.encoding, *report.pinned_certificate);

  for (const Rat& lambda : lambda_grid) {
    LinearSystem sys = joint_system_iii(lambda, true);
    report.grid.emplace_back(lambda, !is_feasible(solve(sys)));
  }

  report.symbolic_confirmed = verify_farkas_combination(FarkasCase::WeightRatioGe) &&
                              verify_farkas_combination(FarkasCase::WeightRatioLt);
  report.notes.push_back(
      "weight ratios other than the grid points are covered by the symbolic combination "
      "check, not by enumeration: grid-verified");
  return report;
}

CounterexampleReport verify_symmetric(std::span<const Rat> lambda_grid) {
  if (lambda_grid.empty()) throw EmptyGridError("lambda grid must not be empty");
  SymmetricInstance inst = symmetric_instance();
  CounterexampleReport report;
  report.id = "thm1.3";
  report.claim =
      "symmetric two-player instance: no single space used for both players makes g an "
      "affine maximizer while preserving the IC set";

  bool symmetric = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::vector<int> a{i, j}, b{j, i};
      if (inst.g.at(a) != inst.g.at(b)) symmetric = false;
    }
  }
  report.preconditions_ok = symmetric && ic_set(inst.t1) == inst.expected_ic &&
                            is_ic_multi(inst.g, std::vector<TypeSpace>{inst.t1, inst.t1}) &&
                            inst.expected_ic.contains(inst.interior_cell);

  report.encoding = joint_system_symmetric(Rat(1), /*with_multifield=*/true);
  attach_solution(report);

  // Unit multipliers on the six-row circuit; the sector rows appear here
  // unit-scaled, so their weight is 2.
  report.pinned_certificate = cert_from_labels(report.encoding, {{"cell[1;2]", Rat(2)},
                                                                 {"cell[2;3]", Rat(2)},
                                                                 {"cell[3;1]", Rat(2)},
                                                                 {"am[1,1;3]", Rat(1)},
                                                                 {"am[2,2;1]", Rat(1)},
                                                                 {"am[3,3;2]", Rat(1)}});
  report.pinned_certificate_valid =
      check_certificate(report.encoding, *report.pinned_certificate);

  for (const Rat& lambda : lambda_grid) {
    LinearSystem sys = joint_system_symmetric(lambda, true);
    report.grid.emplace_back(lambda, !is_feasible(solve(sys)));
  }
  report.notes.push_back(
      "equal weights are verified exactly; other weight ratios are grid-verified");
  return report;
}

std::vector<Rat> default_lambda_grid() {
  std::vector<Rat> grid;
  for (int k = 1; k <= 100; ++k) grid.emplace_back(k, 10);
  for (int k = 1; k <= 10; ++k) grid.emplace_back(10, k);
  return grid;
}

// ---- symbolic multiplier check ----------------------------------------------

namespace {

using LinForm = std::map<std::string, ParamPoly>;

void add_term(LinForm& form, const std::string& atom, const ParamPoly& coeff) {
  form[atom] += coeff;
  if (form[atom].is_zero()) form.erase(atom);
}

struct FormalIneq {
  LinForm lhs; // lhs >= 0, or > 0 when strict
  bool strict = false;
};

// One aggregate-maximizer row of the pair instance, with formal weights
// (w1, w2) and payment vector name p: w1*(S1[i,g]-S1[i,q]) +
// w2*(S2[j,g]-S2[j,q]) - p[g] + p[q] >= 0.
FormalIneq formal_am_row(const OutcomeFunction& g, int i, int j, int q, const ParamPoly& w1,
                         const ParamPoly& w2, const std::string& payment) {
  std::vector<int> profile{i, j};
  int gv = g.at(profile) - 1;
  FormalIneq out;
  add_term(out.lhs, matrix_var("S1", i, gv), w1);
  add_term(out.lhs, matrix_var("S1", i, q), -w1);
  add_term(out.lhs, matrix_var("S2", j, gv), w2);
  add_term(out.lhs, matrix_var("S2", j, q), -w2);
  add_term(out.lhs, indexed(payment, gv), ParamPoly(Rat(-1)));
  add_term(out.lhs, indexed(payment, q), ParamPoly(Rat(1)));
  return out;
}

FormalIneq sum_rows(const std::vector<FormalIneq>& rows, bool strict) {
  FormalIneq out;
  out.strict = strict;
  for (const FormalIneq& r : rows) {
    for (const auto& [atom, coeff] : r.lhs) add_term(out.lhs, atom, coeff);
  }
  return out;
}

// strict minor row sum(sigma) - sum(tau) > 0 over the S1 variables
FormalIneq formal_minor_row(const std::vector<int>& rows, const std::vector<int>& cols,
                            const Bijection& sigma, const Bijection& tau) {
  FormalIneq out;
  out.strict = true;
  for (size_t z = 0; z < rows.size(); ++z) {
    add_term(out.lhs, matrix_var("S1", rows[z], cols[sigma.images[z] - 1]), ParamPoly(Rat(1)));
    add_term(out.lhs, matrix_var("S1", rows[z], cols[tau.images[z] - 1]), ParamPoly(Rat(-1)));
  }
  return out;
}

// The four inequalities the pinned multipliers act on, in schedule order.
std::array<FormalIneq, 4> farkas_inequalities(FarkasCase which) {
  PairInstance inst = counterexample_iii_instance();
  ParamPoly a1 = param_a1(), a2 = param_a2(), b1 = param_b1(), b2 = param_b2();

  // sums over selected rows of the two aggregate systems
  FormalIneq yz1 = sum_rows({formal_am_row(inst.g1, 0, 0, 2, a1, a2, "Y"),
                             formal_am_row(inst.g1, 0, 1, 0, a1, a2, "Y"),
                             formal_am_row(inst.g1, 1, 1, 1, a1, a2, "Y")},
                            /*strict=*/false);
  FormalIneq yz2 = sum_rows({formal_am_row(inst.g2, 0, 1, 2, b1, b2, "Z"),
                             formal_am_row(inst.g2, 1, 0, 1, b1, b2, "Z"),
                             formal_am_row(inst.g2, 1, 1, 0, b1, b2, "Z")},
                            /*strict=*/false);

  // strict rows from the multifield of T1 (optimal diagonal vs. the other one)
  auto strict_minor = [&](const std::vector<int>& cols) {
    auto optima = optimal_bijections(inst.t1.matrix.minor_matrix({0, 1}, cols));
    Bijection other =
        optima.front().images == std::vector<int>{1, 2} ? Bijection{{2, 1}} : Bijection{{1, 2}};
    return formal_minor_row({0, 1}, cols, optima.front(), other);
  };
  FormalIneq s112 = strict_minor({0, 1});
  FormalIneq s123 = strict_minor({1, 2});

  if (which == FarkasCase::WeightRatioGe) {
    return {s123, s112, yz1, yz2};
  }
  // b2 * s232 equals the sum of two g2 rows; s232 itself carries no parameters
  FormalIneq s232;
  s232.strict = false;
  add_term(s232.lhs, matrix_var("S2", 0, 2), ParamPoly(Rat(1)));
  add_term(s232.lhs, matrix_var("S2", 1, 1), ParamPoly(Rat(1)));
  add_term(s232.lhs, matrix_var("S2", 0, 1), ParamPoly(Rat(-1)));
  add_term(s232.lhs, matrix_var("S2", 1, 2), ParamPoly(Rat(-1)));
  FormalIneq derivation = sum_rows({formal_am_row(inst.g2, 1, 0, 1, param_b1(), param_b2(), "Z"),
                                    formal_am_row(inst.g2, 1, 1, 2, param_b1(), param_b2(), "Z")},
                                   false);
  LinForm scaled;
  for (const auto& [atom, coeff] : s232.lhs) scaled[atom] = coeff * param_b2();
  if (scaled != derivation.lhs) {
    throw std::logic_error("s232 derivation mismatch");
  }
  return {s123, s232, yz1, yz2};
}

ParamPoly case_slack(FarkasCase which) {
  if (which == FarkasCase::WeightRatioGe) return param_a1() * param_b2() - param_a2() * param_b1();
  return param_a2() * param_b1() - param_a1() * param_b2();
}

} // namespace

std::array<ParamPoly, 4> farkas_multipliers(FarkasCase which) {
  ParamPoly a1 = param_a1(), a2 = param_a2(), b1 = param_b1(), b2 = param_b2();
  if (which == FarkasCase::WeightRatioGe) {
    return {a2 * b1, a1 * b2 - a2 * b1, b2, a2};
  }
  return {a1 * b1, a2 * b1 - a1 * b2, b1, a1};
}

bool farkas_combination_holds(FarkasCase which, const std::array<ParamPoly, 4>& multipliers) {
  std::array<FormalIneq, 4> rows = farkas_inequalities(which);
  ParamPoly slack = case_slack(which);

  LinForm combined;
  for (int i = 0; i < 4; ++i) {
    for (const auto& [atom, coeff] : rows[i].lhs) {
      add_term(combined, atom, coeff * multipliers[i]);
    }
  }
  if (!combined.empty()) return false; // left-hand sides must cancel identically

  bool strict_positive = false;
  for (int i = 0; i < 4; ++i) {
    const ParamPoly& mu = multipliers[i];
    bool provably_nonneg = mu.has_nonnegative_coeffs() || mu == slack;
    if (!provably_nonneg) return false;
    if (rows[i].strict && mu.has_nonnegative_coeffs() && !mu.is_zero()) strict_positive = true;
  }
  // all right-hand sides are zero, so the contradiction must be 0 > 0
  return strict_positive;
}

bool verify_farkas_combination(FarkasCase which) {
  return farkas_combination_holds(which, farkas_multipliers(which));
}

} // namespace tropic
