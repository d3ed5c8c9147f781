#include "tropic/report.hpp"

#include "tropic/lp_oracle.hpp"

#include <algorithm>

namespace tropic {

using nlohmann::json;

std::uint64_t Rng::next() {
  // splitmix64: platform-independent, good enough for test-case generation
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

int Rng::range(int lo, int hi) { return lo + below(hi - lo + 1); }

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifyReport::find(const std::string& id) const {
  for (const CheckResult& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

json VerifyReport::to_json() const {
  json out;
  out["schema"] = 1;
  out["all_pass"] = all_pass();
  out["checks"] = json::array();
  for (const CheckResult& c : checks) {
    json entry;
    entry["id"] = c.id;
    entry["status"] = c.pass ? "pass" : "fail";
    if (!c.notes.empty()) entry["notes"] = c.notes;
    if (!c.detail.is_null()) entry["detail"] = c.detail;
    out["checks"].push_back(std::move(entry));
  }
  return out;
}

json certificate_to_json(const LinearSystem& sys, const InfeasCert& cert) {
  json mult = json::object();
  for (const auto& [index, mu] : cert.multipliers) {
    const std::string& label = sys.constraint(index).label;
    std::string key = label.empty() ? "#" + std::to_string(index) : label;
    mult[key] = format_rat(mu);
  }
  return json{{"multipliers", std::move(mult)}};
}

json witness_to_json(const Witness& witness) {
  json values = json::object();
  for (const auto& [name, v] : witness.values) values[name] = format_rat(v);
  return json{{"values", std::move(values)}};
}

namespace {

json am_witness_to_json(const AMWitness& w) {
  json alphas = json::array(), z = json::array();
  for (const Rat& a : w.alphas) alphas.push_back(format_rat(a));
  for (const Rat& v : w.z) z.push_back(format_rat(v));
  return json{{"alphas", std::move(alphas)}, {"z", std::move(z)}};
}

json counterexample_to_json(const CounterexampleReport& rep) {
  json out;
  out["id"] = rep.id;
  out["claim"] = rep.claim;
  out["preconditions_ok"] = rep.preconditions_ok;
  out["infeasible"] = rep.infeasible;
  if (rep.certificate) {
    out["certificate"] = certificate_to_json(rep.encoding, *rep.certificate);
    out["certificate_valid"] = rep.certificate_valid;
  }
  if (rep.pinned_certificate) {
    out["pinned_certificate"] = certificate_to_json(rep.encoding, *rep.pinned_certificate);
    out["pinned_certificate_valid"] = rep.pinned_certificate_valid;
  }
  if (!rep.grid.empty()) {
    json grid = json::array();
    for (const auto& [lambda, infeasible] : rep.grid) {
      grid.push_back(json{{"lambda", format_rat(lambda)}, {"infeasible", infeasible}});
    }
    out["grid"] = std::move(grid);
  }
  if (rep.symbolic_confirmed) out["symbolic_confirmed"] = *rep.symbolic_confirmed;
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  return out;
}

std::map<std::string, Rat> am_point(int players, int outcomes, const std::vector<Rat>& alphas,
                                    const std::vector<Rat>& z) {
  std::map<std::string, Rat> point;
  for (int j = 0; j < players; ++j) point["alpha[" + std::to_string(j + 1) + "]"] = alphas[j];
  for (int k = 0; k < outcomes; ++k) point["z[" + std::to_string(k + 1) + "]"] = z[k];
  return point;
}

// ---- individual checks ------------------------------------------------------

void check_worked_example(VerifyReport& report) {
  WorkedExample ex = worked_example();
  std::vector<TypeSpace> tt{ex.t1, ex.t2};

  report.checks.push_back(
      {"ex2.1.ic_multi", is_ic_multi(ex.g, tt), "g is IC on the original pair", {}});

  const std::vector<std::vector<std::vector<int>>> cells = {
      {{1, 1, 3}, {1, 2, 3}, {2, 2, 3}, {3, 2, 3}, {3, 3, 3},
       {3, 1, 3}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {2, 2, 2}},
      {{2, 1, 1}, {2, 1, 2}, {3, 3, 3}, {2, 3, 3}, {2, 3, 2},
       {2, 2, 2}, {2, 3, 1}, {1, 3, 1}, {1, 3, 3}, {1, 1, 1}},
  };
  for (int s = 0; s < 2; ++s) {
    ICSet set = ic_set(tt[s]);
    bool pass = true;
    for (const auto& cell : cells[s]) {
      if (!set.contains(cell)) pass = false;
    }
    report.checks.push_back({"ex2.1.figure_cells.T" + std::to_string(s + 1), pass,
                             "full-dimensional cell covectors are IC members",
                             json{{"ic_count", set.members.size()}}});
  }

  // not an affine maximizer on the original pair
  {
    LinearSystem sys = am_system(ex.g, tt);
    FeasibilityResult res = solve(sys);
    const InfeasCert* cert = get_certificate(res);
    bool pass = !am_check(ex.g, tt).has_value() && cert && check_certificate(sys, *cert);
    CheckResult check{"ex2.3.am_infeasible", pass, "no positive weights and payments exist", {}};
    if (cert) check.detail = certificate_to_json(sys, *cert);
    report.checks.push_back(std::move(check));

    InfeasCert pinned;
    pinned.multipliers[*sys.find_constraint("am[1,1;1]")] = 3;
    pinned.multipliers[*sys.find_constraint("am[1,2;3]")] = 1;
    pinned.multipliers[*sys.find_constraint("am[2,2;2]")] = 2;
    pinned.multipliers[*sys.find_constraint("am[3,1;2]")] = 1;
    pinned.multipliers[*sys.find_constraint("alpha[1]")] = 1;
    report.checks.push_back({"ex2.3.paper_certificate", check_certificate(sys, pinned),
                             "the four-row combination weighted 3,1,2,1 plus the weight floor",
                             certificate_to_json(sys, pinned)});
  }

  // an affine maximizer after adjusting the second space
  {
    std::vector<TypeSpace> ts{ex.t1, ex.s2};
    LinearSystem sys = am_system(ex.g, ts);
    auto witness = am_check(ex.g, ts);
    bool pass = witness.has_value() &&
                check_point(sys, am_point(2, 3, witness->alphas, witness->z));

    // weights pinned to (1,1): solve for the payments alone
    LinearSystem pinned = am_system(ex.g, ts);
    int a1 = pinned.variable("alpha[1]"), a2 = pinned.variable("alpha[2]");
    pinned.add_constraint({{a1, Rat(1)}}, Relation::Equal, 1, "pin alpha[1]");
    pinned.add_constraint({{a2, Rat(1)}}, Relation::Equal, 1, "pin alpha[2]");
    FeasibilityResult res = solve(pinned);
    const Witness* w = get_witness(res);
    bool pinned_pass = w && check_point(sys, w->values);

    CheckResult check{"ex2.3.am_witness", pass && pinned_pass,
                      "witness found; also solvable with both weights pinned to 1", {}};
    if (witness) check.detail = am_witness_to_json(*witness);
    report.checks.push_back(std::move(check));
  }
}

void check_perturbation(VerifyReport& report, const VerifyOptions& options) {
  WorkedExample ex = worked_example();
  {
    TypeSpace s2 = perturb_second_player(ex.g, ex.t1);
    std::vector<TypeSpace> ts{ex.t1, s2};
    LinearSystem sys = am_system(ex.g, ts);
    std::map<std::string, Rat> point =
        am_point(2, 3, {Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(0)});
    bool pass = check_point(sys, point) && am_check(ex.g, ts).has_value();
    json detail;
    detail["s2_rows"] = json::array();
    for (int j = 0; j < s2.type_count(); ++j) {
      json row = json::array();
      for (int k = 0; k < s2.outcome_count(); ++k) row.push_back(format_rat(s2.matrix.at(j, k)));
      detail["s2_rows"].push_back(std::move(row));
    }
    report.checks.push_back({"thm1.1.roundtrip.worked", pass,
                             "negated column payments give weights (1,1) and z = 0", detail});
  }

  Rng rng(options.seed);
  int failures = 0;
  for (int trial = 0; trial < options.roundtrip_instances; ++trial) {
    int r1 = rng.range(1, 3), r2 = rng.range(1, 3), m = rng.range(1, 3);
    TypeSpace t1;
    t1.matrix = RatMatrix(r1, m);
    for (int i = 0; i < r1; ++i) {
      for (int k = 0; k < m; ++k) t1.matrix.at(i, k) = rng.range(-3, 3);
    }
    ICSet columns = ic_set(t1);
    OutcomeFunction g;
    g.shape = {r1, r2};
    g.outcomes = m;
    g.values.assign(static_cast<size_t>(r1) * r2, 1);
    for (int j = 0; j < r2; ++j) {
      const auto& col = columns.members[rng.below(static_cast<int>(columns.members.size()))];
      for (int i = 0; i < r1; ++i) g.values[static_cast<size_t>(i) * r2 + j] = col[i];
    }
    TypeSpace s2 = perturb_second_player(g, t1);
    std::vector<TypeSpace> ts{t1, s2};
    LinearSystem sys = am_system(g, ts);
    if (!check_point(sys, am_point(2, m, {Rat(1), Rat(1)}, std::vector<Rat>(m, Rat(0))))) {
      ++failures;
    }
  }
  report.checks.push_back({"thm1.1.roundtrip.random", failures == 0,
                           "random IC columns; construction verified each time",
                           json{{"instances", options.roundtrip_instances},
                                {"failures", failures}}});
}

void check_counterexample_i(VerifyReport& report) {
  CounterexampleReport rep = verify_counterexample_i();
  report.checks.push_back({"thm1.2(i).verify", rep.ok(),
                           "joint system with the first player's multifield pinned is infeasible",
                           counterexample_to_json(rep)});

  ThreePlayerInstance inst = counterexample_i_instance();
  {
    LinearSystem relaxed = joint_system_i(inst.g, /*with_multifield=*/false);
    FeasibilityResult res = solve(relaxed);
    report.checks.push_back({"thm1.2(i).ablation.no_multifield", is_feasible(res),
                             "dropping the multifield constraints restores feasibility", {}});
  }
  {
    OutcomeFunction constant{{2, 2, 2}, 6, std::vector<int>(8, 1)};
    LinearSystem sys = joint_system_i(constant, /*with_multifield=*/true);
    FeasibilityResult res = solve(sys);
    report.checks.push_back({"thm1.2(i).ablation.constant_g", is_feasible(res),
                             "a constant tensor is compatible with the pinned multifield", {}});
  }
}

void check_counterexample_ii(VerifyReport& report) {
  TwoPlayerInstance inst = counterexample_ii_instance();
  {
    ICSet set = ic_set(inst.t1);
    json detail;
    detail["members"] = json::array();
    for (const auto& g : set.members) detail["members"].push_back(g);
    report.checks.push_back({"thm1.2(ii).ic_set.T1", set == inst.expected_ic1,
                             "exact ten-member IC set", std::move(detail)});
  }
  {
    ICSet set = ic_set(inst.t2);
    json detail;
    detail["members"] = json::array();
    for (const auto& g : set.members) detail["members"].push_back(g);
    report.checks.push_back({"thm1.2(ii).ic_set.T2", set == inst.expected_ic2,
                             "exact ten-member IC set", std::move(detail)});
  }
  CounterexampleReport rep = verify_counterexample_ii();
  report.checks.push_back({"thm1.2(ii).verify", rep.ok(),
                           "joint system with both multifields pinned is infeasible",
                           counterexample_to_json(rep)});
  {
    FeasibilityResult res = solve(joint_system_ii(false, true));
    report.checks.push_back({"thm1.2(ii).ablation.drop_U1", is_feasible(res),
                             "pinning only the second multifield is feasible", {}});
  }
  {
    FeasibilityResult res = solve(joint_system_ii(true, false));
    report.checks.push_back({"thm1.2(ii).ablation.drop_U2", is_feasible(res),
                             "pinning only the first multifield is feasible", {}});
  }
}

void check_counterexample_iii(VerifyReport& report, const std::vector<Rat>& grid) {
  CounterexampleReport rep = verify_counterexample_iii(grid);
  report.checks.push_back({"thm1.2(iii).verify", rep.ok(),
                           "grid-verified over the weight-ratio sweep, plus the symbolic "
                           "combination for all ratios; not a pointwise proof",
                           counterexample_to_json(rep)});
  {
    FeasibilityResult res = solve(joint_system_iii(Rat(1), /*with_multifield=*/false));
    report.checks.push_back({"thm1.2(iii).ablation.no_multifield", is_feasible(res),
                             "without the multifield constraints the pair is representable", {}});
  }
  report.checks.push_back({"thm1.2(iii).farkas.ge",
                           verify_farkas_combination(FarkasCase::WeightRatioGe),
                           "symbolic combination for the a1*b2 >= a2*b1 case", {}});
  report.checks.push_back({"thm1.2(iii).farkas.lt",
                           verify_farkas_combination(FarkasCase::WeightRatioLt),
                           "symbolic combination for the a1*b2 < a2*b1 case", {}});

  // corrupting any single multiplier must break the combination
  bool corruptions_fail = true;
  int corruption_count = 0;
  for (FarkasCase which : {FarkasCase::WeightRatioGe, FarkasCase::WeightRatioLt}) {
    std::array<ParamPoly, 4> pinned = farkas_multipliers(which);
    for (int i = 0; i < 4; ++i) {
      std::array<ParamPoly, 4> corrupted = pinned;
      ParamPoly swapped = swap_params(pinned[i], 2, 3); // b1 <-> b2
      if (swapped == pinned[i]) swapped = swap_params(pinned[i], 0, 1); // a1 <-> a2
      corrupted[i] = swapped;
      ++corruption_count;
      if (farkas_combination_holds(which, corrupted)) corruptions_fail = false;
    }
  }
  report.checks.push_back({"thm1.2(iii).farkas.corruptions", corruptions_fail,
                           "every single-multiplier corruption is rejected",
                           json{{"corruptions_tested", corruption_count}}});
}

void check_symmetric(VerifyReport& report, const std::vector<Rat>& grid) {
  SymmetricInstance inst = symmetric_instance();
  {
    ICSet set = ic_set(inst.t1);
    json detail;
    detail["members"] = json::array();
    for (const auto& g : set.members) detail["members"].push_back(g);
    report.checks.push_back({"thm1.3.ic_set.T1", set == inst.expected_ic,
                             "exact ten-member IC set including (3,1,2)", std::move(detail)});
  }
  CounterexampleReport rep = verify_symmetric(grid);
  report.checks.push_back({"thm1.3.verify", rep.ok(),
                           "equal weights refuted exactly; other ratios grid-verified",
                           counterexample_to_json(rep)});
}

void check_oracle_equivalence(VerifyReport& report, const VerifyOptions& options) {
  // exhaustive two-algorithm agreement on small shapes
  const std::vector<std::pair<int, int>> shapes = {{2, 2}, {2, 3}, {3, 2}};
  long long checked = 0;
  long long disagreements = 0;
  for (auto [r, m] : shapes) {
    const int cells = r * m;
    long long total = 1;
    for (int i = 0; i < cells; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
      TypeSpace space;
      space.matrix = RatMatrix(r, m);
      long long rest = code;
      for (int i = 0; i < r; ++i) {
        for (int k = 0; k < m; ++k) {
          space.matrix.at(i, k) = static_cast<int>(rest % 3);
          rest /= 3;
        }
      }
      std::vector<int> g(r, 1);
      while (true) {
        auto payment = is_ic_single(g, space);
        bool minor = is_ic_single_minor(g, space);
        bool ok = payment.has_value() == minor;
        if (ok && payment) {
          // the payment vector must place g in the covector at x
          auto cov = covector_at(*payment, space.matrix);
          for (int i = 0; i < r; ++i) {
            if (!std::binary_search(cov[i].begin(), cov[i].end(), g[i])) ok = false;
          }
        }
        ++checked;
        if (!ok) ++disagreements;
        int pos = r - 1;
        while (pos >= 0 && g[pos] == m) {
          g[pos] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++g[pos];
      }
    }
  }
  report.checks.push_back({"oracle.ic_equivalence", disagreements == 0,
                           "difference-constraint and tropical-minor deciders agree; payments "
                           "land in the covector",
                           json{{"pairs_checked", checked}, {"disagreements", disagreements}}});

  // multifield comparison against direct IC-set equality
  Rng rng(options.seed + 1);
  int mismatches = 0;
  for (int trial = 0; trial < options.ic_equal_pairs; ++trial) {
    int r = rng.range(1, 3), m = rng.range(1, 3);
    TypeSpace a, b;
    a.matrix = RatMatrix(r, m);
    b.matrix = RatMatrix(r, m);
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k < m; ++k) {
        a.matrix.at(i, k) = rng.range(-2, 2);
        b.matrix.at(i, k) = rng.range(-2, 2);
      }
    }
    bool eq = ic_equal(a, b).equal;
    bool direct = ic_set(a) == ic_set(b);
    if (eq != direct) ++mismatches;
  }
  report.checks.push_back({"oracle.ic_equal", mismatches == 0,
                           "minor-by-minor equality matches direct IC-set comparison",
                           json{{"pairs", options.ic_equal_pairs}, {"mismatches", mismatches}}});
}

void check_solver_soundness(VerifyReport& report, const VerifyOptions& options) {
  Rng rng(options.seed + 2);
  int witness_failures = 0, certificate_failures = 0, oracle_mismatches = 0, oracle_checked = 0;
  for (int trial = 0; trial < options.solver_instances; ++trial) {
    LinearSystem sys;
    int n = rng.range(1, 4);
    for (int v = 0; v < n; ++v) sys.add_variable("x" + std::to_string(v + 1));
    int k = rng.range(0, 8);
    for (int c = 0; c < k; ++c) {
      std::vector<std::pair<int, Rat>> terms;
      int nterms = rng.range(1, n);
      for (int t = 0; t < nterms; ++t) {
        terms.emplace_back(rng.below(n), Rat(rng.range(-3, 3)));
      }
      int roll = rng.below(10);
      Relation rel = roll < 5   ? Relation::GreaterEqual
                     : roll < 8 ? Relation::Greater
                                : Relation::Equal;
      sys.add_constraint(std::move(terms), rel, Rat(rng.range(-3, 3)));
    }

    FeasibilityResult res = solve(sys);
    if (const Witness* w = get_witness(res)) {
      if (!check_point(sys, w->values)) ++witness_failures;
    } else if (const InfeasCert* cert = get_certificate(res)) {
      if (!check_certificate(sys, *cert)) ++certificate_failures;
    }
    if (n <= 3) {
      ++oracle_checked;
      if (oracle_feasible(sys) != is_feasible(res)) ++oracle_mismatches;
    }
  }
  report.checks.push_back(
      {"solver.soundness",
       witness_failures == 0 && certificate_failures == 0 && oracle_mismatches == 0,
       "every witness re-checks, every certificate validates, verdicts match the "
       "vertex-enumeration oracle",
       json{{"instances", options.solver_instances},
            {"witness_failures", witness_failures},
            {"certificate_failures", certificate_failures},
            {"oracle_checked", oracle_checked},
            {"oracle_mismatches", oracle_mismatches}}});
}

} // namespace

VerifyReport run_verification_suite(const VerifyOptions& options) {
  std::vector<Rat> grid = options.lambda_grid.empty() ? default_lambda_grid() : options.lambda_grid;

  VerifyReport report;
  check_worked_example(report);
  check_perturbation(report, options);
  check_counterexample_i(report);
  check_counterexample_ii(report);
  check_counterexample_iii(report, grid);
  check_symmetric(report, grid);
  check_oracle_equivalence(report, options);
  check_solver_soundness(report, options);
  return report;
}

} // namespace tropic
