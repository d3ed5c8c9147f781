// Command-line front end: exact IC / affine-maximizer checks, payments,
// perturbation, the bundled verification suite, and arrangement plots.
//
// Exit codes: 0 affirmative, 1 negative verdict, 2 input error, 3 cap breach.

#include "tropic/document.hpp"
#include "tropic/errors.hpp"
#include "tropic/feasibility.hpp"
#include "tropic/mechanism.hpp"
#include "tropic/report.hpp"
#include "tropic/roberts.hpp"
#include "tropic/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;
using namespace tropic;

constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapBreach = 3;

struct Options {
  std::string input;
  std::string output;
  bool json_output = false;
  bool cross_check = false;
  bool cell_labels = false;
  std::string lambda_grid;
  long long max_enum = kOutcomeEnumerationCap;
  std::string perturb_name;
  std::vector<std::string> names;
};

InputDocument load_document(const Options& opt) {
  if (opt.input.empty()) throw ParseError("--input FILE is required for this command");
  std::ifstream in(opt.input);
  if (!in) throw ParseError("cannot open input file '" + opt.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str());
}

const TypeSpace& named_space(const InputDocument& doc, const std::string& name) {
  auto it = doc.type_spaces.find(name);
  if (it == doc.type_spaces.end()) throw ParseError("no type space named '" + name + "'");
  return it->second;
}

const OutcomeFunction& named_outcome(const InputDocument& doc, const std::string& name) {
  auto it = doc.outcome_functions.find(name);
  if (it == doc.outcome_functions.end()) {
    throw ParseError("no outcome function named '" + name + "'");
  }
  return it->second;
}

std::vector<int> as_vector(const OutcomeFunction& g, const std::string& name) {
  if (g.players() != 1) {
    throw ParseError("outcome function '" + name + "' must be single-player for this command");
  }
  return g.values;
}

std::vector<Rat> parse_lambda_grid(const std::string& spec) {
  if (spec.empty()) return default_lambda_grid();
  std::vector<Rat> grid;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    Rat v = parse_rat(token);
    if (v <= 0) throw ParseError("lambda grid entries must be positive");
    grid.push_back(v);
  }
  if (grid.empty()) throw ParseError("empty lambda grid");
  return grid;
}

class Out {
public:
  explicit Out(const Options& opt) {
    if (!opt.output.empty()) {
      file_.open(opt.output);
      if (!file_) throw ParseError("cannot open output file '" + opt.output + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

json payments_to_json(const std::vector<Rat>& x) {
  json arr = json::array();
  for (const Rat& v : x) arr.push_back(format_rat(v));
  return arr;
}

int cmd_ic_check(const Options& opt) {
  InputDocument doc = load_document(opt);
  const TypeSpace& space = named_space(doc, opt.names.at(0));
  std::vector<int> g = as_vector(named_outcome(doc, opt.names.at(1)), opt.names.at(1));
  if (static_cast<int>(g.size()) != space.type_count()) {
    throw ParseError("outcome function length does not match the type count");
  }

  auto payment = is_ic_single(g, space);
  Out out(opt);
  json result;
  result["space"] = opt.names.at(0);
  result["outcome_function"] = opt.names.at(1);
  result["ic"] = payment.has_value();
  if (payment) result["payments"] = payments_to_json(*payment);
  if (opt.cross_check) {
    bool minor = is_ic_single_minor(g, space);
    result["cross_check"] = {{"minor_criterion", minor},
                             {"agree", minor == payment.has_value()}};
  }
  if (opt.json_output) {
    out.stream() << result.dump(2) << "\n";
  } else {
    out.stream() << (payment ? "IC" : "not IC") << "\n";
    if (payment) {
      out.stream() << "payments:";
      for (const Rat& v : *payment) out.stream() << " " << format_rat(v);
      out.stream() << "\n";
    }
    if (opt.cross_check) {
      out.stream() << "cross-check (tropical minors): "
                   << (result["cross_check"]["agree"].get<bool>() ? "agree" : "DISAGREE") << "\n";
    }
  }
  return payment ? kExitAffirmative : kExitNegative;
}

int cmd_payments(const Options& opt) {
  InputDocument doc = load_document(opt);
  const TypeSpace& space = named_space(doc, opt.names.at(0));
  std::vector<int> g = as_vector(named_outcome(doc, opt.names.at(1)), opt.names.at(1));
  auto payment = is_ic_single(g, space);
  Out out(opt);
  json result;
  result["ic"] = payment.has_value();
  if (payment) result["payments"] = payments_to_json(*payment);
  out.stream() << result.dump(2) << "\n";
  return payment ? kExitAffirmative : kExitNegative;
}

int cmd_ic_set(const Options& opt) {
  InputDocument doc = load_document(opt);
  const TypeSpace& space = named_space(doc, opt.names.at(0));
  ICSet set = ic_set(space, opt.max_enum);
  Out out(opt);
  json result;
  result["space"] = opt.names.at(0);
  result["count"] = set.members.size();
  result["members"] = json::array();
  for (const auto& g : set.members) result["members"].push_back(g);
  out.stream() << result.dump(2) << "\n";
  return kExitAffirmative;
}

int cmd_ic_equal(const Options& opt) {
  InputDocument doc = load_document(opt);
  const TypeSpace& a = named_space(doc, opt.names.at(0));
  const TypeSpace& b = named_space(doc, opt.names.at(1));
  ICEqualResult res = ic_equal(a, b);
  Out out(opt);
  json result;
  result["equal"] = res.equal;
  if (res.witness) {
    json rows = json::array(), cols = json::array();
    for (int i : res.witness->rows) rows.push_back(i + 1);
    for (int j : res.witness->cols) cols.push_back(j + 1);
    json first = json::array(), second = json::array();
    for (const Bijection& bj : res.witness->first_optima) first.push_back(bj.images);
    for (const Bijection& bj : res.witness->second_optima) second.push_back(bj.images);
    result["witness_minor"] = {{"rows", rows},
                               {"cols", cols},
                               {"first_optima", first},
                               {"second_optima", second}};
  }
  out.stream() << result.dump(2) << "\n";
  return res.equal ? kExitAffirmative : kExitNegative;
}

int cmd_am_check(const Options& opt) {
  InputDocument doc = load_document(opt);
  const OutcomeFunction& g = named_outcome(doc, opt.names.at(0));
  std::vector<TypeSpace> spaces;
  for (size_t i = 1; i < opt.names.size(); ++i) {
    spaces.push_back(named_space(doc, opt.names[i]));
  }
  LinearSystem sys = am_system(g, spaces);
  FeasibilityResult res = solve(sys);
  Out out(opt);
  json result;
  if (const Witness* w = get_witness(res)) {
    result["affine_maximizer"] = true;
    json alphas = json::array(), z = json::array();
    for (size_t j = 0; j < spaces.size(); ++j) {
      alphas.push_back(format_rat(w->values.at("alpha[" + std::to_string(j + 1) + "]")));
    }
    for (int k = 0; k < g.outcomes; ++k) {
      z.push_back(format_rat(w->values.at("z[" + std::to_string(k + 1) + "]")));
    }
    result["witness"] = {{"alphas", alphas}, {"z", z}};
    out.stream() << result.dump(2) << "\n";
    return kExitAffirmative;
  }
  const InfeasCert* cert = get_certificate(res);
  result["affine_maximizer"] = false;
  result["certificate"] = certificate_to_json(sys, *cert);
  result["certificate_valid"] = check_certificate(sys, *cert);
  out.stream() << result.dump(2) << "\n";
  return kExitNegative;
}

int cmd_perturb(const Options& opt) {
  InputDocument doc = load_document(opt);
  const TypeSpace& t1 = named_space(doc, opt.names.at(0));
  const OutcomeFunction& g = named_outcome(doc, opt.names.at(1));
  TypeSpace s2;
  try {
    s2 = perturb_second_player(g, t1);
  } catch (const NotICError& e) {
    std::cerr << "not constructible: " << e.what() << "\n";
    return kExitNegative;
  }
  std::string name = opt.perturb_name.empty() ? opt.names.at(0) + "_perturbed" : opt.perturb_name;
  s2.label = name;
  InputDocument enriched = doc;
  enriched.type_spaces[name] = s2;
  Out out(opt);
  // full document echo, so the output feeds straight back into am-check
  out.stream() << document_to_json(enriched).dump(2) << "\n";
  return kExitAffirmative;
}

int cmd_verify_paper(const Options& opt) {
  VerifyOptions vopt;
  vopt.lambda_grid = parse_lambda_grid(opt.lambda_grid);
  VerifyReport report = run_verification_suite(vopt);
  Out out(opt);
  out.stream() << report.to_json().dump(2) << "\n";
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    if (c.pass) ++passed;
    std::cerr << (c.pass ? "[pass] " : "[FAIL] ") << c.id << "\n";
  }
  std::cerr << passed << "/" << report.checks.size() << " checks passed\n";
  return report.all_pass() ? kExitAffirmative : kExitNegative;
}

int cmd_plot(const Options& opt) {
  InputDocument doc = load_document(opt);
  const TypeSpace& space = named_space(doc, opt.names.at(0));
  PlotOptions plot;
  plot.cell_labels = opt.cell_labels;
  std::string svg = render_arrangement_svg(space, plot);
  Out out(opt);
  out.stream() << svg;
  return kExitAffirmative;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for incentive compatibility and affine maximizers on finite "
               "type spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--input", opt.input, "JSON document with named type spaces and outcome functions");
  app.add_option("--output", opt.output, "write results to a file instead of stdout");
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--lambda-grid", opt.lambda_grid, "comma-separated positive rationals");
  app.add_option("--max-enum", opt.max_enum, "enumeration cap for ic-set");

  auto* ic_check = app.add_subcommand("ic-check", "decide IC for one outcome vector");
  ic_check->add_option("space", opt.names, "type space then outcome function")->expected(2);
  ic_check->add_flag("--cross-check", opt.cross_check, "also run the tropical-minor decider");

  auto* payments = app.add_subcommand("payments", "payment vector supporting an IC outcome");
  payments->add_option("space", opt.names, "type space then outcome function")->expected(2);

  auto* ic_set_cmd = app.add_subcommand("ic-set", "list all IC outcome vectors");
  ic_set_cmd->add_option("space", opt.names, "type space")->expected(1);

  auto* ic_equal_cmd = app.add_subcommand("ic-equal", "compare the IC sets of two spaces");
  ic_equal_cmd->add_option("spaces", opt.names, "two type spaces")->expected(2);

  auto* am_check_cmd = app.add_subcommand("am-check", "affine-maximizer membership");
  am_check_cmd->add_option("names", opt.names, "outcome function then one space per player")
      ->expected(-2);

  auto* perturb = app.add_subcommand("perturb", "second-player space making g an affine maximizer");
  perturb->add_option("names", opt.names, "first-player space then outcome function")->expected(2);
  perturb->add_option("--name", opt.perturb_name, "name of the new space in the echoed document");

  auto* verify = app.add_subcommand("verify-paper", "run the bundled verification suite");

  auto* plot = app.add_subcommand("plot", "SVG of the min-plus arrangement (three outcomes)");
  plot->add_option("space", opt.names, "type space")->expected(1);
  plot->add_flag("--labels", opt.cell_labels, "label sampled full-dimensional cells");

  for (CLI::App* sub : {ic_check, payments, ic_set_cmd, ic_equal_cmd, am_check_cmd, perturb,
                        verify, plot}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (ic_check->parsed()) return cmd_ic_check(opt);
    if (payments->parsed()) return cmd_payments(opt);
    if (ic_set_cmd->parsed()) return cmd_ic_set(opt);
    if (ic_equal_cmd->parsed()) return cmd_ic_equal(opt);
    if (am_check_cmd->parsed()) return cmd_am_check(opt);
    if (perturb->parsed()) return cmd_perturb(opt);
    if (verify->parsed()) return cmd_verify_paper(opt);
    if (plot->parsed()) return cmd_plot(opt);
  } catch (const TooLargeError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapBreach;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
