#ifndef TROPIC_REPORT_HPP
#define TROPIC_REPORT_HPP

#include "tropic/rat.hpp"
#include "tropic/roberts.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tropic {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string notes;
  nlohmann::json detail; // witness, certificate, counts, ...
};

struct VerifyOptions {
  std::vector<Rat> lambda_grid; // empty = default_lambda_grid()
  std::uint64_t seed = 20250811;
  int roundtrip_instances = 200;
  int solver_instances = 1000;
  int ic_equal_pairs = 500;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& id) const;
  nlohmann::json to_json() const;
};

/// Runs every bundled verification: the worked examples, the four
/// counterexample instances with their ablations, the two-algorithm
/// equivalence sweep, and the solver soundness suite. Deterministic for a
/// fixed option set.
VerifyReport run_verification_suite(const VerifyOptions& options = {});

/// Deterministic generator used by the randomized suites (splitmix64).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish value in [0, bound)
  int below(int bound);
  /// Uniform-ish integer in [lo, hi]
  int range(int lo, int hi);

private:
  std::uint64_t state_;
};

nlohmann::json certificate_to_json(const LinearSystem& sys, const InfeasCert& cert);
nlohmann::json witness_to_json(const Witness& witness);

} // namespace tropic

#endif
