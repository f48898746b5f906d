#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cmdegen/catalog.hpp"
#include "cmdegen/oracle.hpp"

namespace cmdegen {

// Outcome of one reproducibility check. A failing report carries a
// counterexample that can be replayed with the CLI.
struct Report {
  Report(std::string check_name, SingularitySpec ring, int scan_bound)
      : check(std::move(check_name)), spec(ring), bound(scan_bound) {}

  std::string check;
  SingularitySpec spec;
  int bound = 0;
  bool pass = true;
  std::size_t checked = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  nlohmann::ordered_json counterexample;  // null when passing
};

nlohmann::ordered_json to_json(const Report& report);

// Every displayed chain step of the classification theorem for A_n, d = 1,
// restricted to endpoints of total multiplicity <= bound.
Report verify_theorem_odd(int n, int bound, const OracleConfig& config = {});

// d = 1: (≤hom and same K0 class) ⇔ ≤st with a validated witness.
// d = 0: dominance decision ⇔ (≤hom and same K0 class).
// Pairs range over modules of total multiplicity <= bound.
Report verify_equivalence(int n, int d, int bound, const OracleConfig& config = {});

// A_2 with even d: M1 and M2 have equal hom vectors, so ≤hom is not
// antisymmetric, while ≤st keeps them apart.
Report verify_counterexample(const SingularitySpec& spec, const OracleConfig& config = {});

// AR mesh relation and shift symmetry of the oracle table.
Report verify_mesh(int n, int d, const OracleConfig& config = {});

// M ⊕ ΩM = N ⊕ ΩN for every pair with equal hom vectors.
Report verify_cd(int n, int d, int bound, const OracleConfig& config = {});

// The decided ≤st relation for (n, d) and (n, d + 2) agree under the
// identity relabeling.
Report verify_knoerrer(int n, int d, int bound, const OracleConfig& config = {});

// AUTO degree bound stabilizes on every pair of indecomposables.
Report verify_stabilization(int n, int d, const OracleConfig& config = {});

const std::vector<std::string>& check_names();
// Checks that apply to `spec` when no --check is given.
std::vector<std::string> default_checks(const SingularitySpec& spec);
Report run_check(const std::string& name, const SingularitySpec& spec, int bound, const OracleConfig& config = {});

}  // namespace cmdegen
