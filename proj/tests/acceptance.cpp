// Acceptance suite: one line per criterion, `acceptance [k ...]` runs a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cmdegen/degen.hpp"
#include "cmdegen/k0.hpp"
#include "cmdegen/oracle.hpp"
#include "cmdegen/verify.hpp"

using namespace cmdegen;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

SingularitySpec A(int n, int d) { return {'A', n, d}; }

Outcome fail(std::string note) { return {false, std::move(note)}; }

// Runs the reports in order and stops at the first failure, quoting its
// counterexample.
Outcome all_pass(const std::vector<std::function<Report()>>& reports) {
  std::size_t checked = 0;
  for (const auto& make : reports) {
    auto rep = make();
    checked += rep.checked;
    if (!rep.pass) {
      auto j = to_json(rep);
      return fail(rep.check + " failed on " + to_string(rep.spec) + ": " + j["counterexample"].dump() +
                  " details: " + j["details"].dump());
    }
  }
  return {true, std::to_string(checked) + " items checked"};
}

Outcome hom_values() {
  for (int n : {2, 4, 6, 8}) {
    auto s = A(n, 1);
    for (int i = 1; i <= n / 2; ++i) {
      auto cert = stable_hom_dim(s, StableModule::of(IndecId::ideal(i)), StableModule::of(IndecId::ideal(1)));
      if (cert.dim != 2) return fail("[I" + std::to_string(i) + ", I1] = " + std::to_string(cert.dim) + " for n = " + std::to_string(n));
    }
  }
  return {true, "n = 2, 4, 6, 8"};
}

Outcome branch_vanishing() {
  for (int n = 1; n <= 9; n += 2) {
    auto s = A(n, 1);
    auto plus = StableModule::of(IndecId::plus()), minus = StableModule::of(IndecId::minus());
    int a = stable_hom_dim(s, plus, minus).dim, b = stable_hom_dim(s, minus, plus).dim;
    if (a != 0 || b != 0) return fail("n = " + std::to_string(n) + ": [N+, N-] = " + std::to_string(a) + ", [N-, N+] = " + std::to_string(b));
  }
  return {true, "odd n <= 9"};
}

Outcome counterexample() {
  auto rep = verify_counterexample(A(2, 0));
  if (!rep.pass) return fail(to_json(rep).dump());
  if (rep.details["cross_values"] != nlohmann::ordered_json::array({1, 1})) return fail("cross values " + rep.details["cross_values"].dump());
  if (!rep.details["hom_antisymmetry_fails"].get<bool>()) return fail("hom order antisymmetric");
  return {true, "hom vectors of M1, M2 = " + rep.details["hom_m1"].dump()};
}

Outcome theorem_chains() {
  std::vector<std::function<Report()>> reports;
  for (int n = 1; n <= 9; ++n) reports.push_back([n] { return verify_theorem_odd(n, 3); });
  return all_pass(reports);
}

Outcome equivalence(int d, int max_n) {
  std::vector<std::function<Report()>> reports;
  for (int n = 1; n <= max_n; ++n) reports.push_back([n, d] { return verify_equivalence(n, d, 3); });
  return all_pass(reports);
}

Outcome mesh() {
  std::vector<std::function<Report()>> reports;
  for (int n = 1; n <= 9; ++n)
    for (int d = 0; d <= 1; ++d) reports.push_back([n, d] { return verify_mesh(n, d); });
  return all_pass(reports);
}

Outcome cd() {
  std::vector<std::function<Report()>> reports;
  for (int n = 1; n <= 7; ++n) reports.push_back([n] { return verify_cd(n, 1, 3); });
  for (int n = 1; n <= 6; ++n) reports.push_back([n] { return verify_cd(n, 0, 3); });
  return all_pass(reports);
}

Outcome k0_sanity() {
  const auto& p1 = k0_presentation(A(1, 1));
  if (group_name(p1.invariant_factors()) != "Z") return fail("K0(A1, d=1) = " + group_name(p1.invariant_factors()));
  if (!same_class(p1, StableModule{{IndecId::plus(), 1}, {IndecId::minus(), 1}}, {})) return fail("[N+ + N-] != 0");
  const auto& p2 = k0_presentation(A(2, 0));
  if (group_name(p2.invariant_factors()) != "Z/3") return fail("K0(A2, d=0) = " + group_name(p2.invariant_factors()));
  if (!same_class(p2, StableModule::of(IndecId::jordan(2)), StableModule::of(IndecId::jordan(1), 2))) return fail("[M2] != 2[M1]");

  std::size_t decided = 0;
  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= 1; ++d) {
      auto ctx = RingContext::of(A(n, d));
      auto mods = enumerate_modules(ctx.spec, 3);
      for (const auto& m : mods)
        for (const auto& nn : mods) {
          if (!st_related(ctx, m, nn)) continue;
          ++decided;
          if (!same_class(*ctx.k0, m, nn)) return fail(to_string(m) + " <=st " + to_string(nn) + " across K0 classes on " + to_string(ctx.spec));
        }
    }
  return {true, std::to_string(decided) + " related pairs share a class"};
}

Outcome knoerrer() {
  std::vector<std::function<Report()>> reports;
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 1; ++d) reports.push_back([n, d] { return verify_knoerrer(n, d, 2); });
  return all_pass(reports);
}

Outcome stabilization() {
  std::vector<std::function<Report()>> reports;
  for (int n = 1; n <= 9; ++n) reports.push_back([n] { return verify_stabilization(n, 1); });
  return all_pass(reports);
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "hom value [I_i, I_1] = 2", 30, hom_values},
      {2, "branch vanishing [N+, N-] = 0", 30, branch_vanishing},
      {3, "hom order counterexample on A2, d = 0", 5, counterexample},
      {4, "classification chains carry witnesses", 120, theorem_chains},
      {5, "order equivalence scan, d = 1", 600, [] { return equivalence(1, 7); }},
      {6, "dominance cross-check scan, d = 0", 600, [] { return equivalence(0, 6); }},
      {7, "mesh relation", 120, mesh},
      {8, "M + ΩM = N + ΩN for equal hom vectors", 600, cd},
      {9, "K0 sanity", 10, k0_sanity},
      {10, "reduction invariance", 120, knoerrer},
      {11, "degree bound stabilization", 120, stabilization},
  };
  return list;
}

bool run_one(const Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = c.body();
  } catch (const std::exception& e) {
    out = fail(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.pass && seconds > c.budget_seconds) {
    out = fail("took longer than " + std::to_string(static_cast<int>(c.budget_seconds)) + " s");
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << timing << ")";
  if (!out.note.empty()) std::cout << ": " << out.note;
  std::cout << std::endl;
  return out.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long k = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || k < 1 || k > static_cast<long>(criteria().size())) {
      std::cerr << "usage: acceptance [criterion 1-" << criteria().size() << " ...]\n";
      return 2;
    }
    wanted.push_back(static_cast<int>(k));
  }
  bool ok = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    ok = run_one(c) && ok;
  }
  return ok ? 0 : 1;
}
