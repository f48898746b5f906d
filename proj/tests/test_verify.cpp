#include <gtest/gtest.h>

#include <sstream>

#include "cmdegen/cli.hpp"
#include "cmdegen/errors.hpp"
#include "cmdegen/verify.hpp"

using namespace cmdegen;

namespace {

SingularitySpec A(int n, int d) { return {'A', n, d}; }

// Splits `cm-degen order --ring R --hom "m" "n"` into run() arguments.
std::vector<std::string> replay_args(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string word;
  in >> word;  // program name
  std::string quoted;
  while (in >> word) {
    if (!quoted.empty()) {
      quoted += " " + word;
      if (word.back() == '"') {
        out.push_back(quoted.substr(1, quoted.size() - 2));
        quoted.clear();
      }
    } else if (word.front() == '"') {
      if (word.size() > 1 && word.back() == '"') {
        out.push_back(word.substr(1, word.size() - 2));
      } else {
        quoted = word;
      }
    } else {
      out.push_back(word);
    }
  }
  return out;
}

}  // namespace

TEST(Verify, CounterexampleCheck) {
  auto rep = verify_counterexample(A(2, 0));
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.details["hom_antisymmetry_fails"].get<bool>());
  EXPECT_FALSE(rep.details["st_m1_m2"].get<bool>());
  EXPECT_TRUE(verify_counterexample(A(2, 4)).pass);
  EXPECT_THROW(verify_counterexample(A(3, 0)), DomainError);
  EXPECT_THROW(verify_counterexample(A(2, 1)), DomainError);
}

TEST(Verify, OddClassificationChains) {
  for (int n = 1; n <= 5; ++n) {
    auto rep = verify_theorem_odd(n, 3);
    EXPECT_TRUE(rep.pass) << to_json(rep).dump();
    EXPECT_GT(rep.checked, 0u);
  }
}

TEST(Verify, PassingChecks) {
  EXPECT_TRUE(verify_equivalence(3, 1, 2).pass);
  EXPECT_TRUE(verify_mesh(4, 0).pass);
  EXPECT_TRUE(verify_mesh(5, 1).pass);
  EXPECT_TRUE(verify_cd(3, 0, 2).pass);
  EXPECT_TRUE(verify_knoerrer(3, 1, 2).pass);
  EXPECT_TRUE(verify_stabilization(6, 1).pass);
}

TEST(Verify, ArtinianEquivalenceFailsWithReplayableCounterexample) {
  auto rep = verify_equivalence(2, 0, 3);
  ASSERT_FALSE(rep.pass);
  const auto& ce = rep.counterexample;
  EXPECT_EQ(ce["m"], "3*M1");
  EXPECT_EQ(ce["n"], "3*M2");
  EXPECT_TRUE(ce["hom_and_class"].get<bool>());
  EXPECT_FALSE(ce["dominance"].get<bool>());
  ASSERT_EQ(ce["replay"].size(), 2u);

  std::ostringstream out, err;
  EXPECT_EQ(run(replay_args(ce["replay"][0].get<std::string>()), out, err), kSuccess) << err.str();
  std::ostringstream out2, err2;
  EXPECT_EQ(run(replay_args(ce["replay"][1].get<std::string>()), out2, err2), kNegative) << err2.str();
}

TEST(Verify, ReportJson) {
  auto j = to_json(verify_mesh(3, 1));
  EXPECT_EQ(j["schema"], "cm-degen/1");
  EXPECT_EQ(j["check"], "mesh");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["counterexample"].is_null());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "check", "ring", "n", "d", "bound", "status", "checked", "details",
                                             "counterexample"}));
}

TEST(Verify, ReportsAreDeterministic) {
  for (const auto& name : check_names()) {
    auto spec = name == "counterexample" ? A(2, 0) : name == "theorem-odd" ? A(3, 1) : A(3, 0);
    auto a = to_json(run_check(name, spec, 2)).dump();
    auto b = to_json(run_check(name, spec, 2)).dump();
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Verify, DefaultChecks) {
  auto odd = default_checks(A(3, 1));
  EXPECT_NE(std::find(odd.begin(), odd.end(), "theorem-odd"), odd.end());
  EXPECT_EQ(std::find(odd.begin(), odd.end(), "counterexample"), odd.end());
  auto a2 = default_checks(A(2, 0));
  EXPECT_NE(std::find(a2.begin(), a2.end(), "counterexample"), a2.end());
  EXPECT_EQ(std::find(a2.begin(), a2.end(), "theorem-odd"), a2.end());
  EXPECT_THROW(run_check("nonsense", A(3, 1), 2), DomainError);
}
