#include "cmdegen/verify.hpp"

#include <algorithm>
#include <optional>

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/degen.hpp"
#include "cmdegen/errors.hpp"
#include "cmdegen/parallel.hpp"

namespace cmdegen {

using ojson = nlohmann::ordered_json;

ojson to_json(const Report& report) {
  ojson j;
  j["schema"] = "cm-degen/1";
  j["check"] = report.check;
  j["ring"] = to_string(report.spec);
  j["n"] = report.spec.n;
  j["d"] = report.spec.d;
  j["bound"] = report.bound;
  j["status"] = report.pass ? "pass" : "fail";
  j["checked"] = report.checked;
  j["details"] = report.details;
  j["counterexample"] = report.counterexample;
  return j;
}

namespace {

ojson table_json(const HomTable& table) {
  ojson labels = ojson::array();
  for (const auto& x : table.labels()) labels.push_back(to_string(x));
  return {{"labels", labels}, {"dims", table.dims()}};
}

ojson pair_payload(const RingContext& ctx, const StableModule& m, const StableModule& n, const std::string& mode) {
  ojson j;
  j["ring"] = to_string(ctx.spec);
  j["m"] = to_string(m);
  j["n"] = to_string(n);
  j["hom_m"] = hom_vector(*ctx.table, m);
  j["hom_n"] = hom_vector(*ctx.table, n);
  j["class_m"] = k0_class(*ctx.k0, m).coords;
  j["class_n"] = k0_class(*ctx.k0, n).coords;
  j["table"] = table_json(*ctx.table);
  // The offending order goes first; the other one is included for comparison.
  ojson replay = ojson::array();
  for (const std::string& flag : {mode, std::string(mode == "--st" ? "--hom" : "--st")}) {
    replay.push_back("cm-degen order --ring " + to_string(ctx.spec) + " " + flag + " \"" + to_string(m) + "\" \"" +
                     to_string(n) + "\"");
  }
  j["replay"] = replay;
  return j;
}

// Runs `test(i, j)` over all ordered pairs of `mods` in parallel; returns the
// lexicographically first failing pair, if any, and counts failures.
template <class Test>
std::pair<std::optional<std::pair<std::size_t, std::size_t>>, std::size_t> scan_pairs(
    const std::vector<StableModule>& mods, Test test) {
  const std::size_t k = mods.size();
  std::vector<std::optional<std::size_t>> first_bad(k);
  std::vector<std::size_t> bad_count(k, 0);
  parallel_for(k, [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!test(i, j)) {
        if (!first_bad[i]) first_bad[i] = j;
        ++bad_count[i];
      }
    }
  });
  std::size_t total = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t i = 0; i < k; ++i) {
    total += bad_count[i];
    if (!first && first_bad[i]) first = std::make_pair(i, *first_bad[i]);
  }
  return {first, total};
}

SingularitySpec ring(int n, int d) {
  SingularitySpec s{'A', n, d};
  validate(s);
  return s;
}

std::vector<std::vector<StableModule>> theorem_chains(const SingularitySpec& spec) {
  std::vector<std::vector<StableModule>> chains;
  const int n = spec.n;
  std::vector<StableModule> ideals{{}};
  for (int i = 1; i <= n / 2; ++i) ideals.push_back(StableModule::of(IndecId::ideal(i)));
  if (n % 2 == 0) {
    chains.push_back(ideals);
    return chains;
  }
  const auto branches = StableModule{{IndecId::plus(), 1}, {IndecId::minus(), 1}};
  auto first = ideals;
  first.push_back(branches);
  chains.push_back(first);
  for (const auto& sign : {IndecId::plus(), IndecId::minus()}) {
    std::vector<StableModule> c;
    for (const auto& ideal : ideals) c.push_back(StableModule::of(sign) + ideal);
    c.push_back(StableModule::of(sign) + branches);
    chains.push_back(c);
  }
  return chains;
}

}  // namespace

Report verify_theorem_odd(int n, int bound, const OracleConfig& config) {
  Report rep{"theorem-odd", ring(n, 1), bound};
  auto ctx = RingContext::of(rep.spec, config);
  ojson steps = ojson::array();
  for (const auto& c : theorem_chains(rep.spec)) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i].total() > bound || c[i + 1].total() > bound) continue;
      ++rep.checked;
      ojson step{{"m", to_string(c[i])}, {"n", to_string(c[i + 1])}};
      std::string error;
      bool ok = false;
      try {
        auto dec = leq_st(ctx, c[i], c[i + 1], true);
        ok = dec.leq && dec.witness.has_value();
        if (ok) {
          validate_witness(ctx, *dec.witness);
          step["z"] = to_string(dec.witness->z);
          step["trace_steps"] = dec.witness->trace.size();
        } else {
          error = dec.reason;
        }
      } catch (const ConsistencyError& e) {
        ok = false;
        error = e.what();
      }
      step["status"] = ok ? "pass" : "fail";
      steps.push_back(step);
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.counterexample = pair_payload(ctx, c[i], c[i + 1], "--st");
        rep.counterexample["error"] = error;
      }
    }
  }
  rep.details["steps"] = steps;
  return rep;
}

Report verify_equivalence(int n, int d, int bound, const OracleConfig& config) {
  Report rep{"equivalence", ring(n, d), bound};
  auto ctx = RingContext::of(rep.spec, config);
  auto mods = enumerate_modules(ctx.spec, bound);
  rep.checked = mods.size() * mods.size();

  std::vector<std::string> errors(mods.size());
  std::size_t hom_only = 0, oracle_only = 0, related = 0, class_violations = 0, hom_violations = 0;
  std::vector<std::vector<char>> lhs(mods.size(), std::vector<char>(mods.size())), rhs = lhs;
  parallel_for(mods.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < mods.size(); ++j) {
      lhs[i][j] = leq_hom(*ctx.table, mods[i], mods[j]) && same_class(*ctx.k0, mods[i], mods[j]);
      if (ctx.spec.d == 1) {
        try {
          auto w = witness(ctx, mods[i], mods[j]);
          rhs[i][j] = w.has_value();
        } catch (const ConsistencyError& e) {
          rhs[i][j] = 0;
          if (errors[i].empty()) errors[i] = e.what();
        }
      } else {
        rhs[i][j] = dominance_certificate(ctx, mods[i], mods[j]).dominates;
      }
    }
  });

  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = 0; j < mods.size(); ++j) {
      if (rhs[i][j]) {
        ++related;
        if (!same_class(*ctx.k0, mods[i], mods[j])) ++class_violations;
        if (!leq_hom(*ctx.table, mods[i], mods[j])) ++hom_violations;
      }
      if (lhs[i][j] == rhs[i][j]) continue;
      (lhs[i][j] ? hom_only : oracle_only) += 1;
      if (!first) first = std::make_pair(i, j);
    }
  }
  rep.details["decided_related"] = related;
  rep.details["hom_and_class_only"] = hom_only;
  rep.details[ctx.spec.d == 1 ? "witness_only" : "dominance_only"] = oracle_only;
  rep.details["related_with_different_class"] = class_violations;
  rep.details["related_not_hom_below"] = hom_violations;
  rep.pass = !first && class_violations == 0 && (ctx.spec.d == 0 || hom_violations == 0);
  if (first) {
    const auto& [i, j] = *first;
    rep.counterexample = pair_payload(ctx, mods[i], mods[j], ctx.spec.d == 1 ? "--st" : "--hom");
    rep.counterexample["hom_and_class"] = static_cast<bool>(lhs[i][j]);
    rep.counterexample[ctx.spec.d == 1 ? "witness" : "dominance"] = static_cast<bool>(rhs[i][j]);
    if (ctx.spec.d == 0) {
      auto cert = dominance_certificate(ctx, mods[i], mods[j]);
      rep.counterexample["partition_m"] = cert.partition_m;
      rep.counterexample["partition_n"] = cert.partition_n;
    }
    if (!errors[i].empty()) rep.counterexample["error"] = errors[i];
  }
  return rep;
}

Report verify_counterexample(const SingularitySpec& spec, const OracleConfig& config) {
  validate(spec);
  if (spec.n != 2 || spec.d % 2 != 0) throw DomainError("the counterexample check needs A_2 with even d");
  Report rep{"counterexample", spec, 0};
  auto ctx = RingContext::of(spec, config);
  const auto m1 = StableModule::of(IndecId::jordan(1));
  const auto m2 = StableModule::of(IndecId::jordan(2));
  const auto& t = *ctx.table;
  const int cross12 = t(IndecId::jordan(1), IndecId::jordan(2));
  const int cross21 = t(IndecId::jordan(2), IndecId::jordan(1));
  const auto h1 = hom_vector(t, m1), h2 = hom_vector(t, m2);
  const bool hom_both = leq_hom(t, m1, m2) && leq_hom(t, m2, m1);
  const bool st_12 = st_related(ctx, m1, m2), st_21 = st_related(ctx, m2, m1);
  rep.checked = 1;
  rep.details["cross_values"] = {cross12, cross21};
  rep.details["hom_m1"] = h1;
  rep.details["hom_m2"] = h2;
  rep.details["hom_antisymmetry_fails"] = hom_both && m1 != m2;
  rep.details["st_m1_m2"] = st_12;
  rep.details["st_m2_m1"] = st_21;
  rep.pass = cross12 == 1 && cross21 == 1 && h1 == h2 && hom_both && m1 != m2 && !(st_12 && st_21);
  if (!rep.pass) rep.counterexample = pair_payload(ctx, m1, m2, "--hom");
  return rep;
}

Report verify_mesh(int n, int d, const OracleConfig& config) {
  Report rep{"mesh", ring(n, d), 0};
  auto r = knoerrer_reduce(rep.spec);
  try {
    const auto& table = hom_table(r, config);
    const auto& labels = table.labels();
    rep.checked = labels.size() * labels.size();
    auto bad = mesh_violations(r, table.dims());
    std::optional<std::pair<IndecId, IndecId>> asym;
    for (const auto& x : labels)
      for (const auto& y : labels)
        if (!asym && table(x, y) != table(shift(r, x, -1), shift(r, y, -1))) asym = std::make_pair(x, y);
    rep.details["mesh_violations"] = bad.size();
    rep.details["shift_symmetric"] = !asym.has_value();
    rep.details["table"] = table_json(table);
    rep.pass = bad.empty() && !asym;
    if (!bad.empty()) {
      rep.counterexample = {{"u", to_string(bad.front().u)},
                            {"x", to_string(bad.front().x)},
                            {"lhs", bad.front().lhs},
                            {"rhs", bad.front().rhs}};
    } else if (asym) {
      rep.counterexample = {{"x", to_string(asym->first)}, {"y", to_string(asym->second)}};
    }
  } catch (const ConsistencyError& e) {
    rep.pass = false;
    rep.counterexample = {{"error", e.what()}};
  }
  return rep;
}

Report verify_cd(int n, int d, int bound, const OracleConfig& config) {
  Report rep{"cd", ring(n, d), bound};
  auto ctx = RingContext::of(rep.spec, config);
  auto mods = enumerate_modules(ctx.spec, bound);
  rep.checked = mods.size() * mods.size();
  std::vector<std::size_t> applicable(mods.size(), 0);
  auto [first, failures] = scan_pairs(mods, [&](std::size_t i, std::size_t j) {
    auto res = cd_consequence(*ctx.table, mods[i], mods[j]);
    if (res.status != CdResult::Status::NotApplicable) ++applicable[i];
    return res.status != CdResult::Status::Violated;
  });
  std::size_t total_applicable = 0;
  for (auto a : applicable) total_applicable += a;
  rep.details["equal_hom_vector_pairs"] = total_applicable;
  rep.details["violations"] = failures;
  rep.pass = failures == 0;
  if (first) {
    const auto& a = mods[first->first];
    const auto& b = mods[first->second];
    auto res = cd_consequence(*ctx.table, a, b);
    rep.counterexample = pair_payload(ctx, a, b, "--hom");
    rep.counterexample["m_plus_syzygy"] = to_string(*res.lhs);
    rep.counterexample["n_plus_syzygy"] = to_string(*res.rhs);
  }
  return rep;
}

Report verify_knoerrer(int n, int d, int bound, const OracleConfig& config) {
  Report rep{"knoerrer", ring(n, d), bound};
  auto low = RingContext::of(rep.spec, config);
  auto high = RingContext::of(ring(n, d + 2), config);
  auto mods_low = enumerate_modules(SingularitySpec{'A', n, d}, bound);
  auto mods_high = enumerate_modules(SingularitySpec{'A', n, d + 2}, bound);
  rep.details["lifted_ring"] = to_string(SingularitySpec{'A', n, d + 2});
  if (mods_low != mods_high || classify(rep.spec) != classify(SingularitySpec{'A', n, d + 2})) {
    rep.pass = false;
    rep.counterexample = {{"error", "indecomposable lists differ"}};
    return rep;
  }
  rep.checked = mods_low.size() * mods_low.size();
  auto [first, failures] = scan_pairs(mods_low, [&](std::size_t i, std::size_t j) {
    return st_related(low, mods_low[i], mods_low[j]) == st_related(high, mods_high[i], mods_high[j]);
  });
  rep.details["disagreements"] = failures;
  rep.pass = failures == 0;
  if (first) rep.counterexample = pair_payload(low, mods_low[first->first], mods_low[first->second], "--st");
  return rep;
}

Report verify_stabilization(int n, int d, const OracleConfig& config) {
  Report rep{"stabilization", ring(n, d), 0};
  auto auto_config = config;
  auto_config.bound = DegreeBound::automatic_bound();
  const auto& cert = hom_table_certified(rep.spec, auto_config);
  const auto& labels = cert.table.labels();
  int widest = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = 0; b < labels.size(); ++b) {
      ++rep.checked;
      const auto& cell = cert.cells[a][b];
      if (!cell.rounds.empty()) widest = std::max(widest, cell.rounds.back().first);
      bool ok = cell.stabilized && (cell.path != "matrix-factorization" ||
                                    (cell.rounds.size() >= 2 &&
                                     cell.rounds.back().second == cell.rounds[cell.rounds.size() - 2].second));
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.counterexample = {{"x", to_string(labels[a])}, {"y", to_string(labels[b])}, {"rounds", cell.rounds}};
      }
    }
  }
  rep.details["path"] = knoerrer_reduce(rep.spec).d == 1 ? "matrix-factorization" : "artinian";
  rep.details["widest_window"] = widest;
  return rep;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"mesh",     "stabilization", "cd",            "knoerrer",
                                              "equivalence", "theorem-odd", "counterexample"};
  return names;
}

std::vector<std::string> default_checks(const SingularitySpec& spec) {
  auto r = knoerrer_reduce(spec);
  std::vector<std::string> out{"mesh", "stabilization", "cd", "knoerrer", "equivalence"};
  if (r.d == 1) out.push_back("theorem-odd");
  if (r.n == 2 && r.d == 0) out.push_back("counterexample");
  return out;
}

Report run_check(const std::string& name, const SingularitySpec& spec, int bound, const OracleConfig& config) {
  validate(spec);
  // Scans run on the ring as given; reduction happens inside RingContext.
  if (name == "mesh") return verify_mesh(spec.n, spec.d, config);
  if (name == "stabilization") return verify_stabilization(spec.n, spec.d, config);
  if (name == "cd") return verify_cd(spec.n, spec.d, bound, config);
  if (name == "knoerrer") return verify_knoerrer(spec.n, spec.d, bound, config);
  if (name == "equivalence") return verify_equivalence(spec.n, spec.d, bound, config);
  if (name == "theorem-odd") {
    if (spec.d % 2 != 1) throw DomainError("theorem-odd needs odd Krull dimension");
    auto rep = verify_theorem_odd(spec.n, bound, config);
    rep.spec = spec;
    return rep;
  }
  if (name == "counterexample") return verify_counterexample(spec, config);
  throw DomainError("unknown check '" + name + "'");
}

}  // namespace cmdegen
