#include "cmdegen/cli.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/degen.hpp"
#include "cmdegen/errors.hpp"
#include "cmdegen/expr.hpp"
#include "cmdegen/k0.hpp"
#include "cmdegen/oracle.hpp"
#include "cmdegen/verify.hpp"

namespace cmdegen {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "cm-degen/1";

struct Options {
  std::string ring = "A:1:1";
  std::string field = "qi";
  std::string degree_bound = "auto";
  std::string json_target;
  std::string dot_target;
  std::string class_expr;
  std::string check;
  int bound = 3;
  bool certify = false;
  bool with_witness = false;
  bool hom_mode = false;
  bool st_mode = false;
  std::vector<std::string> exprs;
};

ojson header(const std::string& command, const SingularitySpec& spec) {
  ojson j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["ring"] = to_string(spec);
  j["reduced"] = to_string(knoerrer_reduce(spec));
  return j;
}

ojson module_json(const StableModule& m) {
  ojson j = ojson::object();
  for (const auto& [id, c] : m.multiplicities()) j[to_string(id)] = c;
  return j;
}

ojson delta_json(const DeltaFunction& f) {
  ojson j = ojson::object();
  for (std::size_t i = 0; i < f.labels.size(); ++i) j[to_string(f.labels[i])] = f.values[i];
  return j;
}

ojson triangle_json(const TriangleObj& t) {
  return {{"z", to_string(t.z)}, {"y", to_string(t.y)}, {"x", to_string(t.x)}};
}

ojson witness_json(const Witness& w) {
  ojson j;
  j["m"] = to_string(w.m);
  j["n"] = to_string(w.n);
  j["common"] = to_string(w.common);
  j["z"] = to_string(w.z);
  j["triangle"] = triangle_json(w.triangle);
  ojson r = ojson::object();
  for (const auto& [id, v] : w.r) r[to_string(id)] = v;
  j["r"] = r;
  ojson chosen = ojson::array();
  for (const auto& x : w.chosen) chosen.push_back(to_string(x));
  j["chosen"] = chosen;
  j["n1"] = to_string(w.n1);
  j["n2"] = to_string(w.n2);
  j["n3"] = to_string(w.n3);
  ojson trace = ojson::array();
  for (const auto& step : w.trace) {
    ojson s;
    s["kind"] = step.kind;
    s["glued"] = step.glued ? ojson(to_string(*step.glued)) : ojson();
    s["triangle"] = triangle_json(step.triangle);
    s["delta"] = delta_json(step.delta);
    trace.push_back(s);
  }
  j["trace"] = trace;
  return j;
}

ojson dominance_json(const DominanceCertificate& c) {
  return {{"comparable_dimension", c.comparable_dimension},
          {"pad_m", c.pad_m},
          {"pad_n", c.pad_n},
          {"partition_m", c.partition_m},
          {"partition_n", c.partition_n},
          {"dominates", c.dominates},
          {"paddings_checked", c.paddings_checked}};
}

ojson decision_json(const StDecision& d) {
  ojson j;
  j["leq"] = d.leq;
  j["leq_hom"] = d.leq_hom;
  j["same_class"] = d.same_class;
  if (!d.reason.empty()) j["reason"] = d.reason;
  if (d.dominance) j["dominance"] = dominance_json(*d.dominance);
  if (d.witness) j["witness"] = witness_json(*d.witness);
  return j;
}

OracleConfig oracle_config(const Options& o) {
  OracleConfig c;
  c.field = parse_field(o.field);
  c.bound = parse_degree_bound(o.degree_bound);
  return c;
}

class Output {
 public:
  Output(std::ostream& out) : out_(out) {}

  // "-" or empty means `out`.
  std::ostream& open(const std::string& target) {
    if (target.empty() || target == "-") return out_;
    files_.emplace_back(target, std::ios::binary);
    if (!files_.back()) throw DomainError("cannot open '" + target + "' for writing");
    return files_.back();
  }

 private:
  std::ostream& out_;
  std::deque<std::ofstream> files_;  // stable addresses
};

void emit(Output& output, const Options& o, const ojson& j) {
  // DOT on stdout takes precedence unless JSON was asked for explicitly.
  if (o.dot_target == "-" && o.json_target.empty()) return;
  output.open(o.json_target) << j.dump(2) << "\n";
}

std::pair<StableModule, StableModule> two_modules(const SingularitySpec& spec, const Options& o) {
  if (o.exprs.size() != 2) throw CLI::ValidationError("expected exactly two module expressions");
  return {parse_module_expr(spec, o.exprs[0]), parse_module_expr(spec, o.exprs[1])};
}

int cmd_classify(const SingularitySpec& spec, const Options& o, Output& out) {
  auto j = header("classify", spec);
  auto r = knoerrer_reduce(spec);
  ojson ids = ojson::array();
  for (const auto& x : classify(r)) {
    ids.push_back({{"id", to_string(x)}, {"syzygy", to_string(syzygy(r, x))}, {"tau", to_string(tau(r, x))}});
  }
  j["indecomposables"] = ids;
  emit(out, o, j);
  return kSuccess;
}

int cmd_quiver(const SingularitySpec& spec, const Options& o, Output& out) {
  auto j = header("quiver", spec);
  auto r = knoerrer_reduce(spec);
  ojson tris = ojson::array();
  for (const auto& t : ar_quiver(r)) {
    tris.push_back({{"end", to_string(t.end)}, {"translate", to_string(t.translate)}, {"middle", module_json(t.middle)}});
  }
  j["triangles"] = tris;
  auto star = star_condition(r);
  ojson per = ojson::object();
  for (const auto& [x, ok] : star.per_triangle) per[to_string(x)] = ok;
  j["star_condition"] = {{"holds", star.holds}, {"per_triangle", per}};
  emit(out, o, j);
  return kSuccess;
}

int cmd_hom_table(const SingularitySpec& spec, const Options& o, Output& out) {
  auto config = oracle_config(o);
  const auto& cert = hom_table_certified(spec, config);
  auto j = header("hom-table", spec);
  j["field"] = config.field.name();
  j["degree_bound"] = config.bound.name();
  ojson labels = ojson::array();
  for (const auto& x : cert.table.labels()) labels.push_back(to_string(x));
  j["labels"] = labels;
  j["dims"] = cert.table.dims();
  if (o.certify) {
    ojson cells = ojson::array();
    for (std::size_t a = 0; a < cert.cells.size(); ++a) {
      for (std::size_t b = 0; b < cert.cells[a].size(); ++b) {
        const auto& c = cert.cells[a][b];
        cells.push_back({{"x", labels[a]},
                         {"y", labels[b]},
                         {"dim", c.dim},
                         {"path", c.path},
                         {"rounds", c.rounds},
                         {"stabilized", c.stabilized}});
      }
    }
    j["certificates"] = cells;
    j["mesh_relation"] = "holds";
  }
  emit(out, o, j);
  return kSuccess;
}

int cmd_k0(const SingularitySpec& spec, const Options& o, Output& out) {
  const auto& pres = k0_presentation(spec);
  auto j = header("k0", spec);
  ojson gens = ojson::array();
  for (const auto& g : pres.generators) gens.push_back(to_string(g));
  j["generators"] = gens;
  j["relations"] = pres.relations;
  j["group"] = pres.invariant_factors();
  j["group_name"] = group_name(pres.invariant_factors());
  ojson classes = ojson::array();
  for (const auto& e : o.exprs) {
    auto m = parse_module_expr(spec, e);
    classes.push_back({{"module", to_string(m)}, {"class", k0_class(pres, m).coords}});
  }
  j["classes"] = classes;
  emit(out, o, j);
  return kSuccess;
}

int cmd_order(const SingularitySpec& spec, const Options& o, Output& out) {
  if (o.hom_mode && o.st_mode) throw CLI::ValidationError("--hom and --st are mutually exclusive");
  auto [m, n] = two_modules(spec, o);
  auto ctx = RingContext::of(spec, oracle_config(o));
  auto j = header("order", spec);
  j["m"] = to_string(m);
  j["n"] = to_string(n);
  bool leq = false;
  if (o.hom_mode) {
    j["mode"] = "hom";
    leq = leq_hom(*ctx.table, m, n);
    j["leq"] = leq;
    j["geq"] = leq_hom(*ctx.table, n, m);
    j["delta"] = delta_json(delta(*ctx.table, m, n));
    auto cd = cd_consequence(*ctx.table, m, n);
    j["cd_consequence"] = to_string(cd.status);
  } else {
    j["mode"] = "st";
    auto dec = leq_st(ctx, m, n, o.with_witness);
    leq = dec.leq;
    j["leq"] = leq;
    j["geq"] = st_related(ctx, n, m);
    ojson cert = decision_json(dec);
    cert.erase("leq");
    j["certificate"] = cert;
  }
  emit(out, o, j);
  return leq ? kSuccess : kNegative;
}

int cmd_witness(const SingularitySpec& spec, const Options& o, Output& out) {
  auto [m, n] = two_modules(spec, o);
  auto ctx = RingContext::of(spec, oracle_config(o));
  if (ctx.spec.d != 1) throw DomainError("witnesses are built for odd Krull dimension; use order --st for even d");
  auto w = witness(ctx, m, n);
  auto j = header("witness", spec);
  j["m"] = to_string(m);
  j["n"] = to_string(n);
  j["witness"] = w ? witness_json(*w) : ojson();
  emit(out, o, j);
  return w ? kSuccess : kNegative;
}

int cmd_chain(const SingularitySpec& spec, const Options& o, Output& out) {
  auto [m, n] = two_modules(spec, o);
  auto ctx = RingContext::of(spec, oracle_config(o));
  auto steps = chain(ctx, m, n);
  auto j = header("chain", spec);
  j["m"] = to_string(m);
  j["n"] = to_string(n);
  if (!steps) {
    j["chain"] = nullptr;
    j["steps"] = nullptr;
  } else {
    ojson mods = ojson::array();
    mods.push_back(to_string(m));
    ojson list = ojson::array();
    for (const auto& s : *steps) {
      mods.push_back(to_string(s.to));
      list.push_back({{"from", to_string(s.from)}, {"to", to_string(s.to)}, {"certificate", decision_json(s.decision)}});
    }
    j["chain"] = mods;
    j["steps"] = list;
  }
  emit(out, o, j);
  return steps ? kSuccess : kNegative;
}

int cmd_hasse(const SingularitySpec& spec, const Options& o, Output& out) {
  auto ctx = RingContext::of(spec, oracle_config(o));
  std::optional<StableModule> cls;
  if (!o.class_expr.empty()) cls = parse_module_expr(spec, o.class_expr);
  auto diagram = hasse(ctx, o.bound, cls);
  auto j = header("hasse", spec);
  j["bound"] = o.bound;
  j["class_of"] = cls ? ojson(to_string(*cls)) : ojson();
  ojson nodes = ojson::array();
  for (const auto& m : diagram.nodes) nodes.push_back(to_string(m));
  j["nodes"] = nodes;
  ojson edges = ojson::array();
  for (const auto& [a, b] : diagram.edges) edges.push_back({to_string(diagram.nodes[a]), to_string(diagram.nodes[b])});
  j["edges"] = edges;
  if (!o.dot_target.empty()) {
    out.open(o.dot_target) << to_dot(diagram, "hasse " + to_string(spec));
  }
  emit(out, o, j);
  return kSuccess;
}

int cmd_verify(const SingularitySpec& spec, const Options& o, Output& out) {
  auto config = oracle_config(o);
  std::vector<std::string> checks;
  if (o.check.empty()) {
    checks = default_checks(spec);
  } else {
    checks.push_back(o.check);
  }
  auto& stream = out.open(o.json_target);
  bool all = true;
  for (const auto& name : checks) {
    auto rep = run_check(name, spec, o.bound, config);
    all = all && rep.pass;
    stream << to_json(rep).dump() << "\n";
  }
  return all ? kSuccess : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable degenerations of Cohen-Macaulay modules over A_n singularities", "cm-degen"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "ring spec A:<n>:<d>")->required();
    sub->add_option("--field", o.field, "qi or fp:<p> with p = 1 mod 4");
    sub->add_option("--degree-bound", o.degree_bound, "graded window for the oracle, or auto");
    sub->add_option("--json", o.json_target, "JSON destination, - for stdout");
  };

  auto* classify_cmd = app.add_subcommand("classify", "list indecomposables with Ω and τ");
  add_common(classify_cmd);
  auto* quiver_cmd = app.add_subcommand("quiver", "AR mesh data");
  add_common(quiver_cmd);
  auto* hom_cmd = app.add_subcommand("hom-table", "stable Hom dimensions between indecomposables");
  add_common(hom_cmd);
  hom_cmd->add_flag("--certify", o.certify, "include stabilization metadata");
  auto* k0_cmd = app.add_subcommand("k0", "Grothendieck group and classes");
  add_common(k0_cmd);
  k0_cmd->add_option("exprs", o.exprs, "module expressions");
  auto* order_cmd = app.add_subcommand("order", "compare two modules");
  add_common(order_cmd);
  order_cmd->add_flag("--hom", o.hom_mode, "stable hom order");
  order_cmd->add_flag("--st", o.st_mode, "stable degeneration order (default)");
  order_cmd->add_flag("--witness", o.with_witness, "attach a degeneration witness");
  order_cmd->add_option("exprs", o.exprs, "M N")->expected(2)->required();
  auto* witness_cmd = app.add_subcommand("witness", "build a degeneration witness");
  add_common(witness_cmd);
  witness_cmd->add_option("exprs", o.exprs, "M N")->expected(2)->required();
  auto* chain_cmd = app.add_subcommand("chain", "chain of covering degenerations");
  add_common(chain_cmd);
  chain_cmd->add_option("exprs", o.exprs, "M N")->expected(2)->required();
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the degeneration order");
  add_common(hasse_cmd);
  hasse_cmd->add_option("--bound", o.bound, "maximum total multiplicity")->required();
  hasse_cmd->add_option("--class", o.class_expr, "restrict to the K0 class of this module");
  hasse_cmd->add_option("--dot", o.dot_target, "DOT destination, - for stdout");
  auto* verify_cmd = app.add_subcommand("verify", "run reproducibility checks");
  add_common(verify_cmd);
  verify_cmd->add_option("--bound", o.bound, "maximum total multiplicity in scans");
  verify_cmd->add_option("--check", o.check, "run a single check")
      ->check(CLI::IsMember(check_names()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const auto spec = parse_ring(o.ring);
    Output output(out);
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "classify") return cmd_classify(spec, o, output);
    if (name == "quiver") return cmd_quiver(spec, o, output);
    if (name == "hom-table") return cmd_hom_table(spec, o, output);
    if (name == "k0") return cmd_k0(spec, o, output);
    if (name == "order") return cmd_order(spec, o, output);
    if (name == "witness") return cmd_witness(spec, o, output);
    if (name == "chain") return cmd_chain(spec, o, output);
    if (name == "hasse") return cmd_hasse(spec, o, output);
    if (name == "verify") return cmd_verify(spec, o, output);
    err << "error: unknown command " << name << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const StabilizationError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  }
}

}  // namespace cmdegen
