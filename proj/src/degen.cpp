#include "cmdegen/degen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/errors.hpp"
#include "cmdegen/parallel.hpp"

namespace cmdegen {

RingContext RingContext::of(const SingularitySpec& spec, const OracleConfig& config) {
  auto r = knoerrer_reduce(spec);
  return {r, &hom_table(r, config), &k0_presentation(r)};
}

namespace {

void require_odd_dimension(const RingContext& ctx, const char* what) {
  if (ctx.spec.d != 1) throw DomainError(std::string(what) + " needs a ring of odd Krull dimension");
}

StableModule common_part(const StableModule& a, const StableModule& b) {
  StableModule c;
  for (const auto& [id, k] : a.multiplicities()) {
    int both = std::min(k, b.mu(id));
    if (both > 0) c.add(id, both);
  }
  return c;
}

int dimension(const StableModule& m) {
  int dim = 0;
  for (const auto& [id, c] : m.multiplicities()) dim += c * id.index;
  return dim;
}

std::string describe(const TriangleObj& t) {
  return "(" + to_string(t.z) + ", " + to_string(t.y) + ", " + to_string(t.x) + ")";
}

}  // namespace

TriangleObj ar_triangle_obj(const SingularitySpec& spec, const IndecId& x) {
  auto tri = ar_triangle(spec, x);
  return {StableModule::of(tri.translate), tri.middle, StableModule::of(tri.end), {"AR(" + to_string(x) + ")"}};
}

TriangleObj split_triangle(const StableModule& u) {
  return {u, u, {}, {"split(" + to_string(u) + ")"}};
}

TriangleObj direct_sum(const TriangleObj& a, const TriangleObj& b) {
  TriangleObj out{a.z + b.z, a.y + b.y, a.x + b.x, a.provenance};
  out.provenance.insert(out.provenance.end(), b.provenance.begin(), b.provenance.end());
  return out;
}

DeltaFunction delta_of(const RingContext& ctx, const TriangleObj& t) {
  return delta_triangle(*ctx.table, t.z, t.y, t.x);
}

int ar_self_delta(const RingContext& ctx, const IndecId& x) {
  int value = delta_of(ctx, ar_triangle_obj(ctx.spec, x))(x);
  int expected = syzygy(ctx.spec, x) == x ? 2 : 1;
  if (value != expected) {
    throw ConsistencyError("AR triangle of " + to_string(x) + " has δ " + std::to_string(value) + " at its end, expected " +
                           std::to_string(expected));
  }
  return value;
}

std::optional<ARExpression> irredundant_expression(const RingContext& ctx, const StableModule& m,
                                                   const StableModule& n) {
  require_odd_dimension(ctx, "an irredundant AR expression");
  if (!leq_hom(*ctx.table, m, n) || !same_class(*ctx.k0, m, n)) return std::nullopt;
  auto d = delta(*ctx.table, m, n);

  ARExpression expr;
  std::set<IndecId> seen;
  for (const auto& x : ctx.table->labels()) {
    if (seen.count(x)) continue;
    auto partner = syzygy(ctx.spec, x);
    seen.insert(x);
    seen.insert(partner);
    int self = ar_self_delta(ctx, x);
    if (d(x) % self != 0) {
      throw ConsistencyError("δ(" + to_string(x) + ") = " + std::to_string(d(x)) + " is not divisible by " +
                             std::to_string(self));
    }
    if (partner != x && d(x) != d(partner)) {
      throw ConsistencyError("δ differs on the shift orbit of " + to_string(x));
    }
    int c = d(x) / self;
    if (c > 0) expr.coefficients[x] = c;
  }

  // Exact check in the free group on the indecomposables.
  auto lhs = coordinates(ctx.spec, n);
  auto from_m = coordinates(ctx.spec, m);
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= from_m[i];
  std::vector<int> rhs(lhs.size(), 0);
  for (const auto& [x, c] : expr.coefficients) {
    auto tri = ar_triangle(ctx.spec, x);
    rhs[index_of(ctx.spec, tri.end)] += c;
    rhs[index_of(ctx.spec, tri.translate)] += c;
    for (const auto& [w, k] : tri.middle.multiplicities()) rhs[index_of(ctx.spec, w)] -= c * k;
  }
  if (lhs != rhs) {
    throw ConsistencyError("AR expression for [" + to_string(n) + "] - [" + to_string(m) +
                           "] does not hold in the free group");
  }
  return expr;
}

TriangleObj ladder_compose(const TriangleObj& first, const TriangleObj& second, const StableModule& shared_n1,
                           const StableModule& shared_n2) {
  if (first.z != shared_n1) throw DomainError("ladder: first triangle does not start at " + to_string(shared_n1));
  if (second.x != shared_n2) throw DomainError("ladder: second triangle does not end at " + to_string(shared_n2));
  if (!first.y.contains(shared_n2)) {
    throw DomainError("ladder: middle " + to_string(first.y) + " lacks " + to_string(shared_n2));
  }
  if (!second.y.contains(shared_n1)) {
    throw DomainError("ladder: middle " + to_string(second.y) + " lacks " + to_string(shared_n1));
  }
  TriangleObj out{second.z, (first.y - shared_n2) + (second.y - shared_n1), first.x, {}};
  out.provenance.push_back("ladder[" + describe(first) + " ; " + describe(second) + "]");
  return out;
}

TriangleObj key_lemma_transform(const RingContext& ctx, TriangleObj sigma, const DeltaFunction& target,
                                std::vector<TraceStep>* trace) {
  auto current = delta_of(ctx, sigma);
  if (!pointwise_leq(current, target)) throw ConsistencyError("key lemma: δ_Σ exceeds the target");
  long budget = 0;
  for (int v : target.values) budget += std::max(v, 0);
  budget *= static_cast<long>(std::max<std::size_t>(target.labels.size(), 1));

  for (long iteration = 0;; ++iteration) {
    std::optional<IndecId> w1;
    for (const auto& [w, c] : sigma.y.multiplicities()) {
      if (current(w) < target(w)) {
        w1 = w;
        break;
      }
    }
    if (!w1) return sigma;
    if (iteration >= budget) {
      throw ConsistencyError("key lemma did not terminate within " + std::to_string(budget) + " steps from " +
                             describe(sigma));
    }
    auto ar = ar_triangle_obj(ctx.spec, *w1);
    auto psi = direct_sum(ar, split_triangle(sigma.z));
    auto theta = ladder_compose(sigma, psi, sigma.z, StableModule::of(*w1));
    auto next = delta_of(ctx, theta);
    if (next != current + delta_of(ctx, ar)) throw ConsistencyError("ladder step broke δ additivity");
    if (!pointwise_leq(next, target)) {
      throw ConsistencyError("key lemma overshoots the target after gluing AR(" + to_string(*w1) + ")");
    }
    if (trace) trace->push_back({"key-lemma", w1, theta, next});
    sigma = std::move(theta);
    current = std::move(next);
  }
}

std::optional<Witness> witness(const RingContext& ctx, const StableModule& m, const StableModule& n) {
  require_odd_dimension(ctx, "witness construction");
  if (!leq_hom(*ctx.table, m, n) || !same_class(*ctx.k0, m, n)) return std::nullopt;

  Witness w;
  w.m = m;
  w.n = n;
  w.common = common_part(m, n);
  const auto mr = m - w.common;
  const auto nr = n - w.common;
  auto split = split_triangle(w.common);
  w.trace.push_back({"cancel", std::nullopt, split, delta_of(ctx, split)});

  if (!irredundant_expression(ctx, mr, nr)) throw ConsistencyError("cancelled pair lost its preconditions");
  const auto target = delta(*ctx.table, mr, nr);

  for (const auto& x : ctx.table->labels()) {
    int rx = std::min(target(x) / ar_self_delta(ctx, x), nr.mu(x));
    if (rx > 0) w.r[x] = rx;
  }
  // G: from each shift orbit in F keep the member with the larger r; ties go
  // to the earlier id.
  for (const auto& [x, rx] : w.r) {
    auto partner = syzygy(ctx.spec, x);
    auto it = w.r.find(partner);
    if (partner != x && it != w.r.end() && (it->second > rx || (it->second == rx && partner < x))) continue;
    w.chosen.push_back(x);
  }
  w.n3 = nr;
  for (const auto& x : w.chosen) {
    int rx = w.r.at(x);
    w.n1.add(x, rx);
    if (nr.mu(x) > rx) w.n2.add(x, nr.mu(x) - rx);
    w.n3.remove(x, nr.mu(x));
  }

  TriangleObj sigma{{}, {}, {}, {}};
  for (const auto& x : w.chosen)
    for (int k = 0; k < w.r.at(x); ++k) sigma = direct_sum(sigma, ar_triangle_obj(ctx.spec, x));
  w.trace.push_back({"ar-sum", std::nullopt, sigma, delta_of(ctx, sigma)});

  auto phi = key_lemma_transform(ctx, sigma, target, &w.trace);
  w.z = phi.z;
  if (phi.x != w.n1) throw ConsistencyError("key lemma changed the end term");
  if (mr + w.z != w.n2 + w.n3 + phi.y) {
    throw ConsistencyError("M ⊕ Z = N2 ⊕ N3 ⊕ Y fails: " + to_string(mr + w.z) + " vs " +
                           to_string(w.n2 + w.n3 + phi.y));
  }
  w.triangle = {w.z, m + w.z, n, {"final"}};
  w.trace.push_back({"final", std::nullopt, w.triangle, delta_of(ctx, w.triangle)});
  validate_witness(ctx, w);
  return w;
}

void validate_witness(const RingContext& ctx, const Witness& w) {
  auto fail = [&](const std::string& what) {
    throw ConsistencyError("witness for " + to_string(w.m) + " ≤st " + to_string(w.n) + ": " + what);
  };
  if (w.common != common_part(w.m, w.n)) fail("wrong common summand");
  const auto mr = w.m - w.common;
  const auto nr = w.n - w.common;
  if (w.n1 + w.n2 + w.n3 != nr) fail("N1 ⊕ N2 ⊕ N3 differs from N");
  if (w.trace.size() < 3 || w.trace.front().kind != "cancel" || w.trace[1].kind != "ar-sum" ||
      w.trace.back().kind != "final") {
    fail("malformed trace");
  }
  const auto target = delta(*ctx.table, mr, nr);

  const auto& sum = w.trace[1];
  DeltaFunction expected{ctx.table->labels(), std::vector<int>(ctx.table->size(), 0)};
  for (const auto& x : w.chosen)
    for (int k = 0; k < w.r.at(x); ++k) expected += delta_of(ctx, ar_triangle_obj(ctx.spec, x));
  if (sum.delta != expected || delta_of(ctx, sum.triangle) != expected) fail("δ of the AR sum is not additive");
  if (sum.triangle.x != w.n1) fail("AR sum does not end at N1");
  if (!pointwise_leq(expected, target)) fail("δ of the AR sum exceeds δ_{M,N}");

  const TriangleObj* phi = &sum.triangle;
  for (std::size_t i = 2; i + 1 < w.trace.size(); ++i) {
    const auto& step = w.trace[i];
    if (step.kind != "key-lemma" || !step.glued) fail("unexpected trace step " + step.kind);
    auto ar = ar_triangle_obj(ctx.spec, *step.glued);
    auto redo = ladder_compose(*phi, direct_sum(ar, split_triangle(phi->z)), phi->z, StableModule::of(*step.glued));
    if (redo != step.triangle) fail("ladder step " + std::to_string(i) + " does not replay");
    if (delta_of(ctx, step.triangle) != delta_of(ctx, *phi) + delta_of(ctx, ar) || step.delta != delta_of(ctx, step.triangle)) {
      fail("δ additivity fails at step " + std::to_string(i));
    }
    phi = &step.triangle;
  }
  if (delta_of(ctx, *phi) != target) fail("δ_Φ differs from δ_{M,N}");
  if (phi->z != w.z) fail("Z differs from the start of Φ");
  if (mr + w.z != w.n2 + w.n3 + phi->y) fail("M ⊕ Z = N2 ⊕ N3 ⊕ Y fails");
  const auto& final_triangle = w.trace.back().triangle;
  if (final_triangle != w.triangle || w.triangle.z != w.z || w.triangle.y != w.m + w.z || w.triangle.x != w.n) {
    fail("final triangle is not (Z, M ⊕ Z, N)");
  }
  if (delta_of(ctx, w.triangle) != delta(*ctx.table, w.m, w.n)) fail("δ of the final triangle differs from δ_{M,N}");
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  long sa = 0, sb = 0;
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

namespace {

std::vector<int> padded_partition(const StableModule& m, int pad, int free_size) {
  std::vector<int> parts(static_cast<std::size_t>(pad), free_size);
  for (const auto& [id, c] : m.multiplicities())
    for (int k = 0; k < c; ++k) parts.push_back(id.index);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

DominanceCertificate dominance_certificate(const RingContext& ctx, const StableModule& m, const StableModule& n) {
  if (ctx.spec.d != 0) throw DomainError("dominance applies to rings of even Krull dimension");
  check_module(ctx.spec, m);
  check_module(ctx.spec, n);
  const int free_size = ctx.spec.n + 1;
  const int dm = dimension(m), dn = dimension(n);
  DominanceCertificate cert;
  if ((dm - dn) % free_size != 0) return cert;
  cert.comparable_dimension = true;

  const int bound = dm + dn + free_size;
  std::optional<bool> decided;
  for (int a = 0; a <= bound; ++a) {
    int total = dm + a * free_size;
    if (total < dn) continue;
    int b = (total - dn) / free_size;
    if (b > bound) break;
    auto pm = padded_partition(m, a, free_size);
    auto pn = padded_partition(n, b, free_size);
    bool verdict = dominates(pm, pn);
    ++cert.paddings_checked;
    if (!decided) {
      decided = verdict;
      cert.pad_m = a;
      cert.pad_n = b;
      cert.partition_m = pm;
      cert.partition_n = pn;
      cert.dominates = verdict;
    } else if (*decided != verdict) {
      throw ConsistencyError("dominance depends on the free padding for " + to_string(m) + " and " + to_string(n));
    }
  }
  return cert;
}

bool st_related(const RingContext& ctx, const StableModule& m, const StableModule& n) {
  if (ctx.spec.d == 1) return leq_hom(*ctx.table, m, n) && same_class(*ctx.k0, m, n);
  return dominance_certificate(ctx, m, n).dominates;
}

StDecision leq_st(const RingContext& ctx, const StableModule& m, const StableModule& n, bool with_witness) {
  StDecision out;
  out.leq_hom = leq_hom(*ctx.table, m, n);
  out.same_class = same_class(*ctx.k0, m, n);
  if (ctx.spec.d == 1) {
    out.leq = out.leq_hom && out.same_class;
    if (!out.leq_hom) {
      auto a = hom_vector(*ctx.table, m);
      auto b = hom_vector(*ctx.table, n);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
          out.reason = "[" + to_string(ctx.table->labels()[i]) + ", M] = " + std::to_string(a[i]) + " > " +
                       std::to_string(b[i]) + " = [" + to_string(ctx.table->labels()[i]) + ", N]";
          break;
        }
      }
    } else if (!out.same_class) {
      out.reason = "K0 classes differ";
    }
    if (out.leq && with_witness) out.witness = witness(ctx, m, n);
    return out;
  }
  out.dominance = dominance_certificate(ctx, m, n);
  out.leq = out.dominance->dominates;
  if (!out.dominance->comparable_dimension) {
    out.reason = "dimensions differ modulo " + std::to_string(ctx.spec.n + 1);
  } else if (!out.leq) {
    out.reason = "padded partition of M does not dominate that of N";
  }
  return out;
}

namespace {

// Order used to break ties among candidate covers: fewer summands first,
// then the canonical multiset order.
bool module_before(const StableModule& a, const StableModule& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a < b;
}

void enumerate_box(const SingularitySpec& spec, const std::vector<int>& upper, std::vector<int>& coords, std::size_t i,
                   std::vector<StableModule>& out) {
  if (i == upper.size()) {
    out.push_back(from_coordinates(spec, coords));
    return;
  }
  for (int v = 0; v <= upper[i]; ++v) {
    coords[i] = v;
    enumerate_box(spec, upper, coords, i + 1, out);
  }
  coords[i] = 0;
}

}  // namespace

std::optional<std::vector<ChainStep>> chain(const RingContext& ctx, const StableModule& m, const StableModule& n) {
  if (!st_related(ctx, m, n)) return std::nullopt;
  std::vector<ChainStep> steps;
  if (m == n) return steps;

  // Every L in [M, N] lies in a finite box: for d = 1, μ(L, X) ≤ [X, L] ≤ [X, N]
  // since [X, X] ≥ 1; for d = 0 dominance forces dim L ≤ dim N.
  const auto& labels = ctx.table->labels();
  std::vector<int> upper;
  for (const auto& x : labels) {
    upper.push_back(ctx.spec.d == 1 ? ctx.table->hom(x, n) : dimension(n) / x.index);
  }
  std::vector<StableModule> box;
  std::vector<int> coords(labels.size(), 0);
  enumerate_box(ctx.spec, upper, coords, 0, box);
  std::vector<StableModule> interval;
  for (auto& l : box)
    if (st_related(ctx, m, l) && st_related(ctx, l, n)) interval.push_back(std::move(l));
  std::sort(interval.begin(), interval.end(), module_before);

  const std::size_t k = interval.size();
  std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
  parallel_for(k, [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) rel[i][j] = st_related(ctx, interval[i], interval[j]);
  });
  auto pos = [&](const StableModule& x) {
    return static_cast<std::size_t>(std::find(interval.begin(), interval.end(), x) - interval.begin());
  };

  std::size_t cur = pos(m);
  const std::size_t end = pos(n);
  while (cur != end) {
    std::optional<std::size_t> next;
    for (std::size_t j = 0; j < k && !next; ++j) {
      if (j == cur || !rel[cur][j]) continue;
      bool cover = true;
      for (std::size_t l = 0; l < k && cover; ++l) {
        if (l != cur && l != j && rel[cur][l] && rel[l][j]) cover = false;
      }
      if (cover) next = j;
    }
    if (!next) throw ConsistencyError("no cover found while walking from " + to_string(m) + " to " + to_string(n));
    steps.push_back({interval[cur], interval[*next], leq_st(ctx, interval[cur], interval[*next], true)});
    cur = *next;
  }
  return steps;
}

HasseDiagram hasse(const RingContext& ctx, int bound, const std::optional<StableModule>& class_of,
                   std::size_t node_cap) {
  if (bound < 0) throw DomainError("bound must be non-negative");
  HasseDiagram out;
  std::optional<K0Class> wanted;
  if (class_of) wanted = k0_class(*ctx.k0, *class_of);
  for (auto& m : enumerate_modules(ctx.spec, bound)) {
    if (wanted && k0_class(*ctx.k0, m) != *wanted) continue;
    out.nodes.push_back(std::move(m));
    if (out.nodes.size() > node_cap) {
      throw DomainError("Hasse diagram exceeds " + std::to_string(node_cap) + " nodes; lower the bound");
    }
  }
  const std::size_t k = out.nodes.size();
  std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
  parallel_for(k, [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) rel[i][j] = i != j && st_related(ctx, out.nodes[i], out.nodes[j]);
  });
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!rel[i][j]) continue;
      bool cover = true;
      for (std::size_t l = 0; l < k && cover; ++l) cover = !(rel[i][l] && rel[l][j]);
      if (cover) out.edges.emplace_back(i, j);
    }
  }
  return out;
}

std::string to_dot(const HasseDiagram& diagram, const std::string& title) {
  std::string out = "digraph \"" + title + "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + to_string(diagram.nodes[i]) + "\"];\n";
  }
  for (const auto& [a, b] : diagram.edges) {
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cmdegen
