#include <gtest/gtest.h>

#include <set>

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/degen.hpp"
#include "cmdegen/errors.hpp"
#include "cmdegen/expr.hpp"

using namespace cmdegen;

namespace {

SingularitySpec A(int n, int d) { return {'A', n, d}; }
StableModule one(const IndecId& x, int k = 1) { return StableModule::of(x, k); }
StableModule P(const SingularitySpec& s, const std::string& text) { return parse_module_expr(s, text); }

// Σ c(X)·([X] + [τX] - [E_X]) as signed coordinates.
std::vector<int> expression_value(const SingularitySpec& s, const ARExpression& e) {
  std::vector<int> v(classify(s).size(), 0);
  for (const auto& [x, c] : e.coefficients) {
    auto tri = ar_triangle(s, x);
    v[index_of(s, tri.end)] += c;
    v[index_of(s, tri.translate)] += c;
    for (const auto& [w, k] : tri.middle.multiplicities()) v[index_of(s, w)] -= c * k;
  }
  return v;
}

std::vector<int> difference(const SingularitySpec& s, const StableModule& m, const StableModule& n) {
  auto a = coordinates(s, m), b = coordinates(s, n);
  for (std::size_t i = 0; i < a.size(); ++i) b[i] -= a[i];
  return b;
}

}  // namespace

TEST(Degen, SelfDelta) {
  auto ctx = RingContext::of(A(4, 1));
  EXPECT_EQ(ar_self_delta(ctx, IndecId::ideal(1)), 2);
  auto odd = RingContext::of(A(3, 1));
  EXPECT_EQ(ar_self_delta(odd, IndecId::plus()), 1);
  EXPECT_EQ(ar_self_delta(odd, IndecId::ideal(1)), 2);
}

TEST(Degen, IrredundantExpressions) {
  auto s = A(1, 1);
  auto ctx = RingContext::of(s);
  auto e = irredundant_expression(ctx, {}, one(IndecId::plus()) + one(IndecId::minus()));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->coefficients.size(), 1u);
  EXPECT_EQ(expression_value(s, *e), (std::vector<int>{1, 1}));
  EXPECT_FALSE(irredundant_expression(ctx, one(IndecId::plus()), one(IndecId::minus())));
  EXPECT_THROW(irredundant_expression(RingContext::of(A(2, 0)), {}, {}), DomainError);
}

TEST(Degen, IrredundantExpressionIdentity) {
  for (int n = 1; n <= 7; ++n) {
    auto s = A(n, 1);
    auto ctx = RingContext::of(s);
    auto mods = enumerate_modules(s, 2);
    for (const auto& m : mods)
      for (const auto& nn : mods) {
        auto e = irredundant_expression(ctx, m, nn);
        ASSERT_EQ(e.has_value(), st_related(ctx, m, nn));
        if (!e) continue;
        EXPECT_EQ(expression_value(s, *e), difference(s, m, nn));
        for (const auto& [x, c] : e->coefficients) {
          EXPECT_GT(c, 0);
          auto partner = syzygy(s, x);
          if (partner != x) {
            EXPECT_FALSE(e->coefficients.count(partner));
          }
        }
      }
  }
}

TEST(Degen, LadderComposition) {
  auto s = A(5, 1);
  auto ar2 = ar_triangle_obj(s, IndecId::ideal(2));   // (I2, I1 + N+ + N-, I2)
  auto ar1 = ar_triangle_obj(s, IndecId::ideal(1));   // (I1, I2, I1)
  // first = (I2, I1 ⊕ (N+ + N-), I2) with N1 = I2, N2 = I1; the second
  // triangle is AR(I1) ⊕ split(I2) = (I1 + I2, I2 + I2, I1).
  auto composed = ladder_compose(ar2, direct_sum(ar1, split_triangle(one(IndecId::ideal(2)))), one(IndecId::ideal(2)),
                                 one(IndecId::ideal(1)));
  EXPECT_EQ(composed.z, P(s, "I1 + I2"));
  EXPECT_EQ(composed.x, one(IndecId::ideal(2)));
  EXPECT_EQ(composed.y, P(s, "2*I2 + N+ + N-") - one(IndecId::ideal(2)));
  EXPECT_THROW(ladder_compose(ar2, ar1, one(IndecId::ideal(1)), one(IndecId::ideal(1))), DomainError);
  EXPECT_THROW(ladder_compose(ar1, ar1, one(IndecId::ideal(1)), one(IndecId::ideal(2))), DomainError);
}

TEST(Degen, DeltaOfTriangles) {
  auto ctx = RingContext::of(A(5, 1));
  auto d = delta_of(ctx, ar_triangle_obj(ctx.spec, IndecId::ideal(2)));
  EXPECT_EQ(d(IndecId::ideal(2)), 2);
  EXPECT_EQ(d(IndecId::ideal(1)), 0);
  EXPECT_TRUE(delta_of(ctx, split_triangle(P(ctx.spec, "I1 + N+"))).is_zero());
  auto sum = direct_sum(ar_triangle_obj(ctx.spec, IndecId::ideal(1)), ar_triangle_obj(ctx.spec, IndecId::plus()));
  EXPECT_EQ(delta_of(ctx, sum), delta_of(ctx, ar_triangle_obj(ctx.spec, IndecId::ideal(1))) +
                                    delta_of(ctx, ar_triangle_obj(ctx.spec, IndecId::plus())));
}

TEST(Degen, KeyLemmaReachesTarget) {
  auto ctx = RingContext::of(A(5, 1));
  auto target = delta(*ctx.table, {}, one(IndecId::ideal(2)));
  std::vector<TraceStep> trace;
  auto sigma = ar_triangle_obj(ctx.spec, IndecId::ideal(1));
  auto out = key_lemma_transform(ctx, sigma, target, &trace);
  EXPECT_EQ(delta_of(ctx, out), target);
  EXPECT_EQ(out.x, sigma.x);
  for (const auto& step : trace) {
    EXPECT_EQ(step.kind, "key-lemma");
    EXPECT_TRUE(step.glued.has_value());
  }
  // A Σ whose δ already exceeds the target is refused.
  EXPECT_THROW(key_lemma_transform(ctx, ar_triangle_obj(ctx.spec, IndecId::ideal(2)),
                                   delta(*ctx.table, one(IndecId::ideal(1)), one(IndecId::ideal(1))), nullptr),
               ConsistencyError);
}

TEST(Degen, WitnessExamples) {
  auto ctx1 = RingContext::of(A(1, 1));
  auto w = witness(ctx1, {}, one(IndecId::plus()) + one(IndecId::minus()));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->chosen, std::vector<IndecId>{IndecId::plus()});
  EXPECT_EQ(w->z, one(IndecId::minus()));
  EXPECT_EQ(w->triangle.y, one(IndecId::minus()));
  EXPECT_NO_THROW(validate_witness(ctx1, *w));

  auto ctx5 = RingContext::of(A(5, 1));
  w = witness(ctx5, one(IndecId::ideal(1)), one(IndecId::ideal(2)));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->triangle.x, one(IndecId::ideal(2)));
  EXPECT_EQ(w->triangle.y, one(IndecId::ideal(1)) + w->z);
  EXPECT_EQ(w->trace.front().kind, "cancel");
  EXPECT_EQ(w->trace.back().kind, "final");

  auto same = witness(ctx5, P(ctx5.spec, "I1 + N+"), P(ctx5.spec, "I1 + N+"));
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->z.empty());
  EXPECT_EQ(same->common, P(ctx5.spec, "I1 + N+"));

  EXPECT_FALSE(witness(ctx5, one(IndecId::ideal(2)), one(IndecId::ideal(1))));
  EXPECT_THROW(witness(RingContext::of(A(2, 0)), {}, {}), DomainError);
}

TEST(Degen, TamperedWitnessIsRejected) {
  auto ctx = RingContext::of(A(5, 1));
  auto w = witness(ctx, one(IndecId::ideal(1)), one(IndecId::ideal(2)));
  ASSERT_TRUE(w);
  auto bad = *w;
  bad.z.add(IndecId::plus());
  EXPECT_THROW(validate_witness(ctx, bad), ConsistencyError);
  bad = *w;
  bad.trace.pop_back();
  EXPECT_THROW(validate_witness(ctx, bad), ConsistencyError);
  bad = *w;
  bad.n3.add(IndecId::minus());
  EXPECT_THROW(validate_witness(ctx, bad), ConsistencyError);
}

TEST(Degen, OddDimensionDecisions) {
  auto ctx = RingContext::of(A(5, 1));
  EXPECT_TRUE(leq_st(ctx, one(IndecId::ideal(1)), one(IndecId::ideal(2))).leq);
  auto d = leq_st(ctx, one(IndecId::ideal(2)), one(IndecId::ideal(1)));
  EXPECT_FALSE(d.leq);
  EXPECT_FALSE(d.leq_hom);
  EXPECT_NE(d.reason.find("[I2, M]"), std::string::npos);
  auto ctx1 = RingContext::of(A(1, 1));
  d = leq_st(ctx1, one(IndecId::plus()), one(IndecId::minus()));
  EXPECT_FALSE(d.leq);
  EXPECT_FALSE(d.witness);
  auto ctx3 = RingContext::of(A(3, 1));
  d = leq_st(ctx3, {}, one(IndecId::plus()));
  EXPECT_TRUE(d.leq_hom);
  EXPECT_FALSE(d.same_class);
  EXPECT_EQ(d.reason, "K0 classes differ");
  // d = 3 reduces to d = 1.
  EXPECT_EQ(RingContext::of(A(5, 3)).spec, A(5, 1));
}

TEST(Degen, EvenDimensionDecisions) {
  auto s = A(2, 0);
  auto ctx = RingContext::of(s);
  auto d = leq_st(ctx, one(IndecId::jordan(2)), one(IndecId::jordan(1), 2));
  EXPECT_TRUE(d.leq);
  ASSERT_TRUE(d.dominance);
  EXPECT_TRUE(d.dominance->comparable_dimension);
  EXPECT_GE(d.dominance->paddings_checked, 2);
  EXPECT_FALSE(leq_st(ctx, one(IndecId::jordan(1), 2), one(IndecId::jordan(2))).leq);
  d = leq_st(ctx, one(IndecId::jordan(1)), one(IndecId::jordan(2)));
  EXPECT_FALSE(d.leq);
  EXPECT_TRUE(d.leq_hom);
  EXPECT_EQ(d.reason, "dimensions differ modulo 3");
  EXPECT_THROW(dominance_certificate(RingContext::of(A(2, 1)), {}, {}), DomainError);
}

TEST(Degen, DominanceOrder) {
  EXPECT_TRUE(dominates({3}, {2, 1}));
  EXPECT_TRUE(dominates({2, 1}, {1, 1, 1}));
  EXPECT_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
  EXPECT_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
  EXPECT_FALSE(dominates({3}, {2}));
  EXPECT_TRUE(dominates({}, {}));
}

TEST(Degen, OrderIsPartialAndImpliesHomAndClass) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 1; ++d) {
      auto s = A(n, d);
      auto ctx = RingContext::of(s);
      auto mods = enumerate_modules(s, 2);
      const std::size_t k = mods.size();
      std::vector<std::vector<char>> rel(k, std::vector<char>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) rel[i][j] = st_related(ctx, mods[i], mods[j]);
      for (std::size_t i = 0; i < k; ++i) {
        EXPECT_TRUE(rel[i][i]);
        for (std::size_t j = 0; j < k; ++j) {
          if (!rel[i][j]) continue;
          if (i != j) {
            EXPECT_FALSE(rel[j][i]) << to_string(mods[i]) << " / " << to_string(mods[j]);
          }
          EXPECT_TRUE(leq_hom(*ctx.table, mods[i], mods[j]));
          EXPECT_TRUE(same_class(*ctx.k0, mods[i], mods[j]));
          for (std::size_t l = 0; l < k; ++l)
            if (rel[j][l]) {
              EXPECT_TRUE(rel[i][l]);
            }
        }
      }
    }
}

TEST(Degen, WitnessesForAllRelatedPairs) {
  for (int n = 1; n <= 9; ++n) {
    auto s = A(n, 1);
    auto ctx = RingContext::of(s);
    auto mods = enumerate_modules(s, n <= 5 ? 3 : 2);
    for (const auto& m : mods)
      for (const auto& nn : mods) {
        bool hom_and_class = leq_hom(*ctx.table, m, nn) && same_class(*ctx.k0, m, nn);
        auto w = witness(ctx, m, nn);
        ASSERT_EQ(w.has_value(), hom_and_class) << to_string(m) << " vs " << to_string(nn);
        if (w) {
          EXPECT_NO_THROW(validate_witness(ctx, *w));
        }
      }
  }
}

TEST(Degen, ReductionInvariance) {
  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= 1; ++d) {
      auto low = RingContext::of(A(n, d));
      auto high = RingContext::of(A(n, d + 2));
      EXPECT_EQ(low.spec, high.spec);
      auto mods = enumerate_modules(A(n, d), 2);
      for (const auto& m : mods)
        for (const auto& nn : mods) EXPECT_EQ(st_related(low, m, nn), st_related(high, m, nn));
    }
}

TEST(Degen, EvenDimensionDominanceImpliesHomAndClass) {
  for (int n = 1; n <= 6; ++n) {
    auto ctx = RingContext::of(A(n, 0));
    auto mods = enumerate_modules(ctx.spec, 3);
    for (const auto& m : mods)
      for (const auto& nn : mods) {
        if (!st_related(ctx, m, nn)) continue;
        EXPECT_TRUE(leq_hom(*ctx.table, m, nn) && same_class(*ctx.k0, m, nn));
      }
  }
}

TEST(Degen, EvenDimensionHomAndClassIsWeaker) {
  // Equal stable hom vectors and equal classes, yet the padded partitions
  // [3,1,1,1] and [2,2,2] are incomparable.
  auto s = A(2, 0);
  auto ctx = RingContext::of(s);
  auto m = one(IndecId::jordan(1), 3), n = one(IndecId::jordan(2), 3);
  EXPECT_TRUE(leq_hom(*ctx.table, m, n));
  EXPECT_TRUE(same_class(*ctx.k0, m, n));
  auto cert = dominance_certificate(ctx, m, n);
  EXPECT_TRUE(cert.comparable_dimension);
  EXPECT_FALSE(cert.dominates);
  EXPECT_EQ(cert.partition_m, (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(cert.partition_n, (std::vector<int>{2, 2, 2}));
}

TEST(Degen, Chains) {
  auto s3 = A(3, 1);
  auto c = chain(RingContext::of(s3), one(IndecId::plus()), P(s3, "2*N+ + N-"));
  ASSERT_TRUE(c);
  ASSERT_EQ(c->size(), 2u);
  EXPECT_EQ((*c)[0].to, P(s3, "I1 + N+"));
  auto s1 = A(1, 1);
  c = chain(RingContext::of(s1), one(IndecId::plus()), P(s1, "2*N+ + N-"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 1u);
  auto s5 = A(5, 1);
  c = chain(RingContext::of(s5), {}, one(IndecId::ideal(2)));
  ASSERT_TRUE(c);
  ASSERT_EQ(c->size(), 2u);
  EXPECT_EQ((*c)[0].to, one(IndecId::ideal(1)));
  EXPECT_EQ((*c)[1].to, one(IndecId::ideal(2)));
  for (const auto& step : *c) {
    EXPECT_TRUE(step.decision.leq);
    EXPECT_TRUE(step.decision.witness);
  }
  auto s2 = A(2, 0);
  c = chain(RingContext::of(s2), one(IndecId::jordan(2)), one(IndecId::jordan(1), 2));
  ASSERT_TRUE(c);
  ASSERT_EQ(c->size(), 1u);
  EXPECT_TRUE(chain(RingContext::of(s5), one(IndecId::ideal(1)), one(IndecId::ideal(1)))->empty());
  EXPECT_FALSE(chain(RingContext::of(s5), one(IndecId::ideal(2)), one(IndecId::ideal(1))));
}

TEST(Degen, ChainStepsAreCovers) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 1; ++d) {
      auto ctx = RingContext::of(A(n, d));
      auto mods = enumerate_modules(ctx.spec, 2);
      for (const auto& m : mods)
        for (const auto& nn : mods) {
          auto c = chain(ctx, m, nn);
          ASSERT_EQ(c.has_value(), st_related(ctx, m, nn));
          if (!c || c->empty()) continue;
          EXPECT_EQ(c->front().from, m);
          EXPECT_EQ(c->back().to, nn);
          for (std::size_t i = 0; i + 1 < c->size(); ++i) EXPECT_EQ((*c)[i].to, (*c)[i + 1].from);
          for (const auto& step : *c) EXPECT_TRUE(st_related(ctx, step.from, step.to));
        }
    }
}

TEST(Degen, HasseDiagrams) {
  auto ctx = RingContext::of(A(5, 1));
  auto h = hasse(ctx, 1, StableModule{});
  ASSERT_EQ(h.nodes.size(), 3u);
  EXPECT_EQ(h.nodes[0], StableModule{});
  EXPECT_EQ(h.edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
  auto dot = to_dot(h, "A:5:1");
  EXPECT_EQ(dot,
            "digraph \"A:5:1\" {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"0\"];\n  n1 [label=\"I1\"];\n"
            "  n2 [label=\"I2\"];\n  n0 -> n1;\n  n1 -> n2;\n}\n");

  auto ctx3 = RingContext::of(A(3, 1));
  auto h3 = hasse(ctx3, 2);
  auto idx = [&](const StableModule& m) {
    return static_cast<std::size_t>(std::find(h3.nodes.begin(), h3.nodes.end(), m) - h3.nodes.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> edges(h3.edges.begin(), h3.edges.end());
  EXPECT_TRUE(edges.count({idx(one(IndecId::ideal(1))), idx(P(ctx3.spec, "N+ + N-"))}));
  EXPECT_THROW(hasse(ctx3, 3, std::nullopt, 5), DomainError);
  EXPECT_THROW(hasse(ctx3, -1), DomainError);
}
