#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmdegen/catalog.hpp"
#include "cmdegen/homtab.hpp"
#include "cmdegen/k0.hpp"
#include "cmdegen/oracle.hpp"

namespace cmdegen {

// Everything a decision needs for one reduced ring.
struct RingContext {
  SingularitySpec spec;  // reduced
  const HomTable* table;
  const K0Presentation* k0;

  static RingContext of(const SingularitySpec& spec, const OracleConfig& config = {});
};

// [N] - [M] = Σ c(X)·([X] + [τX] - [E_X]) with at most one of X, ΩX in the
// support.
struct ARExpression {
  std::map<IndecId, int> coefficients;

  friend bool operator==(const ARExpression&, const ARExpression&) = default;
};

// Value of δ_{Σ_X} at X: 2 when X is fixed by the shift, 1 otherwise.
int ar_self_delta(const RingContext& ctx, const IndecId& x);

// Requires reduced d = 1. Returns nullopt when M ≰hom N or the K0 classes
// differ. Throws ConsistencyError when a quotient is not integral or the
// resulting free-group identity does not hold.
std::optional<ARExpression> irredundant_expression(const RingContext& ctx, const StableModule& m,
                                                   const StableModule& n);

// Object-level triangle z -> y -> x -> z[1].
struct TriangleObj {
  StableModule z;
  StableModule y;
  StableModule x;
  std::vector<std::string> provenance;

  friend bool operator==(const TriangleObj& a, const TriangleObj& b) {
    return a.z == b.z && a.y == b.y && a.x == b.x;
  }
};

TriangleObj ar_triangle_obj(const SingularitySpec& spec, const IndecId& x);
// The split triangle u -> u -> 0.
TriangleObj split_triangle(const StableModule& u);
TriangleObj direct_sum(const TriangleObj& a, const TriangleObj& b);
DeltaFunction delta_of(const RingContext& ctx, const TriangleObj& t);

// first = (N1, L1 ⊕ N2, L2), second = (M1, N1 ⊕ M2, N2); shared_n1 = N1 and
// shared_n2 = N2 are split off the middles. Returns (M1, L1 ⊕ M2, L2).
// Throws DomainError when the declared summands do not match.
TriangleObj ladder_compose(const TriangleObj& first, const TriangleObj& second, const StableModule& shared_n1,
                           const StableModule& shared_n2);

struct TraceStep {
  std::string kind;               // "cancel", "ar-sum", "key-lemma", "final"
  std::optional<IndecId> glued;   // AR triangle spliced in, for key-lemma steps
  TriangleObj triangle;           // triangle after the step
  DeltaFunction delta;            // its δ
};

// Repeatedly splices AR triangles into `sigma` until δ on every middle summand
// reaches `target`. Appends one TraceStep per splice. Throws
// ConsistencyError if δ_Σ ≰ target, if additivity fails, or past the
// iteration cap Σ target × #ids.
TriangleObj key_lemma_transform(const RingContext& ctx, TriangleObj sigma, const DeltaFunction& target,
                                std::vector<TraceStep>* trace = nullptr);

struct Witness {
  StableModule m;
  StableModule n;
  StableModule common;  // cancelled summands
  StableModule z;
  TriangleObj triangle;  // (Z, M ⊕ Z, N)
  std::map<IndecId, int> r;
  std::vector<IndecId> chosen;  // the set G, canonical order
  StableModule n1, n2, n3;
  std::vector<TraceStep> trace;
};

// Requires reduced d = 1. nullopt when the preconditions fail.
std::optional<Witness> witness(const RingContext& ctx, const StableModule& m, const StableModule& n);

// Re-checks every trace step, the multiset identity M' ⊕ Z = N2 ⊕ N3 ⊕ Y and
// δ_Φ = δ_{M,N}. Throws ConsistencyError with a description on failure.
void validate_witness(const RingContext& ctx, const Witness& w);

// Reduced d = 0: padded Jordan partitions compared in dominance order.
struct DominanceCertificate {
  bool comparable_dimension = false;  // dim M ≡ dim N (mod n+1)
  int pad_m = 0;
  int pad_n = 0;
  std::vector<int> partition_m;
  std::vector<int> partition_n;
  bool dominates = false;
  int paddings_checked = 0;
};

DominanceCertificate dominance_certificate(const RingContext& ctx, const StableModule& m, const StableModule& n);
// Partial sums of a dominating b (both sorted decreasingly, equal total).
bool dominates(const std::vector<int>& a, const std::vector<int>& b);

struct StDecision {
  bool leq = false;
  bool leq_hom = false;
  bool same_class = false;
  std::string reason;  // human-readable when leq is false
  std::optional<Witness> witness;
  std::optional<DominanceCertificate> dominance;
};

// Plain decision without certificates; fast path used by scans and Hasse.
bool st_related(const RingContext& ctx, const StableModule& m, const StableModule& n);

// Decision with certificate. For d = 1 a witness is built and validated
// whenever the answer is true and `with_witness` is set.
StDecision leq_st(const RingContext& ctx, const StableModule& m, const StableModule& n, bool with_witness = true);

struct ChainStep {
  StableModule from;
  StableModule to;
  StDecision decision;
};

// nullopt when M ≰st N; empty when M = N. Each step is a cover in the
// interval [M, N].
std::optional<std::vector<ChainStep>> chain(const RingContext& ctx, const StableModule& m, const StableModule& n);

struct HasseDiagram {
  std::vector<StableModule> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper), sorted
};

// Nodes: modules of total multiplicity <= bound (optionally one K0 class).
// Throws DomainError when more than node_cap nodes would be produced.
HasseDiagram hasse(const RingContext& ctx, int bound, const std::optional<StableModule>& class_of = std::nullopt,
                   std::size_t node_cap = 2000);

std::string to_dot(const HasseDiagram& diagram, const std::string& title);

}  // namespace cmdegen
