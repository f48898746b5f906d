#pragma once

#include <optional>
#include <vector>

#include "cmdegen/catalog.hpp"

namespace cmdegen {

// Stable-Hom dimensions [X, Y] over all indecomposables of a reduced ring,
// rows and columns in canonical order. Construction validates the AR mesh
// relation and throws ConsistencyError if it fails.
class HomTable {
 public:
  HomTable(const SingularitySpec& spec, std::vector<std::vector<int>> dims);

  const SingularitySpec& spec() const { return spec_; }
  const std::vector<IndecId>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& dims() const { return dims_; }
  std::size_t size() const { return labels_.size(); }

  // [X, Y]
  int operator()(const IndecId& x, const IndecId& y) const;
  int at(std::size_t row, std::size_t col) const { return dims_[row][col]; }
  // [X, M] for a stable module M, by additivity.
  int hom(const IndecId& x, const StableModule& m) const;

  friend bool operator==(const HomTable&, const HomTable&) = default;

 private:
  SingularitySpec spec_;
  std::vector<IndecId> labels_;
  std::vector<std::vector<int>> dims_;
};

// Integer-valued function on the indecomposables of a reduced ring.
struct DeltaFunction {
  std::vector<IndecId> labels;
  std::vector<int> values;

  int operator()(const IndecId& x) const;
  // Additive extension: δ(Y) = Σ μ(Y, W) δ(W).
  int on(const StableModule& y) const;
  bool is_zero() const;
  bool nonnegative() const;

  DeltaFunction& operator+=(const DeltaFunction& o);
  DeltaFunction& operator-=(const DeltaFunction& o);
  friend DeltaFunction operator+(DeltaFunction a, const DeltaFunction& b) { return a += b; }
  friend DeltaFunction operator-(DeltaFunction a, const DeltaFunction& b) { return a -= b; }
  friend bool operator==(const DeltaFunction&, const DeltaFunction&) = default;
};

// Pointwise a <= b.
bool pointwise_leq(const DeltaFunction& a, const DeltaFunction& b);

// Coordinate at X is [X, M].
std::vector<int> hom_vector(const HomTable& table, const StableModule& m);

// M ≤_hom N: [X, M] <= [X, N] for every indecomposable X.
bool leq_hom(const HomTable& table, const StableModule& m, const StableModule& n);

// δ_{M,N} = [-, N] - [-, M].
DeltaFunction delta(const HomTable& table, const StableModule& m, const StableModule& n);

// δ of the triangle Z -> Y -> X -> Z[1]: [-, Z] + [-, X] - [-, Y].
DeltaFunction delta_triangle(const HomTable& table, const StableModule& z, const StableModule& y,
                             const StableModule& x);

// Outcome of checking M ⊕ ΩM ≅ N ⊕ ΩN for modules with equal hom vectors.
struct CdResult {
  enum class Status { NotApplicable, Holds, Violated };
  Status status = Status::NotApplicable;
  // M + ΩM and N + ΩN; set unless NotApplicable.
  std::optional<StableModule> lhs;
  std::optional<StableModule> rhs;
};

CdResult cd_consequence(const HomTable& table, const StableModule& m, const StableModule& n);

const char* to_string(CdResult::Status s);

}  // namespace cmdegen
