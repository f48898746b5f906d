#pragma once

// Independent ground truth for stable-Hom dimensions.
//
// Reduced d = 1: objects are graded matrix factorizations of
// f = x^{n+1} + y^2 with deg x = 2, deg y = n + 1. A stable morphism is a
// pair (α, β) with α·φ_M = φ_N·β and β·ψ_M = ψ_N·α, modulo homotopies
// (φ_N·u + v·ψ_M, u·φ_M + ψ_N·v). Everything is homogeneous, so the quotient
// splits into graded pieces, each a finite exact linear-algebra problem. The
// stable Hom over the complete ring is the sum of all graded pieces.
//
// Reduced d = 0: modules over k[x]/(x^{n+1}) are nilpotent Jordan matrices;
// Hom and the subspace of maps factoring through R are computed directly.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cmdegen/catalog.hpp"
#include "cmdegen/field.hpp"
#include "cmdegen/homtab.hpp"
#include "cmdegen/poly.hpp"

namespace cmdegen {

struct FieldConfig {
  enum class Kind { QI, Fp };
  Kind kind = Kind::QI;
  std::uint64_t prime = 0;

  static FieldConfig qi() { return {}; }
  static FieldConfig fp(std::uint64_t p) { return {Kind::Fp, p}; }
  std::string name() const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
  friend auto operator<=>(const FieldConfig&, const FieldConfig&) = default;
};

// "qi" or "fp:<p>"; throws DomainError for malformed input or p ≢ 1 (mod 4).
FieldConfig parse_field(const std::string& text);

// Window of graded pieces [j_lo, j_lo + value) summed by the d = 1 path.
// `automatic` starts at 2(n+1) and doubles until two rounds agree.
struct DegreeBound {
  bool automatic = true;
  int value = 0;

  static DegreeBound automatic_bound() { return {}; }
  static DegreeBound fixed(int d) { return {false, d}; }
  std::string name() const;

  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
  friend auto operator<=>(const DegreeBound&, const DegreeBound&) = default;
};

DegreeBound parse_degree_bound(const std::string& text);

struct OracleConfig {
  FieldConfig field;
  DegreeBound bound;
  // AUTO gives up once the window exceeds cap_factor * 2(n+1).
  int cap_factor = 64;

  friend bool operator==(const OracleConfig&, const OracleConfig&) = default;
  friend auto operator<=>(const OracleConfig&, const OracleConfig&) = default;
};

struct HomCertificate {
  int dim = 0;
  std::string path;  // "matrix-factorization", "artinian" or "zero"
  // (window, total) for each round of the d = 1 path.
  std::vector<std::pair<int, int>> rounds;
  bool stabilized = false;
};

template <class E>
struct MatrixFactorization {
  PolyMatrix<E> phi;  // F1 -> F0
  PolyMatrix<E> psi;  // F0 -> F1
  std::vector<int> deg0;
  std::vector<int> deg1;
  int n = 1;

  int rank() const { return phi.rows(); }
};

// Checks φψ = ψφ = f·Id and homogeneity of every entry; throws
// ConsistencyError otherwise.
template <class E>
void validate(const MatrixFactorization<E>& mf);

// I_i ↦ ([[x^i, -y], [y, x^{n+1-i}]], [[x^{n+1-i}, y], [-y, x^i]]),
// N± ↦ (x^{(n+1)/2} ± i·y, x^{(n+1)/2} ∓ i·y). Requires reduced d = 1.
template <class Field>
MatrixFactorization<typename Field::Elem> mf_of(const Field& field, const SingularitySpec& spec, const IndecId& x);

// Block-diagonal factorization of a nonzero stable module.
template <class Field>
MatrixFactorization<typename Field::Elem> mf_of(const Field& field, const SingularitySpec& spec, const StableModule& m);

// Graded piece of degree j of the stable Hom between two factorizations.
template <class E>
int graded_stable_hom(const MatrixFactorization<E>& m, const MatrixFactorization<E>& n, int j);

// Smallest j for which some degree-j morphism entry can be nonzero.
template <class E>
int lowest_morphism_degree(const MatrixFactorization<E>& m, const MatrixFactorization<E>& n);

HomCertificate stable_hom_dim(const SingularitySpec& spec, const StableModule& m, const StableModule& n,
                              const OracleConfig& config = {});

struct HomTableCertificate {
  HomTable table;
  FieldConfig field;
  DegreeBound bound;
  std::vector<std::vector<HomCertificate>> cells;
};

// Cached per (reduced spec, config); safe to call concurrently. When tables
// for the same spec exist under two fields they must agree, otherwise
// ConsistencyError.
const HomTableCertificate& hom_table_certified(const SingularitySpec& spec, const OracleConfig& config = {});
const HomTable& hom_table(const SingularitySpec& spec, const OracleConfig& config = {});

namespace artinian {

// Jordan blocks of sizes `partition` over k[x]/(x^{n+1}); parts in 1..n+1.
template <class Field>
int hom_dim(const Field& field, const std::vector<int>& m, const std::vector<int>& n);

// dim Hom - dim P, P the maps factoring through a free module.
template <class Field>
int stable_hom_dim(const Field& field, const std::vector<int>& m, const std::vector<int>& n, int ring_n);

// Jordan type of ker(R -> k[x]/(x^i)), largest part first.
template <class Field>
std::vector<int> syzygy_type(const Field& field, int i, int ring_n);

// Stable endomorphism dimension of a single block of size `size` (0 exactly
// when the block is free).
template <class Field>
int stable_end_dim(const Field& field, int size, int ring_n) {
  return stable_hom_dim(field, {size}, {size}, ring_n);
}

}  // namespace artinian

}  // namespace cmdegen
