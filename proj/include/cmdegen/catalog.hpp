#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cmdegen {

// Simple singularity k[[x_0..x_d]]/(x_0^{n+1} + x_1^2 + ... + x_d^2). Only
// family A is supported.
struct SingularitySpec {
  char family = 'A';
  int n = 1;
  int d = 1;

  friend bool operator==(const SingularitySpec&, const SingularitySpec&) = default;
  friend auto operator<=>(const SingularitySpec&, const SingularitySpec&) = default;
};

// Throws DomainError unless n >= 1, d >= 0 and family == 'A'.
void validate(const SingularitySpec& spec);

// Same n, d replaced by d mod 2. The stable categories agree under the
// identity relabeling of indecomposables.
SingularitySpec knoerrer_reduce(const SingularitySpec& spec);

// Parses "A:<n>:<d>".
SingularitySpec parse_ring(const std::string& text);
std::string to_string(const SingularitySpec& spec);

// A non-free indecomposable. The enumerator order is the canonical order:
// I1 < I2 < ... < N+ < N-, and M1 < ... < Mn.
struct IndecId {
  enum class Kind : std::uint8_t { Ideal, BranchPlus, BranchMinus, Jordan };

  Kind kind = Kind::Ideal;
  int index = 0;  // i for Ideal/Jordan, 0 for the branches

  static IndecId ideal(int i) { return {Kind::Ideal, i}; }
  static IndecId plus() { return {Kind::BranchPlus, 0}; }
  static IndecId minus() { return {Kind::BranchMinus, 0}; }
  static IndecId jordan(int i) { return {Kind::Jordan, i}; }

  friend bool operator==(const IndecId&, const IndecId&) = default;
  friend auto operator<=>(const IndecId&, const IndecId&) = default;
};

std::string to_string(const IndecId& id);

// A finite multiset of non-free indecomposables: an object of the stable
// category up to isomorphism. Free summands are never stored.
class StableModule {
 public:
  StableModule() = default;
  StableModule(std::initializer_list<std::pair<const IndecId, int>> init);
  static StableModule of(const IndecId& id, int count = 1);

  // μ(M, X): multiplicity of X as a direct summand.
  int mu(const IndecId& id) const;
  void add(const IndecId& id, int count = 1);
  // Removes `count` copies; throws DomainError if not present.
  void remove(const IndecId& id, int count = 1);

  bool empty() const { return mult_.empty(); }
  int total() const;
  const std::map<IndecId, int>& multiplicities() const { return mult_; }
  // True if every summand of `other` occurs here with at least its multiplicity.
  bool contains(const StableModule& other) const;

  StableModule& operator+=(const StableModule& other);
  friend StableModule operator+(StableModule a, const StableModule& b) { return a += b; }
  // Multiset difference; throws DomainError if `b` is not contained in `a`.
  friend StableModule operator-(StableModule a, const StableModule& b);
  friend StableModule operator*(int k, const StableModule& m);

  friend bool operator==(const StableModule&, const StableModule&) = default;
  friend auto operator<=>(const StableModule&, const StableModule&) = default;

 private:
  std::map<IndecId, int> mult_;  // only positive entries
};

// Canonical rendering, e.g. "2*I1 + N+"; the zero module renders as "0".
std::string to_string(const StableModule& m);

// Complete list of non-free indecomposables of the reduced ring, in canonical
// order. Throws DomainError for invalid specs (n = 0 included).
std::vector<IndecId> classify(const SingularitySpec& spec);

// Position of `id` in classify(spec); throws DomainError if absent.
std::size_t index_of(const SingularitySpec& spec, const IndecId& id);
bool belongs(const SingularitySpec& spec, const IndecId& id);
void check_module(const SingularitySpec& spec, const StableModule& m);

// Ω on stable objects.
IndecId syzygy(const SingularitySpec& spec, const IndecId& x);
StableModule syzygy(const SingularitySpec& spec, const StableModule& m);

// Applies Ω^{-k}, i.e. the k-th power of the shift functor [1].
IndecId shift(const SingularitySpec& spec, const IndecId& x, int k);
StableModule shift(const SingularitySpec& spec, const StableModule& m, int k);

// AR translate, τ = [d].
IndecId tau(const SingularitySpec& spec, const IndecId& x);

// All stable modules with total multiplicity <= bound, in a deterministic
// order (by total multiplicity, then lexicographically on coordinates).
std::vector<StableModule> enumerate_modules(const SingularitySpec& spec, int bound);

// Coordinates of `m` in the canonical basis of classify(spec).
std::vector<int> coordinates(const SingularitySpec& spec, const StableModule& m);
StableModule from_coordinates(const SingularitySpec& spec, const std::vector<int>& coords);

}  // namespace cmdegen
