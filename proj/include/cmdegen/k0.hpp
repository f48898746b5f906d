#pragma once

#include <cstdint>
#include <vector>

#include "cmdegen/catalog.hpp"

namespace cmdegen {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// U·A·V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inverse;
  std::vector<std::int64_t> diagonal;  // length = number of columns; zeros past the rank
};

// Exact integer Smith normal form. Throws ConsistencyError on int64 overflow.
SmithForm smith_normal_form(const IntMatrix& a);

// Grothendieck group of the stable category: free group on the
// indecomposables modulo one relation X + τX - E_X per AR triangle.
struct K0Presentation {
  SingularitySpec spec;  // reduced
  std::vector<IndecId> generators;
  IntMatrix relations;   // one row per AR triangle, in generator order
  SmithForm smith;

  // Invariant factors of the group, torsion first then 0 for each free
  // summand; trivial factors (1) omitted. Empty means the trivial group.
  std::vector<std::int64_t> invariant_factors() const;
};

// Canonical coordinates: one entry per nontrivial invariant factor, reduced
// into [0, d) for torsion factors and unreduced for free factors.
struct K0Class {
  std::vector<std::int64_t> coords;

  friend bool operator==(const K0Class&, const K0Class&) = default;
  friend auto operator<=>(const K0Class&, const K0Class&) = default;
};

// Cached per reduced spec.
const K0Presentation& k0_presentation(const SingularitySpec& spec);

K0Class k0_class(const K0Presentation& pres, const StableModule& m);
bool same_class(const K0Presentation& pres, const StableModule& m, const StableModule& n);

// Renders a group such as "Z", "Z/3", "Z/2 + Z" or "0".
std::string group_name(const std::vector<std::int64_t>& factors);

}  // namespace cmdegen
