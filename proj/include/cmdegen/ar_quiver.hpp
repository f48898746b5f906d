#pragma once

#include <vector>

#include "cmdegen/catalog.hpp"

namespace cmdegen {

// Object-level AR triangle τX -> E_X -> X -> τX[1], with free summands of the
// middle term E_X erased.
struct ARTriangle {
  IndecId end;
  IndecId translate;
  StableModule middle;

  friend bool operator==(const ARTriangle&, const ARTriangle&) = default;
};

ARTriangle ar_triangle(const SingularitySpec& spec, const IndecId& x);

// One triangle per indecomposable, in canonical order.
std::vector<ARTriangle> ar_quiver(const SingularitySpec& spec);

// Free-group identity [X] + [τX] - [E_X] = [X[-1]] + [τX[-1]] - [E_X[-1]] per
// AR triangle.
struct StarReport {
  bool holds = true;
  std::vector<std::pair<IndecId, bool>> per_triangle;
};

StarReport star_condition(const SingularitySpec& spec);

// A pair (U, X) where
//   H[U,X] + H[U,τX] - Σ_W μ(E_X, W)·H[U,W] = [U = X] + [U = X[-1]]
// fails for the supplied dims.
struct MeshViolation {
  IndecId u;
  IndecId x;
  int lhs = 0;
  int rhs = 0;
};

std::vector<MeshViolation> mesh_violations(const SingularitySpec& spec,
                                           const std::vector<std::vector<int>>& dims);

}  // namespace cmdegen
