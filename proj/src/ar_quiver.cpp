#include "cmdegen/ar_quiver.hpp"

#include "cmdegen/errors.hpp"

namespace cmdegen {

ARTriangle ar_triangle(const SingularitySpec& spec, const IndecId& x) {
  auto r = knoerrer_reduce(spec);
  index_of(r, x);
  ARTriangle t{x, tau(r, x), {}};

  if (r.d == 0) {
    // M_0 = 0 and M_{n+1} = R is free.
    if (x.index > 1) t.middle.add(IndecId::jordan(x.index - 1));
    if (x.index < r.n) t.middle.add(IndecId::jordan(x.index + 1));
  } else if (r.n % 2 == 0) {
    // I_0 = R is dropped, I_{n/2+1} ≅ I_{n/2}.
    int top = r.n / 2;
    if (x.index > 1) t.middle.add(IndecId::ideal(x.index - 1));
    t.middle.add(IndecId::ideal(x.index < top ? x.index + 1 : top));
  } else {
    int top = (r.n - 1) / 2;
    if (x.kind == IndecId::Kind::Ideal) {
      if (x.index > 1) t.middle.add(IndecId::ideal(x.index - 1));
      if (x.index < top) {
        t.middle.add(IndecId::ideal(x.index + 1));
      } else {
        t.middle.add(IndecId::plus());
        t.middle.add(IndecId::minus());
      }
    } else if (top >= 1) {
      t.middle.add(IndecId::ideal(top));
    }
  }

  for (const auto& [id, c] : t.middle.multiplicities()) {
    if (c > 2) throw ConsistencyError("AR middle term multiplicity exceeds 2 at " + to_string(x));
  }
  return t;
}

std::vector<ARTriangle> ar_quiver(const SingularitySpec& spec) {
  std::vector<ARTriangle> out;
  for (const auto& x : classify(spec)) out.push_back(ar_triangle(spec, x));
  return out;
}

StarReport star_condition(const SingularitySpec& spec) {
  auto r = knoerrer_reduce(spec);
  StarReport report;
  for (const auto& t : ar_quiver(r)) {
    // Compare the two relation vectors in the free group on indecomposables.
    auto lhs = coordinates(r, StableModule::of(t.end) + StableModule::of(t.translate));
    auto rhs = coordinates(r, StableModule::of(shift(r, t.end, -1)) + StableModule::of(shift(r, t.translate, -1)));
    auto mid = coordinates(r, t.middle);
    auto mid_shifted = coordinates(r, shift(r, t.middle, -1));
    bool ok = true;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] - mid[i] != rhs[i] - mid_shifted[i]) ok = false;
    }
    report.per_triangle.emplace_back(t.end, ok);
    report.holds = report.holds && ok;
  }
  return report;
}

std::vector<MeshViolation> mesh_violations(const SingularitySpec& spec,
                                           const std::vector<std::vector<int>>& dims) {
  auto r = knoerrer_reduce(spec);
  auto ids = classify(r);
  if (dims.size() != ids.size()) throw DomainError("hom table has wrong number of rows");
  for (const auto& row : dims) {
    if (row.size() != ids.size()) throw DomainError("hom table is not square");
  }

  std::vector<MeshViolation> out;
  for (const auto& t : ar_quiver(r)) {
    std::size_t xi = index_of(r, t.end);
    std::size_t zi = index_of(r, t.translate);
    IndecId x_minus = shift(r, t.end, -1);
    for (std::size_t ui = 0; ui < ids.size(); ++ui) {
      int lhs = dims[ui][xi] + dims[ui][zi];
      for (const auto& [w, c] : t.middle.multiplicities()) lhs -= c * dims[ui][index_of(r, w)];
      int rhs = (ids[ui] == t.end ? 1 : 0) + (ids[ui] == x_minus ? 1 : 0);
      if (lhs != rhs) out.push_back({ids[ui], t.end, lhs, rhs});
    }
  }
  return out;
}

}  // namespace cmdegen
