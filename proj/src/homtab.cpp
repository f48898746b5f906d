#include "cmdegen/homtab.hpp"

#include <algorithm>

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/errors.hpp"

namespace cmdegen {

HomTable::HomTable(const SingularitySpec& spec, std::vector<std::vector<int>> dims)
    : spec_(knoerrer_reduce(spec)), labels_(classify(spec_)), dims_(std::move(dims)) {
  auto bad = mesh_violations(spec_, dims_);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw ConsistencyError("hom table for " + to_string(spec_) + " violates the mesh relation at (U=" +
                           to_string(v.u) + ", X=" + to_string(v.x) + "): " + std::to_string(v.lhs) +
                           " != " + std::to_string(v.rhs));
  }
}

int HomTable::operator()(const IndecId& x, const IndecId& y) const {
  return dims_[index_of(spec_, x)][index_of(spec_, y)];
}

int HomTable::hom(const IndecId& x, const StableModule& m) const {
  std::size_t row = index_of(spec_, x);
  int total = 0;
  for (const auto& [id, c] : m.multiplicities()) total += c * dims_[row][index_of(spec_, id)];
  return total;
}

int DeltaFunction::operator()(const IndecId& x) const {
  auto it = std::find(labels.begin(), labels.end(), x);
  if (it == labels.end()) throw DomainError("delta function has no value at " + to_string(x));
  return values[static_cast<std::size_t>(it - labels.begin())];
}

int DeltaFunction::on(const StableModule& y) const {
  int total = 0;
  for (const auto& [id, c] : y.multiplicities()) total += c * (*this)(id);
  return total;
}

bool DeltaFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v == 0; });
}

bool DeltaFunction::nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](int v) { return v >= 0; });
}

DeltaFunction& DeltaFunction::operator+=(const DeltaFunction& o) {
  if (labels != o.labels) throw DomainError("delta functions over different rings");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

DeltaFunction& DeltaFunction::operator-=(const DeltaFunction& o) {
  if (labels != o.labels) throw DomainError("delta functions over different rings");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

bool pointwise_leq(const DeltaFunction& a, const DeltaFunction& b) {
  if (a.labels != b.labels) throw DomainError("delta functions over different rings");
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] > b.values[i]) return false;
  }
  return true;
}

std::vector<int> hom_vector(const HomTable& table, const StableModule& m) {
  check_module(table.spec(), m);
  std::vector<int> v;
  v.reserve(table.size());
  for (const auto& x : table.labels()) v.push_back(table.hom(x, m));
  return v;
}

bool leq_hom(const HomTable& table, const StableModule& m, const StableModule& n) {
  auto a = hom_vector(table, m);
  auto b = hom_vector(table, n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

DeltaFunction delta(const HomTable& table, const StableModule& m, const StableModule& n) {
  DeltaFunction f{table.labels(), hom_vector(table, n)};
  auto a = hom_vector(table, m);
  for (std::size_t i = 0; i < a.size(); ++i) f.values[i] -= a[i];
  return f;
}

DeltaFunction delta_triangle(const HomTable& table, const StableModule& z, const StableModule& y,
                             const StableModule& x) {
  DeltaFunction f{table.labels(), hom_vector(table, z)};
  auto hx = hom_vector(table, x);
  auto hy = hom_vector(table, y);
  for (std::size_t i = 0; i < hx.size(); ++i) f.values[i] += hx[i] - hy[i];
  return f;
}

CdResult cd_consequence(const HomTable& table, const StableModule& m, const StableModule& n) {
  CdResult r;
  if (hom_vector(table, m) != hom_vector(table, n)) return r;
  r.lhs = m + syzygy(table.spec(), m);
  r.rhs = n + syzygy(table.spec(), n);
  r.status = *r.lhs == *r.rhs ? CdResult::Status::Holds : CdResult::Status::Violated;
  return r;
}

const char* to_string(CdResult::Status s) {
  switch (s) {
    case CdResult::Status::NotApplicable: return "not_applicable";
    case CdResult::Status::Holds: return "holds";
    case CdResult::Status::Violated: return "violated";
  }
  return "?";
}

}  // namespace cmdegen
