#include "cmdegen/k0.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "cmdegen/ar_quiver.hpp"
#include "cmdegen/errors.hpp"

namespace cmdegen {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ConsistencyError("integer overflow in Smith normal form");
  return r;
}

IntMatrix identity(std::size_t size) {
  IntMatrix m(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) m[i][i] = 1;
  return m;
}

// row_i -= q * row_j
void row_sub(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checked_sub(m[i][c], checked_mul(q, m[j][c]));
}

void col_sub(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t q) {
  for (auto& row : m) row[i] = checked_sub(row[i], checked_mul(q, row[j]));
}

void col_swap(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

// Floor division keeps remainders nonnegative so the Euclidean steps shrink.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  IntMatrix d = a;
  SmithForm out;
  out.u = identity(rows);
  out.v = identity(cols);
  out.v_inverse = identity(cols);

  // V tracks column ops applied on the right; V^{-1} gets the inverse ops on
  // the left so both stay exact.
  auto do_col_sub = [&](std::size_t i, std::size_t j, std::int64_t q) {
    col_sub(d, i, j, q);
    col_sub(out.v, i, j, q);
    // inverse: row_j += q * row_i
    row_sub(out.v_inverse, j, i, -q);
  };
  auto do_col_swap = [&](std::size_t i, std::size_t j) {
    col_swap(d, i, j);
    col_swap(out.v, i, j);
    std::swap(out.v_inverse[i], out.v_inverse[j]);
  };
  auto do_row_sub = [&](std::size_t i, std::size_t j, std::int64_t q) {
    row_sub(d, i, j, q);
    row_sub(out.u, i, j, q);
  };
  auto do_row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(out.u[i], out.u[j]);
  };
  auto do_col_negate = [&](std::size_t i) {
    for (auto& row : d) row[i] = -row[i];
    for (auto& row : out.v) row[i] = -row[i];
    for (auto& x : out.v_inverse[i]) x = -x;
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (d[r][c] != 0 && (pr == rows || std::llabs(d[r][c]) < std::llabs(d[pr][pc]))) pr = r, pc = c;
      if (pr == rows) break;
      do_row_swap(t, pr);
      do_col_swap(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d[r][t] == 0) continue;
        do_row_sub(r, t, floor_div(d[r][t], d[t][t]));
        if (d[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d[t][c] == 0) continue;
        do_col_sub(c, t, floor_div(d[t][c], d[t][t]));
        if (d[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d[r][c] % d[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      do_row_sub(t, bad, -1);
    }
    if (d[t][t] < 0) do_col_negate(t);
  }

  out.diagonal.assign(cols, 0);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d[t][t];

  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (r != c && d[r][c] != 0) throw ConsistencyError("Smith normal form left an off-diagonal entry");
  return out;
}

std::vector<std::int64_t> K0Presentation::invariant_factors() const {
  std::vector<std::int64_t> out;
  for (auto f : smith.diagonal)
    if (f > 1) out.push_back(f);
  for (auto f : smith.diagonal)
    if (f == 0) out.push_back(0);
  return out;
}

namespace {

std::unique_ptr<K0Presentation> build(const SingularitySpec& r) {
  auto pres = std::make_unique<K0Presentation>();
  pres->spec = r;
  pres->generators = classify(r);
  const std::size_t k = pres->generators.size();
  for (const auto& tri : ar_quiver(r)) {
    std::vector<std::int64_t> row(k, 0);
    row[index_of(r, tri.end)] += 1;
    row[index_of(r, tri.translate)] += 1;
    for (const auto& [id, c] : tri.middle.multiplicities()) row[index_of(r, id)] -= c;
    pres->relations.push_back(std::move(row));
  }
  pres->smith = smith_normal_form(pres->relations);
  return pres;
}

}  // namespace

const K0Presentation& k0_presentation(const SingularitySpec& spec) {
  static std::mutex mutex;
  static std::map<SingularitySpec, std::unique_ptr<K0Presentation>> cache;
  auto r = knoerrer_reduce(spec);
  std::lock_guard lock(mutex);
  auto& slot = cache[r];
  if (!slot) slot = build(r);
  return *slot;
}

K0Class k0_class(const K0Presentation& pres, const StableModule& m) {
  auto x = coordinates(pres.spec, m);
  const std::size_t k = x.size();
  // Row vector x in generator basis; relations are rows of A, the lattice is
  // the row space. With U·A·V = D, x·V lies in the lattice of D's rows.
  std::vector<std::int64_t> y(k, 0);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t j = 0; j < k; ++j) y[c] += checked_mul(x[j], pres.smith.v[j][c]);
  K0Class out;
  for (std::size_t c = 0; c < k; ++c) {
    auto f = pres.smith.diagonal[c];
    if (f > 1) out.coords.push_back(((y[c] % f) + f) % f);
  }
  for (std::size_t c = 0; c < k; ++c)
    if (pres.smith.diagonal[c] == 0) out.coords.push_back(y[c]);
  return out;
}

bool same_class(const K0Presentation& pres, const StableModule& m, const StableModule& n) {
  return k0_class(pres, m) == k0_class(pres, n);
}

std::string group_name(const std::vector<std::int64_t>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (auto f : factors) {
    if (!out.empty()) out += " + ";
    out += f == 0 ? "Z" : "Z/" + std::to_string(f);
  }
  return out;
}

}  // namespace cmdegen
