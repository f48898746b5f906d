#include "cmdegen/oracle.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include "cmdegen/errors.hpp"
#include "cmdegen/linalg.hpp"
#include "cmdegen/parallel.hpp"

namespace cmdegen {

std::string FieldConfig::name() const {
  return kind == Kind::QI ? "qi" : "fp:" + std::to_string(prime);
}

FieldConfig parse_field(const std::string& text) {
  if (text == "qi") return FieldConfig::qi();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* begin = text.data() + 3;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, p);
    if (ec != std::errc() || ptr != end || begin == end) throw DomainError("malformed field '" + text + "'");
    FpField check(p);  // validates primality and p = 1 mod 4
    return FieldConfig::fp(p);
  }
  throw DomainError("unknown field '" + text + "', expected qi or fp:<p>");
}

std::string DegreeBound::name() const { return automatic ? "auto" : std::to_string(value); }

DegreeBound parse_degree_bound(const std::string& text) {
  if (text == "auto" || text == "AUTO") return DegreeBound::automatic_bound();
  int d = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size() || d <= 0) {
    throw DomainError("degree bound must be a positive integer or auto, got '" + text + "'");
  }
  return DegreeBound::fixed(d);
}

namespace {

int weight_x() { return 2; }
int weight_y(int n) { return n + 1; }
int weight_f(int n) { return 2 * (n + 1); }

std::vector<Monomial> monomials_of_degree(int deg, int n) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  for (int b = 0; b * weight_y(n) <= deg; ++b) {
    int rest = deg - b * weight_y(n);
    if (rest % weight_x() == 0) out.emplace_back(rest / weight_x(), b);
  }
  return out;
}

template <class E>
using LinForm = std::map<int, E>;  // variable -> coefficient
template <class E>
using LinPoly = std::map<Monomial, LinForm<E>>;
template <class E>
using LinMatrix = std::vector<std::vector<LinPoly<E>>>;

// Unknown homogeneous matrix: entry (r, c) has degree coldeg[c] - rowdeg[r] + offset
// and one variable per monomial of that degree.
template <class E>
LinMatrix<E> unknown_block(const std::vector<int>& rowdeg, const std::vector<int>& coldeg, int offset, int n,
                           const E& one, int& next_var) {
  LinMatrix<E> m(rowdeg.size(), std::vector<LinPoly<E>>(coldeg.size()));
  for (std::size_t r = 0; r < rowdeg.size(); ++r) {
    for (std::size_t c = 0; c < coldeg.size(); ++c) {
      for (const auto& mono : monomials_of_degree(coldeg[c] - rowdeg[r] + offset, n)) {
        m[r][c][mono][next_var++] = one;
      }
    }
  }
  return m;
}

template <class E>
void accumulate(LinPoly<E>& target, const Monomial& mono, const LinForm<E>& form, const E& scale) {
  auto& slot = target[mono];
  for (const auto& [var, coef] : form) {
    E v = scale * coef;
    auto [it, inserted] = slot.try_emplace(var, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) slot.erase(it);
    }
  }
  if (slot.empty()) target.erase(mono);
}

// target += sign · (A · U)
template <class E>
void add_known_times_unknown(LinMatrix<E>& target, const PolyMatrix<E>& a, const LinMatrix<E>& u, const E& sign) {
  for (int r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < u.front().size(); ++c)
      for (int k = 0; k < a.cols(); ++k)
        for (const auto& [am, ac] : a(r, k).terms())
          for (const auto& [um, form] : u[static_cast<std::size_t>(k)][c])
            accumulate(target[static_cast<std::size_t>(r)][c], am + um, form, sign * ac);
}

// target += sign · (U · B)
template <class E>
void add_unknown_times_known(LinMatrix<E>& target, const LinMatrix<E>& u, const PolyMatrix<E>& b, const E& sign) {
  for (std::size_t r = 0; r < u.size(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      for (int k = 0; k < b.rows(); ++k)
        for (const auto& [bm, bc] : b(k, c).terms())
          for (const auto& [um, form] : u[r][static_cast<std::size_t>(k)])
            accumulate(target[r][static_cast<std::size_t>(c)], um + bm, form, sign * bc);
}

template <class E>
void collect_rows(const LinMatrix<E>& m, std::vector<SparseRow<E>>& rows) {
  for (const auto& row : m)
    for (const auto& entry : row)
      for (const auto& [mono, form] : entry)
        if (!form.empty()) rows.emplace_back(form.begin(), form.end());
}

template <class E>
LinMatrix<E> zero_lin(std::size_t rows, std::size_t cols) {
  return LinMatrix<E>(rows, std::vector<LinPoly<E>>(cols));
}

template <class E>
E unit_like(const E& sample) {
  // Elements carry their field (Fp stores the modulus); build 1 from a sample.
  if constexpr (std::is_same_v<E, Fp>) {
    return Fp(1, sample.modulus());
  } else {
    return E(1);
  }
}

template <class E>
E some_coefficient(const MatrixFactorization<E>& mf) {
  for (int r = 0; r < mf.phi.rows(); ++r)
    for (int c = 0; c < mf.phi.cols(); ++c)
      if (!mf.phi(r, c).is_zero()) return mf.phi(r, c).terms().begin()->second;
  throw ConsistencyError("matrix factorization with zero φ");
}

}  // namespace

template <class E>
void validate(const MatrixFactorization<E>& mf) {
  int n = mf.n;
  int size = mf.phi.rows();
  if (mf.phi.cols() != size || mf.psi.rows() != size || mf.psi.cols() != size ||
      static_cast<int>(mf.deg0.size()) != size || static_cast<int>(mf.deg1.size()) != size) {
    throw ConsistencyError("matrix factorization with inconsistent sizes");
  }
  E one = unit_like(some_coefficient(mf));
  Poly<E> f = Poly<E>::monomial(one, n + 1, 0) + Poly<E>::monomial(one, 0, 2);
  auto f_id = PolyMatrix<E>::identity(size, f);
  if (!(mf.phi * mf.psi == f_id) || !(mf.psi * mf.phi == f_id)) {
    throw ConsistencyError("φψ = ψφ = f·Id fails");
  }
  for (int p = 0; p < size; ++p) {
    for (int q = 0; q < size; ++q) {
      if (!mf.phi(p, q).is_homogeneous(weight_x(), weight_y(n), mf.deg1[q] - mf.deg0[p]) ||
          !mf.psi(q, p).is_homogeneous(weight_x(), weight_y(n), mf.deg0[p] - mf.deg1[q] + weight_f(n))) {
        throw ConsistencyError("matrix factorization entry is not homogeneous");
      }
    }
  }
}

template <class Field>
MatrixFactorization<typename Field::Elem> mf_of(const Field& field, const SingularitySpec& spec, const IndecId& x) {
  using E = typename Field::Elem;
  auto r = knoerrer_reduce(spec);
  if (r.d != 1) throw DomainError("matrix factorizations are only built for reduced d = 1; use the artinian path");
  index_of(r, x);
  const int n = r.n;
  E one = field.one();
  E i = field.sqrt_minus_one();
  MatrixFactorization<E> mf;
  mf.n = n;
  if (x.kind == IndecId::Kind::Ideal) {
    int k = x.index;
    mf.phi = PolyMatrix<E>(2, 2);
    mf.psi = PolyMatrix<E>(2, 2);
    mf.phi(0, 0) = Poly<E>::monomial(one, k, 0);
    mf.phi(0, 1) = Poly<E>::monomial(-one, 0, 1);
    mf.phi(1, 0) = Poly<E>::monomial(one, 0, 1);
    mf.phi(1, 1) = Poly<E>::monomial(one, n + 1 - k, 0);
    mf.psi(0, 0) = Poly<E>::monomial(one, n + 1 - k, 0);
    mf.psi(0, 1) = Poly<E>::monomial(one, 0, 1);
    mf.psi(1, 0) = Poly<E>::monomial(-one, 0, 1);
    mf.psi(1, 1) = Poly<E>::monomial(one, k, 0);
    mf.deg0 = {0, 2 * k - n - 1};
    mf.deg1 = {2 * k, n + 1};
  } else {
    int m = (n + 1) / 2;
    E s = x.kind == IndecId::Kind::BranchPlus ? i : -i;
    mf.phi = PolyMatrix<E>(1, 1);
    mf.psi = PolyMatrix<E>(1, 1);
    mf.phi(0, 0) = Poly<E>::monomial(one, m, 0) + Poly<E>::monomial(s, 0, 1);
    mf.psi(0, 0) = Poly<E>::monomial(one, m, 0) + Poly<E>::monomial(-s, 0, 1);
    mf.deg0 = {0};
    mf.deg1 = {n + 1};
  }
  validate(mf);
  return mf;
}

template <class Field>
MatrixFactorization<typename Field::Elem> mf_of(const Field& field, const SingularitySpec& spec, const StableModule& m) {
  using E = typename Field::Elem;
  if (m.empty()) throw DomainError("the zero module has no matrix factorization");
  std::optional<MatrixFactorization<E>> out;
  for (const auto& [id, count] : m.multiplicities()) {
    auto piece = mf_of(field, spec, id);
    for (int c = 0; c < count; ++c) {
      if (!out) {
        out = piece;
        continue;
      }
      out->phi = PolyMatrix<E>::direct_sum(out->phi, piece.phi);
      out->psi = PolyMatrix<E>::direct_sum(out->psi, piece.psi);
      out->deg0.insert(out->deg0.end(), piece.deg0.begin(), piece.deg0.end());
      out->deg1.insert(out->deg1.end(), piece.deg1.begin(), piece.deg1.end());
    }
  }
  validate(*out);
  return *out;
}

template <class E>
int lowest_morphism_degree(const MatrixFactorization<E>& m, const MatrixFactorization<E>& n) {
  int lo = std::numeric_limits<int>::max();
  for (int a : n.deg0)
    for (int b : m.deg0) lo = std::min(lo, a - b);
  for (int a : n.deg1)
    for (int b : m.deg1) lo = std::min(lo, a - b);
  return lo;
}

template <class E>
int graded_stable_hom(const MatrixFactorization<E>& m, const MatrixFactorization<E>& n, int j) {
  const int ring_n = m.n;
  const int h = weight_f(ring_n);
  E one = unit_like(some_coefficient(m));
  E minus_one = -one;

  // Cycles: α: F0^M -> F0^N, β: F1^M -> F1^N.
  int vars = 0;
  auto alpha = unknown_block<E>(n.deg0, m.deg0, j, ring_n, one, vars);
  auto beta = unknown_block<E>(n.deg1, m.deg1, j, ring_n, one, vars);
  const int cycle_vars = vars;
  if (cycle_vars == 0) return 0;

  std::vector<SparseRow<E>> equations;
  auto e1 = zero_lin<E>(n.deg0.size(), m.deg1.size());
  add_unknown_times_known(e1, alpha, m.phi, one);
  add_known_times_unknown(e1, n.phi, beta, minus_one);
  collect_rows(e1, equations);
  auto e2 = zero_lin<E>(n.deg1.size(), m.deg0.size());
  add_unknown_times_known(e2, beta, m.psi, one);
  add_known_times_unknown(e2, n.psi, alpha, minus_one);
  collect_rows(e2, equations);
  const int cycles = cycle_vars - static_cast<int>(rank(std::move(equations)));

  // Boundaries: u: F0^M -> F1^N, v: F1^M -> F0^N (degree shifted by -deg f).
  vars = 0;
  auto u = unknown_block<E>(n.deg1, m.deg0, j, ring_n, one, vars);
  auto v = unknown_block<E>(n.deg0, m.deg1, j - h, ring_n, one, vars);
  std::vector<SparseRow<E>> images;
  if (vars > 0) {
    auto a_img = zero_lin<E>(n.deg0.size(), m.deg0.size());
    add_known_times_unknown(a_img, n.phi, u, one);
    add_unknown_times_known(a_img, v, m.psi, one);
    collect_rows(a_img, images);
    auto b_img = zero_lin<E>(n.deg1.size(), m.deg1.size());
    add_unknown_times_known(b_img, u, m.phi, one);
    add_known_times_unknown(b_img, n.psi, v, one);
    collect_rows(b_img, images);
  }
  const int boundaries = static_cast<int>(rank(std::move(images)));

  if (boundaries > cycles) throw ConsistencyError("homotopies exceed cycles in a graded piece");
  return cycles - boundaries;
}

namespace {

template <class Field>
HomCertificate mf_stable_hom(const Field& field, const SingularitySpec& spec, const StableModule& m,
                             const StableModule& n, const OracleConfig& config) {
  HomCertificate cert;
  cert.path = "matrix-factorization";
  auto mf_m = mf_of(field, spec, m);
  auto mf_n = mf_of(field, spec, n);
  const int lo = lowest_morphism_degree(mf_m, mf_n);
  std::map<int, int> pieces;
  auto total_for = [&](int window) {
    int total = 0;
    for (int j = lo; j < lo + window; ++j) {
      auto it = pieces.find(j);
      if (it == pieces.end()) it = pieces.emplace(j, graded_stable_hom(mf_m, mf_n, j)).first;
      total += it->second;
    }
    cert.rounds.emplace_back(window, total);
    return total;
  };

  const int ring_n = knoerrer_reduce(spec).n;
  if (!config.bound.automatic) {
    cert.dim = total_for(config.bound.value);
    return cert;
  }
  const int start = weight_f(ring_n);
  const int cap = config.cap_factor * start;
  int window = start;
  int previous = total_for(window);
  while (window * 2 <= cap) {
    window *= 2;
    int current = total_for(window);
    if (current == previous) {
      cert.dim = current;
      cert.stabilized = true;
      return cert;
    }
    previous = current;
  }
  throw StabilizationError("stable Hom(" + to_string(m) + ", " + to_string(n) + ") over " + to_string(spec) +
                           " did not stabilize below degree window " + std::to_string(cap));
}

std::vector<int> partition_of(const StableModule& m) {
  std::vector<int> parts;
  for (const auto& [id, c] : m.multiplicities())
    for (int k = 0; k < c; ++k) parts.push_back(id.index);
  return parts;
}

template <class Field>
HomCertificate stable_hom_with(const Field& field, const SingularitySpec& spec, const StableModule& m,
                               const StableModule& n, const OracleConfig& config) {
  auto r = knoerrer_reduce(spec);
  check_module(r, m);
  check_module(r, n);
  if (m.empty() || n.empty()) return {0, "zero", {}, true};
  if (r.d == 1) return mf_stable_hom(field, r, m, n, config);
  HomCertificate cert;
  cert.path = "artinian";
  cert.stabilized = true;
  cert.dim = artinian::stable_hom_dim(field, partition_of(m), partition_of(n), r.n);
  return cert;
}

}  // namespace

HomCertificate stable_hom_dim(const SingularitySpec& spec, const StableModule& m, const StableModule& n,
                              const OracleConfig& config) {
  if (config.field.kind == FieldConfig::Kind::QI) return stable_hom_with(QIField{}, spec, m, n, config);
  return stable_hom_with(FpField(config.field.prime), spec, m, n, config);
}

namespace {

struct TableCache {
  std::mutex mutex;
  std::map<std::pair<SingularitySpec, OracleConfig>, std::unique_ptr<HomTableCertificate>> entries;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

std::unique_ptr<HomTableCertificate> compute_table(const SingularitySpec& r, const OracleConfig& config) {
  auto ids = classify(r);
  const std::size_t k = ids.size();
  std::vector<std::vector<HomCertificate>> cells(k, std::vector<HomCertificate>(k));
  parallel_for(k * k, [&](std::size_t idx) {
    std::size_t a = idx / k, b = idx % k;
    cells[a][b] = stable_hom_dim(r, StableModule::of(ids[a]), StableModule::of(ids[b]), config);
  });
  std::vector<std::vector<int>> dims(k, std::vector<int>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) dims[a][b] = cells[a][b].dim;
  return std::make_unique<HomTableCertificate>(
      HomTableCertificate{HomTable(r, std::move(dims)), config.field, config.bound, std::move(cells)});
}

}  // namespace

const HomTableCertificate& hom_table_certified(const SingularitySpec& spec, const OracleConfig& config) {
  auto r = knoerrer_reduce(spec);
  auto key = std::make_pair(r, config);
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    auto it = c.entries.find(key);
    if (it != c.entries.end()) return *it->second;
  }
  // Computed outside the lock; concurrent callers may race to insert
  // identical values, and the first insertion wins.
  auto fresh = compute_table(r, config);
  std::lock_guard lock(c.mutex);
  auto [it, inserted] = c.entries.try_emplace(key, std::move(fresh));
  if (inserted) {
    for (const auto& [other_key, other] : c.entries) {
      if (other_key.first == r && other_key.second.field != config.field &&
          other->table.dims() != it->second->table.dims()) {
        throw ConsistencyError("hom tables for " + to_string(r) + " disagree between fields " +
                               config.field.name() + " and " + other_key.second.field.name());
      }
    }
  }
  return *it->second;
}

const HomTable& hom_table(const SingularitySpec& spec, const OracleConfig& config) {
  return hom_table_certified(spec, config).table;
}

namespace artinian {
namespace {

template <class E>
using Dense = std::vector<std::vector<E>>;

// x acting on ⊕ k[x]/(x^s): basis e_1..e_s per block with x·e_k = e_{k+1}.
template <class Field>
Dense<typename Field::Elem> nilpotent_operator(const Field& field, const std::vector<int>& parts) {
  int dim = 0;
  for (int s : parts) dim += s;
  Dense<typename Field::Elem> a(static_cast<std::size_t>(dim),
                                std::vector<typename Field::Elem>(static_cast<std::size_t>(dim), field.zero()));
  int offset = 0;
  for (int s : parts) {
    for (int k = 0; k + 1 < s; ++k) a[static_cast<std::size_t>(offset + k + 1)][static_cast<std::size_t>(offset + k)] = field.one();
    offset += s;
  }
  return a;
}

void check_parts(const std::vector<int>& parts, int ring_n) {
  for (int s : parts) {
    if (s < 1 || s > ring_n + 1) throw DomainError("Jordan block size out of range for k[x]/(x^{n+1})");
  }
}

// Basis of {A : J_target·A = A·J_source}, each A flattened row-major
// (rows = dim target, cols = dim source).
template <class Field>
std::vector<std::vector<typename Field::Elem>> hom_basis(const Field& field, const std::vector<int>& source,
                                                         const std::vector<int>& target) {
  using E = typename Field::Elem;
  auto js = nilpotent_operator(field, source);
  auto jt = nilpotent_operator(field, target);
  const std::size_t ds = js.size(), dt = jt.size();
  const std::size_t vars = ds * dt;
  if (vars == 0) return {};
  Dense<E> eqs;
  for (std::size_t r = 0; r < dt; ++r) {
    for (std::size_t c = 0; c < ds; ++c) {
      std::vector<E> row(vars, field.zero());
      // (J_t A)[r][c] - (A J_s)[r][c]
      for (std::size_t k = 0; k < dt; ++k)
        if (!jt[r][k].is_zero()) row[k * ds + c] += jt[r][k];
      for (std::size_t k = 0; k < ds; ++k)
        if (!js[k][c].is_zero()) row[r * ds + k] -= js[k][c];
      eqs.push_back(std::move(row));
    }
  }
  return nullspace(std::move(eqs), vars, field.zero(), field.one());
}

template <class E>
std::vector<SparseRow<E>> to_rows(const std::vector<std::vector<E>>& vs) {
  std::vector<SparseRow<E>> rows;
  for (const auto& v : vs) {
    SparseRow<E> row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) row.emplace(static_cast<int>(i), v[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

template <class Field>
int hom_dim(const Field& field, const std::vector<int>& m, const std::vector<int>& n) {
  return static_cast<int>(hom_basis(field, m, n).size());
}

template <class Field>
int stable_hom_dim(const Field& field, const std::vector<int>& m, const std::vector<int>& n, int ring_n) {
  using E = typename Field::Elem;
  check_parts(m, ring_n);
  check_parts(n, ring_n);
  if (m.empty() || n.empty()) return 0;
  auto hom = hom_basis(field, m, n);
  if (m.size() == 1 && n.size() == 1 && static_cast<int>(hom.size()) != std::min(m[0], n[0])) {
    throw ConsistencyError("dim Hom(M_i, M_j) != min(i, j)");
  }

  // P(M, N) is spanned by g∘f with f: M -> R, g: R -> N.
  const std::vector<int> free{ring_n + 1};
  auto to_free = hom_basis(field, m, free);
  auto from_free = hom_basis(field, free, n);
  int dm = 0, dn = 0;
  for (int s : m) dm += s;
  for (int s : n) dn += s;
  const int r = ring_n + 1;
  std::vector<std::vector<E>> products;
  for (const auto& g : from_free) {    // dn x r
    for (const auto& f : to_free) {    // r x dm
      std::vector<E> p(static_cast<std::size_t>(dn * dm), field.zero());
      for (int a = 0; a < dn; ++a)
        for (int k = 0; k < r; ++k) {
          const E& gv = g[static_cast<std::size_t>(a * r + k)];
          if (gv.is_zero()) continue;
          for (int b = 0; b < dm; ++b) {
            const E& fv = f[static_cast<std::size_t>(k * dm + b)];
            if (!fv.is_zero()) p[static_cast<std::size_t>(a * dm + b)] += gv * fv;
          }
        }
      products.push_back(std::move(p));
    }
  }
  int factoring = static_cast<int>(rank(to_rows(products)));
  return static_cast<int>(hom.size()) - factoring;
}

template <class Field>
std::vector<int> syzygy_type(const Field& field, int i, int ring_n) {
  using E = typename Field::Elem;
  if (i < 1 || i > ring_n + 1) throw DomainError("Jordan block size out of range for k[x]/(x^{n+1})");
  const int r = ring_n + 1;
  // Cover R -> k[x]/(x^i), x^k ↦ e_{k+1} for k < i. Kernel via its null space.
  std::vector<std::vector<E>> cover(static_cast<std::size_t>(i), std::vector<E>(static_cast<std::size_t>(r), field.zero()));
  for (int k = 0; k < i; ++k) cover[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = field.one();
  auto kernel = nullspace(cover, static_cast<std::size_t>(r), field.zero(), field.one());
  const std::size_t kd = kernel.size();
  if (kd == 0) return {};

  // Null-space vectors carry the identity on the free columns, so coordinates
  // of a kernel vector are its entries there.
  std::vector<std::size_t> free_cols;
  for (const auto& v : kernel) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) {
        free_cols.push_back(c);
        break;
      }
    }
  }
  auto x = nilpotent_operator(field, {r});
  std::vector<std::vector<E>> t(kd, std::vector<E>(kd, field.zero()));  // t[row][col]
  for (std::size_t col = 0; col < kd; ++col) {
    std::vector<E> image(static_cast<std::size_t>(r), field.zero());
    for (std::size_t a = 0; a < static_cast<std::size_t>(r); ++a)
      for (std::size_t b = 0; b < static_cast<std::size_t>(r); ++b)
        if (!x[a][b].is_zero()) image[a] += x[a][b] * kernel[col][b];
    for (std::size_t row = 0; row < kd; ++row) t[row][col] = image[free_cols[row]];
  }

  // #blocks of size >= k = rank(T^{k-1}) - rank(T^k).
  std::vector<std::size_t> ranks{kd};
  auto power = t;
  while (ranks.back() > 0) {
    std::vector<SparseRow<E>> rows;
    for (const auto& row : power) {
      SparseRow<E> s;
      for (std::size_t c = 0; c < kd; ++c)
        if (!row[c].is_zero()) s.emplace(static_cast<int>(c), row[c]);
      rows.push_back(std::move(s));
    }
    ranks.push_back(rank(std::move(rows)));
    std::vector<std::vector<E>> next(kd, std::vector<E>(kd, field.zero()));
    for (std::size_t a = 0; a < kd; ++a)
      for (std::size_t b = 0; b < kd; ++b)
        for (std::size_t c = 0; c < kd; ++c)
          if (!power[a][b].is_zero() && !t[b][c].is_zero()) next[a][c] += power[a][b] * t[b][c];
    power = std::move(next);
  }
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least_k - at_least_next; ++c) parts.push_back(static_cast<int>(k));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

template int hom_dim(const QIField&, const std::vector<int>&, const std::vector<int>&);
template int hom_dim(const FpField&, const std::vector<int>&, const std::vector<int>&);
template int stable_hom_dim(const QIField&, const std::vector<int>&, const std::vector<int>&, int);
template int stable_hom_dim(const FpField&, const std::vector<int>&, const std::vector<int>&, int);
template std::vector<int> syzygy_type(const QIField&, int, int);
template std::vector<int> syzygy_type(const FpField&, int, int);

}  // namespace artinian

template void validate(const MatrixFactorization<QI>&);
template void validate(const MatrixFactorization<Fp>&);
template MatrixFactorization<QI> mf_of(const QIField&, const SingularitySpec&, const IndecId&);
template MatrixFactorization<Fp> mf_of(const FpField&, const SingularitySpec&, const IndecId&);
template MatrixFactorization<QI> mf_of(const QIField&, const SingularitySpec&, const StableModule&);
template MatrixFactorization<Fp> mf_of(const FpField&, const SingularitySpec&, const StableModule&);
template int graded_stable_hom(const MatrixFactorization<QI>&, const MatrixFactorization<QI>&, int);
template int graded_stable_hom(const MatrixFactorization<Fp>&, const MatrixFactorization<Fp>&, int);
template int lowest_morphism_degree(const MatrixFactorization<QI>&, const MatrixFactorization<QI>&);
template int lowest_morphism_degree(const MatrixFactorization<Fp>&, const MatrixFactorization<Fp>&);

}  // namespace cmdegen
