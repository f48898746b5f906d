#include "cmdegen/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cmdegen/errors.hpp"

namespace cmdegen {

void validate(const SingularitySpec& spec) {
  if (spec.family != 'A') {
    throw DomainError(std::string("unsupported singularity family '") + spec.family + "'");
  }
  if (spec.n < 1) {
    throw DomainError("singularity index n must be >= 1, got " + std::to_string(spec.n));
  }
  if (spec.d < 0) {
    throw DomainError("Krull dimension d must be >= 0, got " + std::to_string(spec.d));
  }
}

SingularitySpec knoerrer_reduce(const SingularitySpec& spec) {
  validate(spec);
  return {spec.family, spec.n, spec.d % 2};
}

namespace {

int parse_int_field(const std::string& text, std::string_view field, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw DomainError("malformed ring spec '" + text + "': bad " + what);
  }
  return value;
}

}  // namespace

SingularitySpec parse_ring(const std::string& text) {
  auto first = text.find(':');
  auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw DomainError("malformed ring spec '" + text + "', expected A:<n>:<d>");
  }
  std::string family = text.substr(0, first);
  if (family != "A") {
    throw DomainError("unsupported singularity family '" + family + "'");
  }
  std::string_view view(text);
  SingularitySpec spec{'A', parse_int_field(text, view.substr(first + 1, second - first - 1), "n"),
                       parse_int_field(text, view.substr(second + 1), "d")};
  validate(spec);
  return spec;
}

std::string to_string(const SingularitySpec& spec) {
  return std::string(1, spec.family) + ":" + std::to_string(spec.n) + ":" + std::to_string(spec.d);
}

std::string to_string(const IndecId& id) {
  switch (id.kind) {
    case IndecId::Kind::Ideal: return "I" + std::to_string(id.index);
    case IndecId::Kind::BranchPlus: return "N+";
    case IndecId::Kind::BranchMinus: return "N-";
    case IndecId::Kind::Jordan: return "M" + std::to_string(id.index);
  }
  return "?";
}

StableModule::StableModule(std::initializer_list<std::pair<const IndecId, int>> init) {
  for (const auto& [id, count] : init) add(id, count);
}

StableModule StableModule::of(const IndecId& id, int count) {
  StableModule m;
  m.add(id, count);
  return m;
}

int StableModule::mu(const IndecId& id) const {
  auto it = mult_.find(id);
  return it == mult_.end() ? 0 : it->second;
}

void StableModule::add(const IndecId& id, int count) {
  if (count < 0) throw DomainError("negative multiplicity");
  if (count == 0) return;
  mult_[id] += count;
}

void StableModule::remove(const IndecId& id, int count) {
  auto it = mult_.find(id);
  if (count < 0 || (count > 0 && (it == mult_.end() || it->second < count))) {
    throw DomainError("cannot remove " + std::to_string(count) + " copies of " + to_string(id));
  }
  if (count == 0) return;
  it->second -= count;
  if (it->second == 0) mult_.erase(it);
}

int StableModule::total() const {
  int t = 0;
  for (const auto& [id, c] : mult_) t += c;
  return t;
}

bool StableModule::contains(const StableModule& other) const {
  return std::all_of(other.mult_.begin(), other.mult_.end(),
                     [&](const auto& kv) { return mu(kv.first) >= kv.second; });
}

StableModule& StableModule::operator+=(const StableModule& other) {
  for (const auto& [id, c] : other.mult_) add(id, c);
  return *this;
}

StableModule operator-(StableModule a, const StableModule& b) {
  for (const auto& [id, c] : b.mult_) a.remove(id, c);
  return a;
}

StableModule operator*(int k, const StableModule& m) {
  if (k < 0) throw DomainError("negative scalar on a stable module");
  StableModule out;
  for (const auto& [id, c] : m.mult_) out.add(id, k * c);
  return out;
}

std::string to_string(const StableModule& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [id, c] : m.multiplicities()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += to_string(id);
  }
  return out;
}

std::vector<IndecId> classify(const SingularitySpec& spec) {
  auto r = knoerrer_reduce(spec);
  std::vector<IndecId> ids;
  if (r.d == 0) {
    for (int i = 1; i <= r.n; ++i) ids.push_back(IndecId::jordan(i));
  } else if (r.n % 2 == 0) {
    for (int i = 1; i <= r.n / 2; ++i) ids.push_back(IndecId::ideal(i));
  } else {
    for (int i = 1; i <= (r.n - 1) / 2; ++i) ids.push_back(IndecId::ideal(i));
    ids.push_back(IndecId::plus());
    ids.push_back(IndecId::minus());
  }
  return ids;
}

std::size_t index_of(const SingularitySpec& spec, const IndecId& id) {
  auto r = knoerrer_reduce(spec);
  std::size_t pos = 0;
  bool ok = false;
  switch (id.kind) {
    case IndecId::Kind::Jordan:
      ok = r.d == 0 && id.index >= 1 && id.index <= r.n;
      pos = static_cast<std::size_t>(id.index - 1);
      break;
    case IndecId::Kind::Ideal: {
      int top = r.n % 2 == 0 ? r.n / 2 : (r.n - 1) / 2;
      ok = r.d == 1 && id.index >= 1 && id.index <= top;
      pos = static_cast<std::size_t>(id.index - 1);
      break;
    }
    case IndecId::Kind::BranchPlus:
    case IndecId::Kind::BranchMinus:
      ok = r.d == 1 && r.n % 2 == 1 && id.index == 0;
      pos = static_cast<std::size_t>((r.n - 1) / 2 + (id.kind == IndecId::Kind::BranchMinus ? 1 : 0));
      break;
  }
  if (!ok) {
    throw DomainError("unknown indecomposable " + to_string(id) + " over " + to_string(spec));
  }
  return pos;
}

bool belongs(const SingularitySpec& spec, const IndecId& id) {
  try {
    index_of(spec, id);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

void check_module(const SingularitySpec& spec, const StableModule& m) {
  for (const auto& [id, c] : m.multiplicities()) index_of(spec, id);
}

IndecId syzygy(const SingularitySpec& spec, const IndecId& x) {
  auto r = knoerrer_reduce(spec);
  index_of(r, x);
  switch (x.kind) {
    case IndecId::Kind::Ideal: return x;
    case IndecId::Kind::BranchPlus: return IndecId::minus();
    case IndecId::Kind::BranchMinus: return IndecId::plus();
    case IndecId::Kind::Jordan: return IndecId::jordan(r.n + 1 - x.index);
  }
  return x;
}

StableModule syzygy(const SingularitySpec& spec, const StableModule& m) {
  StableModule out;
  for (const auto& [id, c] : m.multiplicities()) out.add(syzygy(spec, id), c);
  return out;
}

IndecId shift(const SingularitySpec& spec, const IndecId& x, int k) {
  // Ω is an involution on stable objects here, so only the parity of k matters.
  index_of(spec, x);
  return k % 2 == 0 ? x : syzygy(spec, x);
}

StableModule shift(const SingularitySpec& spec, const StableModule& m, int k) {
  StableModule out;
  for (const auto& [id, c] : m.multiplicities()) out.add(shift(spec, id, k), c);
  return out;
}

IndecId tau(const SingularitySpec& spec, const IndecId& x) {
  auto r = knoerrer_reduce(spec);
  return shift(r, x, r.d);
}

std::vector<int> coordinates(const SingularitySpec& spec, const StableModule& m) {
  std::vector<int> c(classify(spec).size(), 0);
  for (const auto& [id, k] : m.multiplicities()) c[index_of(spec, id)] = k;
  return c;
}

StableModule from_coordinates(const SingularitySpec& spec, const std::vector<int>& coords) {
  auto ids = classify(spec);
  if (coords.size() != ids.size()) throw DomainError("coordinate vector has wrong length");
  StableModule m;
  for (std::size_t i = 0; i < ids.size(); ++i) m.add(ids[i], coords[i]);
  return m;
}

std::vector<StableModule> enumerate_modules(const SingularitySpec& spec, int bound) {
  auto ids = classify(spec);
  std::vector<StableModule> out;
  std::vector<int> coords(ids.size(), 0);
  // Compositions of each total t into |ids| parts, lexicographically descending
  // on the first coordinate so that I1-heavy modules come first.
  for (int t = 0; t <= bound; ++t) {
    std::vector<std::vector<int>> level;
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == ids.size()) {
        coords[pos] = left;
        level.push_back(coords);
        return;
      }
      for (int v = left; v >= 0; --v) {
        coords[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    if (ids.empty()) {
      if (t == 0) level.push_back({});
    } else {
      rec(rec, 0, t);
    }
    for (const auto& c : level) out.push_back(from_coordinates(spec, c));
  }
  return out;
}

}  // namespace cmdegen
