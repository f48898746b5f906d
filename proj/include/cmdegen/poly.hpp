#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cmdegen/errors.hpp"

namespace cmdegen {

// x^a y^b as (a, b).
using Monomial = std::pair<int, int>;

inline Monomial operator+(const Monomial& a, const Monomial& b) {
  return {a.first + b.first, a.second + b.second};
}

// Sparse bivariate polynomial in x, y over a field element type E.
template <class E>
class Poly {
 public:
  Poly() = default;

  static Poly monomial(const E& coef, int a, int b) {
    Poly p;
    p.add_term({a, b}, coef);
    return p;
  }

  void add_term(const Monomial& m, const E& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, E>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) p.add_term(ma + mb, ca * cb);
    return p;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // True if every term has weighted degree `deg` under deg x = wx, deg y = wy.
  bool is_homogeneous(int wx, int wy, int deg) const {
    for (const auto& [m, c] : terms_)
      if (wx * m.first + wy * m.second != deg) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (m.first) out += "x^" + std::to_string(m.first);
      if (m.second) out += "y^" + std::to_string(m.second);
    }
    return out;
  }

 private:
  std::map<Monomial, E> terms_;
};

template <class E>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols)) {
    if (rows <= 0 || cols <= 0) throw DomainError("PolyMatrix needs positive dimensions");
  }

  static PolyMatrix identity(int size, const Poly<E>& diag) {
    PolyMatrix m(size, size);
    for (int i = 0; i < size; ++i) m(i, i) = diag;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly<E>& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Poly<E>& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("PolyMatrix dimension mismatch in product");
    PolyMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j)
        for (int k = 0; k < a.cols_; ++k) out(i, j) += a(i, k) * b(k, j);
    return out;
  }
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("PolyMatrix dimension mismatch in sum");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // Block-diagonal sum.
  static PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly<E>> entries_;
};

}  // namespace cmdegen
