#pragma once

// Dense vectors and covectors, finitely supported vectors, and small exact
// matrices. Vectors in V and functionals in V* are distinct types so that the
// compiler rejects pairing a vector with a vector.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coxconv/rational.hpp"

namespace coxconv {

struct PrimalTag;
struct DualTag;

template <class Tag>
struct DualOfTag;
template <>
struct DualOfTag<PrimalTag> {
  using type = DualTag;
};
template <>
struct DualOfTag<DualTag> {
  using type = PrimalTag;
};
template <class Tag>
using DualOf = typename DualOfTag<Tag>::type;

template <class Tag>
class BasicVector {
 public:
  BasicVector() = default;
  explicit BasicVector(std::size_t dim) : entries_(dim, Rational(0)) {}
  explicit BasicVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  BasicVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static BasicVector unit(std::size_t dim, std::size_t i) {
    BasicVector v(dim);
    v.entries_.at(i) = 1;
    return v;
  }

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  const std::vector<Rational>& data() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
  }

  BasicVector& operator+=(const BasicVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  BasicVector& operator-=(const BasicVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  BasicVector& operator*=(const Rational& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }
  friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
  friend BasicVector operator*(const Rational& c, BasicVector a) { return a *= c; }
  friend BasicVector operator-(BasicVector a) { return a *= Rational(-1); }

  friend bool operator==(const BasicVector& a, const BasicVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const BasicVector& a, const BasicVector& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                        b.entries_.end());
  }

  /// Same coordinates reinterpreted on the other side of the pairing; used
  /// where a scalar product identifies V with V*.
  BasicVector<DualOf<Tag>> transpose() const { return BasicVector<DualOf<Tag>>(entries_); }

 private:
  void check_dim(const BasicVector& o) const {
    if (o.dim() != dim()) throw DimensionMismatch(dim(), o.dim());
  }
  std::vector<Rational> entries_;
};

using DenseVector = BasicVector<PrimalTag>;
using Covector = BasicVector<DualTag>;

template <class Tag>
struct VectorHash {
  std::size_t operator()(const BasicVector<Tag>& v) const {
    std::size_t h = v.dim();
    for (const auto& q : v.entries()) h ^= hash_rational(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// <f, v> for f in V*, v in V.
inline Rational pair(const Covector& f, const DenseVector& v) {
  if (f.dim() != v.dim()) throw DimensionMismatch(f.dim(), v.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < f.dim(); ++i) s += f[i] * v[i];
  return s;
}
inline Rational pair(const DenseVector& v, const Covector& f) { return pair(f, v); }

/// Euclidean product of same-side coordinate vectors (used only by linear
/// algebra helpers that need an orthogonal complement in coordinates).
template <class Tag>
Rational coord_dot(const BasicVector<Tag>& a, const BasicVector<Tag>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

/// Finitely supported map index -> rational; zero values are never stored.
class SparseVector {
 public:
  using Index = std::size_t;
  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<const Index, Rational>> init) {
    for (const auto& [k, v] : init) set(k, v);
  }

  static SparseVector unit(Index j) {
    SparseVector v;
    v.set(j, 1);
    return v;
  }

  Rational get(Index j) const {
    auto it = values_.find(j);
    return it == values_.end() ? Rational(0) : it->second;
  }
  void set(Index j, const Rational& value) {
    if (value == 0)
      values_.erase(j);
    else
      values_[j] = value;
  }
  void add(Index j, const Rational& value) { set(j, get(j) + value); }

  const std::map<Index, Rational>& values() const { return values_; }
  std::vector<Index> support() const {
    std::vector<Index> s;
    s.reserve(values_.size());
    for (const auto& kv : values_) s.push_back(kv.first);
    return s;
  }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, v] : o.values_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [k, v] : o.values_) add(k, -v);
    return *this;
  }
  SparseVector& operator*=(const Rational& c) {
    if (c == 0) {
      values_.clear();
      return *this;
    }
    for (auto& kv : values_) kv.second *= c;
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= Rational(-1); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.values_ == b.values_; }

 private:
  std::map<Index, Rational> values_;
};

/// The canonical scalar product sum_j x_j y_j over the common support.
inline Rational dot(const SparseVector& x, const SparseVector& y) {
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  Rational s = 0;
  for (const auto& [j, v] : small.values()) {
    auto it = large.values().find(j);
    if (it != large.values().end()) s += v * it->second;
  }
  return s;
}

inline Rational norm2(const SparseVector& x) { return dot(x, x); }

/// Dense coordinates over indices offset, offset+1, ..., offset+dim-1.
template <class Tag>
BasicVector<Tag> densify(const SparseVector& x, std::size_t dim, std::size_t offset = 0) {
  BasicVector<Tag> v(dim);
  for (const auto& [j, q] : x.values()) {
    if (j < offset || j - offset >= dim) throw Error("sparse index " + std::to_string(j) + " outside dense range");
    v[j - offset] = q;
  }
  return v;
}

template <class Tag>
SparseVector sparsify(const BasicVector<Tag>& v, std::size_t offset = 0) {
  SparseVector x;
  for (std::size_t i = 0; i < v.dim(); ++i) x.set(i + offset, v[i]);
  return x;
}

/// Row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& data() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch(a.cols_, b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  /// M v
  DenseVector apply(const DenseVector& v) const {
    if (v.dim() != cols_) throw DimensionMismatch(cols_, v.dim());
    DenseVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// f M (row vector times matrix)
  Covector apply_right(const Covector& f) const {
    if (f.dim() != rows_) throw DimensionMismatch(rows_, f.dim());
    Covector out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (f[i] == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) out[j] += f[i] * (*this)(i, j);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const {
    std::size_t h = m.rows() * 131 + m.cols();
    for (const auto& q : m.data()) h ^= hash_rational(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Positive rescaling to a primitive integer vector (gcd of entries 1).
template <class Tag>
BasicVector<Tag> primitive(const BasicVector<Tag>& v) {
  Integer l = 1;
  for (const auto& q : v.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(v.dim());
  for (const auto& q : v.entries()) {
    Integer n = q.get_num() * (l / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  if (g == 0) return v;
  BasicVector<Tag> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

namespace linalg {

/// Indices (into `vectors`) of a maximal linearly independent subfamily,
/// greedily in input order.
template <class Tag>
std::vector<std::size_t> independent_subset(std::span<const BasicVector<Tag>> vectors) {
  std::vector<std::size_t> chosen;
  std::vector<BasicVector<Tag>> echelon;  // reduced rows
  std::vector<std::size_t> pivots;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    BasicVector<Tag> r = vectors[idx];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational c = r[pivots[e]];
      if (c != 0) r -= c * echelon[e];
    }
    std::size_t p = 0;
    while (p < r.dim() && r[p] == 0) ++p;
    if (p == r.dim()) continue;
    r *= Rational(1) / r[p];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational c = echelon[e][p];
      if (c != 0) echelon[e] -= c * r;
    }
    echelon.push_back(std::move(r));
    pivots.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

template <class Tag>
std::size_t rank(std::span<const BasicVector<Tag>> vectors) {
  return independent_subset(vectors).size();
}

/// Basis of {y : <y, v> = 0 for all v in vectors}, y on the other side.
template <class Tag>
std::vector<BasicVector<DualOf<Tag>>> annihilator(std::span<const BasicVector<Tag>> vectors, std::size_t dim) {
  // Reduced row echelon form of the matrix whose rows are `vectors`.
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw DimensionMismatch(dim, v.dim());
    rows.push_back(v.data());
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (auto& q : rows[r]) q *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<BasicVector<DualOf<Tag>>> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    BasicVector<DualOf<Tag>> y(dim);
    y[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) y[pivot_cols[i]] = -rows[i][free];
    basis.push_back(std::move(y));
  }
  return basis;
}

/// Coefficients c with sum_i c_i basis[i] = target, if target is in the span.
template <class Tag>
std::optional<std::vector<Rational>> solve_in_span(std::span<const BasicVector<Tag>> basis,
                                                   const BasicVector<Tag>& target) {
  const std::size_t n = basis.size();
  const std::size_t d = target.dim();
  // Augmented system: d equations, n unknowns.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (basis[j].dim() != d) throw DimensionMismatch(d, basis[j].dim());
      m[i][j] = basis[j][i];
    }
    m[i][n] = target[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < d; ++c) {
    std::size_t p = r;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& q : m[r]) q *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k <= n; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < d; ++i)
    if (m[i][n] != 0) return std::nullopt;
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) coeffs[pivot_cols[i]] = m[i][n];
  return coeffs;
}

}  // namespace linalg

}  // namespace coxconv
