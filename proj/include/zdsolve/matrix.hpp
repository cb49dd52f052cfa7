#pragma once

#include "zdsolve/combinatorics.hpp"
#include "zdsolve/fields.hpp"
#include "zdsolve/unipoly.hpp"

namespace zdsolve {

/// Row-major dense matrix over a coefficient field.
template <CoefficientField K>
class Matrix {
 public:
  using Elem = typename K::Elem;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        e_(rows * cols, field_.zero()) {}

  static Matrix identity(K field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }
  static Matrix from_ints(K field, std::vector<std::vector<long>> rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "+");
    Matrix r(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = a.field_.add(a.e_[i], b.e_[i]);
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "-");
    Matrix r(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = a.field_.sub(a.e_[i], b.e_[i]);
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix: incompatible product shapes");
    const K& f = a.field_;
    Matrix r(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& aik = a.at(i, k);
        if (f.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) = f.add(r.at(i, j), f.mul(aik, b.at(k, j)));
      }
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.mul(e_[i], c);
    return r;
  }
  Matrix transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  Matrix pow(unsigned e) const {
    if (!is_square()) throw std::invalid_argument("Matrix: pow of non-square");
    Matrix r = identity(field_, rows_);
    Matrix b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  Elem trace() const {
    if (!is_square())
      throw std::invalid_argument("Matrix: trace of non-square");
    Elem t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, at(i, i));
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!field_.equal(at(i, j), at(j, i))) return false;
    return true;
  }

  Matrix submatrix(const std::vector<unsigned>& rs,
                   const std::vector<unsigned>& cs) const {
    Matrix r(field_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        r.at(i, j) = at(rs[i], cs[j]);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (!a.field_.equal(a.e_[i], b.e_[i])) return false;
    return true;
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Matrix: shape mismatch in ") +
                                  op);
  }

  K field_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

/// Fraction-free Bareiss determinant (exact divisions only).
template <CoefficientField K>
typename K::Elem det(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
  const K& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return f.one();
  Matrix<K> a = m;
  typename K::Elem prev = f.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (f.is_zero(a.at(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && f.is_zero(a.at(pivot, k))) ++pivot;
      if (pivot == n) return f.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = f.sub(f.mul(a.at(i, j), a.at(k, k)),
                         f.mul(a.at(i, k), a.at(k, j)));
        a.at(i, j) = f.div(num, prev);
      }
    prev = a.at(k, k);
  }
  auto d = a.at(n - 1, n - 1);
  return negate ? f.neg(d) : d;
}

/// Cofactor-expansion determinant; the cross-check route for small sizes.
template <CoefficientField K>
typename K::Elem det_cofactor(const Matrix<K>& m) {
  if (!m.is_square())
    throw std::invalid_argument("det_cofactor: non-square matrix");
  const K& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return f.one();
  if (n == 1) return m.at(0, 0);
  auto acc = f.zero();
  std::vector<unsigned> all_cols;
  for (unsigned j = 0; j < n; ++j) all_cols.push_back(j);
  for (std::size_t j = 0; j < n; ++j) {
    if (f.is_zero(m.at(0, j))) continue;
    std::vector<unsigned> rs, cs;
    for (unsigned i = 1; i < n; ++i) rs.push_back(i);
    for (unsigned c : all_cols)
      if (c != j) cs.push_back(c);
    auto minor = det_cofactor(m.submatrix(rs, cs));
    auto t = f.mul(m.at(0, j), minor);
    acc = (j % 2 == 0) ? f.add(acc, t) : f.sub(acc, t);
  }
  return acc;
}

/// Row-echelon rank by Gaussian elimination.
template <CoefficientField K>
std::size_t rank(const Matrix<K>& m) {
  const K& f = m.field();
  Matrix<K> a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && f.is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      std::swap(a.at(rank, j), a.at(pivot, j));
    auto inv = f.inv(a.at(rank, col));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (f.is_zero(a.at(i, col))) continue;
      auto factor = f.mul(a.at(i, col), inv);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

/// Monic characteristic polynomial det(Z*Id - M), computed exactly by a
/// similarity reduction to upper Hessenberg form followed by the
/// three-term minor recurrence.
template <CoefficientField K>
UniPoly<K> char_poly(const Matrix<K>& m) {
  if (!m.is_square())
    throw std::invalid_argument("char_poly: non-square matrix");
  const K& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return UniPoly<K>::from_int(f, 1);

  Matrix<K> h = m;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t pivot = k + 1;
    while (pivot < n && f.is_zero(h.at(pivot, k))) ++pivot;
    if (pivot == n) continue;
    if (pivot != k + 1) {  // similarity swap: rows and matching columns
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h.at(k + 1, j), h.at(pivot, j));
      for (std::size_t i = 0; i < n; ++i)
        std::swap(h.at(i, k + 1), h.at(i, pivot));
    }
    auto inv = f.inv(h.at(k + 1, k));
    for (std::size_t i = k + 2; i < n; ++i) {
      if (f.is_zero(h.at(i, k))) continue;
      auto factor = f.mul(h.at(i, k), inv);
      for (std::size_t j = 0; j < n; ++j)
        h.at(i, j) = f.sub(h.at(i, j), f.mul(factor, h.at(k + 1, j)));
      for (std::size_t j = 0; j < n; ++j)
        h.at(j, k + 1) = f.add(h.at(j, k + 1), f.mul(factor, h.at(j, i)));
    }
  }

  // p_m = (Z - h[m-1][m-1]) p_{m-1} - sum_i h[m-1-i][m-1] prod(subdiag) p_{m-1-i}
  std::vector<UniPoly<K>> p;
  p.reserve(n + 1);
  p.push_back(UniPoly<K>::from_int(f, 1));
  for (std::size_t mth = 1; mth <= n; ++mth) {
    UniPoly<K> zm = UniPoly<K>(
        f, {f.neg(h.at(mth - 1, mth - 1)), f.one()});
    UniPoly<K> cur = zm * p[mth - 1];
    auto prod = f.one();
    for (std::size_t i = 1; i < mth; ++i) {
      prod = f.mul(prod, h.at(mth - i, mth - i - 1));
      if (f.is_zero(prod)) break;
      auto c = f.mul(h.at(mth - 1 - i, mth - 1), prod);
      if (!f.is_zero(c))
        cur = cur - p[mth - 1 - i].scaled(c);
    }
    p.push_back(std::move(cur));
  }
  return p[n];
}

/// The C(n,r) x C(n,r) matrix of r x r minors; rows and columns indexed by
/// r-subsets in lexicographic subset order.
template <CoefficientField K>
Matrix<K> exterior_power(unsigned r, const Matrix<K>& m) {
  if (r > m.rows() || r > m.cols())
    throw std::invalid_argument("exterior_power: r out of range");
  auto row_sets = subsets_lex(static_cast<unsigned>(m.rows()), r);
  auto col_sets = subsets_lex(static_cast<unsigned>(m.cols()), r);
  Matrix<K> out(m.field(), row_sets.size(), col_sets.size());
  for (std::size_t i = 0; i < row_sets.size(); ++i)
    for (std::size_t j = 0; j < col_sets.size(); ++j)
      out.at(i, j) = det(m.submatrix(row_sets[i], col_sets[j]));
  return out;
}

/// Rank and signature of a symmetric rational matrix via simultaneous
/// row/column reduction. A zero diagonal with a nonzero off-diagonal pivot
/// is handled as a hyperbolic 2x2 block contributing (+1, -1). The rank is
/// recomputed by plain Gaussian elimination as well; the two must agree.
std::pair<std::size_t, long> symmetric_rank_signature(
    const Matrix<Rationals>& m);

}  // namespace zdsolve
