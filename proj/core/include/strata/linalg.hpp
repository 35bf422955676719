#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace strata {

// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const value_type& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> column(std::size_t c) const {
    std::vector<value_type> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <class F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

template <class F>
bool is_zero_matrix(const F& f, const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!f.is_zero(m(i, j))) return false;
    }
  }
  return true;
}

// Incrementally built echelon basis of a subspace of F^dim that remembers how
// each stored row was formed from the independent vectors added so far.
template <class F>
class EchelonBasis {
 public:
  using value_type = typename F::value_type;
  using Vector = std::vector<value_type>;

  EchelonBasis(const F& field, std::size_t dim) : f_(field), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true and stores v if it is independent of the current span.
  bool add(const Vector& v) {
    Vector r = v;
    Vector combo(rows_.size() + 1, f_.zero());
    combo.back() = f_.one();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const value_type c = r[pivots_[k]];
      if (f_.is_zero(c)) continue;
      axpy(r, rows_[k], f_.neg(c));
      for (std::size_t j = 0; j < provenance_[k].size(); ++j) {
        combo[j] = f_.sub(combo[j], f_.mul(c, provenance_[k][j]));
      }
    }
    std::size_t p = 0;
    while (p < dim_ && f_.is_zero(r[p])) ++p;
    if (p == dim_) return false;
    const value_type scale = f_.inv(r[p]);
    for (auto& e : r) e = f_.mul(e, scale);
    for (auto& e : combo) e = f_.mul(e, scale);
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    provenance_.push_back(std::move(combo));
    return true;
  }

  // Coefficients of v in terms of the independent vectors added so far, or
  // nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    Vector r = v;
    Vector coords(rows_.size(), f_.zero());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const value_type c = r[pivots_[k]];
      if (f_.is_zero(c)) continue;
      axpy(r, rows_[k], f_.neg(c));
      for (std::size_t j = 0; j < provenance_[k].size(); ++j) {
        coords[j] = f_.add(coords[j], f_.mul(c, provenance_[k][j]));
      }
    }
    for (const auto& e : r) {
      if (!f_.is_zero(e)) return std::nullopt;
    }
    return coords;
  }

  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

 private:
  void axpy(Vector& y, const Vector& x, const value_type& a) const {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!f_.is_zero(x[i])) y[i] = f_.add(y[i], f_.mul(a, x[i]));
    }
  }

  F f_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> provenance_;
};

template <class F>
std::size_t rank(const F& f, const Matrix<F>& m) {
  EchelonBasis<F> basis(f, m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) basis.add(m.column(c));
  return basis.rank();
}

// Basis of {v : m v = 0} from the reduced row echelon form, one vector per
// free column in increasing column order.
template <class F>
std::vector<std::vector<typename F::value_type>> nullspace(const F& f, Matrix<F> m) {
  using V = typename F::value_type;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const V scale = f.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const V factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!f.is_zero(m(r, j))) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<V>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<V> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = f.neg(m(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace strata
