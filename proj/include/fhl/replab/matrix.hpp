#pragma once

#include <string>
#include <vector>

#include "fhl/error.hpp"
#include "fhl/scalars/specialization.hpp"

namespace fhl {

// Dense row-major matrix over F (Scalar or Rational).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1L);
    return m;
  }
  // Builds from row vectors; throws DimensionMismatch on ragged input.
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<F>& data() const { return a_; }

  std::vector<std::vector<F>> row_vectors() const {
    std::vector<std::vector<F>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
  }
  std::vector<F> column(std::size_t j) const {
    std::vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!fhl::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix scaled(const F& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!fhl::is_zero(a_[i])) r.a_[i] = a_[i] * s;
    }
    return r;
  }

  Matrix& operator+=(const Matrix& b) {
    same_shape(b);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!fhl::is_zero(b.a_[i])) a_[i] += b.a_[i];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    same_shape(b);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!fhl::is_zero(b.a_[i])) a_[i] -= b.a_[i];
    }
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const F& x = a(i, l);
        if (fhl::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(l, j);
          if (!fhl::is_zero(y)) r(i, j) += x * y;
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      if (!(a.a_[i] == b.a_[i])) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + to_text((*this)(i, j));
      s += "]\n";
    }
    return s;
  }

 private:
  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

using ScalarMatrix = Matrix<Scalar>;

// Kronecker product a (x) b.
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!is_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return r;
}

template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <class F>
Matrix<F> specialize(const ScalarMatrix& m, const Specialization<F>& spec) {
  Matrix<F> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) r(i, j) = spec(m(i, j));
    }
  }
  return r;
}

// Matrix with every entry substituted: x -> value.
ScalarMatrix substitute(const ScalarMatrix& m, Var x, const Scalar& value);

extern template class Matrix<Scalar>;
extern template class Matrix<Rational>;

}  // namespace fhl
