#include "fsn/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace fsn::exactq {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols);
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("row length does not match column count");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw std::invalid_argument("column length does not match row count");
    }
    for (std::size_t i = 0; i < rows; ++i) {
      m(i, j) = columns[j][i];
    }
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    m(i, i) = d[i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    v[i] = (*this)(i, j);
  }
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    out.push_back(column(j));
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

Matrix Matrix::scaled(const Rational& a) const {
  Matrix m = *this;
  for (auto& x : m.data_) {
    x *= a;
  }
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  Vector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] != 0) {
        s += (*this)(i, j) * x[j];
      }
    }
    y[i] = s;
  }
  return y;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (other.rows_ != rows_) {
    throw std::invalid_argument("hconcat row mismatch");
  }
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(i, j) = (*this)(i, j);
    }
    for (std::size_t j = 0; j < other.cols_; ++j) {
      m(i, cols_ + j) = other(i, j);
    }
  }
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      m(i, k) = (*this)(i, idx[k]);
    }
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(k, j) = (*this)(idx[k], j);
    }
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

Rational Matrix::trace() const {
  assert(is_square());
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) {
        out += ", ";
      }
      out += exactq::to_string((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix sum dimension mismatch");
  }
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) {
    c.data_[k] += b.data_[k];
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix difference dimension mismatch");
  }
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) {
    c.data_[k] -= b.data_[k];
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) {
    return a.rows_ < b.rows_;
  }
  if (a.cols_ != b.cols_) {
    return a.cols_ < b.cols_;
  }
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    int c = cmp(a.data_[k], b.data_[k]);
    if (c != 0) {
      return c < 0;
    }
  }
  return false;
}

}  // namespace fsn::exactq
