#include "ghj/int_matrix.hpp"

#include <algorithm>
#include <ostream>

#include "ghj/error.hpp"

namespace ghj {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer product");
  return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v == 0; });
}

bool IntMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool IntMatrix::nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](value_type v) { return v >= 0; });
}

IntMatrix::value_type IntMatrix::max_entry() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_add(data_[i], other.data_[i]);
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    std::int64_t out;
    if (__builtin_sub_overflow(data_[i], other.data_[i], &out))
      throw Error(ErrorKind::Overflow, "integer subtraction");
    data_[i] = out;
  }
  return *this;
}

IntMatrix& IntMatrix::operator*=(value_type scalar) {
  for (auto& v : data_) v = checked_mul(v, scalar);
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

}  // namespace ghj
