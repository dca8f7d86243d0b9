#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace ghj {

/// Dense row-major matrix of 64-bit integers. Arithmetic is overflow-checked
/// and throws Error(Overflow) instead of wrapping.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<value_type>& data() const { return data_; }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool nonnegative() const;
  value_type max_entry() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(value_type scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, value_type s) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace ghj
