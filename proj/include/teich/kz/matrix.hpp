#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "teich/error.hpp"
#include "teich/qseries/rational.hpp"

namespace teich::kz {

using Complex = std::complex<double>;

/// Small dense row-major matrix.
template <class T>
class Dense {
 public:
  Dense() = default;
  Dense(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Dense identity(std::size_t n) {
    Dense m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// E_ij with 0-based indices.
  static Dense unit(std::size_t n, std::size_t i, std::size_t j) {
    Dense m(n, n);
    m(i, j) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T* data() noexcept { return data_.data(); }
  const T* data() const noexcept { return data_.data(); }
  const std::vector<T>& values() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!(x == T(0))) return false;
    }
    return true;
  }

  Dense& operator+=(const Dense& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Dense& operator-=(const Dense& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Dense& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Dense operator+(Dense a, const Dense& b) { return a += b; }
  friend Dense operator-(Dense a, const Dense& b) { return a -= b; }
  friend Dense operator*(Dense a, const T& s) { return a *= s; }
  friend Dense operator*(const T& s, Dense a) { return a *= s; }
  Dense operator-() const { return *this * T(-1); }

  friend Dense operator*(const Dense& a, const Dense& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::precondition, "matrix dimensions do not match");
    Dense c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t p = 0; p < a.cols_; ++p) {
        const T& x = a(i, p);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(p, j);
      }
    }
    return c;
  }

  friend bool operator==(const Dense& a, const Dense& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Dense& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::precondition, "matrix dimensions do not match");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Dense<Rational>;
using RealMatrix = Dense<double>;
using ComplexMatrix = Dense<Complex>;

/// Smallest k with M^k = 0, or nullopt-like 0 when M is not nilpotent.
std::size_t nilpotency_index(const RationalMatrix& m);
bool is_nilpotent(const RationalMatrix& m);

RealMatrix to_real(const RationalMatrix& m);
ComplexMatrix to_complex(const RealMatrix& m);
ComplexMatrix to_complex(const RationalMatrix& m);

/// Largest absolute entry.
double max_abs(const RealMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(s N) for nilpotent N as a finite sum.
RealMatrix exp_nilpotent(const RealMatrix& n, double s);
/// Inverse by partial-pivot LU; throws Error(numeric) when singular.
RealMatrix inverse(const RealMatrix& m);
ComplexMatrix inverse(const ComplexMatrix& m);
/// Exact inverse; throws Error(not_invertible) when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace teich::kz
