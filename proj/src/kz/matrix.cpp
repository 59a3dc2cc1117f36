#include "teich/kz/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace teich::kz {

std::size_t nilpotency_index(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::precondition, "nilpotency needs a square matrix");
  const std::size_t n = m.rows();
  if (m.is_zero()) return n == 0 ? 0 : 1;
  RationalMatrix p = m;
  for (std::size_t k = 2; k <= n; ++k) {
    p = p * m;
    if (p.is_zero()) return k;
  }
  return 0;
}

bool is_nilpotent(const RationalMatrix& m) { return m.rows() == 0 || nilpotency_index(m) > 0; }

RealMatrix to_real(const RationalMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

ComplexMatrix to_complex(const RationalMatrix& m) { return to_complex(to_real(m)); }

double max_abs(const RealMatrix& m) {
  double r = 0;
  for (double x : m.values()) r = std::max(r, std::abs(x));
  return r;
}

double max_abs(const ComplexMatrix& m) {
  double r = 0;
  for (const auto& x : m.values()) r = std::max(r, std::abs(x));
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

RealMatrix exp_nilpotent(const RealMatrix& n, double s) {
  const std::size_t d = n.rows();
  RealMatrix out = RealMatrix::identity(d), term = RealMatrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    term = term * n * (s / static_cast<double>(k));
    if (term.is_zero()) break;
    out += term;
  }
  return out;
}

namespace {

template <class T>
Dense<T> lu_inverse(const Dense<T>& m) {
  if (!m.square()) throw Error(ErrorKind::precondition, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Dense<T> a = m, inv = Dense<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    }
    if (std::abs(a(piv, col)) == 0.0) throw Error(ErrorKind::numeric, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    const T p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a(r, col);
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace

RealMatrix inverse(const RealMatrix& m) { return lu_inverse(m); }
ComplexMatrix inverse(const ComplexMatrix& m) { return lu_inverse(m); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::precondition, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m, inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::not_invertible, "singular rational matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace teich::kz
