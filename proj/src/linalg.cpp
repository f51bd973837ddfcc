#include "homlie/linalg.hpp"

#include <algorithm>
#include <utility>

namespace homlie {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

EchelonForm reduced_row_echelon(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != next_row) {
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(next_row).begin());
    }
    const Scalar scale = m(next_row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(next_row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(next_row, c).is_zero()) m(r, c) -= factor * m(next_row, c);
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const EchelonForm ef = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
      v[ef.pivots[r]] = -ef.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Bareiss over an integral domain; `divexact(a, b)` must return a / b when b
// divides a. Returns 0 on singular input. Works in place on row-major `a`.
template <class T, class DivExact>
T bareiss(std::vector<T>& a, std::size_t n, const T& zero, const T& one, DivExact divexact) {
  if (n == 0) return one;
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * n + c]; };
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == zero) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == zero) ++swap;
      if (swap == n) return zero;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = divexact(t, prev);
      }
      at(i, k) = zero;
    }
    prev = at(k, k);
  }
  T det = at(n - 1, n - 1);
  return negate ? T(-det) : det;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::shape, "determinant of a non-square " + std::to_string(m.rows()) +
                                      "x" + std::to_string(m.cols()) +
                                      " matrix; use rank instead");
  }
  const std::size_t n = m.rows();
  if (m.field().is_prime()) {
    std::vector<Scalar> a;
    a.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (const auto& s : m.row(r)) a.push_back(s);
    }
    return bareiss(a, n, Scalar::zero(m.field()), Scalar::one(m.field()),
                   [](const Scalar& x, const Scalar& y) { return x / y; });
  }

  // integer lift: multiply row r by the lcm of its denominators
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class row_lcm = 1;
    for (const auto& s : m.row(r)) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), s.as_rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = m(r, c).as_rational();
      a[r * n + c] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  const mpz_class det = bareiss(a, n, mpz_class(0), mpz_class(1),
                                [](const mpz_class& x, const mpz_class& y) {
                                  mpz_class q;
                                  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
                                  return q;
                                });
  return Scalar::rational(det, scale);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::shape, "matrix product shape mismatch");
  if (a.field() != b.field()) throw Error(ErrorKind::field_mismatch, "matrix product field mismatch");
  Matrix out(a.rows(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::vector<Scalar> apply(const Matrix& a, std::span<const Scalar> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::shape, "matrix-vector shape mismatch");
  std::vector<Scalar> out(a.rows(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero() && !x[k].is_zero()) out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::shape, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Matrix(0, 0, a.field());
  Matrix augmented(n, 2 * n, a.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n + r) = Scalar::one(a.field());
  }
  const EchelonForm ef = reduced_row_echelon(std::move(augmented));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n, a.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  }
  return inv;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns) {
  Matrix out(m.rows(), columns.size(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = m(r, columns[j]);
  }
  return out;
}

}  // namespace homlie
