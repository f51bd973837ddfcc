#include "homlie/kernels.hpp"

#include <algorithm>
#include <string>

namespace homlie::kernels {

ResidueMatrix to_residues(const Matrix& m) {
  if (!m.field().is_prime()) {
    throw Error(ErrorKind::field_mismatch, "residue kernels need a prime-field matrix");
  }
  ResidueMatrix out{m.rows(), m.cols(), m.field().modulus(), {}};
  out.data.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& s : m.row(r)) out.data.push_back(s.as_residue());
  }
  return out;
}

namespace {

inline std::uint64_t sub_mul(std::uint64_t x, std::uint64_t factor, std::uint64_t y,
                             std::uint64_t p) noexcept {
  const std::uint64_t t = mul_mod(factor, y, p);
  return x >= t ? x - t : x + (p - t);
}

// Row-echelon elimination (no back substitution). Rows below the pivot are
// independent within one step, which is the parallel axis.
template <bool Parallel>
std::size_t echelon(ResidueMatrix& m, bool& odd_swaps, std::uint64_t& pivot_product) {
  const std::uint64_t p = m.p;
  std::size_t rank = 0;
  odd_swaps = false;
  pivot_product = 1 % p;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) {
      pivot_product = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap_ranges(m.data.begin() + pivot * m.cols, m.data.begin() + (pivot + 1) * m.cols,
                       m.data.begin() + rank * m.cols);
      odd_swaps = !odd_swaps;
    }
    const std::uint64_t pv = m.at(rank, col);
    pivot_product = mul_mod(pivot_product, pv, p);
    const std::uint64_t pv_inv = inv_mod(pv, p);

    const std::size_t first = rank + 1;
    const std::size_t width = m.cols - col;
    const auto below = static_cast<std::ptrdiff_t>(m.rows - first);
    const std::uint64_t* pivot_row = m.data.data() + rank * m.cols;
    std::uint64_t* base = m.data.data();
    const std::size_t stride = m.cols;

    auto update = [&](std::ptrdiff_t i) {
      std::uint64_t* row = base + (first + static_cast<std::size_t>(i)) * stride;
      if (row[col] == 0) return;
      const std::uint64_t factor = mul_mod(row[col], pv_inv, p);
      for (std::size_t c = col; c < stride; ++c) row[c] = sub_mul(row[c], factor, pivot_row[c], p);
    };

    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(below) * width > parallel_threshold)
      for (std::ptrdiff_t i = 0; i < below; ++i) update(i);
    } else {
      for (std::ptrdiff_t i = 0; i < below; ++i) update(i);
    }
    ++rank;
  }
  return rank;
}

template <bool Parallel>
std::uint64_t determinant_impl(ResidueMatrix m) {
  if (m.rows != m.cols) {
    throw Error(ErrorKind::shape, "determinant of a non-square " + std::to_string(m.rows) + "x" +
                                      std::to_string(m.cols) + " matrix; use rank instead");
  }
  if (m.rows == 0) return 1 % m.p;
  bool odd_swaps = false;
  std::uint64_t product = 0;
  const std::size_t r = echelon<Parallel>(m, odd_swaps, product);
  if (r < m.rows) return 0;
  return odd_swaps && product != 0 ? m.p - product : product;
}

}  // namespace

std::size_t rank_mod_p(ResidueMatrix m) {
  bool odd = false;
  std::uint64_t prod = 0;
  return echelon<true>(m, odd, prod);
}

std::size_t rank_mod_p_serial(ResidueMatrix m) {
  bool odd = false;
  std::uint64_t prod = 0;
  return echelon<false>(m, odd, prod);
}

std::uint64_t determinant_mod_p(ResidueMatrix m) { return determinant_impl<true>(std::move(m)); }

std::uint64_t determinant_mod_p_serial(ResidueMatrix m) {
  return determinant_impl<false>(std::move(m));
}

}  // namespace homlie::kernels
