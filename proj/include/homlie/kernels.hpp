#pragma once

// Word-level elimination over F_p. The *_serial variants are the plain
// reference loops; the default entry points split the row updates of each
// pivot step across OpenMP threads once the trailing block is large enough.
// Both produce identical results on every input.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "homlie/linalg.hpp"

namespace homlie::kernels {

struct ResidueMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t p = 2;
  std::vector<std::uint64_t> data;  // row-major, entries in [0, p)

  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Requires a prime-field matrix.
ResidueMatrix to_residues(const Matrix& m);

std::size_t rank_mod_p(ResidueMatrix m);
std::size_t rank_mod_p_serial(ResidueMatrix m);

/// Throws Error{shape} on non-square input.
std::uint64_t determinant_mod_p(ResidueMatrix m);
std::uint64_t determinant_mod_p_serial(ResidueMatrix m);

/// Trailing-block size (rows x cols) above which row updates go parallel.
inline constexpr std::size_t parallel_threshold = 1u << 14;

}  // namespace homlie::kernels
