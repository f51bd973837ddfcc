#pragma once

// The Hom-Jacobi linear system of a skew algebra.
//
// A linear map f satisfies the Hom-Jacobi identity
//     mu(mu(x,y), f(z)) + mu(mu(y,z), f(x)) + mu(mu(z,x), f(y)) = 0
// iff its flattened coordinates v_f lie in the kernel of an exact matrix
// M_mu with n * C(n,3) rows and n^2 columns:
//
//   row    r(T) * n + (l - 1)   for the lexicographic rank r(T) of the triple
//                               T = (i < j < k) and output coordinate l;
//   column (q - 1) * n + (p - 1) for the unknown a_{p,q} (e_p-coordinate of
//                               f(e_q)).
//
// Entry (T, l; p, q) is coordinate l of mu(mu(e_j,e_k), e_p) when q = i,
// of mu(mu(e_k,e_i), e_p) when q = j, of mu(mu(e_i,e_j), e_p) when q = k, and
// zero otherwise.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/linalg.hpp"

namespace homlie {

using Triple = std::array<std::size_t, 3>;

/// All 1 <= i < j < k <= n in lexicographic order.
std::vector<Triple> triples(std::size_t n);

constexpr std::size_t hom_jacobi_rows(std::size_t n) noexcept {
  return n < 3 ? 0 : n * n * (n - 1) * (n - 2) / 6;
}
constexpr std::size_t hom_jacobi_cols(std::size_t n) noexcept { return n * n; }

class HomJacobiMatrix {
 public:
  HomJacobiMatrix() = default;
  HomJacobiMatrix(std::size_t dim, Matrix entries);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  const FieldSpec& field() const noexcept { return entries_.field(); }
  const Matrix& entries() const noexcept { return entries_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  friend bool operator==(const HomJacobiMatrix&, const HomJacobiMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  Matrix entries_;
};

HomJacobiMatrix build_matrix(const SkewAlgebra& a);

struct TripleDefect {
  Triple triple;
  Vector value;
};

/// Evaluates the Hom-Jacobi cyclic sum on every basis triple directly through
/// multiply(); shares no code with build_matrix.
std::vector<TripleDefect> hom_jacobi_defect(const SkewAlgebra& a, const LinearMap& f);

/// M_mu * v_f == 0.
bool is_in_kernel(const SkewAlgebra& a, const LinearMap& f);
bool is_in_kernel(const HomJacobiMatrix& m, const LinearMap& f);

struct KernelBasis {
  std::size_t dim = 0;
  std::vector<LinearMap> maps;

  std::size_t nullity() const noexcept { return maps.size(); }
};

KernelBasis kernel_basis(const HomJacobiMatrix& m);

/// Exact rank. Prime-field matrices go through the word-level kernels.
std::size_t rank(const HomJacobiMatrix& m);
inline std::size_t nullity(const HomJacobiMatrix& m) { return m.cols() - rank(m); }

/// Defined only for square M_mu (n = 4). Throws Error{shape} otherwise.
Scalar determinant(const HomJacobiMatrix& m);

struct HomLieVerdict {
  bool is_hom_lie = false;
  std::size_t nullity = 0;
  /// First canonical kernel vector; present iff is_hom_lie.
  std::optional<LinearMap> witness;
};

/// Hom-Lie means a nonzero twisting map exists, i.e. nullity >= 1.
HomLieVerdict is_hom_lie(const SkewAlgebra& a);

/// Positions (p, q) of f that are free unknowns; every other entry is zero.
/// Iteration order is lexicographic in (q, p), matching column order in M_mu.
class SupportPattern {
 public:
  using Position = std::pair<std::size_t, std::size_t>;  // (p, q), 1-based

  /// Throws Error{usage} on an empty set and Error{shape} on an out-of-range
  /// position.
  SupportPattern(std::size_t n, std::vector<Position> positions);

  static SupportPattern full(std::size_t n);
  static SupportPattern diagonal(std::size_t n);
  /// (p, p) and (p, p + 1): the upper-bidiagonal canonical form.
  static SupportPattern bidiagonal(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return positions_.size(); }
  const std::vector<Position>& positions() const noexcept { return positions_; }
  /// Column indices in M_mu, increasing.
  std::vector<std::size_t> columns() const;

  /// Zero-padded map with the given values at the support positions.
  LinearMap embed(std::span<const Scalar> values, const FieldSpec& field) const;

 private:
  std::size_t n_;
  std::vector<Position> positions_;
};

Matrix restrict_columns(const HomJacobiMatrix& m, const SupportPattern& support);

/// Canonical basis of the kernel maps supported on `support`.
std::vector<LinearMap> restricted_kernel(const HomJacobiMatrix& m, const SupportPattern& support);

/// rank -> count.
using RankHistogram = std::map<std::size_t, std::size_t>;

/// Ranks of the 16 x 7 bidiagonal restricted system over `count` random
/// 4-dimensional algebras; sample t uses seed split_key(seed, t).
RankHistogram generic_reduced_rank(std::size_t count, const FieldSpec& field, std::uint64_t seed);
RankHistogram generic_reduced_rank_serial(std::size_t count, const FieldSpec& field,
                                          std::uint64_t seed);

}  // namespace homlie
