#pragma once

// Skew-symmetric algebras given by structure constants.
//
// Basis indices are 1-based in every public signature that names a basis
// element (e_1..e_n, structure constants C_{i,j}^k, map entries a_{p,q});
// Vector coordinates are plain 0-based containers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "homlie/linalg.hpp"
#include "homlie/scalar.hpp"

namespace homlie {

class Vector {
 public:
  Vector() = default;
  /// Zero vector.
  Vector(std::size_t n, const FieldSpec& field);
  /// Throws Error{field_mismatch} if some coordinate is over another field.
  Vector(const FieldSpec& field, std::vector<Scalar> coords);

  /// e_i, 1-based.
  static Vector basis(std::size_t n, std::size_t i, const FieldSpec& field);

  std::size_t size() const noexcept { return coords_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& operator[](std::size_t k) const { return coords_[k]; }
  Scalar& operator[](std::size_t k) { return coords_[k]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& s);
  /// this += s * rhs
  Vector& add_scaled(const Scalar& s, const Vector& rhs);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  FieldSpec field_;
  std::vector<Scalar> coords_;
};

/// Endomorphism of K^n. Column q holds the coordinates of f(e_q).
class LinearMap {
 public:
  LinearMap() = default;
  /// Zero map.
  LinearMap(std::size_t n, const FieldSpec& field);
  /// Wraps a square matrix (columns are images of basis vectors).
  explicit LinearMap(Matrix matrix);

  static LinearMap identity(std::size_t n, const FieldSpec& field);
  /// columns[q] = coordinates of f(e_{q+1}).
  static LinearMap from_columns(const FieldSpec& field, const std::vector<std::vector<Scalar>>& columns);
  /// Inverse of flatten().
  static LinearMap from_flat(std::size_t n, const FieldSpec& field, std::span<const Scalar> flat);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const FieldSpec& field() const noexcept { return matrix_.field(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// a_{p,q}: e_p-coordinate of f(e_q), 1-based.
  const Scalar& entry(std::size_t p, std::size_t q) const { return matrix_(p - 1, q - 1); }
  void set_entry(std::size_t p, std::size_t q, Scalar value);

  /// f(e_q), 1-based.
  Vector image(std::size_t q) const;
  Vector apply(const Vector& x) const;

  /// v_f: slot (q-1)*n + (p-1) holds a_{p,q}.
  std::vector<Scalar> flatten() const;

  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix matrix_;
};

/// h o g
LinearMap compose(const LinearMap& h, const LinearMap& g);
std::optional<LinearMap> inverse(const LinearMap& f);

/// One listed product mu(e_left, e_right) = sum_k coeffs[k-1] e_k.
struct Product {
  std::size_t left;
  std::size_t right;
  std::vector<Scalar> coeffs;
};

/// Number of unordered pairs i < j, and the lexicographic index of (i, j).
constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

class SkewAlgebra {
 public:
  SkewAlgebra() = default;

  std::size_t dim() const noexcept { return dim_; }
  const FieldSpec& field() const noexcept { return field_; }

  /// C_{i,j}^k with the skew extension C_{j,i}^k = -C_{i,j}^k, C_{i,i}^k = 0.
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// mu(e_i, e_j).
  Vector product(std::size_t i, std::size_t j) const;

  /// Nonzero products with i < j in lexicographic order.
  std::vector<Product> products() const;

  friend bool operator==(const SkewAlgebra&, const SkewAlgebra&) = default;

 private:
  friend SkewAlgebra make_algebra(std::size_t, const FieldSpec&, std::vector<Product>);
  SkewAlgebra(std::size_t n, const FieldSpec& field, std::vector<Vector> table)
      : dim_(n), field_(field), table_(std::move(table)) {}

  std::size_t dim_ = 0;
  FieldSpec field_;
  std::vector<Vector> table_;  // indexed by pair_index(n, i, j), i < j
};

/// Validates and builds an algebra. Throws Error{ordering} for i >= j,
/// Error{duplicate} for a repeated pair, Error{shape} for a bad index or
/// coefficient count, Error{field_mismatch} for a foreign scalar.
SkewAlgebra make_algebra(std::size_t n, const FieldSpec& field, std::vector<Product> products);

Vector multiply(const SkewAlgebra& a, const Vector& x, const Vector& y);

/// mu(mu(x,y),z) + mu(mu(y,z),x) + mu(mu(z,x),y)
Vector jacobiator(const SkewAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

bool is_lie(const SkewAlgebra& a);

/// mu'(x, y) = g(mu(g^-1 x, g^-1 y)). Throws Error{singular} if g is not
/// invertible.
SkewAlgebra transport(const SkewAlgebra& a, const LinearMap& g);

/// Every structure-constant slot is drawn independently from a stream keyed
/// by (seed, slot): uniform residues over F_p, uniform integers in
/// [-bound, bound] over Q.
SkewAlgebra random_algebra(std::size_t n, const FieldSpec& field, std::uint64_t seed,
                           std::uint64_t bound = 10);

LinearMap random_linear_map(std::size_t n, const FieldSpec& field, std::uint64_t seed,
                            std::uint64_t bound = 10);

/// Rejection-samples random_linear_map until invertible; returns (g, g^-1).
std::pair<LinearMap, LinearMap> random_invertible_map(std::size_t n, const FieldSpec& field,
                                                      std::uint64_t seed, std::uint64_t bound = 10);

}  // namespace homlie
