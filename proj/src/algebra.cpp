#include "homlie/algebra.hpp"

#include <algorithm>
#include <string>

#include "homlie/random.hpp"

namespace homlie {

namespace {

void require_same(const FieldSpec& a, const FieldSpec& b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::field_mismatch,
                std::string(what) + ": " + a.describe() + " vs " + b.describe());
  }
}

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::shape, std::string(what) + ": expected dimension " +
                                      std::to_string(want) + ", got " + std::to_string(got));
  }
}

Scalar draw(const FieldSpec& field, std::uint64_t key, std::uint64_t bound) {
  CounterRng rng(key);
  if (field.is_prime()) return Scalar::residue(field, rng.below(field.modulus()));
  return Scalar::from_int(field, static_cast<long>(rng.symmetric(bound)));
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t n, const FieldSpec& field)
    : field_(field), coords_(n, Scalar::zero(field)) {}

Vector::Vector(const FieldSpec& field, std::vector<Scalar> coords)
    : field_(field), coords_(std::move(coords)) {
  for (const auto& c : coords_) require_same(c.field(), field_, "vector coordinate");
}

Vector Vector::basis(std::size_t n, std::size_t i, const FieldSpec& field) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::shape, "basis index " + std::to_string(i) + " out of range 1.." +
                                      std::to_string(n));
  }
  Vector v(n, field);
  v.coords_[i - 1] = Scalar::one(field);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_size(rhs.size(), size(), "vector sum");
  for (std::size_t k = 0; k < size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_size(rhs.size(), size(), "vector difference");
  for (std::size_t k = 0; k < size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Vector& Vector::add_scaled(const Scalar& s, const Vector& rhs) {
  require_size(rhs.size(), size(), "vector update");
  if (s.is_zero()) return *this;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!rhs.coords_[k].is_zero()) coords_[k] += s * rhs.coords_[k];
  }
  return *this;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(std::size_t n, const FieldSpec& field) : matrix_(n, n, field) {}

LinearMap::LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error(ErrorKind::shape, "linear map must be square");
}

LinearMap LinearMap::identity(std::size_t n, const FieldSpec& field) {
  return LinearMap(Matrix::identity(n, field));
}

LinearMap LinearMap::from_columns(const FieldSpec& field,
                                  const std::vector<std::vector<Scalar>>& columns) {
  const std::size_t n = columns.size();
  LinearMap f(n, field);
  for (std::size_t q = 0; q < n; ++q) {
    require_size(columns[q].size(), n, "map column");
    for (std::size_t p = 0; p < n; ++p) {
      require_same(columns[q][p].field(), field, "map entry");
      f.matrix_(p, q) = columns[q][p];
    }
  }
  return f;
}

LinearMap LinearMap::from_flat(std::size_t n, const FieldSpec& field, std::span<const Scalar> flat) {
  require_size(flat.size(), n * n, "flattened map");
  LinearMap f(n, field);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) {
      require_same(flat[q * n + p].field(), field, "map entry");
      f.matrix_(p, q) = flat[q * n + p];
    }
  }
  return f;
}

void LinearMap::set_entry(std::size_t p, std::size_t q, Scalar value) {
  if (p < 1 || p > dim() || q < 1 || q > dim()) throw Error(ErrorKind::shape, "map entry out of range");
  require_same(value.field(), field(), "map entry");
  matrix_(p - 1, q - 1) = std::move(value);
}

Vector LinearMap::image(std::size_t q) const {
  if (q < 1 || q > dim()) throw Error(ErrorKind::shape, "basis index out of range");
  Vector v(dim(), field());
  for (std::size_t p = 0; p < dim(); ++p) v[p] = matrix_(p, q - 1);
  return v;
}

Vector LinearMap::apply(const Vector& x) const {
  require_size(x.size(), dim(), "map argument");
  require_same(x.field(), field(), "map argument");
  return Vector(field(), homlie::apply(matrix_, x.coords()));
}

std::vector<Scalar> LinearMap::flatten() const {
  const std::size_t n = dim();
  std::vector<Scalar> v;
  v.reserve(n * n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) v.push_back(matrix_(p, q));
  }
  return v;
}

LinearMap compose(const LinearMap& h, const LinearMap& g) {
  return LinearMap(multiply(h.matrix(), g.matrix()));
}

std::optional<LinearMap> inverse(const LinearMap& f) {
  auto inv = inverse(f.matrix());
  if (!inv) return std::nullopt;
  return LinearMap(std::move(*inv));
}

// ---------------------------------------------------------------- SkewAlgebra

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= n)) throw Error(ErrorKind::ordering, "pair index requires 1 <= i < j <= n");
  // pairs (1,2),(1,3),...,(1,n),(2,3),...
  const std::size_t before = (i - 1) * n - (i - 1) * i / 2;
  return before + (j - i - 1);
}

Scalar SkewAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_) {
    throw Error(ErrorKind::shape, "structure constant index out of range");
  }
  if (i == j) return Scalar::zero(field_);
  if (i < j) return table_[pair_index(dim_, i, j)][k - 1];
  return -table_[pair_index(dim_, j, i)][k - 1];
}

Vector SkewAlgebra::product(std::size_t i, std::size_t j) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_) throw Error(ErrorKind::shape, "basis index out of range");
  if (i == j) return Vector(dim_, field_);
  if (i < j) return table_[pair_index(dim_, i, j)];
  Vector v = table_[pair_index(dim_, j, i)];
  v *= -Scalar::one(field_);
  return v;
}

std::vector<Product> SkewAlgebra::products() const {
  std::vector<Product> out;
  for (std::size_t i = 1; i <= dim_; ++i) {
    for (std::size_t j = i + 1; j <= dim_; ++j) {
      const Vector& v = table_[pair_index(dim_, i, j)];
      if (v.is_zero()) continue;
      out.push_back({i, j, {v.coords().begin(), v.coords().end()}});
    }
  }
  return out;
}

SkewAlgebra make_algebra(std::size_t n, const FieldSpec& field, std::vector<Product> products) {
  if (n < 1) throw Error(ErrorKind::shape, "algebra dimension must be positive");
  std::vector<Vector> table(pair_count(n), Vector(n, field));
  std::vector<bool> seen(pair_count(n), false);
  for (auto& prod : products) {
    const auto label = "(" + std::to_string(prod.left) + "," + std::to_string(prod.right) + ")";
    if (prod.left < 1 || prod.left > n || prod.right < 1 || prod.right > n) {
      throw Error(ErrorKind::shape, "product " + label + " has an index outside 1.." + std::to_string(n));
    }
    if (prod.left >= prod.right) {
      throw Error(ErrorKind::ordering, "product " + label + " must list i < j");
    }
    if (prod.coeffs.size() != n) {
      throw Error(ErrorKind::shape, "product " + label + " needs " + std::to_string(n) +
                                        " coefficients, got " + std::to_string(prod.coeffs.size()));
    }
    const std::size_t idx = pair_index(n, prod.left, prod.right);
    if (seen[idx]) throw Error(ErrorKind::duplicate, "product " + label + " listed twice");
    seen[idx] = true;
    table[idx] = Vector(field, std::move(prod.coeffs));
  }
  return SkewAlgebra(n, field, std::move(table));
}

Vector multiply(const SkewAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  require_size(x.size(), n, "multiply");
  require_size(y.size(), n, "multiply");
  require_same(x.field(), a.field(), "multiply");
  require_same(y.field(), a.field(), "multiply");
  Vector out(n, a.field());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Scalar w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
      if (w.is_zero()) continue;
      out.add_scaled(w, a.product(i, j));
    }
  }
  return out;
}

Vector jacobiator(const SkewAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector out = multiply(a, multiply(a, x, y), z);
  out += multiply(a, multiply(a, y, z), x);
  out += multiply(a, multiply(a, z, x), y);
  return out;
}

bool is_lie(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        if (!jacobiator(a, Vector::basis(n, i, f), Vector::basis(n, j, f), Vector::basis(n, k, f))
                 .is_zero()) {
          return false;
        }
      }
    }
  }
  return true;
}

SkewAlgebra transport(const SkewAlgebra& a, const LinearMap& g) {
  const std::size_t n = a.dim();
  require_size(g.dim(), n, "transport");
  require_same(g.field(), a.field(), "transport");
  const auto g_inv = inverse(g);
  if (!g_inv) throw Error(ErrorKind::singular, "transport requires an invertible map");
  std::vector<Vector> preimages;
  preimages.reserve(n);
  for (std::size_t q = 1; q <= n; ++q) preimages.push_back(g_inv->image(q));

  std::vector<Product> products;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      Vector v = g.apply(multiply(a, preimages[i - 1], preimages[j - 1]));
      products.push_back({i, j, {v.coords().begin(), v.coords().end()}});
    }
  }
  return make_algebra(n, a.field(), std::move(products));
}

SkewAlgebra random_algebra(std::size_t n, const FieldSpec& field, std::uint64_t seed,
                           std::uint64_t bound) {
  if (field.is_rational() && bound < 1) throw Error(ErrorKind::usage, "rational sampling needs bound >= 1");
  std::vector<Product> products;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const std::size_t pair = pair_index(n, i, j);
      std::vector<Scalar> coeffs;
      coeffs.reserve(n);
      for (std::size_t k = 0; k < n; ++k) coeffs.push_back(draw(field, split_key(seed, pair * n + k), bound));
      products.push_back({i, j, std::move(coeffs)});
    }
  }
  return make_algebra(n, field, std::move(products));
}

LinearMap random_linear_map(std::size_t n, const FieldSpec& field, std::uint64_t seed,
                            std::uint64_t bound) {
  if (field.is_rational() && bound < 1) throw Error(ErrorKind::usage, "rational sampling needs bound >= 1");
  LinearMap f(n, field);
  for (std::size_t q = 1; q <= n; ++q) {
    for (std::size_t p = 1; p <= n; ++p) {
      f.set_entry(p, q, draw(field, split_key(seed, (q - 1) * n + (p - 1)), bound));
    }
  }
  return f;
}

std::pair<LinearMap, LinearMap> random_invertible_map(std::size_t n, const FieldSpec& field,
                                                      std::uint64_t seed, std::uint64_t bound) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    LinearMap g = random_linear_map(n, field, split_key(seed, attempt), bound);
    if (auto g_inv = inverse(g)) return {std::move(g), std::move(*g_inv)};
  }
}

}  // namespace homlie
