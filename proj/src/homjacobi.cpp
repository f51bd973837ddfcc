#include "homlie/homjacobi.hpp"

#include <algorithm>
#include <string>

#include "homlie/kernels.hpp"
#include "homlie/random.hpp"

namespace homlie {

std::vector<Triple> triples(std::size_t n) {
  std::vector<Triple> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

HomJacobiMatrix::HomJacobiMatrix(std::size_t dim, Matrix entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.rows() != hom_jacobi_rows(dim) || entries_.cols() != hom_jacobi_cols(dim)) {
    throw Error(ErrorKind::shape, "Hom-Jacobi matrix for dimension " + std::to_string(dim) +
                                      " must be " + std::to_string(hom_jacobi_rows(dim)) + "x" +
                                      std::to_string(hom_jacobi_cols(dim)));
  }
}

HomJacobiMatrix build_matrix(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec& field = a.field();
  Matrix m(hom_jacobi_rows(n), hom_jacobi_cols(n), field);
  if (m.rows() == 0) return HomJacobiMatrix(n, std::move(m));

  // block(a, b, p) = mu(mu(e_a, e_b), e_p) = sum_s C_{a,b}^s mu(e_s, e_p)
  auto block = [&](std::size_t x, std::size_t y, std::size_t p) {
    Vector out(n, field);
    const Vector outer = a.product(x, y);
    for (std::size_t s = 1; s <= n; ++s) {
      if (!outer[s - 1].is_zero()) out.add_scaled(outer[s - 1], a.product(s, p));
    }
    return out;
  };

  const auto ts = triples(n);
  for (std::size_t t = 0; t < ts.size(); ++t) {
    const auto [i, j, k] = ts[t];
    // (q, the pair multiplied first)
    const std::array<std::array<std::size_t, 3>, 3> slots = {{{i, j, k}, {j, k, i}, {k, i, j}}};
    for (const auto& [q, x, y] : slots) {
      for (std::size_t p = 1; p <= n; ++p) {
        const Vector v = block(x, y, p);
        const std::size_t col = (q - 1) * n + (p - 1);
        for (std::size_t l = 0; l < n; ++l) m(t * n + l, col) = v[l];
      }
    }
  }
  return HomJacobiMatrix(n, std::move(m));
}

std::vector<TripleDefect> hom_jacobi_defect(const SkewAlgebra& a, const LinearMap& f) {
  const std::size_t n = a.dim();
  if (f.dim() != n) throw Error(ErrorKind::shape, "map dimension does not match algebra");
  if (f.field() != a.field()) throw Error(ErrorKind::field_mismatch, "map field does not match algebra");
  const FieldSpec& field = a.field();
  std::vector<TripleDefect> out;
  for (const auto& t : triples(n)) {
    const Vector x = Vector::basis(n, t[0], field);
    const Vector y = Vector::basis(n, t[1], field);
    const Vector z = Vector::basis(n, t[2], field);
    Vector d = multiply(a, multiply(a, x, y), f.apply(z));
    d += multiply(a, multiply(a, y, z), f.apply(x));
    d += multiply(a, multiply(a, z, x), f.apply(y));
    out.push_back({t, std::move(d)});
  }
  return out;
}

bool is_in_kernel(const HomJacobiMatrix& m, const LinearMap& f) {
  if (f.dim() != m.dim()) throw Error(ErrorKind::shape, "map dimension does not match algebra");
  if (f.field() != m.field()) throw Error(ErrorKind::field_mismatch, "map field does not match algebra");
  const auto image = homlie::apply(m.entries(), f.flatten());
  return std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool is_in_kernel(const SkewAlgebra& a, const LinearMap& f) {
  return is_in_kernel(build_matrix(a), f);
}

KernelBasis kernel_basis(const HomJacobiMatrix& m) {
  KernelBasis kb{m.dim(), {}};
  for (const auto& v : nullspace(m.entries())) {
    kb.maps.push_back(LinearMap::from_flat(m.dim(), m.field(), v));
  }
  return kb;
}

std::size_t rank(const HomJacobiMatrix& m) {
  if (m.field().is_prime()) return kernels::rank_mod_p(kernels::to_residues(m.entries()));
  return rank(m.entries());
}

Scalar determinant(const HomJacobiMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::shape, "determinant needs a square Hom-Jacobi matrix (dimension 4); "
                                  "dimension " + std::to_string(m.dim()) + " gives " +
                                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                      ", use rank instead");
  }
  if (m.field().is_prime()) {
    return Scalar::residue(m.field(), kernels::determinant_mod_p(kernels::to_residues(m.entries())));
  }
  return determinant(m.entries());
}

HomLieVerdict is_hom_lie(const SkewAlgebra& a) {
  // n <= 2 has no triples, so the kernel is all n^2 unknowns
  KernelBasis kb = kernel_basis(build_matrix(a));
  HomLieVerdict verdict{kb.nullity() > 0, kb.nullity(), std::nullopt};
  if (verdict.is_hom_lie) verdict.witness = std::move(kb.maps.front());
  return verdict;
}

// ---------------------------------------------------------------- supports

SupportPattern::SupportPattern(std::size_t n, std::vector<Position> positions)
    : n_(n), positions_(std::move(positions)) {
  if (positions_.empty()) throw Error(ErrorKind::usage, "support pattern is empty");
  for (const auto& [p, q] : positions_) {
    if (p < 1 || p > n || q < 1 || q > n) {
      throw Error(ErrorKind::shape, "support position (" + std::to_string(p) + "," +
                                        std::to_string(q) + ") outside 1.." + std::to_string(n));
    }
  }
  std::sort(positions_.begin(), positions_.end(), [](const Position& a, const Position& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

SupportPattern SupportPattern::full(std::size_t n) {
  std::vector<Position> pos;
  for (std::size_t q = 1; q <= n; ++q) {
    for (std::size_t p = 1; p <= n; ++p) pos.emplace_back(p, q);
  }
  return SupportPattern(n, std::move(pos));
}

SupportPattern SupportPattern::diagonal(std::size_t n) {
  std::vector<Position> pos;
  for (std::size_t p = 1; p <= n; ++p) pos.emplace_back(p, p);
  return SupportPattern(n, std::move(pos));
}

SupportPattern SupportPattern::bidiagonal(std::size_t n) {
  std::vector<Position> pos;
  for (std::size_t p = 1; p <= n; ++p) {
    pos.emplace_back(p, p);
    if (p < n) pos.emplace_back(p, p + 1);
  }
  return SupportPattern(n, std::move(pos));
}

std::vector<std::size_t> SupportPattern::columns() const {
  std::vector<std::size_t> cols;
  cols.reserve(positions_.size());
  for (const auto& [p, q] : positions_) cols.push_back((q - 1) * n_ + (p - 1));
  return cols;
}

LinearMap SupportPattern::embed(std::span<const Scalar> values, const FieldSpec& field) const {
  if (values.size() != positions_.size()) throw Error(ErrorKind::shape, "support value count mismatch");
  LinearMap f(n_, field);
  for (std::size_t i = 0; i < values.size(); ++i) {
    f.set_entry(positions_[i].first, positions_[i].second, values[i]);
  }
  return f;
}

Matrix restrict_columns(const HomJacobiMatrix& m, const SupportPattern& support) {
  if (support.dim() != m.dim()) throw Error(ErrorKind::shape, "support dimension does not match matrix");
  const auto cols = support.columns();
  return select_columns(m.entries(), cols);
}

std::vector<LinearMap> restricted_kernel(const HomJacobiMatrix& m, const SupportPattern& support) {
  std::vector<LinearMap> maps;
  for (const auto& v : nullspace(restrict_columns(m, support))) {
    maps.push_back(support.embed(v, m.field()));
  }
  return maps;
}

namespace {

std::size_t reduced_rank_sample(const FieldSpec& field, std::uint64_t seed, std::size_t t,
                                const SupportPattern& support) {
  const SkewAlgebra a = random_algebra(4, field, split_key(seed, t));
  const Matrix reduced = restrict_columns(build_matrix(a), support);
  return kernels::rank_mod_p_serial(kernels::to_residues(reduced));
}

void require_prime(const FieldSpec& field) {
  if (!field.is_prime()) throw Error(ErrorKind::usage, "sampling experiments need a prime field");
}

}  // namespace

RankHistogram generic_reduced_rank(std::size_t count, const FieldSpec& field, std::uint64_t seed) {
  require_prime(field);
  const SupportPattern support = SupportPattern::bidiagonal(4);
  std::vector<std::size_t> ranks(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    ranks[static_cast<std::size_t>(t)] =
        reduced_rank_sample(field, seed, static_cast<std::size_t>(t), support);
  }
  RankHistogram hist;
  for (auto r : ranks) ++hist[r];
  return hist;
}

RankHistogram generic_reduced_rank_serial(std::size_t count, const FieldSpec& field,
                                          std::uint64_t seed) {
  require_prime(field);
  const SupportPattern support = SupportPattern::bidiagonal(4);
  RankHistogram hist;
  for (std::size_t t = 0; t < count; ++t) ++hist[reduced_rank_sample(field, seed, t, support)];
  return hist;
}

}  // namespace homlie
