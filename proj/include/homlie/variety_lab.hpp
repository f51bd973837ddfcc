#pragma once

// Seeded sampling experiments over the space of skew algebras, plus a small
// catalog of named algebras with known properties.
//
// Trial t of an experiment with seed s draws its algebra (or map) from
// split_key(s, t), so results depend only on (dim, field, trials, seed) and
// never on thread count or scheduling. Each parallel entry point has a
// *_serial twin kept as the reference.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlie/algebra.hpp"
#include "homlie/homjacobi.hpp"

namespace homlie {

struct SampleReport {
  std::size_t dim = 0;
  FieldSpec field;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t bound = 0;  // only meaningful over Q
  std::map<std::size_t, std::size_t> histogram;  // nullity -> count
  std::size_t full_rank = 0;                      // trials with nullity 0
  double elapsed_seconds = 0.0;

  /// Reports are equal when their sampled data agree; timing is ignored.
  friend bool operator==(const SampleReport& a, const SampleReport& b) {
    return a.dim == b.dim && a.field == b.field && a.trials == b.trials && a.seed == b.seed &&
           a.bound == b.bound && a.histogram == b.histogram && a.full_rank == b.full_rank;
  }
};

/// Nullity of M_mu for `trials` random algebras. Over Q the structure
/// constants are integers in [-bound, bound].
SampleReport genericity_experiment(std::size_t dim, std::size_t trials, const FieldSpec& field,
                                   std::uint64_t seed, std::uint64_t bound = 10);
SampleReport genericity_experiment_serial(std::size_t dim, std::size_t trials,
                                          const FieldSpec& field, std::uint64_t seed,
                                          std::uint64_t bound = 10);

struct InvarianceReport {
  std::size_t base_nullity = 0;
  std::size_t trials = 0;
  std::size_t nullity_mismatches = 0;
  std::size_t conjugation_failures = 0;

  bool passed() const noexcept { return nullity_mismatches == 0 && conjugation_failures == 0; }
};

/// For random invertible g: nullity(M_{transport(A,g)}) == nullity(M_A) and
/// g f g^-1 is in ker M_{transport(A,g)} for every canonical kernel map f.
InvarianceReport invariance_battery(const SkewAlgebra& a, std::size_t trials, std::uint64_t seed,
                                    std::uint64_t bound = 10);
InvarianceReport invariance_battery_serial(const SkewAlgebra& a, std::size_t trials,
                                           std::uint64_t seed, std::uint64_t bound = 10);

struct NamedAlgebra {
  std::string name;
  SkewAlgebra algebra;
  bool is_lie = false;
  bool is_hom_lie = false;
  std::optional<std::size_t> nullity;
};

/// abelian3, abelian4, abelian5, heisenberg3, cross_product3, example4,
/// sl2_plus_K4; all over Q.
std::vector<NamedAlgebra> catalog();

/// Throws Error{usage} for an unknown name.
NamedAlgebra catalog_entry(const std::string& name);

/// The 4-dimensional algebra
///   [e1,e2] = e2+2e3-e4,   [e1,e3] = e1+2e2-e3,   [e1,e4] = 2e1-e2+e4,
///   [e2,e3] = -e1+e3+2e4,  [e2,e4] = e1+2e2-e3+3e4, [e3,e4] = -2e1-e2+e3+2e4
/// whose Hom-Jacobi matrix is nonsingular.
SkewAlgebra example4(const FieldSpec& field = FieldSpec::rational());

SkewAlgebra abelian(std::size_t n, const FieldSpec& field = FieldSpec::rational());
/// [e1,e2] = e3.
SkewAlgebra heisenberg3(const FieldSpec& field = FieldSpec::rational());
/// [e1,e2] = e3, [e2,e3] = e1, [e1,e3] = -e2.
SkewAlgebra cross_product3(const FieldSpec& field = FieldSpec::rational());
/// sl2 in the basis (h, e, f) plus a central e4.
SkewAlgebra sl2_plus_k4(const FieldSpec& field = FieldSpec::rational());

}  // namespace homlie
