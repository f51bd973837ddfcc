#include "homlie/variety_lab.hpp"

#include <chrono>

#include "homlie/kernels.hpp"
#include "homlie/random.hpp"

namespace homlie {

namespace {

using Clock = std::chrono::steady_clock;

void require_sampling_args(std::size_t dim, std::size_t trials) {
  if (dim < 3) throw Error(ErrorKind::usage, "genericity experiments need dimension >= 3");
  if (trials < 1) throw Error(ErrorKind::usage, "at least one trial is required");
}

// Called from inside parallel regions, so it must not spawn nested teams.
std::size_t sample_nullity(std::size_t dim, const FieldSpec& field, std::uint64_t seed,
                           std::size_t t, std::uint64_t bound) {
  const SkewAlgebra a = random_algebra(dim, field, split_key(seed, t), bound);
  const HomJacobiMatrix m = build_matrix(a);
  const std::size_t r = field.is_prime()
                            ? kernels::rank_mod_p_serial(kernels::to_residues(m.entries()))
                            : rank(m.entries());
  return m.cols() - r;
}

SampleReport make_report(std::size_t dim, std::size_t trials, const FieldSpec& field,
                         std::uint64_t seed, std::uint64_t bound) {
  SampleReport report;
  report.dim = dim;
  report.field = field;
  report.trials = trials;
  report.seed = seed;
  report.bound = field.is_rational() ? bound : 0;
  return report;
}

void tally(SampleReport& report, const std::vector<std::size_t>& nullities) {
  for (auto k : nullities) {
    ++report.histogram[k];
    if (k == 0) ++report.full_rank;
  }
}

struct TrialOutcome {
  bool nullity_ok = true;
  bool conjugation_ok = true;
};

TrialOutcome invariance_trial(const SkewAlgebra& a, const KernelBasis& base, std::uint64_t seed,
                              std::size_t t, std::uint64_t bound) {
  const auto [g, g_inv] = random_invertible_map(a.dim(), a.field(), split_key(seed, t), bound);
  const HomJacobiMatrix moved = build_matrix(transport(a, g));
  const std::size_t r = a.field().is_prime()
                            ? kernels::rank_mod_p_serial(kernels::to_residues(moved.entries()))
                            : rank(moved.entries());
  TrialOutcome out;
  out.nullity_ok = moved.cols() - r == base.nullity();
  for (const auto& f : base.maps) {
    if (!is_in_kernel(moved, compose(g, compose(f, g_inv)))) {
      out.conjugation_ok = false;
      break;
    }
  }
  return out;
}

}  // namespace

SampleReport genericity_experiment(std::size_t dim, std::size_t trials, const FieldSpec& field,
                                   std::uint64_t seed, std::uint64_t bound) {
  require_sampling_args(dim, trials);
  if (field.is_rational() && bound < 1) throw Error(ErrorKind::usage, "rational sampling needs bound >= 1");
  const auto start = Clock::now();
  SampleReport report = make_report(dim, trials, field, seed, bound);
  std::vector<std::size_t> nullities(trials);
  const auto total = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    nullities[idx] = sample_nullity(dim, field, seed, idx, bound);
  }
  tally(report, nullities);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SampleReport genericity_experiment_serial(std::size_t dim, std::size_t trials,
                                          const FieldSpec& field, std::uint64_t seed,
                                          std::uint64_t bound) {
  require_sampling_args(dim, trials);
  if (field.is_rational() && bound < 1) throw Error(ErrorKind::usage, "rational sampling needs bound >= 1");
  const auto start = Clock::now();
  SampleReport report = make_report(dim, trials, field, seed, bound);
  std::vector<std::size_t> nullities;
  nullities.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) nullities.push_back(sample_nullity(dim, field, seed, t, bound));
  tally(report, nullities);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

InvarianceReport invariance_battery(const SkewAlgebra& a, std::size_t trials, std::uint64_t seed,
                                    std::uint64_t bound) {
  if (trials < 1) throw Error(ErrorKind::usage, "at least one trial is required");
  const KernelBasis base = kernel_basis(build_matrix(a));
  std::vector<TrialOutcome> outcomes(trials);
  const auto total = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic, 2)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    outcomes[idx] = invariance_trial(a, base, seed, idx, bound);
  }
  InvarianceReport report{base.nullity(), trials, 0, 0};
  for (const auto& o : outcomes) {
    report.nullity_mismatches += o.nullity_ok ? 0 : 1;
    report.conjugation_failures += o.conjugation_ok ? 0 : 1;
  }
  return report;
}

InvarianceReport invariance_battery_serial(const SkewAlgebra& a, std::size_t trials,
                                           std::uint64_t seed, std::uint64_t bound) {
  if (trials < 1) throw Error(ErrorKind::usage, "at least one trial is required");
  const KernelBasis base = kernel_basis(build_matrix(a));
  InvarianceReport report{base.nullity(), trials, 0, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    const TrialOutcome o = invariance_trial(a, base, seed, t, bound);
    report.nullity_mismatches += o.nullity_ok ? 0 : 1;
    report.conjugation_failures += o.conjugation_ok ? 0 : 1;
  }
  return report;
}

// ---------------------------------------------------------------- catalog

namespace {

std::vector<Scalar> ints(const FieldSpec& field, std::initializer_list<long> values) {
  std::vector<Scalar> out;
  for (long v : values) out.push_back(Scalar::from_int(field, v));
  return out;
}

}  // namespace

SkewAlgebra example4(const FieldSpec& field) {
  return make_algebra(4, field,
                      {
                          {1, 2, ints(field, {0, 1, 2, -1})},
                          {1, 3, ints(field, {1, 2, -1, 0})},
                          {1, 4, ints(field, {2, -1, 0, 1})},
                          {2, 3, ints(field, {-1, 0, 1, 2})},
                          {2, 4, ints(field, {1, 2, -1, 3})},
                          {3, 4, ints(field, {-2, -1, 1, 2})},
                      });
}

SkewAlgebra abelian(std::size_t n, const FieldSpec& field) { return make_algebra(n, field, {}); }

SkewAlgebra heisenberg3(const FieldSpec& field) {
  return make_algebra(3, field, {{1, 2, ints(field, {0, 0, 1})}});
}

SkewAlgebra cross_product3(const FieldSpec& field) {
  return make_algebra(3, field,
                      {
                          {1, 2, ints(field, {0, 0, 1})},
                          {1, 3, ints(field, {0, -1, 0})},
                          {2, 3, ints(field, {1, 0, 0})},
                      });
}

SkewAlgebra sl2_plus_k4(const FieldSpec& field) {
  return make_algebra(4, field,
                      {
                          {1, 2, ints(field, {0, 2, 0, 0})},
                          {1, 3, ints(field, {0, 0, -2, 0})},
                          {2, 3, ints(field, {1, 0, 0, 0})},
                      });
}

std::vector<NamedAlgebra> catalog() {
  return {
      {"abelian3", abelian(3), true, true, 9},
      {"abelian4", abelian(4), true, true, 16},
      {"abelian5", abelian(5), true, true, 25},
      {"heisenberg3", heisenberg3(), true, true, 9},
      {"cross_product3", cross_product3(), true, true, 6},
      {"example4", example4(), false, false, 0},
      {"sl2_plus_K4", sl2_plus_k4(), true, true, std::nullopt},
  };
}

NamedAlgebra catalog_entry(const std::string& name) {
  for (auto& entry : catalog()) {
    if (entry.name == name) return entry;
  }
  throw Error(ErrorKind::usage, "unknown catalog algebra \"" + name + "\"");
}

}  // namespace homlie
