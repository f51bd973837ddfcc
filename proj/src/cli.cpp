#include "homlie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "homlie/io.hpp"

namespace homlie::cli {

namespace {

using io::json;

SkewAlgebra load_algebra(const std::string& path) {
  return io::algebra_from_json(io::parse_json(io::read_text_file(path), path));
}

LinearMap load_map(const std::string& path) {
  return io::map_from_json(io::parse_json(io::read_text_file(path), path));
}

json check_payload(const SkewAlgebra& a) {
  const HomLieVerdict verdict = is_hom_lie(a);
  return {{"dim", a.dim()},
          {"is_lie", is_lie(a)},
          {"nullity", verdict.nullity},
          {"is_hom_lie", verdict.is_hom_lie},
          {"witness", verdict.witness ? io::to_json(*verdict.witness) : json(nullptr)}};
}

json verify_payload(const SkewAlgebra& a, const LinearMap& f) {
  if (f.dim() != a.dim()) throw Error(ErrorKind::shape, "map dimension does not match algebra");
  if (f.field() != a.field()) throw Error(ErrorKind::field_mismatch, "map field does not match algebra");
  json defects = json::array();
  for (const auto& d : hom_jacobi_defect(a, f)) {
    json value = json::array();
    for (const auto& s : d.value.coords()) value.push_back(s.to_string());
    defects.push_back({{"triple", d.triple}, {"value", value}});
  }
  return {{"in_kernel", is_in_kernel(a, f)}, {"defects", defects}};
}

json restrict_payload(const SkewAlgebra& a, const std::string& support_spec) {
  const SupportPattern support = io::parse_support(support_spec, a.dim());
  const HomJacobiMatrix m = build_matrix(a);
  const Matrix reduced = restrict_columns(m, support);
  json positions = json::array();
  for (const auto& [p, q] : support.positions()) positions.push_back({p, q});
  return {{"support", positions},
          {"matrix", io::matrix_to_json(reduced)},
          {"rank", rank(reduced)},
          {"kernel", io::to_json(restricted_kernel(m, support))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-Lie structures on skew-symmetric algebras"};
  app.name(args.empty() ? "homlie" : args.front());
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("--output", output_path, "Write the payload to this file instead of stdout");

  // the selected action renders its payload into `payload`
  std::string payload;
  std::function<void()> action;
  auto emit_json = [&](const json& j) { payload = j.dump() + "\n"; };

  std::string algebra_path;
  std::string map_path;
  std::string format = "json";
  std::string support = "bidiag";
  std::size_t dim = 4;
  std::size_t trials = 100;
  std::uint64_t prime = 10007;
  std::uint64_t seed = 0;
  std::uint64_t bound = 10;

  auto* check = app.add_subcommand("check", "Lie / Hom-Lie verdict with a witness map");
  check->add_option("algebra", algebra_path, "Algebra file")->required();
  check->callback([&] { action = [&] { emit_json(check_payload(load_algebra(algebra_path))); }; });

  auto* matrix = app.add_subcommand("matrix", "Dump the Hom-Jacobi matrix");
  matrix->add_option("algebra", algebra_path, "Algebra file")->required();
  matrix->add_option("--format", format, "plain | csv | json")->capture_default_str();
  matrix->callback([&] {
    action = [&] {
      const auto fmt = io::parse_matrix_format(format);
      payload = io::write_matrix(build_matrix(load_algebra(algebra_path)).entries(), fmt);
    };
  });

  auto* det = app.add_subcommand("det", "Exact determinant (dimension 4 only)");
  det->add_option("algebra", algebra_path, "Algebra file")->required();
  det->callback([&] {
    action = [&] { emit_json({{"det", determinant(build_matrix(load_algebra(algebra_path))).to_string()}}); };
  });

  auto* kernel = app.add_subcommand("kernel", "Canonical basis of twisting maps");
  kernel->add_option("algebra", algebra_path, "Algebra file")->required();
  kernel->callback([&] {
    action = [&] { emit_json(io::to_json(kernel_basis(build_matrix(load_algebra(algebra_path))).maps)); };
  });

  auto* verify = app.add_subcommand("verify", "Evaluate the Hom-Jacobi defect of a map");
  verify->add_option("algebra", algebra_path, "Algebra file")->required();
  verify->add_option("map", map_path, "Map file")->required();
  verify->callback([&] {
    action = [&] { emit_json(verify_payload(load_algebra(algebra_path), load_map(map_path))); };
  });

  auto* restrict_cmd = app.add_subcommand("restrict", "Hom-Jacobi system restricted to a support");
  restrict_cmd->add_option("algebra", algebra_path, "Algebra file")->required();
  restrict_cmd->add_option("--support", support, "diag | bidiag | full | \"p,q;p,q;...\"")
      ->capture_default_str();
  restrict_cmd->callback([&] {
    action = [&] { emit_json(restrict_payload(load_algebra(algebra_path), support)); };
  });

  auto* sample = app.add_subcommand("sample", "Nullity histogram over random algebras");
  sample->add_option("--dim", dim, "Algebra dimension (>= 3)")->capture_default_str();
  sample->add_option("--trials", trials, "Number of random algebras")->capture_default_str();
  sample->add_option("--prime", prime, "Field modulus; 0 samples integer algebras over Q")
      ->capture_default_str();
  sample->add_option("--seed", seed, "Experiment seed")->capture_default_str();
  sample->add_option("--bound", bound, "Coefficient bound for sampling over Q")->capture_default_str();
  sample->callback([&] {
    action = [&] {
      const FieldSpec field = prime == 0 ? FieldSpec::rational() : FieldSpec::prime(prime);
      const SampleReport report = genericity_experiment(dim, trials, field, seed, bound);
      err << "sampled " << report.trials << " algebras in " << report.elapsed_seconds
          << " s (randomized evidence, not a proof)\n";
      emit_json(io::to_json(report));
    };
  });

  auto* transport_cmd = app.add_subcommand("transport", "Transport the structure along an invertible map");
  transport_cmd->add_option("algebra", algebra_path, "Algebra file")->required();
  transport_cmd->add_option("map", map_path, "Map file")->required();
  transport_cmd->callback([&] {
    action = [&] { emit_json(io::to_json(transport(load_algebra(algebra_path), load_map(map_path)))); };
  });

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    action();
    if (output_path.empty()) {
      out << payload;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::usage, "cannot write " + output_path);
      file << payload;
    }
    return ok;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return input_error;
  } catch (const json::exception& e) {
    err << "error (parse): " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace homlie::cli
