#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyperu/commands.hpp"

namespace {

using hyperu::cli::CommandOutput;
using hyperu::cli::Json;

int emit(const CommandOutput& out) {
  if (!out.document.is_null()) std::cout << out.document.dump() << '\n';
  for (const auto& d : out.diagnostics) std::cerr << d << '\n';
  return out.exit_code;
}

CommandOutput load_and_run(const std::string& path,
                           const std::function<CommandOutput(const Json&)>& fn) {
  try {
    return fn(hyperu::cli::read_json_file(path));
  } catch (const hyperu::cli::InputError& e) {
    return {hyperu::cli::kInputError, nullptr, {std::string("error: ") + e.what()}};
  }
}

// Batch mode replaces the primary input with every *.json file in a directory.
int dispatch(const std::string& batch_dir, const std::string& primary,
             const std::function<CommandOutput(const Json&)>& fn) {
  if (!batch_dir.empty()) return emit(hyperu::cli::run_batch(batch_dir, fn));
  if (primary.empty()) {
    std::cerr << "error: an input file or --batch DIR is required\n";
    return hyperu::cli::kInputError;
  }
  return emit(load_and_run(primary, fn));
}

void add_common(CLI::App* cmd, hyperu::cli::CommonOptions& opts, std::string& batch) {
  cmd->add_option("--tol", opts.tol, "Residual threshold for exit code 3")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--degrees", opts.degrees, "Read input angles in degrees");
  cmd->add_option("--batch", batch, "Process every *.json file in DIR")->check(CLI::ExistingDirectory);
}

void add_unitary(CLI::App* cmd, hyperu::cli::UnitaryOptions& opts) {
  cmd->add_flag("--general", opts.general, "Build U(n) instead of SU(n)");
  cmd->add_option("--gamma", opts.gamma, "Global phase; implies --general");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary matrices from minimal Cayley-Klein parameters"};
  app.require_subcommand(1);

  hyperu::cli::UnitaryOptions gen_opts;
  std::string gen_params, gen_check, gen_batch;
  auto* gen = app.add_subcommand("generate", "Build a matrix from a parameter file");
  gen->add_option("params", gen_params, "Parameter file")->check(CLI::ExistingFile);
  gen->add_option("--check", gen_check, "Verify the residuals of a prior generate output")
      ->check(CLI::ExistingFile);
  add_common(gen, gen_opts, gen_batch);
  add_unitary(gen, gen_opts);

  hyperu::cli::CommonOptions inv_opts;
  std::string inv_state, inv_batch;
  auto* inv = app.add_subcommand("invert", "Hyperspherical angles of a pure state");
  inv->add_option("state", inv_state, "State file: array of [re, im]")->check(CLI::ExistingFile);
  add_common(inv, inv_opts, inv_batch);

  hyperu::cli::BasisOptions basis_opts;
  std::string basis_state, basis_free, basis_batch;
  std::uint64_t basis_seed = 0;
  auto* basis = app.add_subcommand("basis", "Complete a state to an orthonormal basis");
  basis->add_option("state", basis_state, "State file")->check(CLI::ExistingFile);
  auto* free_opt = basis->add_option("--free", basis_free, "Free parameter file")
                       ->check(CLI::ExistingFile);
  basis->add_option("--seed", basis_seed, "Draw free parameters from this seed")
      ->excludes(free_opt);
  add_common(basis, basis_opts, basis_batch);

  hyperu::cli::UnitaryOptions mpi_opts;
  std::string mpi_params, mpi_input, mpi_batch;
  auto* mpi = app.add_subcommand("mpi", "Propagate coherent amplitudes through an interferometer");
  mpi->add_option("params", mpi_params, "Parameter file")->required()->check(CLI::ExistingFile);
  mpi->add_option("input", mpi_input, "Input amplitudes: array of [re, im]")
      ->check(CLI::ExistingFile);
  add_common(mpi, mpi_opts, mpi_batch);
  add_unitary(mpi, mpi_opts);

  hyperu::cli::CommonOptions ep_opts;
  std::string ep_spec, ep_batch;
  auto* ep = app.add_subcommand("ep", "Tensor-product transform of several parties");
  ep->add_option("spec", ep_spec, "Spec file: {\"gamma\", \"parties\": [...]}")
      ->check(CLI::ExistingFile);
  add_common(ep, ep_opts, ep_batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hyperu::cli::kInputError;
  }

  using namespace hyperu::cli;

  if (gen->parsed()) {
    if (!gen_check.empty()) {
      return emit(load_and_run(gen_check, [&](const Json& prior) {
        if (gen_params.empty()) return run_check(prior, nullptr, gen_opts);
        const Json fresh = read_json_file(gen_params);
        return run_check(prior, &fresh, gen_opts);
      }));
    }
    return dispatch(gen_batch, gen_params,
                    [&](const Json& doc) { return run_generate(doc, gen_opts); });
  }
  if (inv->parsed()) {
    return dispatch(inv_batch, inv_state, [&](const Json& doc) { return run_invert(doc, inv_opts); });
  }
  if (basis->parsed()) {
    if (basis->count("--seed") > 0) basis_opts.seed = basis_seed;
    if (!basis_free.empty()) {
      const auto loaded = load_and_run(basis_free, [&](const Json& doc) {
        basis_opts.free = doc;
        return CommandOutput{};
      });
      if (loaded.exit_code != kOk) return emit(loaded);
    }
    return dispatch(basis_batch, basis_state,
                    [&](const Json& doc) { return run_basis(doc, basis_opts); });
  }
  if (mpi->parsed()) {
    // The parameters stay fixed; batch mode iterates over input amplitude files.
    Json params;
    const auto loaded = load_and_run(mpi_params, [&](const Json& doc) {
      params = doc;
      return CommandOutput{};
    });
    if (loaded.exit_code != kOk) return emit(loaded);
    return dispatch(mpi_batch, mpi_input,
                    [&](const Json& doc) { return run_mpi(params, doc, mpi_opts); });
  }
  return dispatch(ep_batch, ep_spec, [&](const Json& doc) { return run_ep(doc, ep_opts); });
}
