#include "hyperu/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <numbers>
#include <random>
#include <thread>

#include "hyperu/applications.hpp"
#include "hyperu/hypersphere.hpp"

namespace hyperu::cli {

namespace {

// Upper bound on matrix dimension accepted from files.
constexpr std::size_t kMaxDimension = 4096;

template <typename Fn>
CommandOutput guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    return {kInputError, nullptr, {std::string("error: ") + e.what()}};
  } catch (const std::invalid_argument& e) {
    // ShapeError and DegenerateInputError.
    return {kInputError, nullptr, {std::string("error: ") + e.what()}};
  } catch (const std::domain_error& e) {
    return {kInputError, nullptr, {std::string("error: ") + e.what()}};
  } catch (const Json::exception& e) {
    return {kInputError, nullptr, {std::string("error: ") + e.what()}};
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void flag_residual(CommandOutput& out, const char* name, double value, double tol) {
  if (value > tol) {
    out.exit_code = kResidualExceeded;
    out.diagnostics.push_back(std::string("error: ") + name + " " + format_number(value) +
                              " exceeds tolerance " + format_number(tol));
  }
}

struct ResolvedUnitary {
  GeneralUnitaryParams params;
  bool general;
};

ResolvedUnitary resolve_unitary(const Json& doc, const UnitaryOptions& opts) {
  auto file = param_file_from_json(doc, opts.degrees);
  const bool general = opts.general || opts.gamma.has_value() || file.gamma.has_value();
  double gamma = file.gamma.value_or(0.0);
  if (opts.gamma) {
    gamma = opts.degrees ? *opts.gamma * std::numbers::pi / 180.0 : *opts.gamma;
    if (!is_canonical_phase(gamma)) throw InputError("--gamma outside [0, 2 pi)");
  }
  return {GeneralUnitaryParams(std::move(file.params), gamma), general};
}

Complex expected_determinant(std::size_t n, double gamma) {
  return std::polar(1.0, static_cast<double>(n) * gamma);
}

PureState ingest_state(const Json& doc, CommandOutput& out) {
  const Json& amps = doc.is_object() && doc.contains("amplitudes") ? doc.at("amplitudes") : doc;
  ComplexVector v = vector_from_json(amps, "state");
  if (v.empty()) throw InputError("state: empty vector");
  if (v.size() > kMaxDimension) throw InputError("state: dimension too large");
  const double norm = std::sqrt(norm_squared(v));
  if (norm == 0.0) throw InputError("state: zero vector has no direction");
  const double deviation = std::abs(norm - 1.0);
  if (deviation <= PureState::kNormTolerance) return PureState(std::move(v));
  if (deviation > kIngestNormTolerance) {
    out.diagnostics.push_back("warning: state norm " + format_number(norm) +
                              " is not 1; renormalized");
  }
  return PureState::normalized(std::move(v));
}

FreeParams free_params_from_json(const Json& doc, std::size_t n, bool degrees) {
  if (doc.is_array()) {
    std::vector<double> values;
    values.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
      values.push_back(angle_from_json(doc[i], "free[" + std::to_string(i) + "]", degrees));
    }
    if (values.size() != n * (n - 2)) {
      throw InputError("free parameters: expected " + std::to_string(n * (n - 2)) +
                       " values for n = " + std::to_string(n) + ", got " +
                       std::to_string(values.size()));
    }
    return FreeParams::from_flat(n, values);
  }
  auto file = param_file_from_json(doc, degrees);
  if (file.params.dimension() != n - 1) {
    throw InputError("free parameters: file has n = " + std::to_string(file.params.dimension()) +
                     ", completion of a dimension-" + std::to_string(n) + " state needs n = " +
                     std::to_string(n - 1));
  }
  return FreeParams::from_flat(n, file.params.to_flat());
}

}  // namespace

CommandOutput run_generate(const Json& params, const UnitaryOptions& opts) {
  return guarded([&] {
    const auto r = resolve_unitary(params, opts);
    const auto u = build_general(r.params);
    const Complex det = determinant(u);
    const double residual = unitarity_residual(u);
    const double det_residual = std::abs(det - expected_determinant(u.rows(), r.params.gamma()));
    CommandOutput out{kOk,
                      {{"n", u.rows()},
                       {"group", r.general ? "U" : "SU"},
                       {"matrix", to_json(u)},
                       {"det", to_json(det)},
                       {"unitarity_residual", residual},
                       {"det_residual", det_residual}},
                      {}};
    if (r.general) out.document["gamma"] = r.params.gamma();
    flag_residual(out, "unitarity_residual", residual, opts.tol);
    flag_residual(out, "det_residual", det_residual, opts.tol);
    return out;
  });
}

CommandOutput run_check(const Json& prior, const Json* fresh_params, const UnitaryOptions& opts) {
  return guarded([&] {
    if (!prior.is_object() || !prior.contains("matrix") || !prior.contains("unitarity_residual") ||
        !prior.contains("det")) {
      throw InputError("check: expected a generate output with matrix, det, unitarity_residual");
    }
    const auto u = matrix_from_json(prior.at("matrix"), "matrix");
    if (!u.is_square()) throw InputError("check: matrix is not square");
    const double reported = prior.at("unitarity_residual").get<double>();
    const Complex reported_det = complex_from_json(prior.at("det"), "det");
    const double recomputed = unitarity_residual(u);
    const Complex recomputed_det = determinant(u);

    CommandOutput out;
    Json doc = {{"unitarity_residual",
                 {{"reported", reported},
                  {"recomputed", recomputed},
                  {"delta", std::abs(recomputed - reported)}}},
                {"det",
                 {{"reported", to_json(reported_det)},
                  {"recomputed", to_json(recomputed_det)},
                  {"delta", std::abs(recomputed_det - reported_det)}}}};
    bool pass = std::abs(recomputed - reported) <= kCheckTolerance &&
                std::abs(recomputed_det - reported_det) <= kCheckTolerance;

    if (fresh_params) {
      const auto r = resolve_unitary(*fresh_params, opts);
      const auto fresh = build_general(r.params);
      const double fresh_residual = unitarity_residual(fresh);
      const double matrix_delta =
          fresh.rows() == u.rows() ? frobenius_distance(fresh, u) : INFINITY;
      doc["fresh"] = {{"unitarity_residual", fresh_residual},
                      {"residual_delta", std::abs(fresh_residual - reported)},
                      {"matrix_delta", matrix_delta}};
      pass = pass && std::abs(fresh_residual - reported) <= kCheckTolerance &&
             matrix_delta <= kCheckTolerance;
    }
    doc["pass"] = pass;
    out.document = std::move(doc);
    if (!pass) {
      out.exit_code = kResidualExceeded;
      out.diagnostics.emplace_back("error: --check residuals do not reproduce within 1e-14");
    }
    return out;
  });
}

CommandOutput run_invert(const Json& state, const CommonOptions& opts) {
  return guarded([&] {
    CommandOutput out;
    const PureState psi = ingest_state(state, out);
    const auto h = angles_from_state(psi);
    const auto back = state_from_angles(h);
    ComplexVector diff(psi.dimension());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = back[k] - psi[k];
    const double residual = std::sqrt(norm_squared(diff));
    out.document = {{"n", psi.dimension()},
                    {"thetas", std::vector<double>(h.thetas().begin(), h.thetas().end())},
                    {"phis", std::vector<double>(h.phis().begin(), h.phis().end())},
                    {"reconstruction_residual", residual}};
    flag_residual(out, "reconstruction_residual", residual, opts.tol);
    return out;
  });
}

CommandOutput run_basis(const Json& state, const BasisOptions& opts) {
  return guarded([&] {
    CommandOutput out;
    const PureState psi = ingest_state(state, out);
    const std::size_t n = psi.dimension();
    if (n < 2) throw InputError("basis: state must have dimension at least 2");
    FreeParams free(n);
    if (opts.free) {
      free = free_params_from_json(*opts.free, n, opts.degrees);
    } else if (opts.seed) {
      std::mt19937_64 rng(*opts.seed);
      free = FreeParams::sample(n, rng);
    }
    const auto result = complete_basis(psi, free);
    Json basis = Json::array();
    for (const auto& v : result.basis) basis.push_back(to_json(v.amplitudes()));

    ComplexVector diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = result.matrix(0, k) - psi[k];
    const double gram = gram_residual(result.basis);
    const double row = std::sqrt(norm_squared(diff));
    out.document = {{"n", n},
                    {"matrix", to_json(result.matrix)},
                    {"basis", basis},
                    {"free_params", to_json(free.angles())},
                    {"gram_residual", gram},
                    {"first_row_residual", row}};
    flag_residual(out, "gram_residual", gram, opts.tol);
    flag_residual(out, "first_row_residual", row, opts.tol);
    return out;
  });
}

CommandOutput run_mpi(const Json& params, const Json& input, const UnitaryOptions& opts) {
  return guarded([&] {
    const auto r = resolve_unitary(params, opts);
    const CoherentAmplitudes in(vector_from_json(input, "input"));
    const auto result = mpi_propagate(r.params, in);
    const double before = in.total_intensity();
    const double after = result.total_intensity();
    const double residual = std::abs(after - before);
    CommandOutput out{kOk,
                      {{"n", in.dimension()},
                       {"output", to_json(result.alphas())},
                       {"input_intensity", before},
                       {"output_intensity", after},
                       {"conservation_residual", residual}},
                      {}};
    flag_residual(out, "conservation_residual", residual, opts.tol);
    return out;
  });
}

CommandOutput run_ep(const Json& spec, const CommonOptions& opts) {
  return guarded([&] {
    if (!spec.is_object() || !spec.contains("parties") || !spec.at("parties").is_array()) {
      throw InputError("ep spec needs a \"parties\" array");
    }
    std::vector<EssentialParams> parties;
    std::size_t total = 1;
    for (std::size_t m = 0; m < spec.at("parties").size(); ++m) {
      auto file = param_file_from_json(spec.at("parties")[m], opts.degrees);
      if (file.gamma) {
        throw InputError("party " + std::to_string(m) + ": per-party gamma is not allowed; "
                         "use the top-level \"gamma\"");
      }
      total *= file.params.dimension();
      if (total > kMaxDimension) throw InputError("ep: product dimension too large");
      parties.push_back(std::move(file.params));
    }
    double gamma = 0.0;
    if (spec.contains("gamma")) {
      gamma = angle_from_json(spec.at("gamma"), "gamma", opts.degrees);
      if (!is_canonical_phase(gamma)) throw InputError("gamma outside [0, 2 pi)");
    }
    const EPSpec ep(std::move(parties), gamma);
    const auto u = ep_build(ep);
    const auto dims = ep.dims();
    const double residual = unitarity_residual(u);
    CommandOutput out{kOk,
                      {{"dims", dims},
                       {"gamma", gamma},
                       {"matrix", to_json(u)},
                       {"dof", ep_dof(dims)},
                       {"unitarity_residual", residual}},
                      {}};
    flag_residual(out, "unitarity_residual", residual, opts.tol);
    return out;
  });
}

CommandOutput run_batch(const std::string& dir,
                        const std::function<CommandOutput(const Json&)>& fn) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return {kInputError, nullptr, {"error: not a directory: " + dir}};

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<CommandOutput> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      results[i] = guarded([&] { return fn(read_json_file(files[i].string())); });
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  CommandOutput combined{kOk, {{"results", Json::array()}}, {}};
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto name = files[i].filename().string();
    combined.document["results"].push_back(
        {{"file", name}, {"exit_code", results[i].exit_code}, {"output", results[i].document}});
    combined.exit_code = std::max(combined.exit_code, results[i].exit_code);
    for (const auto& d : results[i].diagnostics) combined.diagnostics.push_back(name + ": " + d);
  }
  return combined;
}

}  // namespace hyperu::cli
