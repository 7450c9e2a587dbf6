#include "hyperu/json_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "hyperu/hypersphere.hpp"

namespace hyperu::cli {

namespace {

std::string pair_key(std::size_t j, std::size_t k) {
  return std::to_string(j) + "," + std::to_string(k);
}

double finite_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(where + ": non-finite number");
  return v;
}

const Json& require_object_map(const Json& doc, const char* name, bool may_be_absent) {
  static const Json empty = Json::object();
  if (!doc.contains(name)) {
    if (may_be_absent) return empty;
    throw InputError(std::string("missing \"") + name + "\" map");
  }
  const Json& m = doc.at(name);
  if (!m.is_object()) throw InputError(std::string("\"") + name + "\" must be an object");
  return m;
}

void require_exact_keys(const Json& m, const std::set<std::string>& expected, const char* name) {
  for (const auto& [key, value] : m.items()) {
    if (!expected.contains(key)) {
      throw InputError(std::string("\"") + name + "\": unexpected key \"" + key + "\"");
    }
  }
  for (const auto& key : expected) {
    if (!m.contains(key)) {
      throw InputError(std::string("\"") + name + "\": missing key \"" + key + "\"");
    }
  }
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [re, im]");
  return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
}

ComplexVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of [re, im]");
  ComplexVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::vector<Complex> entries;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = vector_from_json(j[r], where + "[" + std::to_string(r) + "]");
    if (r == 0) cols = row.size();
    if (row.size() != cols) throw InputError(where + ": ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

double angle_from_json(const Json& j, const std::string& where, bool degrees) {
  const double v = finite_number(j, where);
  return degrees ? v * std::numbers::pi / 180.0 : v;
}

ParamFile param_file_from_json(const Json& doc, bool degrees) {
  if (!doc.is_object()) throw InputError("parameter file must be a JSON object");
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw InputError("parameter file needs an integer \"n\"");
  }
  const auto n_signed = doc.at("n").get<long long>();
  if (n_signed < 1) throw InputError("\"n\" must be at least 1");
  const auto n = static_cast<std::size_t>(n_signed);
  // Guards against absurd sizes before allocating n^2 storage.
  if (n > 4096) throw InputError("\"n\" is unreasonably large");

  std::set<std::string> pair_keys;
  std::set<std::string> chi_keys;
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t k = 1; k < j; ++k) pair_keys.insert(pair_key(j, k));
    chi_keys.insert(pair_key(j, j - 1));
  }

  const bool trivial = n == 1;
  const Json& thetas = require_object_map(doc, "thetas", trivial);
  const Json& phis = require_object_map(doc, "phis", trivial);
  const Json& chis = require_object_map(doc, "chis", trivial);
  require_exact_keys(thetas, pair_keys, "thetas");
  require_exact_keys(phis, pair_keys, "phis");
  require_exact_keys(chis, chi_keys, "chis");

  ParamFile out{EssentialParams(n), std::nullopt};
  try {
    for (std::size_t j = 2; j <= n; ++j) {
      for (std::size_t k = 1; k < j; ++k) {
        const auto key = pair_key(j, k);
        out.params.set_theta(j, k, angle_from_json(thetas.at(key), "thetas." + key, degrees));
        out.params.set_phi(j, k, angle_from_json(phis.at(key), "phis." + key, degrees));
      }
      const auto key = pair_key(j, j - 1);
      out.params.set_chi(j, angle_from_json(chis.at(key), "chis." + key, degrees));
    }
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }

  if (doc.contains("gamma")) {
    const double g = angle_from_json(doc.at("gamma"), "gamma", degrees);
    if (!is_canonical_phase(g)) throw InputError("gamma outside [0, 2 pi)");
    out.gamma = g;
  }
  return out;
}

Json to_json(const EssentialParams& p, std::optional<double> gamma) {
  Json thetas = Json::object();
  Json phis = Json::object();
  Json chis = Json::object();
  const std::size_t n = p.dimension();
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t k = 1; k < j; ++k) {
      thetas[pair_key(j, k)] = p.theta(j, k);
      phis[pair_key(j, k)] = p.phi(j, k);
    }
    chis[pair_key(j, j - 1)] = p.chi(j);
  }
  Json out = {{"n", n}, {"thetas", thetas}, {"phis", phis}, {"chis", chis}};
  if (gamma) out["gamma"] = *gamma;
  return out;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace hyperu::cli
