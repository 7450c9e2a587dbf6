#ifndef HYPERU_TOOLS_JSON_IO_HPP
#define HYPERU_TOOLS_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperu/complex_matrix.hpp"
#include "hyperu/essential.hpp"

namespace hyperu::cli {

using Json = nlohmann::json;

/// Malformed or schema-violating input. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

Json to_json(Complex z);
Json to_json(std::span<const Complex> v);
Json to_json(const ComplexMatrix& m);

/// [re, im] with both entries finite numbers.
Complex complex_from_json(const Json& j, const std::string& where);
ComplexVector vector_from_json(const Json& j, const std::string& where);
/// Row-major nested arrays; every row must have the same length.
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);

struct ParamFile {
  EssentialParams params;
  std::optional<double> gamma;
};

/// {"n": N, "thetas": {"j,k": ...}, "phis": {"j,k": ...}, "chis": {"j,j-1": ...},
///  "gamma": optional}
///
/// Key sets must match the lower-triangular index structure exactly; the maps
/// may be omitted only when they would be empty (n = 1). With degrees set,
/// every angle is converted to radians before range validation.
ParamFile param_file_from_json(const Json& j, bool degrees);
Json to_json(const EssentialParams& p, std::optional<double> gamma = std::nullopt);

double angle_from_json(const Json& j, const std::string& where, bool degrees);

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

}  // namespace hyperu::cli

#endif  // HYPERU_TOOLS_JSON_IO_HPP
