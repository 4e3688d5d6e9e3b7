#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bethe/algebra/field.hpp"
#include "bethe/gl11/gl11.hpp"
#include "bethe/model/node.hpp"

namespace bethe::cli {

using Json = nlohmann::ordered_json;

/// Malformed input; `pointer` is a JSON pointer into the offending document.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& what)
      : std::runtime_error(pointer.empty() ? what : pointer + ": " + what), pointer(std::move(pointer)) {}
  std::string pointer;
};

/// {m, n, field:{d, params, h}, weights, z, twist?, parity?, y?}
struct Input {
  FieldSpec field;
  WeightData weights;
  BetheNode node;
};

Input parse_input(const Json& doc);
Json to_json(const Input& in);

/// {field:{d, h}, weights:[[a, b]...], z}; h must be 1.
struct Gl11Input {
  FieldSpec field;
  Gl11Weights weights;
};

Gl11Input parse_gl11_input(const Json& doc);
Json to_json(const Gl11Input& in);

Json scalar_json(const Scalar& s, const FieldSpec& f);
Json poly_json(const Poly& p, const FieldSpec& f);
Json ratfunc_json(const RatFunc& r, const FieldSpec& f);
Json node_json(const BetheNode& n, const FieldSpec& f);

enum class Format { Json, Text, Graphviz };

struct RunConfig {
  std::string subcommand;
  /// A path, "-" for stdin, or an inline document starting with '{'.
  std::string input;
  std::uint32_t seed = 1;
  int retries = 16;
  Format format = Format::Json;
  bool symbolic = false;
  /// reproduce: a single direction (0 = all)
  int direction = 0;
  /// gl11: "homogeneous" or "chain"
  std::string gl11_mode = "chain";
  int sites = 0;
};

struct Report {
  Json doc;
  std::vector<std::string> text;
  /// Set by subcommands that export a graph.
  std::optional<std::string> graphviz;
  bool passed = true;
};

/// Loads the input named by the config; throws InputError.
Json load_document(const std::string& input);

Report run_report(const RunConfig& cfg);
/// Throws InputError when the format is not available for the report.
std::string render(const Report& r, Format f);

/// Exit status: 0 all checks passed, 1 verification failed, 2 malformed input.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bethe::cli
