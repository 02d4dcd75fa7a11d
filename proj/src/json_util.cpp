#include "netmaint/json_util.hpp"

#include <fstream>
#include <sstream>

#include "netmaint/errors.hpp"

namespace netmaint {

Rational json_rational(const nlohmann::ordered_json& value, const std::string& field) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (!value.is_string()) {
    throw ValidationError("field '" + field + "' must be a rational string");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw ValidationError("field '" + field + "': " + err.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace netmaint
