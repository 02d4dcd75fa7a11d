#ifndef NETMAINT_JSON_UTIL_HPP_
#define NETMAINT_JSON_UTIL_HPP_

#include <string>

#include "json.hpp"
#include "netmaint/rational.hpp"

namespace netmaint {

// Reads a rational stored as a JSON string ("3", "1/2"). Plain JSON integers
// are accepted too; floating-point numbers are not. Throws ValidationError.
Rational json_rational(const nlohmann::ordered_json& value, const std::string& field);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace netmaint

#endif  // NETMAINT_JSON_UTIL_HPP_
