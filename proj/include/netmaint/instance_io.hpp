#ifndef NETMAINT_INSTANCE_IO_HPP_
#define NETMAINT_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "netmaint/instance.hpp"

namespace netmaint {

// Canonical single-line JSON:
// {"nodes":[...],"source":"..","sink":"..","horizon":"n/d","edges":[{"id":..,
//  "u":..,"v":..,"release":..,"deadline":..,"processing":..,"preemptable":..}]}
// followed by "meta" only when metadata is present. Rationals are strings.
std::string instance_to_json(const Instance& instance);

// Accepts the canonical form plus two conveniences: a missing horizon defaults
// to the latest deadline and missing edge ids become "e1", "e2", ... by
// position. Structural problems throw ValidationError; semantic invariants
// are left to validate().
Instance instance_from_json(std::string_view text);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& instance);

}  // namespace netmaint

#endif  // NETMAINT_INSTANCE_IO_HPP_
