#pragma once

#include <map>
#include <string>
#include <vector>

#include "homalg/structure_file.hpp"

namespace homalg {

using ConstructArgs = std::map<std::string, std::string>;

/// Names accepted by construct(), in a fixed order.
const std::vector<std::string>& construction_names();

/// Applies a construction to objects of `in` and returns `in` with the
/// result appended under args["name"] (default: the construction name).
/// Inputs are chosen by arguments such as entwining=NAME; when an argument
/// is omitted and exactly one object of the needed kind exists, that one is
/// used. Throws std::invalid_argument for unknown constructions or
/// arguments, ValidationError for missing or ambiguous inputs, and library
/// errors raised by the construction itself.
StructureFile construct(const StructureFile& in, const std::string& construction, const ConstructArgs& args);

}  // namespace homalg
