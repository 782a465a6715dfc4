#pragma once

#include <string>
#include <vector>

#include "homalg/structure_file.hpp"

namespace homalg {

/// Names of the built-in example files, in a fixed order.
const std::vector<std::string>& gallery_names();

/// Builds the named example file. Every object in it passes its checks.
/// Throws UnknownExample for other names.
StructureFile build_example(const std::string& name);

}  // namespace homalg
