#pragma once

#include <string_view>

namespace gridkit::detail {

/// Contents of resources/*.jsonl, compiled in by CMake.
std::string_view knot_table();
std::string_view legendrian_table();

}  // namespace gridkit::detail
