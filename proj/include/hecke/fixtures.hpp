#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

// JSON files from data/, compiled into the library under their stem.
std::string_view fixture(std::string_view name);  // throws InvalidArgument
std::vector<std::string> fixture_names();

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_table();
}

}  // namespace hecke
