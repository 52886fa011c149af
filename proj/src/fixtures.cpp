#include "hecke/fixtures.hpp"

#include "hecke/error.hpp"

namespace hecke {

std::string_view fixture(std::string_view name) {
  for (const auto& [key, text] : detail::fixture_table())
    if (key == name) return text;
  throw Error(Errc::InvalidArgument, "no fixture named '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::fixture_table()) out.emplace_back(entry.first);
  return out;
}

}  // namespace hecke
