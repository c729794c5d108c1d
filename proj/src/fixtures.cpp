#include "pbt/fixtures.hpp"

#include <stdexcept>
#include <string>

#include "pbt/fixtures_data.hpp"

namespace pbt {

std::string_view fixture(std::string_view name) {
  for (const auto& [k, v] : fixtures_data::kFixtures)
    if (k == name) return v;
  throw std::out_of_range("unknown fixture: " + std::string(name));
}

std::vector<std::string_view> fixture_names() {
  std::vector<std::string_view> out;
  for (const auto& [k, v] : fixtures_data::kFixtures) out.push_back(k);
  return out;
}

}  // namespace pbt
