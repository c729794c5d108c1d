#pragma once

#include <string_view>
#include <vector>

namespace pbt {

// Access to the golden tables bundled under data/fixtures (embedded at build
// time). Throws std::out_of_range for unknown names.
std::string_view fixture(std::string_view name);
std::vector<std::string_view> fixture_names();

}  // namespace pbt
