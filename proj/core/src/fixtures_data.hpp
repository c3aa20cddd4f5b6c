#pragma once

#include <string_view>
#include <vector>

namespace sqstable::detail {

struct FixtureSource {
  std::string_view name;
  std::string_view text;
};

// Catalog order; generated at configure time from core/fixtures/.
const std::vector<FixtureSource>& fixture_sources();

}  // namespace sqstable::detail
