#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rls/analysis.hpp"

namespace rls::detail {

/// nullopt when `got` has exactly the expected blocks, otherwise the
/// notation of what was found.
std::optional<std::string> jordan_mismatch(const JordanData& got,
                                           const std::vector<std::pair<Cyclotomic, size_t>>& expected,
                                           int conductor);

}  // namespace rls::detail
