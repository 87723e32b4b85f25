#pragma once

namespace qrc {

inline constexpr const char *kVersion = "0.1.0";

} // namespace qrc
