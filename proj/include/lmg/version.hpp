#pragma once

namespace lmg {

inline constexpr const char* kVersion = "lmgdyn 0.1.0";

}  // namespace lmg
