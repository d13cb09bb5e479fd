#pragma once

namespace qcldpc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qcldpc
