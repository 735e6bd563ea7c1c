#pragma once

namespace mubvqe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mubvqe
