#pragma once

namespace cartsym {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cartsym
