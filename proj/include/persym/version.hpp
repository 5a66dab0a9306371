#pragma once

namespace persym {

inline constexpr const char* kVersion = "0.1.0";

}
