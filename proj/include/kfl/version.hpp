#pragma once

namespace kfl {

inline constexpr const char* version = "0.1.0";

}
