#pragma once

namespace ballcomp {

inline constexpr const char* kVersion = "0.1.0";

}
