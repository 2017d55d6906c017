#pragma once

#define TWOSTAGE_VERSION_MAJOR 0
#define TWOSTAGE_VERSION_MINOR 1
#define TWOSTAGE_VERSION_PATCH 0

namespace twostage {
inline constexpr const char* version_string = "0.1.0";
}
