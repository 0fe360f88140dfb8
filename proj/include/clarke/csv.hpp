#pragma once

#include <cstdio>
#include <string>

namespace clarke {

/// Fixed 17-significant-digit formatting so seeded runs produce
/// byte-identical files on every platform.
inline std::string format_double(double value) {
    if (value == 0.0) return "0";  // normalize -0
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace clarke
