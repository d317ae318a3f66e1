#include "switchosc/format.hpp"

#include <array>
#include <cstdio>

namespace switchosc {

std::string format_number(double x) {
    std::array<char, 40> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", x);
    return {buf.data(), static_cast<std::size_t>(n)};
}

}  // namespace switchosc
