#pragma once

#include <string>

namespace switchosc {

/// Fixed 17-significant-digit rendering ("%.17g"), so that emitted files
/// round-trip exactly and are byte-identical across runs.
std::string format_number(double x);

}  // namespace switchosc
