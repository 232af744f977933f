#pragma once

#include <string>

namespace cuspbound {

// Deterministic numeric formatting: fixed significant digits, no locale.
std::string fmt_sig(double v, int digits);       // %.{digits}g

}  // namespace cuspbound
