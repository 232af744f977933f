#include "cuspbound/jsonout.hpp"

#include <cstdio>

namespace cuspbound {

std::string fmt_sig(double v, int digits) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

}  // namespace cuspbound
