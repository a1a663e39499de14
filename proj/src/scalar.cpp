#include "cubicmaps/scalar.hpp"

#include <cstdio>

namespace cubicmaps {

std::string to_string(Real x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", x);
    return buf;
}

} // namespace cubicmaps
