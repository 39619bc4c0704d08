#pragma once

#include <charconv>
#include <string>

namespace raptor {

// Shortest decimal that round-trips to the same double. Used for all CSV
// output so files compare byte-for-byte across runs.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace raptor
