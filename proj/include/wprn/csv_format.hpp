#pragma once

#include <charconv>
#include <cstddef>
#include <string>

namespace wprn {

// Locale-independent numeric formatting with 12 significant digits; every
// CSV cell goes through here so identical runs stay byte-identical.
inline std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

inline std::string format_number(std::size_t value) { return std::to_string(value); }

} // namespace wprn
