#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "srk/error.hpp"
#include "srk/quaternion.hpp"

namespace srk {

// 17 significant digits: round-trip exact for doubles.
inline std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string format_quaternion(Quaternion q) {
    return "[" + fmt17(q.w) + ", " + fmt17(q.x) + ", " + fmt17(q.y) + ", " +
           fmt17(q.z) + "]";
}

// Literal form "[w, x, y, z]": brackets and commas mandatory, whitespace free.
inline Quaternion parse_quaternion(const std::string& text) {
    const char* p = text.c_str();
    auto skip_ws = [&] {
        while (*p && std::isspace(static_cast<unsigned char>(*p))) ++p;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (*p != c)
            raise(ErrorCode::parse_error,
                  std::string("expected '") + c + "' in quaternion literal \"" + text + "\"");
        ++p;
    };
    double comp[4];
    expect('[');
    for (int n = 0; n < 4; ++n) {
        if (n > 0) expect(',');
        skip_ws();
        char* end = nullptr;
        comp[n] = std::strtod(p, &end);
        if (end == p)
            raise(ErrorCode::parse_error,
                  "expected a number in quaternion literal \"" + text + "\"");
        p = end;
    }
    expect(']');
    skip_ws();
    if (*p != '\0')
        raise(ErrorCode::parse_error,
              "trailing characters in quaternion literal \"" + text + "\"");
    return {comp[0], comp[1], comp[2], comp[3]};
}

}  // namespace srk
