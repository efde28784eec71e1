#pragma once

#include "sharpmilnor/geometry.hpp"

#include <string>

namespace sharpmilnor {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
};

// "arr v1" format:
//   arr v1
//   mode affine|projective
//   line <name> <a> <b> <c>
// with rationals written as "p" or "p/q". Affine lines read a*x + b*y = c,
// projective ones a*x + b*y + c*z = 0.
Arrangement parse_arr(const std::string& text);

std::string print_arr(const Arrangement& arr);

}  // namespace sharpmilnor
