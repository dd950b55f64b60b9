#pragma once

#include "floorgs/polygon.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace floorgs::cli {

class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(const std::string& what, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// `trapezoid:n,a,b` | `triangle:d` | `rect:a,b` | `vertices:x1,y1;x2,y2;...`,
/// optionally followed by `@transform=m11,m12,m21,m22,tx,ty`.
LatticePolygon parse_polygon_literal(std::string_view text);

LatticeTransform parse_transform(std::string_view text);

enum ExitCode { Ok = 0, Usage = 1, CheckFailed = 2, Overflow = 3 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace floorgs::cli
