#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace floorgs {

class PolygonError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Convex lattice polygon. Vertices are stored counterclockwise, without
/// collinear boundary points, starting from the lowest-then-leftmost vertex.
/// Segments and single points are representable and flagged degenerate.
class LatticePolygon {
public:
    static LatticePolygon from_vertices(std::span<const Point> pts);
    static LatticePolygon segment(Point a, Point b);
    static LatticePolygon point(Point p);

    const std::vector<Point>& vertices() const { return vertices_; }
    bool degenerate() const { return vertices_.size() < 3; }

    /// Same vertex cycle after translating the first vertex onto `other`'s.
    bool congruent_by_translation(const LatticePolygon& other) const;

    std::string to_string() const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

private:
    explicit LatticePolygon(std::vector<Point> v) : vertices_(std::move(v)) {}

    std::vector<Point> vertices_;
};

/// Boundary profile of an h-transverse polygon. The side lists are sorted.
struct HProfile {
    int a = 0;
    int e_top = 0;
    int e_bot = 0;
    std::vector<int> b_left;
    std::vector<int> b_right;

    /// e_bot == e_top + sum(b_left) + sum(b_right) and |b_left| == |b_right| == a.
    bool closed() const;
    std::string to_string() const;

    friend bool operator==(const HProfile&, const HProfile&) = default;
};

struct PolygonData {
    int a = 0;
    int e_top = 0;
    int e_bot = 0;
    int y = 0;
    int chi = 0;
    int g_max = 0;

    int s_max(int g) const;
};

struct LatticeTransform {
    std::array<std::int64_t, 4> m{1, 0, 0, 1}; // row-major: m11 m12 m21 m22
    Point t{};

    std::int64_t det() const { return m[0] * m[3] - m[1] * m[2]; }
    Point apply(Point p) const;

    static LatticeTransform identity() { return {}; }
    static LatticeTransform rotation90() { return {{0, -1, 1, 0}, {}}; }
};

bool is_h_transverse(const LatticePolygon& p);

/// Throws PolygonError if the polygon is not h-transverse.
HProfile profile(const LatticePolygon& p);

/// Inverse of `profile`, anchored with the bottom-left corner at the origin.
LatticePolygon polygon_from_profile(const HProfile& h);

/// Twice the area, boundary lattice points and interior lattice points.
std::int64_t twice_area(const LatticePolygon& p);
std::int64_t boundary_points(const LatticePolygon& p);
std::int64_t interior_points(const LatticePolygon& p);

/// Throws std::logic_error if the direct interior count disagrees with Pick.
PolygonData polygon_data(const LatticePolygon& p);

/// Hirzebruch trapezoid: hull of (0,0), (b+n*a, 0), (b, a), (0, a).
LatticePolygon trapezoid(int n, int a, int b);

LatticePolygon apply_transform(const LatticePolygon& p, const LatticeTransform& t);

/// Remove the top corner two levels deep. Requires e_top == 0 and a
/// unimodular top corner whose two sides have lattice length >= 2.
HProfile cut_top_corner(const HProfile& h);

} // namespace floorgs
