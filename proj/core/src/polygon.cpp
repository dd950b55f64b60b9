#include "floorgs/polygon.hpp"

#include "floorgs/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace floorgs {

namespace {

std::int64_t cross(Point o, Point a, Point b)
{
    using namespace checked;
    return sub(mul(sub(a.x, o.x), sub(b.y, o.y)), mul(sub(a.y, o.y), sub(b.x, o.x)));
}

std::int64_t lattice_length(Point a, Point b)
{
    return std::gcd(b.x - a.x, b.y - a.y);
}

// Lowest, then leftmost.
bool lower_left(Point a, Point b)
{
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

void rotate_to_anchor(std::vector<Point>& v)
{
    auto it = std::min_element(v.begin(), v.end(), lower_left);
    std::rotate(v.begin(), it, v.end());
}

// Polygon made of consecutive path points; collapses to a segment or a
// point when the path has no area.
LatticePolygon from_path(std::vector<Point> pts)
{
    std::vector<Point> uniq;
    for (const Point& p : pts)
        if (uniq.empty() || uniq.back() != p)
            uniq.push_back(p);
    while (uniq.size() > 1 && uniq.front() == uniq.back())
        uniq.pop_back();

    bool flat = true;
    for (std::size_t i = 2; i < uniq.size() && flat; ++i)
        flat = cross(uniq[0], uniq[1], uniq[i]) == 0;
    if (uniq.size() >= 3 && !flat)
        return LatticePolygon::from_vertices(uniq);

    auto [lo, hi] = std::minmax_element(uniq.begin(), uniq.end());
    if (*lo == *hi)
        return LatticePolygon::point(*lo);
    return LatticePolygon::segment(*lo, *hi);
}

} // namespace

// --------------------------------------------------------- LatticePolygon

LatticePolygon LatticePolygon::from_vertices(std::span<const Point> pts)
{
    std::vector<Point> v(pts.begin(), pts.end());
    {
        std::vector<Point> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PolygonError("repeated vertex");
    }
    if (v.size() < 3)
        throw PolygonError("a polygon needs at least 3 distinct points");

    // Drop collinear middle points; a zero turn that reverses direction is a spike.
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& prev = v[(i + v.size() - 1) % v.size()];
            const Point& cur = v[i];
            const Point& next = v[(i + 1) % v.size()];
            if (cross(prev, cur, next) != 0)
                continue;
            const std::int64_t dot =
                (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
            if (dot < 0)
                throw PolygonError("polygon is not convex");
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
    if (v.size() < 3)
        throw PolygonError("points are collinear");

    const bool ccw = cross(v[0], v[1], v[2]) > 0;
    if (!ccw)
        std::reverse(v.begin(), v.end());

    // Strict convexity: every vertex lies strictly left of every non-incident edge.
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n)
                continue;
            if (cross(a, b, v[j]) <= 0)
                throw PolygonError("polygon is not convex");
        }
    }
    rotate_to_anchor(v);
    return LatticePolygon(std::move(v));
}

LatticePolygon LatticePolygon::segment(Point a, Point b)
{
    if (a == b)
        return point(a);
    std::vector<Point> v{a, b};
    rotate_to_anchor(v);
    return LatticePolygon(std::move(v));
}

LatticePolygon LatticePolygon::point(Point p)
{
    return LatticePolygon({p});
}

bool LatticePolygon::congruent_by_translation(const LatticePolygon& other) const
{
    if (vertices_.size() != other.vertices_.size())
        return false;
    const Point o1 = vertices_.front();
    const Point o2 = other.vertices_.front();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].x - o1.x != other.vertices_[i].x - o2.x ||
            vertices_[i].y - o1.y != other.vertices_[i].y - o2.y)
            return false;
    }
    return true;
}

std::string LatticePolygon::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i)
            os << ",";
        os << "(" << vertices_[i].x << "," << vertices_[i].y << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------- profile

bool HProfile::closed() const
{
    if (static_cast<int>(b_left.size()) != a || static_cast<int>(b_right.size()) != a)
        return false;
    const long sl = std::accumulate(b_left.begin(), b_left.end(), 0L);
    const long sr = std::accumulate(b_right.begin(), b_right.end(), 0L);
    return e_bot == e_top + sl + sr;
}

std::string HProfile::to_string() const
{
    std::ostringstream os;
    auto list = [&os](const std::vector<int>& v) {
        os << "{";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << v[i];
        os << "}";
    };
    os << "a=" << a << " e_top=" << e_top << " e_bot=" << e_bot << " b_left=";
    list(b_left);
    os << " b_right=";
    list(b_right);
    return os.str();
}

int PolygonData::s_max(int g) const
{
    const int n = y - 1 + g;
    return n < 0 ? 0 : n / 2;
}

Point LatticeTransform::apply(Point p) const
{
    return {m[0] * p.x + m[1] * p.y + t.x, m[2] * p.x + m[3] * p.y + t.y};
}

namespace {

struct EdgeNormal {
    std::int64_t nx, ny, length;
};

std::vector<EdgeNormal> edge_normals(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    std::vector<EdgeNormal> out;
    if (v.size() < 2)
        return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        const std::int64_t len = lattice_length(a, b);
        const std::int64_t dx = (b.x - a.x) / len;
        const std::int64_t dy = (b.y - a.y) / len;
        out.push_back({dy, -dx, len});
    }
    return out;
}

} // namespace

bool is_h_transverse(const LatticePolygon& p)
{
    for (const auto& e : edge_normals(p)) {
        const bool horizontal = e.nx == 0 && (e.ny == 1 || e.ny == -1);
        const bool side = e.nx == 1 || e.nx == -1;
        if (!horizontal && !side)
            return false;
    }
    return true;
}

HProfile profile(const LatticePolygon& p)
{
    if (!is_h_transverse(p))
        throw PolygonError("polygon is not h-transverse: " + p.to_string());
    HProfile h;
    const auto& v = p.vertices();
    auto [lo, hi] = std::minmax_element(v.begin(), v.end(),
                                        [](Point a, Point b) { return a.y < b.y; });
    h.a = static_cast<int>(hi->y - lo->y);
    for (const auto& e : edge_normals(p)) {
        const int len = static_cast<int>(e.length);
        if (e.nx == 0) {
            (e.ny < 0 ? h.e_bot : h.e_top) += len;
            continue;
        }
        auto& side = e.nx > 0 ? h.b_right : h.b_left;
        side.insert(side.end(), len, static_cast<int>(e.ny));
    }
    std::sort(h.b_left.begin(), h.b_left.end());
    std::sort(h.b_right.begin(), h.b_right.end());
    return h;
}

LatticePolygon polygon_from_profile(const HProfile& h)
{
    if (!h.closed())
        throw PolygonError("profile violates horizontal closure: " + h.to_string());

    std::vector<Point> path;
    Point cur{0, 0};
    path.push_back(cur);
    cur.x += h.e_bot;
    path.push_back(cur);

    std::map<int, int> right, left;
    for (int k : h.b_right)
        ++right[k];
    for (int k : h.b_left)
        ++left[k];

    for (const auto& [k, j] : right) { // increasing k, bottom to top
        cur.x -= static_cast<std::int64_t>(k) * j;
        cur.y += j;
        path.push_back(cur);
    }
    cur.x -= h.e_top;
    path.push_back(cur);
    for (auto it = left.rbegin(); it != left.rend(); ++it) { // decreasing k, top to bottom
        cur.x -= static_cast<std::int64_t>(it->first) * it->second;
        cur.y -= it->second;
        path.push_back(cur);
    }
    if (cur != Point{0, 0})
        throw PolygonError("profile does not close up");

    LatticePolygon poly = from_path(path);
    if (poly.degenerate())
        return poly;
    // Side chains that fold back produce a non-convex path, caught above; a
    // realizable profile must also round-trip exactly.
    if (profile(poly) != h)
        throw PolygonError("profile does not realize a convex polygon: " + h.to_string());
    return poly;
}

// ------------------------------------------------------------- lattice data

std::int64_t twice_area(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    if (v.size() < 3)
        return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        s = checked::add(s, checked::sub(checked::mul(a.x, b.y), checked::mul(b.x, a.y)));
    }
    return s;
}

std::int64_t boundary_points(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    if (v.size() < 2)
        return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += lattice_length(v[i], v[(i + 1) % v.size()]);
    return s;
}

std::int64_t interior_points(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    if (v.size() < 3)
        return 0;
    auto [xlo, xhi] = std::minmax_element(v.begin(), v.end(),
                                          [](Point a, Point b) { return a.x < b.x; });
    auto [ylo, yhi] = std::minmax_element(v.begin(), v.end(),
                                          [](Point a, Point b) { return a.y < b.y; });
    // The direct count walks the bounding box; refuse boxes far beyond desk scale.
    constexpr std::int64_t max_box = 100'000'000;
    const std::int64_t w = checked::sub(xhi->x, xlo->x);
    const std::int64_t h = checked::sub(yhi->y, ylo->y);
    if (w > 0 && h > max_box / w)
        throw PolygonError("polygon too large for the interior point count");
    std::int64_t count = 0;
    for (std::int64_t y = ylo->y + 1; y < yhi->y; ++y) {
        for (std::int64_t x = xlo->x + 1; x < xhi->x; ++x) {
            bool inside = true;
            for (std::size_t i = 0; i < v.size() && inside; ++i)
                inside = cross(v[i], v[(i + 1) % v.size()], {x, y}) > 0;
            count += inside;
        }
    }
    return count;
}

PolygonData polygon_data(const LatticePolygon& p)
{
    PolygonData d;
    const auto& v = p.vertices();
    auto [lo, hi] = std::minmax_element(v.begin(), v.end(),
                                        [](Point a, Point b) { return a.y < b.y; });
    d.a = static_cast<int>(hi->y - lo->y);
    for (const auto& e : edge_normals(p)) {
        if (e.nx == 0 && e.ny == -1)
            d.e_bot += static_cast<int>(e.length);
        else if (e.nx == 0 && e.ny == 1)
            d.e_top += static_cast<int>(e.length);
    }
    d.chi = static_cast<int>(v.size());
    d.y = static_cast<int>(boundary_points(p));
    if (p.degenerate()) {
        d.g_max = 0;
        return d;
    }
    const std::int64_t direct = interior_points(p);
    const std::int64_t pick = (twice_area(p) - d.y + 2) / 2;
    if (direct != pick)
        throw std::logic_error("interior point count disagrees with Pick's formula");
    d.g_max = static_cast<int>(direct);
    return d;
}

LatticePolygon trapezoid(int n, int a, int b)
{
    if (a < 0 || b < 0 || n < 0)
        throw PolygonError("trapezoid parameters must be nonnegative");
    if (a == 0 && b == 0)
        throw PolygonError("trapezoid with a = b = 0 is empty");
    const std::int64_t bottom = static_cast<std::int64_t>(b) + static_cast<std::int64_t>(n) * a;
    return from_path({{0, 0}, {bottom, 0}, {b, a}, {0, a}});
}

LatticePolygon apply_transform(const LatticePolygon& p, const LatticeTransform& t)
{
    const std::int64_t det = t.det();
    if (det != 1 && det != -1)
        throw PolygonError("transform is not unimodular (det = " + std::to_string(det) + ")");
    std::vector<Point> image;
    for (const Point& v : p.vertices())
        image.push_back(t.apply(v));
    if (image.size() == 1)
        return LatticePolygon::point(image[0]);
    if (image.size() == 2)
        return LatticePolygon::segment(image[0], image[1]);
    return LatticePolygon::from_vertices(image);
}

HProfile cut_top_corner(const HProfile& h)
{
    if (h.e_top != 0 || h.a < 2 || h.b_left.empty())
        throw PolygonError("corner cut needs a top vertex and height >= 2");
    const int kl = h.b_left.back();
    const int kr = h.b_right.back();
    if (kl + kr != 1)
        throw PolygonError("top corner is not unimodular");
    const auto nl = std::count(h.b_left.begin(), h.b_left.end(), kl);
    const auto nr = std::count(h.b_right.begin(), h.b_right.end(), kr);
    if (nl < 2 || nr < 2)
        throw PolygonError("top corner sides are shorter than 2");
    HProfile cut = h;
    cut.a -= 2;
    cut.e_top = 2;
    cut.b_left.resize(cut.b_left.size() - 2);
    cut.b_right.resize(cut.b_right.size() - 2);
    return cut;
}

} // namespace floorgs
