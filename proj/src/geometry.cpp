#include "tere/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tere {

namespace {

double shoelace_signed(const std::vector<Point>& pts) {
    double s = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const double d1 = cross(q1, q2, p1);
    const double d2 = cross(q1, q2, p2);
    const double d3 = cross(p1, p2, q1);
    const double d4 = cross(p1, p2, q2);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
           ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Even-odd point-in-polygon.
bool point_inside(const std::vector<Point>& poly, double x, double y) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > y) != (b.y > y)) {
            const double xi = (b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x;
            if (x < xi) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

Polygon::Polygon(std::vector<Point> pts) : points(std::move(pts)) {
    if (points.size() < 3) throw InvalidGeometry("Polygon: fewer than 3 points");
    for (const Point& p : points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidGeometry("Polygon: non-finite coordinate");
}

bool Polygon::is_convex() const {
    const std::size_t n = points.size();
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double c = cross(points[i], points[(i + 1) % n], points[(i + 2) % n]);
        if (std::abs(c) < 1e-15) continue;  // collinear triple
        const int s = c > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

bool Polygon::is_self_intersecting() const {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (they share a vertex)
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_intersect(points[i], points[(i + 1) % n], points[j], points[(j + 1) % n]))
                return true;
        }
    }
    return false;
}

Box::Box(double x0, double y0, double x1, double y1) : x_min(x0), y_min(y0), x_max(x1), y_max(y1) {
    if (x_min > x_max || y_min > y_max) throw InvalidGeometry("Box: min exceeds max");
    if (!std::isfinite(x_min) || !std::isfinite(y_min) || !std::isfinite(x_max) || !std::isfinite(y_max))
        throw InvalidGeometry("Box: non-finite coordinate");
}

double polygon_area(const Polygon& p) {
    if (p.size() < 3) throw InvalidGeometry("polygon_area: degenerate polygon");
    return std::abs(shoelace_signed(p.points));
}

Box polygon_to_box(const Polygon& p) {
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    for (const Point& pt : p.points) {
        x0 = std::min(x0, pt.x);
        y0 = std::min(y0, pt.y);
        x1 = std::max(x1, pt.x);
        y1 = std::max(y1, pt.y);
    }
    return Box(x0, y0, x1, y1);
}

double box_iou(const Box& a, const Box& b) {
    const double ix = std::max(0.0, std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min));
    const double iy = std::max(0.0, std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min));
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) return 0.0;
    return inter / uni;
}

GiouResult generalized_box_iou(const Box& a, const Box& b) {
    GiouResult r;
    const Box hull(std::min(a.x_min, b.x_min), std::min(a.y_min, b.y_min),
                   std::max(a.x_max, b.x_max), std::max(a.y_max, b.y_max));
    const double hull_area = hull.area();
    if (hull_area <= 0.0) {
        r.degenerate_hull = true;
        r.value = 0.0;
        return r;
    }
    const double ix = std::max(0.0, std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min));
    const double iy = std::max(0.0, std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min));
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    const double iou = uni > 0.0 ? inter / uni : 0.0;
    r.value = iou - (hull_area - uni) / hull_area;
    return r;
}

double convex_intersection_area(const Polygon& a, const Polygon& b) {
    // Sutherland-Hodgman: clip a against each edge of b. Requires b convex
    // with consistent winding; normalize b to counter-clockwise first.
    std::vector<Point> clip = b.points;
    if (shoelace_signed(clip) < 0.0) std::reverse(clip.begin(), clip.end());

    std::vector<Point> subject = a.points;
    const std::size_t m = clip.size();
    for (std::size_t i = 0; i < m && !subject.empty(); ++i) {
        const Point& e0 = clip[i];
        const Point& e1 = clip[(i + 1) % m];
        std::vector<Point> out;
        out.reserve(subject.size() + 2);
        const std::size_t n = subject.size();
        for (std::size_t j = 0; j < n; ++j) {
            const Point& cur = subject[j];
            const Point& nxt = subject[(j + 1) % n];
            const double dc = cross(e0, e1, cur);
            const double dn = cross(e0, e1, nxt);
            const bool cur_in = dc >= 0.0;
            const bool nxt_in = dn >= 0.0;
            if (cur_in) out.push_back(cur);
            if (cur_in != nxt_in) {
                const double t = dc / (dc - dn);
                out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
            }
        }
        subject = std::move(out);
    }
    if (subject.size() < 3) return 0.0;
    return std::abs(shoelace_signed(subject));
}

namespace {

double raster_iou(const Polygon& a, const Polygon& b, int res) {
    // Supersample over the joint bounding box; even-odd fill rule.
    Box ba = polygon_to_box(a);
    Box bb = polygon_to_box(b);
    const double x0 = std::min(ba.x_min, bb.x_min);
    const double y0 = std::min(ba.y_min, bb.y_min);
    const double x1 = std::max(ba.x_max, bb.x_max);
    const double y1 = std::max(ba.y_max, bb.y_max);
    if (x1 <= x0 || y1 <= y0) return 0.0;
    long inter = 0, uni = 0;
    for (int iy = 0; iy < res; ++iy) {
        const double y = y0 + (y1 - y0) * (iy + 0.5) / res;
        for (int ix = 0; ix < res; ++ix) {
            const double x = x0 + (x1 - x0) * (ix + 0.5) / res;
            const bool ia = point_inside(a.points, x, y);
            const bool ib = point_inside(b.points, x, y);
            inter += (ia && ib);
            uni += (ia || ib);
        }
    }
    if (uni == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

PolygonIouResult polygon_iou(const Polygon& a, const Polygon& b, int raster_resolution) {
    PolygonIouResult r;
    const double area_a = polygon_area(a);
    const double area_b = polygon_area(b);
    if (area_a <= 0.0 && area_b <= 0.0) return r;  // both degenerate -> 0 by convention

    const bool self_a = a.is_self_intersecting();
    const bool self_b = b.is_self_intersecting();
    r.self_intersecting = self_a || self_b;
    if (!r.self_intersecting && a.is_convex() && b.is_convex()) {
        const double inter = convex_intersection_area(a, b);
        const double uni = area_a + area_b - inter;
        r.value = uni > 0.0 ? inter / uni : 0.0;
        return r;
    }
    r.rasterized = true;
    r.value = raster_iou(a, b, raster_resolution);
    return r;
}

}  // namespace tere
