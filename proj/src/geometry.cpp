#include "pokerrt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pokerrt {

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(theta + std::numbers::pi, two_pi);
    if (a <= 0.0) a += two_pi;
    return a - std::numbers::pi;
}

namespace {

void validate_polygon(const std::vector<Vec2>& v) {
    if (v.size() < 3) {
        throw std::invalid_argument("polygon needs at least 3 vertices");
    }
    for (const Vec2& p : v) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("polygon vertex not finite");
        }
    }
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i];
        const Vec2 b = v[(i + 1) % n];
        const Vec2 c = v[(i + 2) % n];
        if (a == b) {
            throw std::invalid_argument("polygon has repeated vertices");
        }
        // Strict convexity, CCW winding: every consecutive turn is a left turn.
        if (cross(b - a, c - b) <= 0.0) {
            throw std::invalid_argument(
                "polygon not strictly convex with CCW winding");
        }
    }
    const Vec2 centroid = polygon_centroid(v);
    if (std::abs(centroid.x) > 1e-9 || std::abs(centroid.y) > 1e-9) {
        throw std::invalid_argument("polygon centroid not at the local origin");
    }
}

}  // namespace

double polygon_area(std::span<const Vec2> v) {
    double twice = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i];
        const Vec2 b = v[(i + 1) % n];
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

Vec2 polygon_centroid(std::span<const Vec2> v) {
    double twice_area = 0.0;
    double cx = 0.0, cy = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i];
        const Vec2 b = v[(i + 1) % n];
        const double w = cross(a, b);
        twice_area += w;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    const double area = 0.5 * twice_area;
    return {cx / (6.0 * area), cy / (6.0 * area)};
}

ConvexPolygon ConvexPolygon::create(std::vector<Vec2> vertices) {
    validate_polygon(vertices);
    ConvexPolygon poly;
    poly.vertices_ = std::move(vertices);
    poly.area_ = polygon_area(poly.vertices_);
    const std::size_t n = poly.vertices_.size();
    double second_moment = 0.0;  // integral of (x^2 + y^2) dA, origin frame
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly.vertices_[i];
        const Vec2 b = poly.vertices_[(i + 1) % n];
        poly.perimeter_ += norm(b - a);
        poly.circumradius_ = std::max(poly.circumradius_, norm(a));
        const double w = cross(a, b);
        second_moment += w * (dot(a, a) + dot(a, b) + dot(b, b));
    }
    second_moment /= 12.0;
    poly.gyration_sq_ = second_moment / poly.area_;
    return poly;
}

ConvexPolygon ConvexPolygon::centered(std::vector<Vec2> vertices) {
    if (vertices.size() >= 3) {
        const Vec2 c = polygon_centroid(vertices);
        for (Vec2& v : vertices) v = v - c;
    }
    return create(std::move(vertices));
}

ConvexPolygon ConvexPolygon::box(double width, double height) {
    const double hw = 0.5 * width;
    const double hh = 0.5 * height;
    return create({{hw, -hh}, {hw, hh}, {-hw, hh}, {-hw, -hh}});
}

ConvexPolygon ConvexPolygon::regular(int n, double radius, double phase) {
    std::vector<Vec2> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = phase + 2.0 * std::numbers::pi * i / n;
        verts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return centered(std::move(verts));
}

double ConvexPolygon::min_width() const {
    const std::size_t n = vertices_.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 b = vertices_[(i + 1) % n];
        Vec2 edge = b - a;
        const double len = norm(edge);
        const Vec2 normal{-edge.y / len, edge.x / len};
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const Vec2& v : vertices_) {
            const double p = dot(v, normal);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        best = std::min(best, hi - lo);
    }
    return best;
}

std::vector<Vec2> transform_polygon(const ConvexPolygon& poly, const Pose2& pose) {
    std::vector<Vec2> out;
    out.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) {
        out.push_back(transform_point(v, pose));
    }
    return out;
}

namespace {

// Projects both polygons on the outward normals of `a`'s edges; reports a
// separating axis when the projections are strictly disjoint.
bool separated_by_edge_normals(std::span<const Vec2> a, std::span<const Vec2> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = a[i];
        const Vec2 q = a[(i + 1) % n];
        const Vec2 axis{q.y - p.y, p.x - q.x};  // outward for CCW winding
        double a_lo = std::numeric_limits<double>::infinity(), a_hi = -a_lo;
        for (const Vec2& v : a) {
            const double t = dot(v, axis);
            a_lo = std::min(a_lo, t);
            a_hi = std::max(a_hi, t);
        }
        double b_lo = std::numeric_limits<double>::infinity(), b_hi = -b_lo;
        for (const Vec2& v : b) {
            const double t = dot(v, axis);
            b_lo = std::min(b_lo, t);
            b_hi = std::max(b_hi, t);
        }
        if (a_hi < b_lo || b_hi < a_lo) return true;
    }
    return false;
}

}  // namespace

bool polygons_intersect(std::span<const Vec2> a, std::span<const Vec2> b) {
    return !separated_by_edge_normals(a, b) && !separated_by_edge_normals(b, a);
}

Region Region::disc(Vec2 center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("disc radius must be > 0");
    Region r;
    r.kind = Kind::disc;
    r.center = center;
    r.radius = radius;
    return r;
}

Region Region::annulus(Vec2 center, double r_min, double r_max) {
    if (!(r_min >= 0.0) || !(r_min < r_max)) {
        throw std::invalid_argument("annulus needs 0 <= r_min < r_max");
    }
    Region r;
    r.kind = Kind::annulus;
    r.center = center;
    r.r_min = r_min;
    r.r_max = r_max;
    return r;
}

Region Region::rectangle(Vec2 min, Vec2 max) {
    if (!(min.x < max.x) || !(min.y < max.y)) {
        throw std::invalid_argument("rectangle needs min < max componentwise");
    }
    Region r;
    r.kind = Kind::rectangle;
    r.min = min;
    r.max = max;
    return r;
}

bool point_in_region(Vec2 p, const Region& r) {
    switch (r.kind) {
        case Region::Kind::disc:
            return norm_sq(p - r.center) <= r.radius * r.radius;
        case Region::Kind::annulus: {
            const double d2 = norm_sq(p - r.center);
            return d2 >= r.r_min * r.r_min && d2 <= r.r_max * r.r_max;
        }
        case Region::Kind::rectangle:
            return p.x >= r.min.x && p.x <= r.max.x &&
                   p.y >= r.min.y && p.y <= r.max.y;
    }
    return false;
}

bool point_in_region_dilated(Vec2 p, const Region& r, double margin) {
    switch (r.kind) {
        case Region::Kind::disc: {
            const double rad = r.radius + margin;
            return norm_sq(p - r.center) <= rad * rad;
        }
        case Region::Kind::annulus: {
            const double d2 = norm_sq(p - r.center);
            const double lo = std::max(0.0, r.r_min - margin);
            const double hi = r.r_max + margin;
            return d2 >= lo * lo && d2 <= hi * hi;
        }
        case Region::Kind::rectangle:
            return p.x >= r.min.x - margin && p.x <= r.max.x + margin &&
                   p.y >= r.min.y - margin && p.y <= r.max.y + margin;
    }
    return false;
}

bool polygon_in_rectangle(std::span<const Vec2> world_vertices, const Region& rect) {
    for (const Vec2& v : world_vertices) {
        if (v.x < rect.min.x || v.x > rect.max.x ||
            v.y < rect.min.y || v.y > rect.max.y) {
            return false;
        }
    }
    return true;
}

double se2_distance(const Pose2& a, const Pose2& b, double w_theta) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    return std::sqrt(dx * dx + dy * dy) +
           w_theta * std::abs(wrap_angle(b.theta - a.theta));
}

}  // namespace pokerrt
