#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace pokerrt {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double norm_sq(Vec2 v) { return v.x * v.x + v.y * v.y; }

/// Rotate v by angle (radians, counter-clockwise).
inline Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Normalize an angle to the half-open interval (-pi, pi].
double wrap_angle(double theta);

/// Planar pose (x, y, theta), theta in (-pi, pi].
struct Pose2 {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    Vec2 position() const { return {x, y}; }
    Pose2 normalized() const { return {x, y, wrap_angle(theta)}; }
    friend bool operator==(const Pose2&, const Pose2&) = default;
};

/// Apply a pose to a point given in the pose's local frame.
inline Vec2 transform_point(Vec2 p, const Pose2& pose) {
    Vec2 r = rotate(p, pose.theta);
    return {r.x + pose.x, r.y + pose.y};
}

/// Strictly convex polygon, vertices counter-clockwise, local frame with
/// the uniform-density centroid at the origin.
class ConvexPolygon {
public:
    /// Validates and constructs. Throws std::invalid_argument when the
    /// vertex list is not a strictly convex CCW polygon with its centroid
    /// at the origin (within 1e-9 m).
    static ConvexPolygon create(std::vector<Vec2> vertices);

    /// Translates the vertices into the centroid frame, then validates.
    static ConvexPolygon centered(std::vector<Vec2> vertices);

    /// Axis-aligned box of the given side lengths, centered at the origin,
    /// vertex 0 at (+w/2, -h/2).
    static ConvexPolygon box(double width, double height);

    /// Regular n-gon of the given circumradius, vertex 0 at angle `phase`.
    static ConvexPolygon regular(int n, double radius, double phase = 0.0);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    double area() const { return area_; }
    double perimeter() const { return perimeter_; }
    /// Largest vertex distance from the centroid.
    double circumradius() const { return circumradius_; }
    /// Second moment of area about the centroid divided by the area
    /// (the squared radius of gyration for a uniform-density plate).
    double gyration_radius_sq() const { return gyration_sq_; }
    /// Minimum width over all directions (min over edge-normal projections).
    double min_width() const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    ConvexPolygon() = default;

    std::vector<Vec2> vertices_;
    double area_ = 0.0;
    double perimeter_ = 0.0;
    double circumradius_ = 0.0;
    double gyration_sq_ = 0.0;
};

/// Area centroid of a simple polygon given by its vertex loop.
Vec2 polygon_centroid(std::span<const Vec2> vertices);
double polygon_area(std::span<const Vec2> vertices);

/// Vertices of `poly` expressed in the world frame of `pose`.
std::vector<Vec2> transform_polygon(const ConvexPolygon& poly, const Pose2& pose);

/// Closed-set intersection test for two convex polygons in the world frame
/// (shared boundary counts as intersecting). Separating-axis test over the
/// edge normals of both polygons.
bool polygons_intersect(std::span<const Vec2> a, std::span<const Vec2> b);

/// Planar region: disc, annulus, or axis-aligned rectangle.
struct Region {
    enum class Kind { disc, annulus, rectangle };

    Kind kind = Kind::disc;
    Vec2 center{};             // disc / annulus
    double radius = 0.0;       // disc
    double r_min = 0.0;        // annulus
    double r_max = 0.0;        // annulus
    Vec2 min{};                // rectangle
    Vec2 max{};                // rectangle

    static Region disc(Vec2 center, double radius);
    static Region annulus(Vec2 center, double r_min, double r_max);
    static Region rectangle(Vec2 min, Vec2 max);

    friend bool operator==(const Region&, const Region&) = default;
};

/// Closed-set containment.
bool point_in_region(Vec2 p, const Region& r);

/// Containment in the region grown outward by `margin` (used for the
/// push-baseline reach invariant).
bool point_in_region_dilated(Vec2 p, const Region& r, double margin);

/// True iff every vertex lies inside the rectangle region (equivalent to
/// polygon containment, the polygon being convex).
bool polygon_in_rectangle(std::span<const Vec2> world_vertices, const Region& rect);

/// Weighted SE(2) distance: sqrt(dx^2+dy^2) + w_theta * |wrap(dtheta)|.
double se2_distance(const Pose2& a, const Pose2& b, double w_theta);

}  // namespace pokerrt
