#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace scatgen {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const { double n = norm(); return {x / n, y / n, z / n}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

enum class BoxKind { building, vehicle, tree };

// Yaw-rotated box: center + half extents, rotated about the world z axis.
struct Box {
    Vec3 center;
    Vec3 half_extents;
    double yaw = 0.0;  // radians, in [-pi, pi)
    BoxKind kind = BoxKind::building;

    bool valid() const {
        return half_extents.x > 0 && half_extents.y > 0 && half_extents.z > 0 &&
               yaw >= -M_PI && yaw < M_PI;
    }

    // World -> local (inverse yaw about center)
    Vec3 to_local(const Vec3& p) const {
        const double c = std::cos(yaw), s = std::sin(yaw);
        const Vec3 d = p - center;
        return {c * d.x + s * d.y, -s * d.x + c * d.y, d.z};
    }
    Vec3 to_world(const Vec3& p) const {
        const double c = std::cos(yaw), s = std::sin(yaw);
        return {center.x + c * p.x - s * p.y, center.y + s * p.x + c * p.y, center.z + p.z};
    }
    // Rotation only (for directions / normals)
    Vec3 dir_to_local(const Vec3& d) const {
        const double c = std::cos(yaw), s = std::sin(yaw);
        return {c * d.x + s * d.y, -s * d.x + c * d.y, d.z};
    }
    Vec3 dir_to_world(const Vec3& d) const {
        const double c = std::cos(yaw), s = std::sin(yaw);
        return {c * d.x - s * d.y, s * d.x + c * d.y, d.z};
    }

    bool contains(const Vec3& p) const {
        const Vec3 l = to_local(p);
        return std::abs(l.x) <= half_extents.x && std::abs(l.y) <= half_extents.y &&
               std::abs(l.z) <= half_extents.z;
    }
};

struct Ray {
    Vec3 origin;
    Vec3 dir;  // unit length
};

struct RayHit {
    double t = 0.0;   // distance along the ray
    Vec3 point;
    Vec3 normal;      // outward surface normal at the hit
};

// Slab test against the yaw-rotated box. Returns the nearest hit with t > 0.
std::optional<RayHit> intersect_ray_box(const Ray& ray, const Box& box);

// Ground plane z = 0 (normal +z). Only rays heading downward can hit.
std::optional<RayHit> intersect_ray_ground(const Ray& ray);

// One rectangular face of a box, in world coordinates.
struct Face {
    Vec3 origin;   // face center
    Vec3 normal;   // outward unit normal
    Vec3 u_axis;   // in-plane unit axes
    Vec3 v_axis;
    double u_half = 0.0;
    double v_half = 0.0;

    bool contains(const Vec3& p, double tol = 1e-9) const {
        const Vec3 d = p - origin;
        return std::abs(d.dot(u_axis)) <= u_half + tol && std::abs(d.dot(v_axis)) <= v_half + tol;
    }
};

// The six faces of a box in a fixed order (+x, -x, +y, -y, +z, -z in local frame).
std::array<Face, 6> box_faces(const Box& box);

// Mirror image of a point across the plane of a face.
inline Vec3 mirror_across_plane(const Vec3& p, const Face& f) {
    const double d = (p - f.origin).dot(f.normal);
    return p - 2.0 * d * f.normal;
}

// True when the open segment (a, b) intersects any box, ignoring hits within
// `end_margin` meters of either endpoint.
bool segment_occluded(const Vec3& a, const Vec3& b, const std::vector<Box>& boxes,
                      double end_margin = 1e-4);

}  // namespace scatgen
