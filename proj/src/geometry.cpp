#include "scatgen/geometry.hpp"

#include <algorithm>
#include <limits>

namespace scatgen {

std::optional<RayHit> intersect_ray_box(const Ray& ray, const Box& box) {
    const Vec3 o = box.to_local(ray.origin);
    const Vec3 d = box.dir_to_local(ray.dir);

    double t_near = 0.0;
    double t_far = std::numeric_limits<double>::infinity();
    int near_axis = -1;
    int near_sign = 0;

    const double oc[3] = {o.x, o.y, o.z};
    const double dc[3] = {d.x, d.y, d.z};
    const double hc[3] = {box.half_extents.x, box.half_extents.y, box.half_extents.z};

    for (int a = 0; a < 3; ++a) {
        if (std::abs(dc[a]) < 1e-15) {
            if (std::abs(oc[a]) > hc[a]) return std::nullopt;
            continue;
        }
        double t1 = (-hc[a] - oc[a]) / dc[a];
        double t2 = (hc[a] - oc[a]) / dc[a];
        int sign = t1 < t2 ? -1 : 1;  // which slab plane is entered first
        if (t1 > t2) std::swap(t1, t2);
        if (t1 > t_near) {
            t_near = t1;
            near_axis = a;
            near_sign = sign;
        }
        t_far = std::min(t_far, t2);
        if (t_near > t_far) return std::nullopt;
    }

    // Origin inside the box (or entry behind the origin): report the exit so
    // callers can still detect containment, but with the interior normal.
    double t = t_near;
    if (near_axis < 0 || t <= 0.0) return std::nullopt;

    RayHit hit;
    hit.t = t;
    hit.point = ray.origin + ray.dir * t;
    Vec3 n_local{0, 0, 0};
    if (near_axis == 0) n_local.x = near_sign;
    if (near_axis == 1) n_local.y = near_sign;
    if (near_axis == 2) n_local.z = near_sign;
    hit.normal = box.dir_to_world(n_local);
    return hit;
}

std::optional<RayHit> intersect_ray_ground(const Ray& ray) {
    if (ray.dir.z >= -1e-15 || ray.origin.z <= 0.0) return std::nullopt;
    const double t = -ray.origin.z / ray.dir.z;
    if (t <= 0.0) return std::nullopt;
    RayHit hit;
    hit.t = t;
    hit.point = ray.origin + ray.dir * t;
    hit.point.z = 0.0;
    hit.normal = {0, 0, 1};
    return hit;
}

std::array<Face, 6> box_faces(const Box& box) {
    std::array<Face, 6> faces;
    const Vec3 ex = box.dir_to_world({1, 0, 0});
    const Vec3 ey = box.dir_to_world({0, 1, 0});
    const Vec3 ez{0, 0, 1};
    const Vec3 h = box.half_extents;

    auto make = [&](const Vec3& n, const Vec3& u, const Vec3& v, double offset, double uh,
                    double vh) {
        Face f;
        f.origin = box.center + n * offset;
        f.normal = n;
        f.u_axis = u;
        f.v_axis = v;
        f.u_half = uh;
        f.v_half = vh;
        return f;
    };

    faces[0] = make(ex, ey, ez, h.x, h.y, h.z);
    faces[1] = make(ex * -1.0, ey, ez, h.x, h.y, h.z);
    faces[2] = make(ey, ex, ez, h.y, h.x, h.z);
    faces[3] = make(ey * -1.0, ex, ez, h.y, h.x, h.z);
    faces[4] = make(ez, ex, ey, h.z, h.x, h.y);
    faces[5] = make(ez * -1.0, ex, ey, h.z, h.x, h.y);
    return faces;
}

bool segment_occluded(const Vec3& a, const Vec3& b, const std::vector<Box>& boxes,
                      double end_margin) {
    const Vec3 d = b - a;
    const double len = d.norm();
    if (len <= 2.0 * end_margin) return false;
    const Ray ray{a, d / len};
    for (const Box& box : boxes) {
        auto hit = intersect_ray_box(ray, box);
        if (hit && hit->t > end_margin && hit->t < len - end_margin) return true;
    }
    return false;
}

}  // namespace scatgen
