#pragma once

#include <cstdint>
#include <vector>

#include "scatgen/geometry.hpp"
#include "scatgen/scene.hpp"

namespace scatgen {

// Raw sensing-side point set, world frame. May be empty.
struct PointCloud {
    std::vector<Vec3> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

struct LidarConfig {
    int channels = 16;
    double vertical_fov_min_deg = -15.0;
    double vertical_fov_max_deg = 15.0;
    double azimuth_step_deg = 0.4;  // must divide 360 evenly
    double max_range = 120.0;
    double scan_rate_hz = 10.0;
    double range_noise_sigma = 0.0;  // meters; 0 = exact surfaces

    void validate() const;  // throws std::invalid_argument
};

// Casts one ray per (channel, azimuth bin) from `mount` with the sensor frame
// yawed by `mount_yaw`. First hit against ground plane and all boxes wins;
// misses and beyond-range hits are omitted. Boxes whose index appears in
// `exclude_boxes` are skipped (used for the ego vehicle body).
PointCloud simulate_lidar(const Vec3& mount, double mount_yaw, const std::vector<Box>& boxes,
                          const LidarConfig& cfg, std::uint64_t seed,
                          const std::vector<int>& exclude_boxes = {});

}  // namespace scatgen
