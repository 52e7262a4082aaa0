#include "scatgen/lidar.hpp"

#include <cmath>
#include <stdexcept>

#include "scatgen/rng.hpp"

namespace scatgen {

void LidarConfig::validate() const {
    if (channels < 1) throw std::invalid_argument("lidar channels must be >= 1");
    if (max_range <= 0) throw std::invalid_argument("lidar max_range must be > 0");
    if (azimuth_step_deg <= 0) throw std::invalid_argument("azimuth_step_deg must be > 0");
    const double bins = 360.0 / azimuth_step_deg;
    if (std::abs(bins - std::round(bins)) > 1e-9) {
        throw std::invalid_argument("azimuth_step_deg must evenly divide 360");
    }
    if (vertical_fov_min_deg > vertical_fov_max_deg) {
        throw std::invalid_argument("vertical FOV min > max");
    }
    if (scan_rate_hz <= 0) throw std::invalid_argument("scan_rate_hz must be > 0");
    if (range_noise_sigma < 0) throw std::invalid_argument("range_noise_sigma must be >= 0");
}

PointCloud simulate_lidar(const Vec3& mount, double mount_yaw, const std::vector<Box>& boxes,
                          const LidarConfig& cfg, std::uint64_t seed,
                          const std::vector<int>& exclude_boxes) {
    cfg.validate();
    PointCloud cloud;
    const int az_bins = static_cast<int>(std::round(360.0 / cfg.azimuth_step_deg));
    cloud.points.reserve(static_cast<std::size_t>(cfg.channels) * 64);

    std::vector<char> skip(boxes.size(), 0);
    for (int idx : exclude_boxes) {
        if (idx >= 0 && idx < static_cast<int>(boxes.size())) skip[idx] = 1;
    }

    Rng noise(mix_seed(seed, 0x11da));
    const double deg = M_PI / 180.0;

    for (int ch = 0; ch < cfg.channels; ++ch) {
        double elev = cfg.vertical_fov_min_deg;
        if (cfg.channels > 1) {
            elev += (cfg.vertical_fov_max_deg - cfg.vertical_fov_min_deg) * ch /
                    (cfg.channels - 1);
        }
        const double ce = std::cos(elev * deg), se = std::sin(elev * deg);
        for (int a = 0; a < az_bins; ++a) {
            const double az = mount_yaw + a * cfg.azimuth_step_deg * deg;
            const Ray ray{mount, {ce * std::cos(az), ce * std::sin(az), se}};

            double best_t = cfg.max_range;
            Vec3 best_point;
            bool found = false;
            if (auto g = intersect_ray_ground(ray); g && g->t <= best_t) {
                best_t = g->t;
                best_point = g->point;
                found = true;
            }
            for (std::size_t b = 0; b < boxes.size(); ++b) {
                if (skip[b]) continue;
                if (auto h = intersect_ray_box(ray, boxes[b]); h && h->t <= best_t) {
                    best_t = h->t;
                    best_point = h->point;
                    found = true;
                }
            }
            if (!found) continue;
            if (cfg.range_noise_sigma > 0.0) {
                const double r = best_t + noise.gaussian(0.0, cfg.range_noise_sigma);
                best_point = ray.origin + ray.dir * r;
            }
            cloud.points.push_back(best_point);
        }
    }
    return cloud;
}

}  // namespace scatgen
