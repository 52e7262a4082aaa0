#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scatgen/geometry.hpp"

namespace scatgen {

enum class SceneTemplate { crossroad, forking_road, wide_lane };
enum class Vtd { high, low };

std::string to_string(SceneTemplate t);
std::string to_string(Vtd v);
SceneTemplate scene_template_from_string(const std::string& s);
Vtd vtd_from_string(const std::string& s);

// Vehicle counts fixed per (template, VTD): crossroad 20/12, forking road 15/8.
// Wide lane is configurable; these are the documented defaults.
int default_vehicle_count(SceneTemplate t, Vtd v);

struct SceneConfig {
    SceneTemplate scene_template = SceneTemplate::crossroad;
    Vtd vtd = Vtd::high;
    int vehicle_count = 0;  // 0 = template default
    std::vector<Box> building_boxes;  // non-empty overrides the procedural layout
    int snapshot_count = 600;
    std::uint64_t seed = 1;
    bool allow_vehicle_count_override = false;
    double snapshot_dt = 0.1;       // seconds, 10 Hz scan alignment
    double antenna_height = 1.6;    // sensor/antenna mount height above ground

    void validate() const;  // throws std::invalid_argument
};

// Straight-line track: the vehicle departs from `start` along `dir` at `speed`
// and clamps at `travel_length`. Every vehicle gets its own lane so tracks
// never intersect; crossing traffic stops short of the intersection.
struct Track {
    Vec3 start;
    Vec3 dir;  // unit, z = 0
    double speed = 0.0;
    double travel_length = 0.0;

    Vec3 position(double t) const {
        const double s = std::min(speed * t, travel_length);
        return start + dir * s;
    }
    double yaw() const { return std::atan2(dir.y, dir.x); }
};

struct Scene {
    SceneConfig config;
    std::vector<Box> static_boxes;       // buildings and trees
    std::vector<Track> tracks;           // one per vehicle
    Vec3 vehicle_half_extents{2.25, 0.9, 0.75};
    int tx_vehicle = 0;
    int rx_vehicle = 1;
};

struct Pose {
    Vec3 position;  // vehicle center at ground level + half height
    double yaw = 0.0;
};

struct Snapshot {
    int index = 0;
    double time = 0.0;
    std::vector<Pose> vehicle_poses;
    Vec3 tx_pose;  // antenna/sensor mount of the Tx vehicle
    Vec3 rx_pose;
};

Scene build_scene(const SceneConfig& config);
Snapshot step_scene(const Scene& scene, int index);

// World-space boxes for one snapshot: static geometry plus vehicle bodies.
std::vector<Box> snapshot_boxes(const Scene& scene, const Snapshot& snap);

// Vehicle body box at a pose.
Box vehicle_box(const Scene& scene, const Pose& pose);

// Antenna/sensor mount point for a vehicle at a pose.
Vec3 mount_point(const Scene& scene, const Pose& pose);

}  // namespace scatgen
