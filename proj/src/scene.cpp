#include "scatgen/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scatgen/rng.hpp"

namespace scatgen {

std::string to_string(SceneTemplate t) {
    switch (t) {
        case SceneTemplate::crossroad: return "crossroad";
        case SceneTemplate::forking_road: return "forking_road";
        case SceneTemplate::wide_lane: return "wide_lane";
    }
    return "?";
}

std::string to_string(Vtd v) { return v == Vtd::high ? "high" : "low"; }

SceneTemplate scene_template_from_string(const std::string& s) {
    if (s == "crossroad") return SceneTemplate::crossroad;
    if (s == "forking_road") return SceneTemplate::forking_road;
    if (s == "wide_lane") return SceneTemplate::wide_lane;
    throw std::invalid_argument("unknown scene template: " + s);
}

Vtd vtd_from_string(const std::string& s) {
    if (s == "high") return Vtd::high;
    if (s == "low") return Vtd::low;
    throw std::invalid_argument("unknown vtd: " + s);
}

int default_vehicle_count(SceneTemplate t, Vtd v) {
    switch (t) {
        case SceneTemplate::crossroad: return v == Vtd::high ? 20 : 12;
        case SceneTemplate::forking_road: return v == Vtd::high ? 15 : 8;
        case SceneTemplate::wide_lane: return v == Vtd::high ? 18 : 10;
    }
    return 0;
}

void SceneConfig::validate() const {
    if (snapshot_count < 1) throw std::invalid_argument("snapshot_count must be >= 1");
    if (snapshot_dt <= 0) throw std::invalid_argument("snapshot_dt must be > 0");
    if (antenna_height <= 0) throw std::invalid_argument("antenna_height must be > 0");
    for (const Box& b : building_boxes) {
        if (!b.valid()) throw std::invalid_argument("box with non-positive extents or bad yaw");
    }
    const int expected = default_vehicle_count(scene_template, vtd);
    if (vehicle_count != 0 && vehicle_count != expected &&
        scene_template != SceneTemplate::wide_lane && !allow_vehicle_count_override) {
        throw std::invalid_argument("vehicle_count " + std::to_string(vehicle_count) +
                                    " inconsistent with template/vtd (expected " +
                                    std::to_string(expected) + "); set the override flag to force");
    }
}

namespace {

constexpr double kRoadEnd = 130.0;  // half length of every road segment

Box make_building(double cx, double cy, double hx, double hy, double height) {
    Box b;
    b.center = {cx, cy, height / 2.0};
    b.half_extents = {hx, hy, height / 2.0};
    b.yaw = 0.0;
    b.kind = BoxKind::building;
    return b;
}

Box make_tree(double cx, double cy, Rng& rng) {
    Box b;
    const double h = rng.uniform(4.0, 7.0);
    b.center = {cx, cy, h / 2.0};
    b.half_extents = {rng.uniform(0.8, 1.4), rng.uniform(0.8, 1.4), h / 2.0};
    b.yaw = 0.0;
    b.kind = BoxKind::tree;
    return b;
}

std::vector<Box> crossroad_buildings(Rng& rng) {
    std::vector<Box> boxes;
    // Dense, tall blocks in all four quadrants.
    for (int qx = -1; qx <= 1; qx += 2) {
        for (int qy = -1; qy <= 1; qy += 2) {
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    const double cx = qx * (22.0 + 26.0 * i + rng.uniform(-2.0, 2.0));
                    const double cy = qy * (22.0 + 26.0 * j + rng.uniform(-2.0, 2.0));
                    const double hx = rng.uniform(7.0, 10.0);
                    const double hy = rng.uniform(7.0, 10.0);
                    const double h = rng.uniform(10.0, 40.0);
                    boxes.push_back(make_building(cx, cy, hx, hy, h));
                }
            }
        }
    }
    return boxes;
}

std::vector<Box> forking_road_buildings(Rng& rng) {
    std::vector<Box> boxes;
    // Sparse, low suburban buildings along the main road.
    for (int side = -1; side <= 1; side += 2) {
        for (int i = 0; i < 3; ++i) {
            const double cx = -100.0 + 42.0 * i + rng.uniform(-4.0, 4.0);
            const double cy = side * (16.0 + rng.uniform(0.0, 5.0));
            const double h = rng.uniform(4.0, 10.0);
            boxes.push_back(make_building(cx, cy, rng.uniform(4.0, 7.0), rng.uniform(4.0, 7.0), h));
        }
    }
    // A few trees near the fork.
    boxes.push_back(make_tree(20.0 + rng.uniform(0, 4), -14.0, rng));
    boxes.push_back(make_tree(42.0 + rng.uniform(0, 4), 22.0, rng));
    boxes.push_back(make_tree(70.0 + rng.uniform(0, 4), -13.0, rng));
    return boxes;
}

std::vector<Box> wide_lane_buildings(Rng& rng) {
    std::vector<Box> boxes;
    for (int side = -1; side <= 1; side += 2) {
        for (int i = 0; i < 5; ++i) {
            const double cx = -100.0 + 50.0 * i + rng.uniform(-5.0, 5.0);
            const double cy = side * (21.0 + rng.uniform(0.0, 4.0));
            const double h = rng.uniform(10.0, 40.0);
            boxes.push_back(make_building(cx, cy, rng.uniform(6.0, 9.0), rng.uniform(5.0, 8.0), h));
        }
    }
    return boxes;
}

struct LaneSlot {
    Vec3 start;
    Vec3 dir;
    double travel_length;
};

// Fill the remaining vehicles into lane slots. Each vehicle gets a unique
// micro-offset so no two tracks share a line, and crossing traffic stops
// short of the intersection, so track segments never intersect.
void fill_vehicles(Scene& scene, Rng& rng, int count) {
    std::vector<LaneSlot> slots;
    const SceneTemplate t = scene.config.scene_template;

    auto along_x = [&](double lane_y, double dir_sign, double start_x) {
        LaneSlot s;
        s.start = {start_x, lane_y, 0.0};
        s.dir = {dir_sign, 0.0, 0.0};
        s.travel_length = std::max(0.0, kRoadEnd - dir_sign * start_x);
        return s;
    };

    // Crossing traffic queues before the intersection; staggered stop lines
    // keep queued vehicles from overlapping.
    auto queued_y = [&](double lane_x, double y0, double stop_y) {
        LaneSlot s;
        s.start = {lane_x, y0, 0.0};
        s.dir = {0.0, y0 < stop_y ? 1.0 : -1.0, 0.0};
        s.travel_length = std::abs(stop_y - y0);
        return s;
    };

    if (t == SceneTemplate::crossroad) {
        // Oncoming and outer lanes on the x road. Within a lane, vehicles
        // ahead get higher indices later -> listed back-to-front so the lead
        // vehicle is the fastest and gaps only grow.
        for (double x0 : {70.0, 20.0, -30.0}) slots.push_back(along_x(1.9, -1.0, x0));
        for (double x0 : {-120.0, -40.0, 30.0}) slots.push_back(along_x(-5.3, 1.0, x0));
        for (double x0 : {100.0, 45.0, -15.0}) slots.push_back(along_x(5.3, -1.0, x0));
        slots.push_back(queued_y(-1.9, -110.0, -24.0));
        slots.push_back(queued_y(-1.9, -70.0, -18.0));
        slots.push_back(queued_y(-1.9, -40.0, -12.0));
        slots.push_back(queued_y(1.9, 105.0, 24.0));
        slots.push_back(queued_y(1.9, 65.0, 18.0));
        slots.push_back(queued_y(1.9, 35.0, 12.0));
        slots.push_back(queued_y(-5.3, -95.0, -18.0));
        slots.push_back(queued_y(-5.3, -55.0, -12.0));
        slots.push_back(queued_y(5.3, 90.0, 18.0));
        slots.push_back(queued_y(5.3, 50.0, 12.0));
    } else if (t == SceneTemplate::forking_road) {
        for (double x0 : {60.0, 10.0, -45.0, -100.0}) slots.push_back(along_x(1.9, -1.0, x0));
        for (double x0 : {-125.0, -55.0, 15.0}) slots.push_back(along_x(-5.3, 1.0, x0));
        // Branch traffic enters beyond the fork so branch lanes never cross
        // the main lanes.
        const double ang = 14.0 * M_PI / 180.0;
        const Vec3 branch_dir{std::cos(ang), std::sin(ang), 0.0};
        const Vec3 branch_perp{-std::sin(ang), std::cos(ang), 0.0};
        for (int i = 0; i < 6; ++i) {
            LaneSlot s;
            const double d0 = 48.0 + 14.0 * i;
            const double lane = (i % 2 == 0) ? -1.9 : 1.9;
            s.start = branch_dir * d0 + branch_perp * lane;
            s.start.z = 0.0;
            s.dir = (i % 2 == 0) ? branch_dir : branch_dir * -1.0;
            // Inbound branch traffic queues above the fork with staggered stops.
            s.travel_length = (i % 2 == 0) ? (kRoadEnd - d0) : (d0 - (46.0 + 3.0 * i));
            slots.push_back(s);
        }
    } else {  // wide_lane
        for (double x0 : {80.0, 30.0, -25.0, -75.0}) slots.push_back(along_x(2.0, -1.0, x0));
        for (double x0 : {-120.0, -50.0, 20.0, 85.0}) slots.push_back(along_x(-6.0, 1.0, x0));
        for (double x0 : {95.0, 40.0, -20.0, -70.0}) slots.push_back(along_x(6.0, -1.0, x0));
        for (double x0 : {-110.0, -35.0, 45.0}) slots.push_back(along_x(-10.0, 1.0, x0));
        for (double x0 : {70.0, -5.0, -90.0}) slots.push_back(along_x(10.0, -1.0, x0));
    }

    for (int i = 0; i < count; ++i) {
        const LaneSlot& s = slots[i % slots.size()];
        Track tr;
        // Unique micro-offset per vehicle keeps track lines pairwise distinct.
        const double off = 0.03 * (i + 1) + rng.uniform(-0.25, 0.25);
        const Vec3 perp{-s.dir.y, s.dir.x, 0.0};
        tr.start = s.start + perp * off + s.dir * rng.uniform(-3.0, 3.0);
        tr.start.z = 0.0;
        tr.dir = s.dir;
        tr.speed = 2.5 + 0.3 * i + rng.uniform(0.0, 0.05);
        tr.travel_length = s.travel_length;
        scene.tracks.push_back(tr);
    }
}

}  // namespace

Scene build_scene(const SceneConfig& config) {
    config.validate();
    Scene scene;
    scene.config = config;

    Rng rng(mix_seed(config.seed, 0xb0c5));

    if (!config.building_boxes.empty()) {
        scene.static_boxes = config.building_boxes;
    } else {
        switch (config.scene_template) {
            case SceneTemplate::crossroad: scene.static_boxes = crossroad_buildings(rng); break;
            case SceneTemplate::forking_road:
                scene.static_boxes = forking_road_buildings(rng);
                break;
            case SceneTemplate::wide_lane: scene.static_boxes = wide_lane_buildings(rng); break;
        }
    }

    int count = config.vehicle_count != 0
                    ? config.vehicle_count
                    : default_vehicle_count(config.scene_template, config.vtd);
    count = std::max(count, 2);  // the link needs two vehicles

    // The link pair travels the same lane, receiver ahead and slightly faster,
    // so the Tx-Rx distance stays in a band that keeps the visibility region
    // over the surrounding geometry.
    const double lane_y = config.scene_template == SceneTemplate::wide_lane ? -2.0 : -1.9;
    Track tx;
    tx.start = {-95.0, lane_y, 0.0};
    tx.dir = {1.0, 0.0, 0.0};
    tx.speed = 3.5;
    tx.travel_length = kRoadEnd + 95.0;
    Track rx = tx;
    rx.start = {-65.0, lane_y - 0.012, 0.0};
    rx.speed = 3.8;
    rx.travel_length = kRoadEnd + 65.0;
    scene.tracks.push_back(tx);
    scene.tracks.push_back(rx);

    fill_vehicles(scene, rng, count - 2);
    return scene;
}

Snapshot step_scene(const Scene& scene, int index) {
    if (index < 0 || index >= scene.config.snapshot_count) {
        throw std::out_of_range("snapshot index " + std::to_string(index) + " out of range [0, " +
                                std::to_string(scene.config.snapshot_count) + ")");
    }
    Snapshot snap;
    snap.index = index;
    snap.time = index * scene.config.snapshot_dt;
    snap.vehicle_poses.reserve(scene.tracks.size());
    for (const Track& tr : scene.tracks) {
        Pose p;
        p.position = tr.position(snap.time);
        p.position.z = scene.vehicle_half_extents.z;
        p.yaw = tr.yaw();
        snap.vehicle_poses.push_back(p);
    }
    snap.tx_pose = mount_point(scene, snap.vehicle_poses[scene.tx_vehicle]);
    snap.rx_pose = mount_point(scene, snap.vehicle_poses[scene.rx_vehicle]);
    return snap;
}

Box vehicle_box(const Scene& scene, const Pose& pose) {
    Box b;
    b.center = pose.position;
    b.half_extents = scene.vehicle_half_extents;
    b.yaw = std::remainder(pose.yaw, 2.0 * M_PI);
    if (b.yaw >= M_PI) b.yaw -= 2.0 * M_PI;
    b.kind = BoxKind::vehicle;
    return b;
}

Vec3 mount_point(const Scene& scene, const Pose& pose) {
    return {pose.position.x, pose.position.y, scene.config.antenna_height};
}

std::vector<Box> snapshot_boxes(const Scene& scene, const Snapshot& snap) {
    std::vector<Box> boxes = scene.static_boxes;
    boxes.reserve(boxes.size() + snap.vehicle_poses.size());
    for (const Pose& p : snap.vehicle_poses) boxes.push_back(vehicle_box(scene, p));
    return boxes;
}

}  // namespace scatgen
