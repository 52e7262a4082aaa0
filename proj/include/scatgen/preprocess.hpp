#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "scatgen/geometry.hpp"
#include "scatgen/lidar.hpp"

namespace scatgen {

// Visibility region: the ellipsoid with Tx and Rx at its foci. With the minor
// axis and the focal length both equal to the transceiver distance D_T, the
// major axis is sqrt(2) * D_T (from a^2 = b^2 + c^2 on the half axes).
struct VRParams {
    Vec3 tx;
    Vec3 rx;
    double major_axis_2a = 0.0;
    double minor_axis_2b = 0.0;
    double focal_2c = 0.0;
};

// Throws std::invalid_argument when the transceivers are co-located.
VRParams make_vr_params(const Vec3& tx, const Vec3& rx);

// Multiset union, tx points first. No deduplication.
PointCloud concat_clouds(const PointCloud& pc_tx, const PointCloud& pc_rx);

// Keeps exactly the points with z >= ground threshold.
PointCloud remove_ground(const PointCloud& pc, double ground_threshold);

// Keeps point P iff |P - tx| + |P - rx| <= major axis (3-D focal-sum test).
PointCloud vr_filter(const PointCloud& pc, const VRParams& vr);

struct GridBounds {
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
};

// Three-channel grid over the cloud's xy extent:
//   channel 0: point density per m^2
//   channel 1: max point height per cell (0 when empty)
//   channel 2: mean of the distances from the cell center to Tx and Rx
// Cells are half-open [lo, hi); points on the global max edge fall in the
// last cell. Stored row-major, row = x index, column = y index.
struct FeatureGrid {
    int m_x = 0, m_y = 0;
    GridBounds bounds;
    double cell_x = 0.0, cell_y = 0.0;
    std::vector<double> density;
    std::vector<double> max_height;
    std::vector<double> mean_distance;

    double& at(std::vector<double>& plane, int ix, int iy) { return plane[ix * m_y + iy]; }
    double at(const std::vector<double>& plane, int ix, int iy) const {
        return plane[ix * m_y + iy];
    }
    double cell_area() const { return cell_x * cell_y; }
};

struct DegenerateBoundsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// `planar_distances` switches channel 2 to 2-D (xy only) distances.
FeatureGrid extract_features(const PointCloud& pc, const Vec3& tx, const Vec3& rx, int m_x,
                             int m_y, bool planar_distances = false);

struct ScattererGrid {
    int n_x = 0, n_y = 0;
    GridBounds bounds;
    double cell_x = 0.0, cell_y = 0.0;
    std::vector<double> density;  // scatterers per m^2, row-major like FeatureGrid

    double& at(int ix, int iy) { return density[ix * n_y + iy]; }
    double at(int ix, int iy) const { return density[ix * n_y + iy]; }
    double cell_area() const { return cell_x * cell_y; }
};

struct ScattererGridResult {
    ScattererGrid grid;
    int dropped_outside = 0;  // scatterers outside the grid bounds
};

ScattererGridResult scatterer_grid(const std::vector<Vec3>& scatterers, const GridBounds& bounds,
                                   int n_x, int n_y);

// Shared cell-assignment rule (half-open intervals, max edge closed).
// Returns -1 when the value is outside [lo, hi].
int cell_index(double value, double lo, double hi, int n_cells);

}  // namespace scatgen
