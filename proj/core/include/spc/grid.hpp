#pragma once

#include "spc/point_cloud.hpp"

namespace spc {

inline constexpr int kMinDepth = 1;
inline constexpr int kMaxDepth = 21;  // 3*21 = 63 code bits
inline constexpr int kDefaultDepth = 16;
inline constexpr double kDefaultGridSize = 0.05;

/// Cell coordinates of one point at grid depth b; each component < 2^b.
struct GridCoord {
  uint32_t x = 0;
  uint32_t y = 0;
  uint32_t z = 0;

  bool operator==(const GridCoord&) const = default;
};

struct QuantizedGrid {
  std::vector<GridCoord> cells;
  Vec3 origin{};  // per-axis coordinate minimum
  double grid_size = kDefaultGridSize;
  int depth = kDefaultDepth;
};

/// Maps coords to integer cells: floor((c - origin)/grid_size) with
/// origin = per-axis minimum. A coordinate landing exactly one cell past
/// the 2^depth extent is clamped; anything further throws GridOverflow.
QuantizedGrid quantize(const PointCloud& cloud, double grid_size, int depth = kDefaultDepth);

/// Keeps the lowest-index point of every occupied cell. Cells are anchored
/// at the coordinate origin (floor(c / grid_size)) so repeated application
/// is a fixed point.
PointCloud voxel_downsample(const PointCloud& cloud, double grid_size);

/// Axis-aligned range box, closed on both ends.
struct ClipBox {
  Vec3 min{};
  Vec3 max{};

  bool contains(const Vec3& p) const {
    return p[0] >= min[0] && p[0] <= max[0] && p[1] >= min[1] && p[1] <= max[1] &&
           p[2] >= min[2] && p[2] <= max[2];
  }
};

/// The conventional Waymo Open Dataset perception range.
inline ClipBox waymo_clip_box() { return ClipBox{{-75.2, -75.2, -4.0}, {75.2, 75.2, 2.0}}; }

/// Retains exactly the points inside the box, preserving relative order
/// and filtering every per-point column consistently.
PointCloud clip(const PointCloud& cloud, const ClipBox& box);

}  // namespace spc
