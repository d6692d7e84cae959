#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace spc {

using Vec3 = std::array<double, 3>;

/// Label value meaning "not supervised"; never a valid class id.
inline constexpr uint32_t kIgnoreLabel = 0xFFFFFFFFu;

/// Columnar point-cloud store. Optional columns (labels, frame_index) are
/// empty when absent. All present columns share length N.
struct PointCloud {
  std::vector<Vec3> coords;
  std::vector<double> features;  // row-major N x feature_dim
  std::size_t feature_dim = 0;
  std::vector<uint32_t> labels;      // empty or length N
  std::vector<uint8_t> frame_index;  // empty or length N

  std::size_t size() const { return coords.size(); }
  bool has_labels() const { return !labels.empty(); }
  bool has_frame_index() const { return !frame_index.empty(); }
};

/// Checks column lengths and coordinate finiteness; with num_classes > 0
/// also checks that every label is < num_classes or the ignore sentinel.
/// Throws LengthMismatch / NonFinite / ClassOutOfRange.
void validate(const PointCloud& cloud, uint32_t num_classes = 0);

}  // namespace spc
