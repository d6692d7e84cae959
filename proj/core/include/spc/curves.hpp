#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spc/grid.hpp"

namespace spc {

enum class SerializationPattern { Z, ZTrans, Hilbert, HilbertTrans };

const char* pattern_name(SerializationPattern pattern);

/// Morton code with x in the lowest interleave slot:
/// bit i of x -> code bit 3i, of y -> 3i+1, of z -> 3i+2.
uint64_t z_encode(const GridCoord& g, int depth);
GridCoord z_decode(uint64_t code, int depth);

/// Hilbert index via Skilling's transpose transform. Consecutive codes map
/// to cells at Manhattan distance exactly 1, and decode inverts encode.
uint64_t hilbert_encode(const GridCoord& g, int depth);
GridCoord hilbert_decode(uint64_t code, int depth);

/// The transposed patterns reuse the base curves after swapping x and y.
GridCoord apply_trans(const GridCoord& g);

uint64_t curve_encode(const GridCoord& g, int depth, SerializationPattern pattern);

/// Packs one 64-bit sort key per point: (batch_id << 3*depth) | curve code.
/// Throws BatchOverflow when batch_id needs more than 63 - 3*depth bits.
std::vector<uint64_t> serialize(std::span<const GridCoord> cells, int depth,
                                SerializationPattern pattern, uint64_t batch_id = 0);

/// Stable argsort of the packed codes; equal codes keep input order.
std::vector<uint32_t> serialization_order(std::span<const uint64_t> codes);

/// Mean Euclidean distance between consecutive points of the given order.
double locality_score(std::span<const Vec3> coords, std::span<const uint32_t> order);

}  // namespace spc
