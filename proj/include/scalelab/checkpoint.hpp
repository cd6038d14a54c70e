#pragma once

#include <string>

#include "scalelab/grid.hpp"

namespace scalelab {

// Checkpoint layout:
//   line 1  "scalelab-checkpoint 1"
//   line 2  JSON header {"version","dim","size","components","t","eta","core","config_hash"}
//   then    components * points little-endian IEEE-754 doubles, component-major, points
//           ordered with axis 0 fastest.

inline constexpr int kCheckpointVersion = 1;

struct Checkpoint {
  Field field;
  std::string core;
  std::string config_hash;
};

void write_checkpoint(const std::string& path, const Field& field, const std::string& core,
                      const std::string& config_hash);
/// Throws IoError for unreadable or malformed files.
Checkpoint read_checkpoint(const std::string& path);

}  // namespace scalelab
