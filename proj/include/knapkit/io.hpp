#ifndef KNAPKIT_IO_HPP
#define KNAPKIT_IO_HPP

#include <optional>
#include <string>

#include "knapkit/instances.hpp"

namespace knapkit {

// Instance file contents: the instance plus an optional decision threshold.
struct InstanceFile {
  AnyInstance instance;
  std::optional<Value> threshold;
};

// Canonical JSON document:
//   {"type": "kp"|"dkp"|"mkp", "profits": [...], "sizes": ...,
//    "capacities": c | [...], "threshold": k}
// kp/mkp sizes are a flat list; dkp sizes are d rows of n entries (a flat
// row-major list of d*n entries is accepted too). Throws ArgumentError.
InstanceFile parse_instance(const std::string& text);
InstanceFile read_instance_file(const std::string& path);

std::string format_instance(const AnyInstance& instance,
                            std::optional<Value> threshold = std::nullopt);

}  // namespace knapkit

#endif  // KNAPKIT_IO_HPP
