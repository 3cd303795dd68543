#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "ffl/cli/commands.hpp"
#include "ffl/ensemble.hpp"

namespace ffl::cli {

/// Resumable scan state: finished work units per genus, each with its
/// mergeable payload. A no-op when the path is empty.
class Checkpoint {
public:
  Checkpoint(std::string path, std::string command, const RunConfig& config);

  /// Finished units of genus g, if they were cut the same way.
  std::map<std::uint64_t, nlohmann::ordered_json> partitions(unsigned g, unsigned prefix_digits) const;
  /// Adds a unit and rewrites the file atomically.
  void record(unsigned g, unsigned prefix_digits, std::uint64_t unit, nlohmann::ordered_json payload);

private:
  void write() const;

  std::string path_;
  nlohmann::ordered_json state_;
};

nlohmann::ordered_json accumulator_to_json(const MomentAccumulator& acc);
MomentAccumulator accumulator_from_json(const nlohmann::ordered_json& j, std::uint32_t q, unsigned g);

}  // namespace ffl::cli
