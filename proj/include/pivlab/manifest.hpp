#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pivlab/serialize.hpp"

namespace pivlab {

// Reproducibility record attached to every CLI report.  The timestamp can
// be pinned with an explicit override so that identical invocations are
// bit-identical.
struct RunManifest {
    std::string command_line;
    std::string config_hash;
    unsigned precision_bits = 256;
    uint64_t seed = 0;
    std::string version;
    std::string timestamp;
};

uint64_t fnv1a64(std::string_view data);

RunManifest make_manifest(const std::vector<std::string>& args, const Json& config,
                          unsigned precision_bits, uint64_t seed,
                          const std::string& timestamp_override = "");

Json to_json(const RunManifest& manifest);

// {"manifest": ..., "<key>": <payload>}
Json report_envelope(const RunManifest& manifest, const std::string& key, Json payload);

}  // namespace pivlab
