#include "pivlab/manifest.hpp"

#include <cstdio>
#include <ctime>
#include <utility>

#ifndef PIVLAB_VERSION
#define PIVLAB_VERSION "0.0.0"
#endif

namespace pivlab {

namespace {

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

RunManifest make_manifest(const std::vector<std::string>& args, const Json& config,
                          unsigned precision_bits, uint64_t seed,
                          const std::string& timestamp_override) {
    RunManifest m;
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) m.command_line += ' ';
        m.command_line += args[i];
    }
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config.dump())));
    m.config_hash = hash;
    m.precision_bits = precision_bits;
    m.seed = seed;
    m.version = PIVLAB_VERSION;
    m.timestamp = timestamp_override.empty() ? utc_timestamp() : timestamp_override;
    return m;
}

Json to_json(const RunManifest& manifest) {
    Json j;
    j["command_line"] = manifest.command_line;
    j["config_hash"] = manifest.config_hash;
    j["precision_bits"] = manifest.precision_bits;
    j["seed"] = manifest.seed;
    j["version"] = manifest.version;
    j["timestamp"] = manifest.timestamp;
    return j;
}

Json report_envelope(const RunManifest& manifest, const std::string& key, Json payload) {
    Json j;
    j["manifest"] = to_json(manifest);
    j[key] = std::move(payload);
    return j;
}

}  // namespace pivlab
