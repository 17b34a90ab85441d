#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace dt4 {

using json = nlohmann::json;

// Append-only JSON-lines result cache keyed by canonical partition key
// and engine version. Entries are immutable; corrupt lines are skipped
// with a warning. Concurrent writers may duplicate keys, but idempotent
// payloads keep every copy identical.
class Cache {
public:
    explicit Cache(std::string path) : path_(std::move(path)) {}

    const std::string& path() const { return path_; }

    std::optional<json> lookup(const std::string& key,
                               const std::string& version) const;
    void store(const std::string& key, const std::string& version,
               const json& payload) const;

private:
    std::string path_;
};

// From the DT4_CACHE environment variable; absent means no caching.
std::optional<Cache> cache_from_env();

// Lookup-or-compute-and-store of the per-partition payload
// {"w", "omega", "omega_c", "sign"} for the partition the key encodes.
json cache_roundtrip(const Cache& cache, const std::string& key);

// The payload computation itself (also used with caching disabled).
json weight_payload(const std::string& key);

}  // namespace dt4
