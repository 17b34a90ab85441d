#include "dt4/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dt4/json_io.hpp"

namespace dt4 {

std::optional<json> Cache::lookup(const std::string& key,
                                  const std::string& version) const {
    std::ifstream is(path_);
    if (!is) return std::nullopt;
    std::string line;
    std::optional<json> found;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("key") ||
            !j.contains("engine_version") || !j.contains("payload")) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << " in "
                      << path_ << "\n";
            continue;
        }
        if (j["key"] == key && j["engine_version"] == version)
            found = j["payload"];
    }
    return found;
}

void Cache::store(const std::string& key, const std::string& version,
                  const json& payload) const {
    std::ofstream os(path_, std::ios::app);
    if (!os) throw Error("cannot open cache file " + path_);
    json line{{"key", key}, {"engine_version", version}, {"payload", payload}};
    os << line.dump() << '\n';
    os.flush();
}

std::optional<Cache> cache_from_env() {
    const char* path = std::getenv("DT4_CACHE");
    if (!path || !*path) return std::nullopt;
    return Cache(path);
}

json weight_payload(const std::string& key) {
    DPartition pi = partition_from_key(key);
    auto w = vertex_weight(pi);
    auto omega = omega_from_dt4(pi);
    return json{{"w", factored_to_json(w)},
                {"omega", rat_to_string(omega.omega)},
                {"omega_c", rat_to_string(omega_c(pi))},
                {"sign", omega.sign_flip}};
}

json cache_roundtrip(const Cache& cache, const std::string& key) {
    if (auto hit = cache.lookup(key, kEngineVersion)) return *hit;
    json payload = weight_payload(key);
    cache.store(key, kEngineVersion, payload);
    return payload;
}

}  // namespace dt4
