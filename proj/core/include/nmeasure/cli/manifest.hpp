#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nmeasure/train/trainer.hpp"

namespace nmeasure {

struct ArtifactEntry {
    /// Path relative to the run directory, '/'-separated.
    std::string path;
    std::string sha256;
    std::uintmax_t bytes = 0;
};

/// Provenance of a run directory, stored as manifest.json.
struct RunManifest {
    std::string version;
    std::string config;  // canonical configuration text
    TrainSeeds seeds;
    std::string created_at;  // ISO-8601 UTC
    std::string updated_at;
    /// Every file of the run directory except manifest.json, sorted by path.
    std::vector<ArtifactEntry> artifacts;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

inline constexpr const char* kManifestFile = "manifest.json";

/// Hashes every regular file below run_dir (manifest.json excluded).
std::vector<ArtifactEntry> scan_artifacts(const std::filesystem::path& run_dir);

void write_manifest(const std::filesystem::path& run_dir, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& run_dir);

/// Re-scans the artifacts and stamps updated_at; created_at is kept.
void refresh_manifest(const std::filesystem::path& run_dir);

/// Differences between the manifest and the directory: changed checksums,
/// missing files and unlisted files. Empty when the manifest verifies.
std::vector<std::string> verify_manifest(const std::filesystem::path& run_dir);

}  // namespace nmeasure
