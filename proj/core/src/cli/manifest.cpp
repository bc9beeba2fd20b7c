#include "nmeasure/cli/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <ctime>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"

namespace nmeasure {

namespace fs = std::filesystem;

namespace {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) throw Error("SHA-256 unavailable");
    }
    void update(const void* data, std::size_t n) {
        if (EVP_DigestUpdate(ctx_.get(), data, n) != 1) throw Error("SHA-256 update failed");
    }
    std::string hex() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
        unsigned int len = 0;
        if (EVP_DigestFinal_ex(ctx_.get(), md.data(), &len) != 1) throw Error("SHA-256 final failed");
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (unsigned int i = 0; i < len; ++i) {
            out += digits[md[i] >> 4];
            out += digits[md[i] & 15];
        }
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    Sha256 h;
    h.update(bytes.data(), bytes.size());
    return h.hex();
}

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    Sha256 h;
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0) h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    return h.hex();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = version;
    j["config"] = config;
    j["seeds"] = {{"init", seeds.init}, {"domain", seeds.domain}, {"params", seeds.params}, {"test", seeds.test}};
    j["timestamps"] = {{"created", created_at}, {"updated", updated_at}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& a : artifacts) arr.push_back({{"path", a.path}, {"sha256", a.sha256}, {"bytes", a.bytes}});
    j["artifacts"] = arr;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    RunManifest m;
    try {
        const auto j = nlohmann::json::parse(text);
        m.version = j.at("version").get<std::string>();
        m.config = j.at("config").get<std::string>();
        const auto& s = j.at("seeds");
        m.seeds.init = s.at("init").get<std::uint64_t>();
        m.seeds.domain = s.at("domain").get<std::uint64_t>();
        m.seeds.params = s.at("params").get<std::uint64_t>();
        m.seeds.test = s.at("test").get<std::uint64_t>();
        m.created_at = j.at("timestamps").at("created").get<std::string>();
        m.updated_at = j.at("timestamps").at("updated").get<std::string>();
        for (const auto& a : j.at("artifacts")) {
            m.artifacts.push_back({a.at("path").get<std::string>(), a.at("sha256").get<std::string>(),
                                   a.at("bytes").get<std::uintmax_t>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed manifest: ") + e.what());
    }
    return m;
}

std::vector<ArtifactEntry> scan_artifacts(const fs::path& run_dir) {
    std::vector<ArtifactEntry> out;
    for (const auto& entry : fs::recursive_directory_iterator(run_dir)) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), run_dir).generic_string();
        if (rel == kManifestFile || rel.ends_with(".tmp")) continue;
        out.push_back({rel, sha256_file(entry.path()), entry.file_size()});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
    return out;
}

void write_manifest(const fs::path& run_dir, const RunManifest& manifest) {
    atomic_write(run_dir / kManifestFile, manifest.to_json());
}

RunManifest read_manifest(const fs::path& run_dir) {
    const fs::path path = run_dir / kManifestFile;
    std::ifstream in(path);
    if (!in) throw IoError("missing manifest: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return RunManifest::from_json(text);
}

void refresh_manifest(const fs::path& run_dir) {
    RunManifest m = read_manifest(run_dir);
    m.artifacts = scan_artifacts(run_dir);
    m.updated_at = utc_timestamp();
    write_manifest(run_dir, m);
}

std::vector<std::string> verify_manifest(const fs::path& run_dir) {
    const RunManifest m = read_manifest(run_dir);
    const auto now = scan_artifacts(run_dir);
    std::vector<std::string> problems;
    for (const auto& a : m.artifacts) {
        const auto it = std::find_if(now.begin(), now.end(), [&](const auto& b) { return b.path == a.path; });
        if (it == now.end()) {
            problems.push_back("missing: " + a.path);
        } else if (it->sha256 != a.sha256) {
            problems.push_back("checksum mismatch: " + a.path);
        }
    }
    for (const auto& b : now) {
        const bool listed =
            std::any_of(m.artifacts.begin(), m.artifacts.end(), [&](const auto& a) { return a.path == b.path; });
        if (!listed) problems.push_back("unlisted: " + b.path);
    }
    return problems;
}

}  // namespace nmeasure
