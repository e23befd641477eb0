#pragma once

#include "knowmap/record.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace knowmap {

std::string sha256_hex(std::string_view bytes);

// Collects everything a run emits and renders the manifest: config echo,
// per-stage counts, diagnostics summary, tool version, and a content hash for
// every output file. No timestamps, so identical runs serialize identically.
class RunManifest {
public:
    RunManifest(std::string command, nlohmann::ordered_json config_echo);

    void count(const std::string& stage, long value);
    void add_diagnostics(const std::vector<Diagnostic>& diags);

    // Writes content under dir/name and records (name, bytes, sha256).
    void emit(const std::filesystem::path& dir, const std::string& name, std::string_view content);

    std::string dump() const;
    // Convenience: dump() written as dir/<command>_manifest.json (the manifest
    // itself is not listed in outputs).
    void write(const std::filesystem::path& dir) const;

private:
    nlohmann::ordered_json root_;
    nlohmann::ordered_json outputs_ = nlohmann::ordered_json::array();
    std::map<std::string, long> diag_by_code_;
    long diag_total_ = 0;
    std::string command_;
};

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace knowmap
