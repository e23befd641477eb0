#include "knowmap/manifest.hpp"

#include "knowmap/corpus_io.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace knowmap {

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("EVP_Digest failed");
    static const char* hexd = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hexd[digest[i] >> 4]);
        out.push_back(hexd[digest[i] & 0xF]);
    }
    return out;
}

RunManifest::RunManifest(std::string command, nlohmann::ordered_json config_echo)
    : command_(std::move(command)) {
    root_["schema"] = "knowmap/run-manifest/v1";
    root_["tool"] = "knowmap";
    root_["version"] = kToolVersion;
    root_["command"] = command_;
    root_["config"] = std::move(config_echo);
    root_["counts"] = nlohmann::ordered_json::object();
}

void RunManifest::count(const std::string& stage, long value) {
    root_["counts"][stage] = value;
}

void RunManifest::add_diagnostics(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        ++diag_by_code_[d.code];
        ++diag_total_;
    }
}

void RunManifest::emit(const std::filesystem::path& dir, const std::string& name,
                       std::string_view content) {
    write_file(dir / name, content);
    nlohmann::ordered_json entry;
    entry["file"] = name;
    entry["bytes"] = content.size();
    entry["sha256"] = sha256_hex(content);
    outputs_.push_back(std::move(entry));
}

std::string RunManifest::dump() const {
    nlohmann::ordered_json j = root_;
    nlohmann::ordered_json diags;
    diags["total"] = diag_total_;
    nlohmann::ordered_json by_code = nlohmann::ordered_json::object();
    for (const auto& [code, n] : diag_by_code_)
        by_code[code] = n;
    diags["by_code"] = std::move(by_code);
    j["diagnostics"] = std::move(diags);
    j["outputs"] = outputs_;
    return j.dump(2) + "\n";
}

void RunManifest::write(const std::filesystem::path& dir) const {
    write_file(dir / (command_ + "_manifest.json"), dump());
}

} // namespace knowmap
