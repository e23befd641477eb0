#pragma once

#include "knowmap/record.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace knowmap {

// Canonical corpus CSV: the persistence format every pipeline stage reads and
// writes. Round-trips through parse_tabular + normalize without loss.
std::string corpus_to_csv(const Corpus& corpus);

struct CorpusLoad {
    Corpus corpus;
    std::vector<Diagnostic> diagnostics;
};

CorpusLoad corpus_from_csv(std::string_view csv_text, const std::string& source_name = "corpus.csv");

std::string read_file(const std::filesystem::path& path); // throws Error(InputError)
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace knowmap
