#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knowmap::csv {

struct Row {
    std::vector<std::string> cells;
    int line = 0; // 1-based physical line where the row starts
};

// RFC-4180 parse: comma-separated, double-quote quoting, embedded quotes
// doubled, CR/LF and LF both accepted, newlines allowed inside quoted cells.
// Total over any input; an unterminated quote runs to end of input.
std::vector<Row> parse(std::string_view input);

// Quotes a cell when it contains a comma, quote, or newline.
std::string quote(std::string_view cell);

std::string join_row(const std::vector<std::string>& cells);

} // namespace knowmap::csv
