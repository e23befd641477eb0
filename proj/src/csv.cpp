#include "knowmap/csv.hpp"

namespace knowmap::csv {

std::vector<Row> parse(std::string_view input) {
    std::vector<Row> rows;
    Row row;
    row.line = 1;
    std::string cell;
    bool in_quotes = false;
    bool row_has_data = false;
    int line = 1;

    const auto push_cell = [&] {
        row.cells.push_back(std::move(cell));
        cell.clear();
    };
    const auto push_row = [&] {
        push_cell();
        rows.push_back(std::move(row));
        row = Row{};
        row.line = line;
        row_has_data = false;
    };

    for (size_t i = 0; i < input.size(); ++i) {
        const char c = input[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < input.size() && input[i + 1] == '"') {
                    cell.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n')
                    ++line;
                cell.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            row_has_data = true;
            break;
        case ',':
            push_cell();
            row_has_data = true;
            break;
        case '\r':
            if (i + 1 < input.size() && input[i + 1] == '\n')
                ++i;
            ++line;
            if (row_has_data || !cell.empty() || !row.cells.empty())
                push_row();
            else
                row.line = line;
            break;
        case '\n':
            ++line;
            if (row_has_data || !cell.empty() || !row.cells.empty())
                push_row();
            else
                row.line = line;
            break;
        default:
            cell.push_back(c);
            row_has_data = true;
            break;
        }
    }
    if (row_has_data || !cell.empty() || !row.cells.empty())
        push_row();
    return rows;
}

std::string quote(std::string_view cell) {
    const bool needs = cell.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs)
        return std::string(cell);
    std::string out;
    out.reserve(cell.size() + 2);
    out.push_back('"');
    for (char c : cell) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out.push_back(',');
        out += quote(cells[i]);
    }
    out.push_back('\n');
    return out;
}

} // namespace knowmap::csv
