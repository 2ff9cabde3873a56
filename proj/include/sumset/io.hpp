#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sumset/sequence.hpp"

namespace sumset {

inline std::string format_key(std::int64_t v) { return std::to_string(v); }

// Shortest decimal that round-trips the double.
inline std::string format_key(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

template <key_type K>
K parse_key(const std::string& text, long line) {
    K value{};
    const char* first = text.data();
    const char* last = first + text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        raise(errc::parse_error, "bad key '" + text + "' at line " + std::to_string(line), line);
    if constexpr (std::is_same_v<K, double>)
        require_finite(value);
    return value;
}

// One key per line; blank lines and '#' comments allowed. Rejects
// unsorted input with the offending line number.
template <key_type K>
sorted_sequence<K> parse_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::io_error, "cannot open " + path);
    std::vector<K> keys;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        K value = parse_key<K>(line.substr(b, e - b + 1), lineno);
        if (!keys.empty() && value < keys.back())
            raise(errc::not_sorted, path + ":" + std::to_string(lineno) + ": key out of order",
                  lineno);
        keys.push_back(value);
    }
    if (keys.empty())
        raise(errc::empty_input, path + ": no keys");
    return sorted_sequence<K>(std::move(keys), typename sorted_sequence<K>::presorted_tag{});
}

template <key_type K>
void write_sequence_file(const sorted_sequence<K>& seq, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        raise(errc::io_error, "cannot write " + path);
    for (std::size_t t = 0; t < seq.size(); ++t)
        out << format_key(seq[t]) << '\n';
    if (!out)
        raise(errc::io_error, "write failed for " + path);
}

// Rectangular table of pre-formatted cells.
struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style output: comma separator, '\n' line endings, header
// first. Numeric cells need no quoting.
inline void emit_csv(const csv_table& table, const std::string& path) {
    for (const auto& row : table.rows)
        if (row.size() != table.header.size())
            raise(errc::bad_argument, "ragged CSV row");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        raise(errc::io_error, "cannot write " + path);
    auto put_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c)
                out << ',';
            out << cells[c];
        }
        out << '\n';
    };
    put_row(table.header);
    for (const auto& row : table.rows)
        put_row(row);
    if (!out)
        raise(errc::io_error, "write failed for " + path);
}

inline csv_table parse_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(errc::io_error, "cannot open " + path);
    csv_table table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (line.empty() || line.back() == ',')
            cells.push_back("");
        if (table.header.empty())
            table.header = std::move(cells);
        else
            table.rows.push_back(std::move(cells));
    }
    return table;
}

} // namespace sumset
