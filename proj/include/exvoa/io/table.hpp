/**
 * @file table.hpp
 * @brief Row/column tables rendered as CSV, markdown or JSON.
 */
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "exvoa/error.hpp"

namespace exvoa::io {

enum class Format { json, csv, markdown };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "markdown" || s == "md") return Format::markdown;
    throw ParseError("unknown format '" + s + "' (json, csv, markdown)");
}

inline std::string extension(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::markdown: return "md";
    }
    return "";
}

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) {
        if (row.size() != columns.size()) throw InvalidArgument("row width does not match the table header");
        rows.push_back(std::move(row));
    }
};

/// RFC 4180 quoting: fields containing comma, quote or line break are quoted, quotes doubled.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
        os << "\r\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

inline std::string md_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch == '\n' ? ' ' : ch;
    }
    return out;
}

inline std::string render_markdown(const Table& t) {
    std::ostringstream os;
    if (!t.title.empty()) os << "### " << t.title << "\n\n";
    os << "|";
    for (const auto& c : t.columns) os << " " << md_cell(c) << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& r : t.rows) {
        os << "|";
        for (const auto& c : r) os << " " << md_cell(c) << " |";
        os << "\n";
    }
    return os.str();
}

inline nlohmann::ordered_json table_json(const Table& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
        rows.push_back(std::move(o));
    }
    return nlohmann::ordered_json{{"title", t.title}, {"columns", t.columns}, {"rows", rows}};
}

}  // namespace exvoa::io
