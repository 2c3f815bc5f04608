#include "nda/series_table.hpp"

#include "nda/errors.hpp"
#include "nda/numeric_format.hpp"

namespace nda {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
}

}  // namespace

SeriesTable::SeriesTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw ConfigError("a series table needs at least one column");
}

void SeriesTable::add_comment(std::string line) { comments_.push_back(std::move(line)); }

void SeriesTable::add_row(Row row) {
    if (row.size() != columns_.size()) {
        throw ConfigError("row width " + std::to_string(row.size()) +
                          " does not match column count " + std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(row));
}

SeriesTable::Cell SeriesTable::at(std::size_t row, std::size_t col) const {
    return rows_.at(row).at(col);
}

std::optional<std::size_t> SeriesTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] == name) return i;
    }
    return std::nullopt;
}

std::string SeriesTable::to_csv() const {
    std::string out;
    for (const auto& c : comments_) {
        out += "# ";
        out += c;
        out += '\n';
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i != 0) out += ',';
        out += columns_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) out += ',';
            if (row[i]) out += format_double(*row[i]);
        }
        out += '\n';
    }
    return out;
}

SeriesTable SeriesTable::from_csv(std::string_view text) {
    std::vector<std::string> comments;
    std::optional<SeriesTable> table;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string_view body = line.substr(1);
            if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            comments.emplace_back(body);
            continue;
        }
        if (!table) {
            std::vector<std::string> columns;
            for (const auto& name : split(line, ',')) columns.emplace_back(name);
            table.emplace(std::move(columns));
            for (auto& c : comments) table->add_comment(std::move(c));
            continue;
        }
        Row row;
        for (const auto& cell : split(line, ',')) {
            if (cell.empty()) {
                row.push_back(std::nullopt);
                continue;
            }
            const auto value = parse_double(cell);
            if (!value) throw ConfigError("bad CSV cell '" + std::string(cell) + "'");
            row.push_back(*value);
        }
        table->add_row(std::move(row));
    }
    if (!table) throw ConfigError("CSV text has no header row");
    return *std::move(table);
}

}  // namespace nda
