// Labeled numeric columns with optional (missing) cells. CSV form: optional
// '#'-prefixed comment lines, one header row, LF line endings, '.' decimal
// separator, empty fields for missing samples.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nda {

class SeriesTable {
public:
    using Cell = std::optional<double>;
    using Row = std::vector<Cell>;

    explicit SeriesTable(std::vector<std::string> columns);

    void add_comment(std::string line);  // emitted as "# <line>"
    void add_row(Row row);               // size must match the column count

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::string>& comments() const noexcept { return comments_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    Cell at(std::size_t row, std::size_t col) const;
    std::optional<std::size_t> column_index(std::string_view name) const;

    std::string to_csv() const;
    static SeriesTable from_csv(std::string_view text);

private:
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<Row> rows_;
};

}  // namespace nda
