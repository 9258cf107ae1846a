#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace tifo {

// Minimal RFC-4180-ish CSV. Quoted fields may contain commas and doubled
// quotes; records are single-line.
std::vector<std::string> split_csv_line(const std::string& line);

std::string join_csv_line(const std::vector<std::string>& fields);

// Streams rows, skipping blank lines; row_index counts data rows from 1
// (the header, read separately, is row 0).
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // nullopt at end of stream.
    std::optional<std::vector<std::string>> next();

    // Index of the row most recently returned: 0 for the first (the
    // header), then 1, 2, ... for data rows.
    std::size_t row_index() const { return rows_returned_ - 1; }

private:
    std::istream& in_;
    std::size_t rows_returned_ = 0;
};

}  // namespace tifo
