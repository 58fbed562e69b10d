#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace citeflow::detail {

// Minimal reader for the unquoted comma-separated input files.
class CsvReader {
public:
    // Reads and checks the header row. Throws InputError on mismatch.
    CsvReader(std::istream& in, std::string_view what, const std::vector<std::string_view>& header);

    // Next non-blank record; fields are trimmed. Returns false at end of input.
    bool next(std::vector<std::string>& fields);

    std::size_t line() const noexcept { return line_; }
    std::string_view what() const noexcept { return what_; }

private:
    std::istream& in_;
    std::string what_;
    std::size_t columns_;
    std::size_t line_ = 0;
    std::string buffer_;
};

std::string_view trim(std::string_view s);

} // namespace citeflow::detail
