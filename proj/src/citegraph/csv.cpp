#include "csv.hpp"

#include "citeflow/errors.hpp"

namespace citeflow::detail {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

namespace {

void split(std::string_view line, std::vector<std::string>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
}

} // namespace

CsvReader::CsvReader(std::istream& in, std::string_view what,
                     const std::vector<std::string_view>& header)
    : in_(in), what_(what), columns_(0) {
    std::vector<std::string> fields;
    if (!next(fields)) throw InputError(what_ + ": empty file, expected a header row");
    bool ok = fields.size() == header.size();
    for (std::size_t i = 0; ok && i < header.size(); ++i) ok = fields[i] == header[i];
    if (!ok) {
        std::string expected;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) expected += ',';
            expected += header[i];
        }
        throw InputError(what_ + ": bad header on line " + std::to_string(line_) +
                         ", expected '" + expected + "'");
    }
    columns_ = header.size();
}

bool CsvReader::next(std::vector<std::string>& fields) {
    while (std::getline(in_, buffer_)) {
        ++line_;
        if (line_ == 1 && buffer_.starts_with("\xEF\xBB\xBF")) buffer_.erase(0, 3);
        if (trim(buffer_).empty()) continue;
        split(buffer_, fields);
        if (columns_ != 0 && fields.size() != columns_) {
            throw InputError(what_ + ": expected " + std::to_string(columns_) + " fields on line " +
                             std::to_string(line_) + ", found " + std::to_string(fields.size()));
        }
        return true;
    }
    return false;
}

} // namespace citeflow::detail
