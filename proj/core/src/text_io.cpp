#include "text_io.hpp"

#include <charconv>
#include <limits>

#include "cce/errors.hpp"

namespace cce::detail {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

int to_int(std::string_view field, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                         std::string(field) + "'");
    return value;
}

}  // namespace

PairFile read_pair_file(std::istream& in, std::string_view keyword) {
    PairFile file;
    std::string line;
    int number = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++number;
        auto fields = split_ws(line);
        if (!header) {
            if (fields.size() != 2 || fields[0] != keyword)
                throw ParseError("line 1: expected '" + std::string(keyword) + " <n>'");
            file.order = to_int(fields[1], number);
            if (file.order < 0) throw ParseError("line 1: negative vertex count");
            header = true;
            continue;
        }
        if (fields.empty() || fields[0].front() == '#') continue;
        if (fields.size() != 2)
            throw ParseError("line " + std::to_string(number) + ": expected '<u> <v>'");
        file.pairs.emplace_back(number, to_int(fields[0], number), to_int(fields[1], number));
    }
    if (!header) throw ParseError("empty input: expected '" + std::string(keyword) + " <n>'");
    return file;
}

}  // namespace cce::detail
