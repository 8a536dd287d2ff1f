#pragma once

// Shared reader for the line-oriented "<keyword> <n>" + "<u> <v>" file formats.

#include <istream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace cce::detail {

struct PairFile {
    int order = 0;
    // (line number, first, second)
    std::vector<std::tuple<int, int, int>> pairs;
};

PairFile read_pair_file(std::istream& in, std::string_view keyword);

}  // namespace cce::detail
